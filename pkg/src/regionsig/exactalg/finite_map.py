"""Pull-backs and push-forwards of vectors and matrices along maps of finite sets."""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix


@dataclass(frozen=True)
class FiniteMap:
    """A map ``{0..domain_size-1} -> {0..image_size-1}``."""

    domain_size: int
    image_size: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.domain_size:
            raise ValueError("FiniteMap values must have length domain_size")
        for v in self.values:
            if not 0 <= v < self.image_size:
                raise ValueError(f"value {v} outside 0..{self.image_size - 1}")

    @classmethod
    def identity(cls, n: int) -> FiniteMap:
        return cls(n, n, tuple(range(n)))

    @classmethod
    def from_values(cls, values, image_size: int | None = None) -> FiniteMap:
        values = tuple(values)
        if image_size is None:
            image_size = max(values) + 1 if values else 0
        return cls(len(values), image_size, values)

    def __call__(self, i: int) -> int:
        return self.values[i]

    def fiber(self, y: int):
        return [i for i, v in enumerate(self.values) if v == y]

    def fiber_sizes(self):
        sizes = [0] * self.image_size
        for v in self.values:
            sizes[v] += 1
        return sizes

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.domain_size

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.image_size

    def then(self, other: FiniteMap) -> FiniteMap:
        """The composite ``other o self``."""
        if other.domain_size != self.image_size:
            raise ValueError("maps are not composable")
        return FiniteMap(self.domain_size, other.image_size, tuple(other.values[v] for v in self.values))


def pull_back(p: FiniteMap, v):
    """p^*(v) = v o p."""
    if len(v) != p.image_size:
        raise ValueError(f"vector of length {len(v)} cannot be pulled back along a map into {p.image_size}")
    return tuple(v[p.values[i]] for i in range(p.domain_size))


def push_forward_vector(p: FiniteMap, v):
    """Fiberwise sums: p_*(v)(y) = sum of v(x) over x in p^{-1}(y)."""
    if len(v) != p.domain_size:
        raise ValueError(f"vector of length {len(v)} cannot be pushed along a map from {p.domain_size}")
    out = [0] * p.image_size
    for i, a in enumerate(v):
        out[p.values[i]] = out[p.values[i]] + a
    return tuple(out)


def push_forward_matrix(p: FiniteMap, q: FiniteMap, a: Matrix) -> Matrix:
    """(p x q)_*(A); for symmetric A and p == q the result is symmetric."""
    if a.shape != (p.domain_size, q.domain_size):
        raise ValueError(f"matrix of shape {a.shape} does not match maps from {p.domain_size} x {q.domain_size}")
    out = [[0] * q.image_size for _ in range(p.image_size)]
    for i in range(a.nrows):
        row = out[p.values[i]]
        for j in range(a.ncols):
            entry = a[i, j]
            if entry != 0:
                row[q.values[j]] = row[q.values[j]] + entry
    return Matrix(out, ncols=q.image_size)


def push_forward(p: FiniteMap, a: Matrix) -> Matrix:
    return push_forward_matrix(p, p, a)


def is_compatible(p: FiniteMap, w) -> bool:
    """True iff p^*(p_*(w)) == w."""
    return all(a == b for a, b in zip(pull_back(p, push_forward_vector(p, w)), w))


def _dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def adjunction_check(p: FiniteMap, v, u) -> bool:
    """Check p_*(v)^T u == v^T p^*(u) for v indexed by the domain and u by the image."""
    return _dot(push_forward_vector(p, v), u) == _dot(v, pull_back(p, u))
