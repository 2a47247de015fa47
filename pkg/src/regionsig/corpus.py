"""The bundled dataset of diagrams, Seifert matrices and expected matrices.

Each link has one or more diagram files; variants of the same link were
obtained by hand with curls and second Reidemeister moves.  The index
records sha256 checksums of every diagram file.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .amplitude import amplitude, matrix_from_strings
from .diagram import DiagramError, expected_region_count, extract_regions, load_diagram
from .exactalg import Matrix
from .sreduce import InvariantPair
from .tlsig import SeifertMatrix

DATA_ENV = "REGIONSIG_DATA"


class CorpusError(RuntimeError):
    pass


def data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("regionsig") / "data"))


@dataclass(frozen=True)
class DiagramFile:
    name: str
    path: Path

    def load(self):
        return load_diagram(self.path)


@dataclass(frozen=True)
class ExpectedAmplitude:
    # the named diagram file carries region_labels matching this matrix
    diagram: str
    matrix: Matrix


@dataclass(frozen=True)
class CorpusEntry:
    link_name: str
    diagrams: tuple
    seifert: SeifertMatrix | None = None
    expected_amplitude: ExpectedAmplitude | None = None
    expected_reduced: InvariantPair | None = None

    def diagram(self, name: str) -> DiagramFile:
        for d in self.diagrams:
            if d.name == name:
                return d
        raise KeyError(name)

    def amplitudes(self):
        return {d.name: amplitude(d.load()) for d in self.diagrams}


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _entry(raw, root: Path) -> CorpusEntry:
    link = raw["link"]
    diagrams = tuple(DiagramFile(Path(f).stem, root / f) for f in raw["diagrams"])
    seifert = None
    if "seifert" in raw:
        s = raw["seifert"]
        seifert = SeifertMatrix(tuple(tuple(r) for r in s["matrix"]), link, tuple(s.get("alexander") or ()) or None)
    expected = None
    if "expected_amplitude" in raw:
        e = raw["expected_amplitude"]
        expected = ExpectedAmplitude(Path(e["diagram"]).stem, matrix_from_strings(e["y_matrix"], y_var=True))
    reduced = None
    if "expected_reduced" in raw:
        r = raw["expected_reduced"]
        reduced = InvariantPair(tuple(r["m"]), matrix_from_strings(r["x_matrix"]))
    return CorpusEntry(link, diagrams, seifert, expected, reduced)


def load_corpus(directory=None, validate: bool = True):
    """All corpus entries; checksums are verified and, with ``validate``, every diagram is parsed."""
    root = Path(directory) if directory is not None else data_dir()
    try:
        index = json.loads((root / "index.json").read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CorpusError(f"cannot read corpus index in {root}: {exc}") from None
    sums = index.get("checksums", {})
    entries = []
    for raw in index["links"]:
        entry = _entry(raw, root)
        for d in entry.diagrams:
            want = sums.get(d.path.name)
            if want is None or not d.path.exists() or _sha256(d.path) != want:
                raise CorpusError(f"checksum mismatch for {d.path.name}")
            if validate:
                _validate(d)
        entries.append(entry)
    return tuple(entries)


def _validate(d: DiagramFile):
    try:
        diag = d.load()
        r = extract_regions(diag)
    except DiagramError as exc:
        raise CorpusError(f"{d.name}: {exc}") from None
    if r.n_regions != expected_region_count(diag):
        raise CorpusError(f"{d.name}: region count fails the Euler check")


def find_entry(name: str, entries=None) -> CorpusEntry:
    """Look up an entry by link name, or by the name of one of its diagrams."""
    entries = load_corpus(validate=False) if entries is None else entries
    for e in entries:
        if e.link_name == name:
            return e
    for e in entries:
        if any(d.name == name for d in e.diagrams):
            return e
    raise KeyError(f"unknown link {name!r}")


def find_diagram(name: str, entries=None) -> DiagramFile:
    entries = load_corpus(validate=False) if entries is None else entries
    for e in entries:
        for d in e.diagrams:
            if d.name == name:
                return d
    raise KeyError(f"unknown diagram {name!r}")


def all_diagrams(entries=None):
    entries = load_corpus(validate=False) if entries is None else entries
    return [d for e in entries for d in e.diagrams]
