import dataclasses
import math
from fractions import Fraction

import numpy as np
import pytest

from regionsig.corpus import load_corpus
from regionsig.exactalg import PolyZ
from regionsig.tlsig import (
    ConjectureError,
    ConjectureReport,
    ConjectureRow,
    SeifertMatrix,
    conjecture_table,
    interior_points,
    sign_flip_report,
    theta_of,
    tl_form,
    tl_signature,
)

TREFOIL = SeifertMatrix(((-1, 1), (0, -1)), "trefoil-rh", (1, -1, 1))
FIG8 = SeifertMatrix(((1, 1), (0, -1)), "figure-eight", (-1, 3, -1))
HOPF = SeifertMatrix(((-1,),), "hopf-rh", (-1, 1))


def test_examples_at_pi():
    assert tl_signature(TREFOIL, math.pi) == -2
    assert tl_signature(FIG8, math.pi) == 0
    assert tl_signature(HOPF, math.pi) == -1
    assert tl_signature(SeifertMatrix(()), 1.0) == 0


def test_trefoil_step_at_pi_over_3():
    assert tl_signature(TREFOIL, math.pi / 3 - 0.01) == 0
    assert tl_signature(TREFOIL, math.pi / 3 + 0.01) == -2
    # the Alexander root itself: one eigenvalue vanishes
    assert tl_signature(TREFOIL, math.pi / 3) == -1


def test_form_is_hermitian():
    h = tl_form(TREFOIL, 2.0)
    assert np.allclose(h, h.conj().T)


def test_theta_bounds():
    for bad in (0.0, 1e-7, 2 * math.pi, 2 * math.pi - 1e-8):
        with pytest.raises(ValueError):
            tl_signature(TREFOIL, bad)


def test_alexander_validation():
    assert TREFOIL.alexander_poly() == PolyZ([1, -1, 1])
    for s in (TREFOIL, FIG8, HOPF):
        assert s.alexander_ok()
    assert not SeifertMatrix(((-1, 1), (0, -1)), "x", (1, 1, 1)).alexander_ok()
    assert SeifertMatrix((), "unknot", (1,)).alexander_ok()
    with pytest.raises(ValueError):
        SeifertMatrix(((1, 2),))


@pytest.mark.parametrize("s", [TREFOIL, FIG8, HOPF])
def test_constant_between_alexander_roots(s):
    roots = np.roots(list(reversed(s.alexander_poly().coeffs)))
    angles = sorted(float(np.angle(r)) % (2 * math.pi) for r in roots if abs(abs(r) - 1) < 1e-9)
    angles = [a for a in angles if 1e-6 < a < 2 * math.pi - 1e-6]
    cuts = [0.0] + angles + [2 * math.pi]
    for lo, hi in zip(cuts, cuts[1:]):
        # stay 1e-3 away from the roots and from theta = 0
        grid = np.linspace(lo + 1e-3, hi - 1e-3, 40)
        assert len({tl_signature(s, float(t)) for t in grid}) == 1


def test_theta_of():
    assert theta_of(0) == pytest.approx(math.pi)
    assert theta_of(Fraction(1, 2)) == pytest.approx(2 * math.pi / 3)


def test_interior_points():
    assert interior_points(3) == [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    with pytest.raises(ValueError):
        interior_points(0)


def test_conjecture_tables_match():
    corpus = load_corpus()
    for link in ("trefoil-rh", "figure-eight", "hopf-rh", "unknot", "unlink-2", "unlink-3"):
        report = conjecture_table(link, 50, corpus)
        assert len(report.rows) == 50
        assert report.all_match, report.mismatches
    assert sign_flip_report([conjecture_table("trefoil-rh", 10, corpus)]) is None


def test_trefoil_rows():
    report = conjecture_table("trefoil-rh", 50)
    below = [r for r in report.rows if r.x * r.x < Fraction(3, 4)]
    above = [r for r in report.rows if r.x * r.x > Fraction(3, 4)]
    assert below and all(r.sig_corr == -4 for r in below)
    assert above and all(r.sig_corr == 0 for r in above)
    assert len(report.brackets) == 1


def test_conjecture_errors():
    with pytest.raises(KeyError):
        conjecture_table("no-such-link", 10)


def test_missing_seifert():
    corpus = load_corpus()
    stripped = tuple(dataclasses.replace(e, seifert=None) for e in corpus)
    with pytest.raises(ConjectureError):
        conjecture_table("trefoil-rh", 5, stripped)


def test_sign_flip_report():
    good = ConjectureReport("a", "a", (ConjectureRow(1.0, Fraction(1, 2), -2, -2),), (), ())
    flipped = ConjectureReport("b", "b", (ConjectureRow(1.0, Fraction(1, 2), -2, 2),), (), ())
    broken = ConjectureReport("c", "c", (ConjectureRow(1.0, Fraction(1, 2), -2, 4),), (), ())
    assert sign_flip_report([good]) is None
    assert "sign flip" in sign_flip_report([flipped])
    assert "either" in sign_flip_report([broken])


def test_report_csv():
    text = conjecture_table("hopf-rh", 3).to_csv()
    lines = text.splitlines()
    assert lines[0] == "theta,x_num,x_den,sig_corr,two_sigma_tl,match"
    assert lines[1].endswith(",1,4,-2,-2,true")
