import random
from fractions import Fraction

import pytest

from newtonbench.polygon import (
    NewtonPolygon,
    PolygonError,
    RootProfile,
    lower_hull,
    polygon_report,
    root_valuation_profile,
    slope_witness,
)
from newtonbench.polynomials import (
    RootSpec,
    ValuedPoly,
    coefficient_valuations,
    from_roots,
)
from newtonbench.valuation import INFINITY, val_p


def test_lower_hull_examples():
    q3 = ValuedPoly(2, 3, [(0, 1), (1, 2), (2, 4), (3, 8)])
    assert lower_hull(q3).vertices == ((0, 1), (1, 2), (2, 4), (3, 8))

    p2 = ValuedPoly(2, 2, [(0, 16), (1, 4), (2, 1)])
    hull = lower_hull(p2)
    assert hull.vertices == ((0, 16), (1, 4), (2, 1))
    assert hull.slopes == ((-12, 1), (-3, 1))

    bump = ValuedPoly(2, 2, [(0, 0), (1, 5), (2, 0)])
    assert lower_hull(bump).vertices == ((0, 0), (2, 0))


def test_hull_drops_collinear_points():
    vp = ValuedPoly(2, 4, [(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)])
    assert lower_hull(vp).vertices == ((0, 0), (4, 4))


def test_profile_examples():
    q2 = ValuedPoly(2, 2, [(0, 1), (1, 2), (2, 4)])
    prof = root_valuation_profile(q2)
    assert prof.entries == ((-1, 1), (-2, 1))
    assert prof.min_valuation() == -2  # -2^(d-1) at d=2

    p2 = ValuedPoly(2, 2, [(0, 16), (1, 4), (2, 1)])
    assert root_valuation_profile(p2).entries == ((12, 1), (3, 1))

    mixed = coefficient_valuations(from_roots([(2, 2), (Fraction(1, 4), 1)], 1), 2)
    prof = root_valuation_profile(mixed)
    assert prof.entries == ((1, 2), (-2, 1))
    assert prof.zero_root_multiplicity == 0


def test_profile_zero_roots():
    # t^2 (t - 2): roots {0, 0, 2}
    vp = coefficient_valuations(from_roots([(0, 2), (2, 1)], 1), 2)
    prof = root_valuation_profile(vp)
    assert prof.zero_root_multiplicity == 2
    assert prof.entries == ((1, 1),)
    assert prof.valuations()[0] == INFINITY


def test_slope_witness_examples():
    q3 = ValuedPoly(2, 3, [(0, 1), (1, 2), (2, 4), (3, 8)])
    i, j = slope_witness(q3, -4)
    assert (i, j) == (2, 3)
    assert (j - i) * -4 == 4 - 8

    p2 = ValuedPoly(2, 2, [(0, 16), (1, 4), (2, 1)])
    assert slope_witness(p2, 12) == (0, 1)

    lin = coefficient_valuations(from_roots([(2, 1)], 1), 2)
    assert slope_witness(lin, 1) == (0, 1)

    with pytest.raises(PolygonError):
        slope_witness(q3, 5)


def test_slope_witness_identity_random():
    rng = random.Random(99)
    for _ in range(100):
        spec = _random_spec(rng)
        vp = coefficient_valuations(from_roots(spec, 1), 2)
        prof = root_valuation_profile(vp)
        for v, _m in prof.entries:
            i, j = slope_witness(vp, v)
            assert (j - i) * v == vp.val_at(i).value - vp.val_at(j).value


def test_polygon_validation():
    with pytest.raises(PolygonError):
        NewtonPolygon(((0, Fraction(0)), (1, Fraction(1)), (2, Fraction(2))))
    with pytest.raises(PolygonError):
        RootProfile(((Fraction(1), 1), (Fraction(2), 1)))  # must decrease


def _random_spec(rng, max_deg=10, allow_zero=True):
    """Roots of the form +/- 2^a * u with odd u, so val_2 is exactly a."""
    entries = []
    total = 0
    while total < 1 or (total < max_deg and rng.random() < 0.7):
        mult = rng.randint(1, min(3, max_deg - total)) if max_deg - total > 1 else 1
        if allow_zero and rng.random() < 0.1:
            root = Fraction(0)
        else:
            a = rng.randint(-20, 20)
            u = rng.choice([1, 3, 5, 7, 9, 11, 99, 101])
            sign = rng.choice([1, -1])
            root = sign * Fraction(2) ** a * u
        entries.append((root, mult))
        total += mult
    return RootSpec(entries)


def _expected_profile(spec):
    by_val = {}
    zero_mult = 0
    for root, mult in spec.entries:
        if root == 0:
            zero_mult += mult
        else:
            v = val_p(root, 2).value
            by_val[v] = by_val.get(v, 0) + mult
    entries = tuple(sorted(by_val.items(), reverse=True))
    return RootProfile(entries, zero_mult)


def test_proposition_roundtrip_sample():
    # Smaller cousin of the acceptance run, with adversarial cases pinned.
    rng = random.Random(2024)
    for _ in range(200):
        spec = _random_spec(rng)
        vp = coefficient_valuations(from_roots(spec, 1), 2)
        assert root_valuation_profile(vp) == _expected_profile(spec)


def test_roundtrip_with_cancellation():
    # +r and -r share a valuation and cancel the middle coefficient entirely
    spec = RootSpec([(3, 1), (-3, 1)])
    vp = coefficient_valuations(from_roots(spec, 1), 2)
    assert vp.has_zero_coefficients
    assert root_valuation_profile(vp) == _expected_profile(spec)

    spec = RootSpec([(1, 1), (-1, 1), (2, 1), (-2, 1), (0, 2)])
    vp = coefficient_valuations(from_roots(spec, 1), 2)
    assert root_valuation_profile(vp) == _expected_profile(spec)


def test_profile_mass_and_slope_monotonicity():
    rng = random.Random(4)
    for _ in range(100):
        spec = _random_spec(rng)
        vp = coefficient_valuations(from_roots(spec, 1), 2)
        hull = lower_hull(vp)
        slopes = [s for s, _ in hull.slopes]
        assert all(a < b for a, b in zip(slopes, slopes[1:]))
        assert root_valuation_profile(vp).total_multiplicity == vp.degree


def test_polygon_report_shape():
    q2 = ValuedPoly(2, 2, [(0, 1), (1, 2), (2, 4)])
    assert polygon_report(q2) == {
        "vertices": [[0, "1"], [1, "2"], [2, "4"]],
        "slopes": [["1", 1], ["2", 1]],
        "profile": [["-1", 1], ["-2", 1]],
        "zero_roots": 0,
    }
