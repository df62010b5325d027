import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hfix.errors import DegreeError
from hfix.poly import Polynomial
from hfix.roots import cluster_roots, find_roots, root_bound


def _sorted(z):
    return np.array(sorted(z, key=lambda c: (round(c.real, 6), round(c.imag, 6))))


def test_simple_roots():
    rs = find_roots(Polynomial.from_roots([1, -1, 2j]))
    assert rs.converged and rs.degree == 3
    assert np.allclose(_sorted(rs.locations()), _sorted([1, -1, 2j]), atol=1e-12)


def test_zero_roots_deflated():
    rs = find_roots(Polynomial([0, 0, 0, 1, 1]))  # z^3 (z + 1)
    assert sorted(rs.multiplicities()) == [1, 3]
    zero = [r for r in rs.roots if r.multiplicity == 3][0]
    assert zero.location == 0


def test_double_and_triple():
    p = Polynomial.from_roots([0.3 + 0.2j] * 3 + [-1, -1])
    rs = find_roots(p)
    mults = {r.multiplicity: r.location for r in rs.roots}
    assert set(mults) == {2, 3}
    assert abs(mults[3] - (0.3 + 0.2j)) <= 1e-9
    assert abs(mults[2] + 1) <= 1e-9


def test_near_double_root_separation():
    # roots 0.5 +- 1e-5 i: separated by 2e-5, wider than the default scale
    p = Polynomial([0.2500000001, -1, 1])
    assert [r.multiplicity for r in find_roots(p).roots] == [1, 1]
    merged = find_roots(p, eps=1e-4)
    assert [r.multiplicity for r in merged.roots] == [2]
    assert abs(merged.roots[0].location - 0.5) <= 1e-9


def test_degree_error():
    with pytest.raises(DegreeError):
        find_roots(Polynomial([3]))
    with pytest.raises(DegreeError):
        find_roots(Polynomial([]))


def test_root_bound_contains_roots():
    rng = np.random.default_rng(0)
    for _ in range(100):
        c = rng.normal(size=7) + 1j * rng.normal(size=7)
        b = root_bound(c)
        assert np.all(np.abs(np.roots(c[::-1])) <= b * (1 + 1e-12))


def test_cluster_roots_single_linkage():
    raw = np.array([0, 1e-8, 2e-8, 1.0])
    roots = cluster_roots(raw, eps=1e-7)
    assert [r.multiplicity for r in roots] == [3, 1]


def test_against_numpy_roots():
    """Independent oracle: companion-matrix eigenvalues."""
    rng = np.random.default_rng(1)
    for deg in range(1, 12):
        c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
        ours = find_roots(Polynomial(c)).locations()
        ref = np.roots(c[::-1])
        for r in ref:
            assert np.min(np.abs(ours - r)) <= 1e-9 * (1 + abs(r))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
                min_size=1, max_size=7))
def test_reconstructs_from_roots(rts):
    rts = np.array(rts)
    # keep distinct roots well separated so multiplicities are unambiguous
    d = np.abs(rts[:, None] - rts[None, :]) + np.eye(len(rts)) * 10
    if d.min() < 1e-2:
        return
    rs = find_roots(Polynomial.from_roots(rts))
    assert rs.degree == len(rts)
    for r in rts:
        assert np.min(np.abs(rs.locations() - r)) <= 1e-8
