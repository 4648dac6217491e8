import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import R, polys
from gradedq import catalog
from gradedq.groebner import Ideal, MonomialOrder
from gradedq.hilbert import hilbert_function, monomials_of_degree
from gradedq.invariants import (
    ActionError,
    FixedPointMismatch,
    UnstableIdealError,
    check_stability,
    close_group,
    fixed_quotient_dims,
    invariant_monomials,
    invariant_subring_dims,
    load_action,
    reynolds,
    verify_fixed_point_lemma,
)
from gradedq.polyring import SignedSubstitution, format_monomial, substitute

P = R.poly
LEX = catalog.LEX_MHNT


def test_close_group_orders(group):
    assert group.order == 4
    assert close_group([], R).order == 1
    assert close_group([catalog.c_minus_plus()], R).order == 2
    with pytest.raises(ActionError):
        close_group([catalog.c_minus_plus()], R, expected_order=4)


def test_close_group_cap():
    rot = SignedSubstitution.from_mapping(R, {"m": "h", "h": "n", "n": "t", "t": "-m"})
    assert close_group([rot], R).order == 8
    with pytest.raises(ActionError):
        close_group([rot], R, cap=4)


def test_reynolds_examples(group):
    assert reynolds(P("m^2"), group) == P("m^2")
    assert reynolds(P("m*n"), group) == R.zero
    assert reynolds(P("m*h + m*n"), group) == P("m*h")


def test_invariant_monomials(group):
    assert {format_monomial(m, R) for m in invariant_monomials(group, 4)} == \
        {"m^2", "m*h", "h^2", "n^2", "n*t", "t^2"}
    assert invariant_monomials(group, 2) == []
    assert invariant_monomials(group, 0) == [(0, 0, 0, 0)]


def test_invariant_monomials_need_diagonal():
    swap = SignedSubstitution.from_mapping(R, {"m": "n", "n": "m", "h": "t", "t": "h"})
    with pytest.raises(ActionError):
        invariant_monomials(close_group([swap], R), 4)


def test_fixed_quotient_examples(group, i2):
    dims = fixed_quotient_dims(i2, group, LEX, 8)
    assert [dims[d] for d in range(0, 9, 2)] == [1, 0, 3, 0, 4]
    trivial = close_group([], R)
    assert fixed_quotient_dims(i2, trivial, LEX, 12) == hilbert_function(i2, LEX, 12)
    one = close_group([SignedSubstitution.from_mapping(catalog.RMH, {"m": "-m", "h": "-h"})],
                      catalog.RMH)
    assert fixed_quotient_dims(Ideal(catalog.RMH, ()), one, None, 2)[2] == 0


def test_invariant_standard_monomials_at_4(group, i2):
    from gradedq.quotient import BaseRing
    basis = BaseRing(R, i2, LEX).basis(4)
    inv = set(invariant_monomials(group, 4))
    assert {format_monomial(m, R) for m in basis if m in inv} == {"h^2", "n^2", "t^2"}


def test_stability(group, i2):
    assert check_stability(i2, group)
    assert check_stability(Ideal.from_strings(R, ["m"]), close_group([catalog.c_minus_plus()], R))
    bad = Ideal.from_strings(R, ["m+n"])
    assert not check_stability(bad, group)
    with pytest.raises(UnstableIdealError) as ei:
        fixed_quotient_dims(bad, group, LEX, 4)
    assert "outside the ideal" in str(ei.value)


def test_lemma(group, i1, i2):
    for ideal in (i1, i2):
        rep = verify_fixed_point_lemma(ideal, group, LEX, 20)
        assert rep.holds and rep.first_mismatch is None
    trivial = close_group([], R)
    rep = verify_fixed_point_lemma(i2, trivial, LEX, 12)
    assert rep.fixed_quotient == rep.invariant_quotient == hilbert_function(i2, LEX, 12)


def test_lemma_mismatch_is_reported(group, i2, monkeypatch):
    import gradedq.invariants as inv
    real = inv.invariant_subring_dims

    def off_by_one(ideal, grp, bound):
        g = real(ideal, grp, bound)
        return type(g)(bound, g.dims[:4] + (g.dims[4] + 1,) + g.dims[5:])
    monkeypatch.setattr(inv, "invariant_subring_dims", off_by_one)
    assert verify_fixed_point_lemma(i2, group, LEX, 8, strict=False).first_mismatch == 4
    with pytest.raises(FixedPointMismatch):
        verify_fixed_point_lemma(i2, group, LEX, 8)


def test_load_action(group):
    data = {"generators": [{"m": "-m", "h": "-h", "n": "n", "t": "t"},
                           {"m": "m", "h": "h", "n": "-n", "t": "-t"}]}
    assert set(load_action(data, R).elements) == set(group.elements)
    with pytest.raises(ValueError):
        load_action({"gens": []}, R)


# --- independent oracle: rank of (R^G + I)_d minus rank of I_d ----------------

def _oracle_fixed_dim(ideal, d):
    """dim((R/I)^G)_d = dim((R^G + I)/I)_d for a stable ideal and a finite group
    over Q; R^G_d is spanned by monomials with m+h and n+t exponents even."""
    monos = monomials_of_degree(R, d)
    col = {m: i for i, m in enumerate(monos)}
    rows_i = []
    for f in ideal.generators:
        for s in monomials_of_degree(R, d - f.degree()) if d >= f.degree() else ():
            row = [0] * len(monos)
            for m, c in f.items():
                row[col[tuple(a + b for a, b in zip(m, s))]] += c
            rows_i.append(row)
    inv = [m for m in monos if (m[0] + m[1]) % 2 == 0 and (m[2] + m[3]) % 2 == 0]
    rows_g = [[int(m == x) for x in monos] for m in inv]
    rk = lambda rows: sympy.Matrix(rows).rank() if rows else 0
    return rk(rows_i + rows_g) - rk(rows_i)


@pytest.mark.parametrize("which", ["i1", "i2"])
def test_fixed_dims_against_oracle(group, which):
    ideal = catalog.ideal_i1() if which == "i1" else catalog.ideal_i2()
    dims = fixed_quotient_dims(ideal, group, LEX, 10)
    assert list(dims.dims) == [_oracle_fixed_dim(ideal, d) for d in range(11)]


def test_invariant_subring_dims_catalog(group, i2):
    dims = invariant_subring_dims(i2, group, 40)
    assert [dims[d] for d in range(0, 41, 4)] == [1, 3] + [4] * 9


# --- properties -----------------------------------------------------------------

_G = catalog.mapping_class_action()


@settings(max_examples=1000)
@given(polys())
def test_reynolds_projector(p):
    r = reynolds(p, _G)
    assert reynolds(r, _G) == r
    for g in _G.elements:
        assert reynolds(substitute(p, g), _G) == r
        assert substitute(r, g) == r


@pytest.mark.parametrize("d", range(0, 13, 2))
def test_invariant_dim_equals_monomial_count(d):
    monos = monomials_of_degree(R, d)
    images = [reynolds(R.monomial(m), _G) for m in monos]
    from gradedq.linalg import rank
    assert rank([dict(im.items()) for im in images]) == len(invariant_monomials(_G, d))


@pytest.mark.parametrize("gens", [catalog.I1_GENERATORS, catalog.I2_GENERATORS,
                                  ("m*h", "n*t"), ("m^2", "n^2+t^2"), ("m^2-h^2",)])
def test_fixed_dims_bounded_by_hilbert(gens):
    ideal = Ideal.from_strings(R, gens)
    fixed = fixed_quotient_dims(ideal, _G, LEX, 16)
    full = hilbert_function(ideal, LEX, 16)
    assert all(a <= b for a, b in zip(fixed.dims, full.dims))
    assert verify_fixed_point_lemma(ideal, _G, LEX, 16).holds
