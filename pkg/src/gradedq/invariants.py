"""Finite groups acting on polynomial rings by signed variable substitutions.

Provides group closure, the Reynolds operator, invariant monomials, and the
degreewise comparison of ``(R/I)^G`` with ``R^G / I^G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .groebner import Ideal, MonomialOrder, buchberger
from .hilbert import DEFAULT_BOUND, GradedDims, monomials_of_degree
from .linalg import Echelon, rank
from .polyring import Polynomial, RingSpec, SignedSubstitution, substitute
from .quotient import BaseRing

DEFAULT_GROUP_CAP = 1024

__all__ = [
    "SignedSubstitution", "GroupAction", "ActionError", "UnstableIdealError",
    "close_group", "reynolds", "invariant_monomials", "check_stability",
    "fixed_quotient_dims", "verify_fixed_point_lemma", "FixedPointReport",
    "load_action", "invariant_subring_dims",
]


class ActionError(ValueError):
    pass


class UnstableIdealError(ValueError):
    pass


@dataclass(frozen=True)
class GroupAction:
    ring: RingSpec
    generators: tuple
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_diagonal(self) -> bool:
        return all(g.is_diagonal() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)


def close_group(gens: Sequence[SignedSubstitution], ring: Optional[RingSpec] = None,
                cap: int = DEFAULT_GROUP_CAP, expected_order: Optional[int] = None) -> GroupAction:
    """Close ``gens`` under composition (breadth first from the identity)."""
    gens = tuple(gens)
    if ring is None:
        if not gens:
            raise ActionError("need a ring to build the trivial group")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ActionError("generators act on different rings")
    identity = SignedSubstitution.identity(ring)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.compose(x)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise ActionError(f"group closure exceeds the cap of {cap} elements")
        frontier = nxt
    if expected_order is not None and expected_order != len(elements):
        raise ActionError(f"group has order {len(elements)}, expected {expected_order}")
    return GroupAction(ring, gens, tuple(elements))


def reynolds(p: Polynomial, group: GroupAction) -> Polynomial:
    """Average of ``g.p`` over the group: a projector onto the invariants."""
    total = p.ring.zero
    for g in group.elements:
        total = total + substitute(p, g)
    return total.scale(Fraction(1, group.order))


def _require_diagonal(group: GroupAction):
    if not group.is_diagonal():
        raise ActionError("action permutes variables; invariant monomials need a diagonal action")


def invariant_monomials(group: GroupAction, d: int) -> list:
    """Monomials of degree ``d`` fixed (with sign +1) by every group element."""
    _require_diagonal(group)
    out = []
    for m in monomials_of_degree(group.ring, d):
        if all(g.apply_monomial(m)[0] == 1 for g in group.generators):
            out.append(m)
    return out


def check_stability(ideal: Ideal, group: GroupAction,
                    order: Optional[MonomialOrder] = None) -> bool:
    """True iff ``g.f`` lies in the ideal for every generator ``f`` and element ``g``."""
    if not ideal.generators:
        return True
    gb = buchberger(ideal, order or MonomialOrder.lex(ideal.ring))
    return all(gb.contains(substitute(f, g)) for g in group.elements for f in ideal.generators)


def _require_stable(ideal, group, order):
    if not check_stability(ideal, group, order):
        bad = []
        gb = buchberger(ideal, order or MonomialOrder.lex(ideal.ring)) if ideal.generators else None
        for g in group.elements:
            for f in ideal.generators:
                r = gb.reduce(substitute(f, g))
                if r:
                    bad.append(f"{g} sends {f} outside the ideal (normal form {r})")
        raise UnstableIdealError("; ".join(bad[:3]))


def fixed_quotient_dims(ideal: Ideal, group: GroupAction, order: Optional[MonomialOrder] = None,
                        bound: int = DEFAULT_BOUND) -> GradedDims:
    """dim (R/I)^G_d as the rank of Reynolds-then-normal-form on the
    standard-monomial basis of (R/I)_d."""
    if group.ring != ideal.ring:
        raise ActionError("group and ideal live in different rings")
    _require_stable(ideal, group, order)
    q = BaseRing(ideal.ring, ideal, order)
    dims = []
    for d in range(bound + 1):
        basis = q.basis(d)
        cols = []
        for m in basis:
            img = reynolds(q.ring.monomial(m), group)
            cols.append(dict(enumerate(q.coordinates(img, d))))
        dims.append(rank(cols))
    return GradedDims(bound, tuple(dims))


def _integer_terms(p: Polynomial) -> list:
    # clear denominators: spans are unchanged and int arithmetic is much faster
    den = 1
    for _, c in p.items():
        den = den * c.denominator // gcd(den, c.denominator)
    return [(m, int(c * den)) for m, c in p.items()]


def _sum_images(terms: list, shift: tuple, elements: list) -> dict:
    """``|G| * reynolds(x^shift * p)`` for ``p`` given by integer ``terms``."""
    acc = {}
    for perm, signs in elements:
        for m, c in terms:
            out = [0] * len(m)
            neg = False
            for i, e in enumerate(m):
                e += shift[i]
                out[perm[i]] += e
                if e & 1 and signs[i] < 0:
                    neg = not neg
            key = tuple(out)
            acc[key] = acc.get(key, 0) + (-c if neg else c)
    return {m: c for m, c in acc.items() if c}


def invariant_subring_dims(ideal: Ideal, group: GroupAction, bound: int) -> GradedDims:
    """dim (R^G / I^G)_d with I^G_d the Reynolds image of the slice I_d.

    I_d is spanned by ``m * f`` (``f`` a generator, ``m`` a monomial); no
    Gröbner basis is used.
    """
    ring = ideal.ring
    elements = [(g.permutation, g.signs) for g in group.elements]
    unit = [((0,) * ring.nvars, 1)]
    gens = [(f.degree(), _integer_terms(f)) for f in ideal.generators]
    dims = []
    for d in range(bound + 1):
        inv = Echelon()
        for m in monomials_of_degree(ring, d):
            inv.insert(_sum_images(unit, m, elements))
        sub = Echelon()
        for df, terms in gens:
            for m in monomials_of_degree(ring, d - df):
                row = _sum_images(terms, m, elements)
                if row:
                    sub.insert(row)
        dims.append(inv.rank - sub.rank)
    return GradedDims(bound, tuple(dims))


@dataclass(frozen=True)
class FixedPointReport:
    fixed_quotient: GradedDims  # (R/I)^G
    invariant_quotient: GradedDims  # R^G / I^G
    holds: bool
    first_mismatch: Optional[int]

    def to_json(self) -> dict:
        return {
            "fixed_quotient": self.fixed_quotient.to_json(),
            "invariant_quotient": self.invariant_quotient.to_json(),
            "holds": self.holds,
            "first_mismatch": self.first_mismatch,
        }


class FixedPointMismatch(AssertionError):
    """(R/I)^G and R^G/I^G disagree: since the isomorphism is a theorem, this is a bug."""


def verify_fixed_point_lemma(ideal: Ideal, group: GroupAction, order: Optional[MonomialOrder] = None,
                             bound: int = DEFAULT_BOUND, strict: bool = True) -> FixedPointReport:
    lhs = fixed_quotient_dims(ideal, group, order, bound)
    rhs = invariant_subring_dims(ideal, group, bound)
    bad = next((d for d in range(bound + 1) if lhs[d] != rhs[d]), None)
    report = FixedPointReport(lhs, rhs, bad is None, bad)
    if strict and bad is not None:
        raise FixedPointMismatch(
            f"degree {bad}: dim (R/I)^G = {lhs[bad]} but dim R^G/I^G = {rhs[bad]}")
    return report


def load_action(data: Mapping, ring: RingSpec, **kw) -> GroupAction:
    """Action file JSON: ``{"generators": [{"m": "-m", "h": "-h"}, ...]}``."""
    try:
        gens = [SignedSubstitution.from_mapping(ring, g) for g in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed action file: {exc}") from None
    return close_group(gens, ring, **kw)
