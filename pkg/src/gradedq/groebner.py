"""Monomial orders, multivariate division and Buchberger's algorithm."""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .polyring import (
    Monomial,
    Polynomial,
    RingSpec,
    format_monomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomials_coprime,
    weighted_degree,
)

DEFAULT_PAIR_CAP = 200_000


class GroebnerError(RuntimeError):
    pass


class NonHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is ``"lex"`` or ``"grevlex"``; ``precedence`` lists variable
    indices from most to least significant."""

    kind: str
    precedence: tuple

    def __post_init__(self):
        object.__setattr__(self, "precedence", tuple(self.precedence))
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unsupported monomial order {self.kind!r}")
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError(f"precedence {self.precedence} is not a permutation")

    @classmethod
    def lex(cls, ring: RingSpec, names: Optional[Sequence[str]] = None) -> "MonomialOrder":
        return cls._make("lex", ring, names)

    @classmethod
    def grevlex(cls, ring: RingSpec, names: Optional[Sequence[str]] = None) -> "MonomialOrder":
        return cls._make("grevlex", ring, names)

    @classmethod
    def _make(cls, kind, ring, names):
        if names is None:
            return cls(kind, tuple(range(ring.nvars)))
        order = cls(kind, tuple(ring.index(n) for n in names))
        if len(order.precedence) != ring.nvars:
            raise ValueError("precedence must name every variable")
        return order

    @classmethod
    def from_json(cls, data: Mapping, ring: RingSpec) -> "MonomialOrder":
        kind = data.get("kind", "lex")
        return cls._make(kind, ring, data.get("precedence"))

    def to_json(self, ring: RingSpec) -> dict:
        return {"kind": self.kind, "precedence": [ring.names[i] for i in self.precedence]}

    def key(self, m: Monomial) -> tuple:
        """Sort key: larger key means larger monomial."""
        if self.kind == "lex":
            return tuple(m[i] for i in self.precedence)
        rev = tuple(-m[i] for i in reversed(self.precedence))
        return (sum(m),) + rev

    def describe(self, ring: RingSpec) -> str:
        return f"{self.kind} " + " > ".join(ring.names[i] for i in self.precedence)


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def leading_monomial(p: Polynomial, order: MonomialOrder) -> Monomial:
    if not p:
        raise ValueError("zero polynomial has no leading term")
    return max(p.monomials(), key=order.key)


def leading_coefficient(p: Polynomial, order: MonomialOrder) -> Fraction:
    return p.coeff(leading_monomial(p, order))


def monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    return p.scale(1 / leading_coefficient(p, order))


def normal_form(p: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Fully reduced remainder of ``p`` on division by ``divisors``.

    The first divisor (in list order) whose leading monomial divides the
    current term is used.
    """
    lead = []
    for g in divisors:
        if g.ring != p.ring:
            raise ValueError("ring mismatch in normal_form")
        if not g:
            raise ValueError("zero divisor polynomial")
        lm = leading_monomial(g, order)
        lead.append((lm, g.coeff(lm), g))
    work = dict(p.items())
    rem = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, g in lead:
            if monomial_divides(lm, m):
                f = c / lc
                shift = monomial_div(m, lm)
                for gm, gc in g.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    s = work.get(t, 0) - f * gc
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
            del work[m]
    return Polynomial._raw(p.ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = leading_monomial(f, order), leading_monomial(g, order)
    lcm = monomial_lcm(lf, lg)
    return (f.mul_term(monomial_div(lcm, lf), 1 / f.coeff(lf))
            - g.mul_term(monomial_div(lcm, lg), 1 / g.coeff(lg)))


@dataclass(frozen=True)
class Ideal:
    ring: RingSpec
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.ring != self.ring:
                raise ValueError("generator lives in a different ring")
        object.__setattr__(self, "generators", tuple(g for g in gens if g))

    @classmethod
    def from_strings(cls, ring: RingSpec, gens: Iterable[str]) -> "Ideal":
        return cls(ring, tuple(ring.poly(g) for g in gens))

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def require_homogeneous(self):
        for g in self.generators:
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"generator {g} is not weighted-homogeneous")

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic basis sorted by leading monomial (ascending)."""

    ring: RingSpec
    order: MonomialOrder
    elements: tuple
    stats: dict = field(default_factory=dict, compare=False, hash=False)

    def leading_monomials(self) -> list:
        return [leading_monomial(g, self.order) for g in self.elements]

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.elements, self.order)

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.elements) + "}"


def _pair_key(lcm, ring, order):
    return (weighted_degree(lcm, ring), order.key(lcm))


def buchberger(ideal: Ideal, order: MonomialOrder, max_pairs: int = DEFAULT_PAIR_CAP) -> GroebnerBasis:
    """Reduced Gröbner basis with the normal selection strategy.

    Critical pairs are processed by increasing weighted degree of the lcm,
    ties broken by the monomial order on the lcm and then by pair index.
    Pairs with coprime leading monomials are skipped.
    """
    ring = ideal.ring
    basis = [monic(g, order) for g in ideal.generators]
    lead = [leading_monomial(g, order) for g in basis]
    queue = []
    processed = skipped = 0

    def push_pairs(j):
        nonlocal skipped
        for i in range(j):
            if monomials_coprime(lead[i], lead[j]):
                skipped += 1
                continue
            lcm = monomial_lcm(lead[i], lead[j])
            heapq.heappush(queue, (_pair_key(lcm, ring, order), i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while queue:
        _, i, j = heapq.heappop(queue)
        processed += 1
        if processed > max_pairs:
            raise GroebnerError(
                f"Buchberger exceeded the cap of {max_pairs} critical pairs "
                f"({len(basis)} basis elements so far)"
            )
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r:
            continue
        basis.append(monic(r, order))
        lead.append(leading_monomial(r, order))
        push_pairs(len(basis) - 1)

    reduced = _interreduce(basis, order)
    return GroebnerBasis(ring, order, tuple(reduced),
                         {"pairs_processed": processed, "pairs_skipped": skipped})


def _interreduce(basis: list, order: MonomialOrder) -> list:
    key = order.key
    # minimal basis: drop elements whose leading monomial is divisible by another's
    items = sorted(basis, key=lambda g: key(leading_monomial(g, order)))
    minimal = []
    for g in items:
        lm = leading_monomial(g, order)
        if any(monomial_divides(leading_monomial(h, order), lm) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lm = leading_monomial(g, order)
        tail = Polynomial._raw(g.ring, {m: c for m, c in g.items() if m != lm})
        reduced_tail = normal_form(tail, others, order) if others else tail
        out.append(monic(reduced_tail + g.ring.monomial(lm, g.coeff(lm)), order))
    return sorted(out, key=lambda g: key(leading_monomial(g, order)))


def groebner_basis(ideal: Ideal, order: MonomialOrder, **kw) -> GroebnerBasis:
    return buchberger(ideal, order, **kw)


def leading_term_ideal(gb: GroebnerBasis) -> list:
    """Minimal monomial generators of LT(I), ascending in the basis order."""
    lms = sorted(gb.leading_monomials(), key=gb.order.key)
    out = []
    for m in lms:
        if not any(monomial_divides(x, m) for x in out):
            out.append(m)
    return out


def buchberger_criterion_holds(gb: GroebnerBasis) -> bool:
    """Every S-polynomial of a basis pair reduces to zero (checked exhaustively)."""
    els = gb.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if normal_form(s_polynomial(els[i], els[j], gb.order), els, gb.order):
                return False
    return True


def format_lt_ideal(monos: Iterable[Monomial], ring: RingSpec) -> str:
    return "(" + ", ".join(format_monomial(m, ring) for m in monos) + ")"


def load_ideal(data: Mapping) -> tuple:
    """Parse an ideal file's JSON into ``(ideal, order)``."""
    ring = RingSpec.from_json(data["ring"])
    ideal = Ideal.from_strings(ring, data.get("generators", []))
    order = MonomialOrder.from_json(data.get("order", {"kind": "lex"}), ring)
    return ideal, order


def dump_ideal(ideal: Ideal, order: MonomialOrder) -> str:
    return json.dumps({
        "ring": ideal.ring.to_json(),
        "generators": [str(g).replace(" ", "") for g in ideal.generators],
        "order": order.to_json(ideal.ring),
    })
