"""Graded quotient rings R/I with degreewise standard-monomial bases."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .groebner import GroebnerBasis, Ideal, MonomialOrder, buchberger, leading_term_ideal
from .hilbert import GradedDims, standard_monomials
from .polyring import Monomial, Polynomial, RingSpec, format_monomial


class BaseRing:
    """``ring / ideal`` with a fixed monomial order; the ideal may be zero."""

    def __init__(self, ring: RingSpec, ideal: Optional[Ideal] = None,
                 order: Optional[MonomialOrder] = None, name: str = ""):
        self.ring = ring
        self.ideal = ideal if ideal is not None else Ideal(ring, ())
        if self.ideal.ring != ring:
            raise ValueError("ideal lives in a different ring")
        self.ideal.require_homogeneous()
        self.order = order or MonomialOrder.lex(ring)
        self.name = name
        self._bases = {}

    @classmethod
    def from_strings(cls, ring: RingSpec, gens: Iterable[str] = (), **kw) -> "BaseRing":
        return cls(ring, Ideal.from_strings(ring, gens), **kw)

    @cached_property
    def groebner(self) -> GroebnerBasis:
        return buchberger(self.ideal, self.order)

    @cached_property
    def leading_terms(self) -> list:
        return leading_term_ideal(self.groebner) if self.ideal.generators else []

    def reduce(self, p: Polynomial) -> Polynomial:
        if not self.ideal.generators:
            return p
        return self.groebner.reduce(p)

    def is_zero(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def basis(self, d: int) -> list:
        """Standard monomials of degree ``d`` (a basis of the degree-d slice)."""
        if d not in self._bases:
            self._bases[d] = standard_monomials(self.leading_terms, self.ring, d) if d >= 0 else []
        return self._bases[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def dims(self, bound: int) -> GradedDims:
        return GradedDims(bound, tuple(self.dim(d) for d in range(bound + 1)))

    def coordinates(self, p: Polynomial, d: int) -> list:
        """Coordinates of the degree-``d`` element ``p`` in :meth:`basis` ``(d)``."""
        r = self.reduce(p)
        basis = self.basis(d)
        index = {m: i for i, m in enumerate(basis)}
        out = [Fraction(0)] * len(basis)
        for m, c in r.items():
            if m not in index:
                raise ValueError(f"{p} is not homogeneous of degree {d}")
            out[index[m]] = c
        return out

    def label(self, m: Monomial) -> str:
        return format_monomial(m, self.ring)

    def __str__(self):
        if not self.ideal.generators:
            return str(self.ring)
        return f"{self.ring}/{self.ideal}"

    def __repr__(self):
        return f"BaseRing({self.name or str(self)})"
