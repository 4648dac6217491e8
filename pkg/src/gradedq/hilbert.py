"""Standard monomials and truncated Hilbert functions of graded quotients R/I."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .groebner import Ideal, MonomialOrder, buchberger, leading_term_ideal
from .linalg import Echelon
from .polyring import Monomial, RingSpec, monomial_divides, weighted_degree

DEFAULT_BOUND = 40


@dataclass(frozen=True)
class GradedDims:
    """Degreewise dimensions for degrees ``0..bound`` (missing degrees are 0)."""

    bound: int
    dims: tuple

    def __post_init__(self):
        dims = tuple(int(x) for x in self.dims)
        if len(dims) != self.bound + 1:
            raise ValueError(f"expected {self.bound + 1} entries, got {len(dims)}")
        if any(x < 0 for x in dims):
            raise ValueError("dimensions are non-negative")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def from_mapping(cls, bound: int, dims: Mapping) -> "GradedDims":
        return cls(bound, tuple(int(dims.get(d, 0)) for d in range(bound + 1)))

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedDims":
        return cls.from_mapping(int(data["bound"]), {int(k): v for k, v in data["dims"].items()})

    def __getitem__(self, d: int) -> int:
        return self.dims[d] if 0 <= d <= self.bound else 0

    def to_json(self) -> dict:
        return {"bound": self.bound,
                "dims": {str(d): x for d, x in enumerate(self.dims) if x}}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def truncate(self, bound: int) -> "GradedDims":
        return GradedDims(bound, tuple(self[d] for d in range(bound + 1)))

    def table(self, title: str = "") -> str:
        rows = [f"degree  dim"] if not title else [title, "degree  dim"]
        rows += [f"{d:>6}  {x}" for d, x in enumerate(self.dims)]
        rows.append(f"(bound {self.bound})")
        return "\n".join(rows)

    def __str__(self):
        return ",".join(map(str, self.dims))


@lru_cache(maxsize=None)
def monomials_of_degree(ring: RingSpec, d: int) -> tuple:
    """All exponent vectors of weighted degree ``d``, in canonical (descending lex) order."""
    degs = ring.degrees
    n = len(degs)
    out = []

    def walk(i, left, prefix):
        if i == n - 1:
            if left % degs[i] == 0:
                out.append(prefix + (left // degs[i],))
            return
        for e in range(left // degs[i], -1, -1):
            walk(i + 1, left - e * degs[i], prefix + (e,))

    if d >= 0:
        walk(0, d, ())
    return tuple(out)


def _avoids(m: Monomial, lt: Sequence[Monomial]) -> bool:
    return not any(monomial_divides(x, m) for x in lt)


def standard_monomials(lt: Sequence[Monomial], ring: RingSpec, d: int) -> list:
    """Monomials of weighted degree ``d`` outside the monomial ideal ``lt``.

    The walk over exponent vectors prunes a branch as soon as the partial
    exponent vector (remaining exponents zero) already lies in ``lt``.
    """
    lt = [tuple(x) for x in lt]
    degs = ring.degrees
    n = len(degs)
    out = []

    def walk(i, left, prefix):
        if i == n:
            if left == 0:
                out.append(prefix)
            return
        for e in range(left // degs[i], -1, -1):
            m = prefix + (e,)
            partial = m + (0,) * (n - i - 1)
            if e and not _avoids(partial, lt):
                continue
            walk(i + 1, left - e * degs[i], m)

    if d >= 0:
        walk(0, d, ())
    return out


def hilbert_function(ideal: Ideal, order: Optional[MonomialOrder] = None,
                     bound: int = DEFAULT_BOUND) -> GradedDims:
    ideal.require_homogeneous()
    order = order or MonomialOrder.lex(ideal.ring)
    lt = leading_term_ideal(buchberger(ideal, order)) if ideal.generators else []
    return dims_from_leading_terms(lt, ideal.ring, bound)


def dims_from_leading_terms(lt: Sequence[Monomial], ring: RingSpec, bound: int) -> GradedDims:
    return GradedDims(bound, tuple(len(standard_monomials(lt, ring, d)) for d in range(bound + 1)))


def dims_equal(a: GradedDims, b: GradedDims) -> tuple:
    """``(True, None)`` or ``(False, first_mismatching_degree)``."""
    if a.bound != b.bound:
        raise ValueError(f"bound mismatch: {a.bound} vs {b.bound}")
    for d in range(a.bound + 1):
        if a[d] != b[d]:
            return False, d
    return True, None


def rank_oracle(ideal: Ideal, d: int) -> int:
    """dim (R/I)_d by linear algebra on the span of ``m * g`` inside R_d.

    Independent of any Gröbner computation.
    """
    ideal.require_homogeneous()
    ring = ideal.ring
    e = Echelon()
    for g in ideal.generators:
        dg = g.degree()
        for m in monomials_of_degree(ring, d - dg):
            e.insert(dict(g.mul_term(m, 1).items()))
    return len(monomials_of_degree(ring, d)) - e.rank
