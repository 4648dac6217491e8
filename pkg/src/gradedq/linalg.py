"""Exact linear algebra over Q on sparse vectors (dicts column -> Fraction).

Columns may be any hashable keys.  Pivots are chosen as the smallest column
under ``key``, so with integer columns and the default key an echelon basis
prefers earlier coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Optional, Sequence


def _clean(v) -> dict:
    return {c: Fraction(x) for c, x in v.items() if x}


class Echelon:
    """Incrementally built row-echelon basis of a subspace of Q^columns.

    Each stored row remembers which combination of inserted vectors produced
    it (keyed by the ``tag`` given to :meth:`insert`), so :meth:`decompose`
    can express a vector in terms of the original inputs.
    """

    def __init__(self, key: Optional[Callable] = None):
        self.key = key or (lambda c: c)
        self._rows = {}  # pivot column -> (row, combo)

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list:
        return sorted(self._rows, key=self.key)

    def rows(self) -> list:
        return [self._rows[p][0] for p in self.pivots]

    def _reduce(self, v: dict, combo: dict) -> tuple:
        v = dict(v)
        combo = dict(combo)
        while True:
            cols = [c for c in v if c in self._rows]
            if not cols:
                return v, combo
            piv = min(cols, key=self.key)
            row, rcombo = self._rows[piv]
            f = v[piv]  # rows are monic at their pivot
            for c, x in row.items():
                s = v.get(c, 0) - f * x
                if s:
                    v[c] = s
                else:
                    v.pop(c, None)
            for t, x in rcombo.items():
                s = combo.get(t, 0) - f * x
                if s:
                    combo[t] = s
                else:
                    combo.pop(t, None)

    def reduce(self, v) -> dict:
        """Remainder of ``v`` after eliminating every pivot column."""
        return self._reduce(_clean(v), {})[0]

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def insert(self, v, tag: Hashable = None) -> bool:
        """Add ``v`` to the span; returns False if it was already dependent."""
        combo = {} if tag is None else {tag: Fraction(1)}
        r, combo = self._reduce(_clean(v), combo)
        if not r:
            return False
        piv = min(r, key=self.key)
        inv = 1 / r[piv]
        self._rows[piv] = (
            {c: x * inv for c, x in r.items()},
            {t: x * inv for t, x in combo.items()},
        )
        return True

    def decompose(self, v) -> tuple:
        """Return ``(remainder, coefficients)`` with
        ``v = remainder + sum(coefficients[tag] * inserted[tag])``."""
        r, combo = self._reduce(_clean(v), {})
        return r, {t: -x for t, x in combo.items()}


def rank(vectors: Iterable) -> int:
    e = Echelon()
    for v in vectors:
        e.insert(v)
    return e.rank


def dense_to_sparse(row: Sequence) -> dict:
    return {j: Fraction(x) for j, x in enumerate(row) if x}


def matrix_rank(rows: Sequence[Sequence]) -> int:
    return rank(dense_to_sparse(r) for r in rows)


def kernel(columns: Sequence[dict], ncols: Optional[int] = None) -> list:
    """Basis of ``{x : sum_j x_j * columns[j] = 0}`` as dense coefficient lists.

    ``columns`` are the images of the standard basis vectors.  Kernel vectors
    come out with their leading free coordinate normalized to 1.
    """
    n = len(columns) if ncols is None else ncols
    e = Echelon()
    basis = []
    for j in range(n):
        r, coeffs = e.decompose(columns[j])
        if r:
            e.insert(columns[j], tag=j)
        else:
            vec = [Fraction(0)] * n
            vec[j] = Fraction(1)
            for t, x in coeffs.items():
                vec[t] -= x
            basis.append(vec)
    return basis
