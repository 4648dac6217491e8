"""Sparse multivariate polynomials over Q with a weighted (cohomological) grading.

A :class:`RingSpec` fixes an ordered list of graded variables; a
:class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients.  Monomials are plain tuples of
non-negative ints, one entry per ring variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Monomial = tuple  # tuple[int, ...]
Scalar = Union[int, Fraction]

# ASCII spellings accepted for the Greek generator names.
ALIASES = {
    "mu": "m", "μ": "m",
    "eta": "h", "η": "h",
    "nu": "n", "ν": "n",
    "theta": "t", "vartheta": "t", "ϑ": "t", "θ": "t",
}

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    pass


class PolynomialSyntaxError(ValueError):
    """Raised by :func:`parse`; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class VarSpec:
    name: str
    degree: int

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"variable {self.name!r} needs a positive integer degree")


@dataclass(frozen=True)
class RingSpec:
    vars: tuple

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("a ring needs at least one variable")
        names = [v.name for v in self.vars]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def from_pairs(cls, *pairs) -> "RingSpec":
        """``RingSpec.from_pairs(("m", 2), ("h", 2))``."""
        return cls(tuple(VarSpec(n, d) for n, d in pairs))

    @classmethod
    def from_json(cls, data: Mapping) -> "RingSpec":
        try:
            return cls(tuple(VarSpec(str(v["name"]), v["degree"]) for v in data["vars"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed ring spec: {exc}") from None

    def to_json(self) -> dict:
        return {"vars": [{"name": v.name, "degree": v.degree} for v in self.vars]}

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @cached_property
    def names(self) -> tuple:
        return tuple(v.name for v in self.vars)

    @cached_property
    def degrees(self) -> tuple:
        return tuple(v.degree for v in self.vars)

    @cached_property
    def _positions(self) -> dict:
        return {n: i for i, n in enumerate(self.names)}

    def index(self, name: str) -> int:
        pos = self._positions
        if name in pos:
            return pos[name]
        alias = ALIASES.get(name)
        if alias is not None and alias in pos:
            return pos[alias]
        raise KeyError(f"unknown variable {name!r} in ring {self.names}")

    # constructors -----------------------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Scalar) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self) -> tuple:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exps: Iterable[int], coeff: Scalar = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise RingMismatchError(f"monomial {exps} has wrong length for {self.names}")
        return Polynomial(self, {exps: Fraction(coeff)})

    def poly(self, text: str) -> "Polynomial":
        return parse(text, self)

    def __str__(self):
        return "Q[" + ", ".join(f"{v.name}:{v.degree}" for v in self.vars) + "]"


def weighted_degree(m: Monomial, ring: RingSpec) -> int:
    return sum(e * d for e, d in zip(m, ring.degrees))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial; equality is equality of canonical term maps."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping = None):
        clean = {}
        for m, c in (terms or {}).items():
            if c:
                clean[tuple(m)] = Fraction(c)
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def sorted_terms(self) -> list:
        """Terms in canonical order: exponent tuples descending lexicographically."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero
        return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, mono: Monomial, c: Scalar) -> "Polynomial":
        """Multiply by the single term ``c * x^mono``."""
        c = Fraction(c)
        if not c:
            return self.ring.zero
        return Polynomial._raw(
            self.ring, {monomial_mul(m, mono): v * c for m, v in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # grading ----------------------------------------------------------------

    def degrees(self) -> set:
        return {weighted_degree(m, self.ring) for m in self._terms}

    def degree(self) -> int:
        """Largest weighted degree of a term; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(
            self.ring,
            {m: c for m, c in self._terms.items() if weighted_degree(m, self.ring) == d},
        )

    def substitute(self, s: "SignedSubstitution") -> "Polynomial":
        return substitute(self, s)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


@dataclass(frozen=True)
class SignedSubstitution:
    """Variable-to-signed-variable map, e.g. ``x -> -x``.

    ``images`` holds one ``(name, (target_name, sign))`` pair per ring
    variable, in ring order.  Build with :meth:`from_mapping`.
    """

    ring: RingSpec
    images: tuple

    @classmethod
    def from_mapping(cls, ring: RingSpec, mapping: Mapping) -> "SignedSubstitution":
        """Accepts ``{"m": "-m", "n": ("t", 1)}``; unlisted variables map to themselves."""
        images = {}
        for name, img in mapping.items():
            src = ring.names[ring.index(name)]
            if isinstance(img, str):
                txt = img.strip()
                sign = 1
                if txt[:1] in "+-":
                    sign = -1 if txt[0] == "-" else 1
                    txt = txt[1:].strip()
                target = ring.names[ring.index(txt)]
            else:
                target, sign = img
                target = ring.names[ring.index(target)]
            if sign not in (1, -1):
                raise ValueError(f"sign for {name!r} must be +1 or -1")
            images[src] = (target, sign)
        full = tuple((n, images.get(n, (n, 1))) for n in ring.names)
        return cls(ring, full)

    @classmethod
    def identity(cls, ring: RingSpec) -> "SignedSubstitution":
        return cls.from_mapping(ring, {})

    def __post_init__(self):
        ring = self.ring
        targets = [t for _, (t, _) in self.images]
        if [n for n, _ in self.images] != list(ring.names):
            raise ValueError("substitution must list every ring variable in order")
        if sorted(targets) != sorted(ring.names):
            raise ValueError("substitution is not a bijection on the variables")
        for (src, (tgt, _)) in self.images:
            if ring.vars[ring.index(src)].degree != ring.vars[ring.index(tgt)].degree:
                raise ValueError(f"degree mismatch in substitution {src} -> {tgt}")

    @cached_property
    def permutation(self) -> tuple:
        """``permutation[i]`` is the index of the image variable of variable ``i``."""
        return tuple(self.ring.index(t) for _, (t, _) in self.images)

    @cached_property
    def signs(self) -> tuple:
        return tuple(s for _, (_, s) in self.images)

    def is_diagonal(self) -> bool:
        return all(src == tgt for src, (tgt, _) in self.images)

    def apply_monomial(self, m: Monomial) -> tuple:
        """Image of ``x^m`` as ``(sign, monomial)``."""
        out = [0] * len(m)
        sign = 1
        for i, (e, j, s) in enumerate(zip(m, self.permutation, self.signs)):
            out[j] += e
            if s < 0 and e % 2:
                sign = -sign
        return sign, tuple(out)

    def compose(self, other: "SignedSubstitution") -> "SignedSubstitution":
        """``self ∘ other``: apply ``other`` first, then ``self``."""
        names = self.ring.names
        perm, signs = self.permutation, self.signs
        images = {}
        for i, (j, s) in enumerate(zip(other.permutation, other.signs)):
            images[names[i]] = (names[perm[j]], s * signs[j])
        return SignedSubstitution.from_mapping(self.ring, images)

    def __call__(self, p: Polynomial) -> Polynomial:
        return substitute(p, self)

    def to_json(self) -> dict:
        return {src: ("-" if s < 0 else "") + tgt for src, (tgt, s) in self.images}

    def __str__(self):
        moved = [f"{src}->{'-' if s < 0 else ''}{tgt}"
                 for src, (tgt, s) in self.images if (tgt, s) != (src, 1)]
        return "{" + ", ".join(moved) + "}" if moved else "id"


def substitute(p: Polynomial, s: SignedSubstitution) -> Polynomial:
    if s.ring != p.ring:
        raise RingMismatchError(f"{s.ring} vs {p.ring}")
    out = {}
    for m, c in p.items():
        sign, m2 = s.apply_monomial(m)
        out[m2] = c if sign > 0 else -c
    return Polynomial._raw(p.ring, out)


# text format ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*|[μηνϑθ])|(\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if mt is None:  # trailing whitespace
            break
        start = mt.start(mt.lastindex)
        if mt.group(1) is not None:
            yield "int", mt.group(1), start
        elif mt.group(2) is not None:
            yield "name", mt.group(2), start
        else:
            yield "op", mt.group(3), start
        pos = mt.end()
    yield "end", "", len(text)


def parse(text: str, ring: RingSpec) -> Polynomial:
    """Parse ``"3/2*m*h - n^2 + 1"`` in ``ring``."""
    toks = list(_tokens(text))
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        tok = toks[i]
        i += 1
        return tok

    def fail(msg, tok):
        raise PolynomialSyntaxError(msg, text, tok[2])

    def integer():
        tok = take()
        if tok[0] != "int":
            fail("expected integer", tok)
        return int(tok[1])

    def factor(exps):
        tok = take()
        if tok[0] != "name":
            fail("expected variable", tok)
        try:
            idx = ring.index(tok[1])
        except KeyError:
            fail(f"unknown variable {tok[1]!r}", tok)
        power = 1
        if peek()[:2] == ("op", "^"):
            take()
            power = integer()
        exps[idx] += power

    def term(sign):
        coeff = Fraction(sign)
        exps = [0] * ring.nvars
        tok = peek()
        if tok[0] == "int":
            coeff *= integer()
            while peek()[:2] == ("op", "/"):
                take()
                den_tok = peek()
                den = integer()
                if den == 0:
                    fail("division by zero", den_tok)
                coeff /= den
            if peek()[:2] != ("op", "*"):
                return tuple(exps), coeff
            take()
        factor(exps)
        while peek()[:2] == ("op", "*"):
            take()
            factor(exps)
        return tuple(exps), coeff

    acc = {}
    sign = 1
    if peek()[:2] in (("op", "+"), ("op", "-")):
        sign = -1 if take()[1] == "-" else 1
    if peek()[0] == "end":
        fail("empty polynomial", peek())
    while True:
        m, c = term(sign)
        acc[m] = acc.get(m, 0) + c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[:2] not in (("op", "+"), ("op", "-")):
            fail(f"unexpected {tok[1]!r}", tok)
        sign = -1 if take()[1] == "-" else 1
    return Polynomial(ring, acc)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial, ring: RingSpec) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_poly(p: Polynomial) -> str:
    if not p:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, p.ring)
        if mono == "1":
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
