"""First-quadrant multiplicative cohomological spectral sequences over Q.

The E2 page is the Künneth tensor product ``H*(base) ⊗ H*(fiber)``.  Base
classes are permanent cycles; a differential ``d_r`` is specified on the
fiber generators and extended by the graded Leibniz rule.  Each later page
is stored as a subquotient ``Z_r / B_r`` of the E2 entry, so page turning is
exact linear algebra on E2 coordinates.

Truncation: only columns ``p <= P`` are kept.  Differentials leaving the
box are dropped, which can only disturb entries with ``p > P - r``; the
reporting window is chosen so that this never reaches it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .hilbert import GradedDims, dims_equal, hilbert_function
from .groebner import Ideal, MonomialOrder
from .linalg import Echelon, kernel
from .polyring import Polynomial, format_monomial, monomial_mul
from .quotient import BaseRing


class SpectralSequenceError(ValueError):
    pass


class TruncationError(SpectralSequenceError):
    """The requested window is too small to report exact totals."""


def _koszul(a: int, b: int) -> int:
    return -1 if (a * b) % 2 else 1


# ---------------------------------------------------------------------------
# fiber algebras


class FiberAlgebra:
    """Finite-dimensional graded-commutative algebra given by structure constants.

    ``products[(i, j)]`` maps basis index ``k`` to the coefficient of ``x_k``
    in ``x_i * x_j``.  Products with the unit are filled in automatically and
    a product given in one order determines the other by the Koszul sign.
    """

    def __init__(self, labels: Sequence[str], degrees: Sequence[int],
                 products: Mapping, generators: Sequence[str], unit: str = "1"):
        self.labels = tuple(labels)
        self.degrees = tuple(int(d) for d in degrees)
        if len(self.labels) != len(self.degrees) or len(set(self.labels)) != len(self.labels):
            raise SpectralSequenceError("fiber basis labels must be unique, one degree each")
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        self.unit = self.index(unit)
        if self.degrees[self.unit] != 0:
            raise SpectralSequenceError("unit must sit in degree 0")
        self.generators = tuple(self.index(g) for g in generators)
        n = len(self.labels)
        table = {}
        for (a, b), val in products.items():
            i, j = self.index(a), self.index(b)
            table[(i, j)] = {self.index(k): Fraction(c) for k, c in val.items() if c}
        for i in range(n):
            table.setdefault((self.unit, i), {i: Fraction(1)})
            table.setdefault((i, self.unit), {i: Fraction(1)})
        for (i, j), val in list(table.items()):
            s = _koszul(self.degrees[i], self.degrees[j])
            table.setdefault((j, i), {k: s * c for k, c in val.items()})
        self._table = table
        self._validate()

    def index(self, label: str) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise SpectralSequenceError(f"unknown fiber class {label!r}") from None

    def __len__(self):
        return len(self.labels)

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    def product(self, i: int, j: int) -> dict:
        return self._table.get((i, j), {})

    def multiply(self, u: Mapping, v: Mapping) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.product(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    def _validate(self):
        n = len(self)
        deg = self.degrees
        for (i, j), val in self._table.items():
            for k in val:
                if deg[k] != deg[i] + deg[j]:
                    raise SpectralSequenceError(
                        f"{self.labels[i]}*{self.labels[j]} has a term of the wrong degree")
            other = self._table.get((j, i), {})
            s = _koszul(deg[i], deg[j])
            if {k: s * c for k, c in val.items()} != other:
                raise SpectralSequenceError(
                    f"{self.labels[i]}, {self.labels[j]} violate graded commutativity")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.multiply(self.multiply({i: 1}, {j: 1}), {k: 1})
                    right = self.multiply({i: 1}, self.multiply({j: 1}, {k: 1}))
                    if left != right:
                        raise SpectralSequenceError("fiber structure constants are not associative")

    @classmethod
    def exterior(cls, gens: Sequence[tuple]) -> "FiberAlgebra":
        """Exterior algebra on odd-degree generators ``[("a", 3), ("b", 3)]``.

        Basis elements are the subsets, labelled by concatenating names.
        """
        names = [g for g, _ in gens]
        gdeg = dict(gens)
        if any(d % 2 == 0 for d in gdeg.values()):
            raise SpectralSequenceError("exterior generators must have odd degree")
        subsets = [()]
        for g in names:
            subsets += [s + (g,) for s in subsets]
        subsets.sort(key=lambda s: (len(s), [names.index(x) for x in s]))
        label = {s: "".join(s) or "1" for s in subsets}
        products = {}
        for s in subsets:
            for t in subsets:
                if set(s) & set(t) or not s or not t:
                    continue
                # sign of the shuffle sorting s + t
                seq = [names.index(x) for x in s + t]
                inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
                merged = tuple(sorted(s + t, key=names.index))
                products[(label[s], label[t])] = {label[merged]: (-1) ** inv}
        return cls([label[s] for s in subsets],
                   [sum(gdeg[x] for x in s) for s in subsets], products, names)

    @classmethod
    def from_quotient(cls, q: BaseRing, top: Optional[int] = None) -> "FiberAlgebra":
        """Finite-dimensional graded quotient ring as a fiber algebra."""
        if top is None:
            top = 0
            d = 0
            while True:
                d += 1
                if q.dim(d):
                    top = d
                elif all(q.dim(d + k) == 0 for k in range(1, max(q.ring.degrees) + 1)):
                    break
                if d > 1000:
                    raise SpectralSequenceError("quotient ring is not finite-dimensional")
        basis = [(m, d) for d in range(top + 1) for m in q.basis(d)]
        labels = [q.label(m) for m, _ in basis]
        products = {}
        for i, (m1, d1) in enumerate(basis):
            for j, (m2, d2) in enumerate(basis):
                if i == 0 or j == 0 or j < i:
                    continue
                prod = q.reduce(q.ring.monomial(monomial_mul(m1, m2)))
                if d1 + d2 > top:
                    if prod:
                        raise SpectralSequenceError("top degree truncates a nonzero product")
                    continue
                coords = q.coordinates(prod, d1 + d2)
                products[(labels[i], labels[j])] = {
                    labels[k]: c for k, c in zip(
                        [n for n, (_, dd) in enumerate(basis) if dd == d1 + d2], coords) if c}
        gens = [q.label(m) for m, _ in basis if sum(m) == 1]
        return cls(labels, [d for _, d in basis], products, gens, unit=labels[0])

    def to_json(self) -> dict:
        return {
            "basis": [{"label": lab, "degree": d} for lab, d in zip(self.labels, self.degrees)],
            "unit": self.labels[self.unit],
            "generators": [self.labels[g] for g in self.generators],
            "products": [
                {"left": self.labels[i], "right": self.labels[j],
                 "result": {self.labels[k]: str(c) for k, c in sorted(val.items())}}
                for (i, j), val in sorted(self._table.items())
                if self.unit not in (i, j) and val
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FiberAlgebra":
        products = {}
        for item in data.get("products", []):
            products[(item["left"], item["right"])] = {
                k: Fraction(v) for k, v in item["result"].items()}
        return cls([b["label"] for b in data["basis"]], [b["degree"] for b in data["basis"]],
                   products, data.get("generators", []), data.get("unit", "1"))


# ---------------------------------------------------------------------------
# base ⊗ fiber


class BiAlgebra:
    """E2 = base ⊗ fiber; elements are dicts ``(base_monomial, fiber_index) -> coeff``."""

    def __init__(self, base: BaseRing, fiber: FiberAlgebra):
        if any(d % 2 for d in base.ring.degrees):
            raise SpectralSequenceError("base generators must have even degree")
        self.base = base
        self.fiber = fiber

    def base_degree(self, m) -> int:
        return sum(e * d for e, d in zip(m, self.base.ring.degrees))

    def element(self, terms: Iterable) -> dict:
        """From ``(Polynomial, fiber_label_or_index, coeff)`` triples."""
        out = {}
        for poly, f, c in terms:
            k = f if isinstance(f, int) else self.fiber.index(f)
            for m, a in self.base.reduce(poly).items():
                out[(m, k)] = out.get((m, k), 0) + a * Fraction(c)
        return {key: c for key, c in out.items() if c}

    def fiber_class(self, k: int) -> dict:
        return {((0,) * self.base.ring.nvars, k): Fraction(1)}

    def multiply(self, u: Mapping, v: Mapping) -> dict:
        ring = self.base.ring
        fdeg = self.fiber.degrees
        out = {}
        for (m1, x), a in u.items():
            for (m2, y), b in v.items():
                fx = self.fiber.product(x, y)
                if not fx:
                    continue
                sign = _koszul(fdeg[x], self.base_degree(m2))
                prod = self.base.reduce(ring.monomial(monomial_mul(m1, m2)))
                for m, c in prod.items():
                    for k, e in fx.items():
                        key = (m, k)
                        out[key] = out.get(key, 0) + sign * a * b * c * e
        return {k: c for k, c in out.items() if c}

    def add(self, u: Mapping, v: Mapping, scale=1) -> dict:
        out = dict(u)
        for k, c in v.items():
            s = out.get(k, 0) + scale * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def bidegrees(self, u: Mapping) -> set:
        return {(self.base_degree(m), self.fiber.degrees[k]) for m, k in u}

    def format(self, u: Mapping) -> str:
        if not u:
            return "0"
        parts = []
        for (m, k), c in sorted(u.items(), key=lambda t: (t[0][1], t[0][0]), reverse=True):
            b = format_monomial(m, self.base.ring)
            f = self.fiber.labels[k]
            body = f if b == "1" else (b if f == "1" else f"{b}*{f}")
            coeff = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("-" if c < 0 else "+") + coeff + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


@dataclass(frozen=True)
class DifferentialSpec:
    """``d_r`` on fiber generators: ``values[label]`` is an element of base ⊗ fiber."""

    page: int
    values: tuple  # ((generator label, ((Polynomial, fiber label, coeff), ...)), ...)

    @classmethod
    def from_mapping(cls, page: int, values: Mapping) -> "DifferentialSpec":
        """``{"a": [(poly, "1", 1)]}`` or ``{"a": poly}`` (meaning ``poly ⊗ 1``)."""
        norm = []
        for gen, val in values.items():
            if isinstance(val, Polynomial):
                val = [(val, None, 1)]
            norm.append((gen, tuple(tuple(t) for t in val)))
        return cls(int(page), tuple(norm))

    def resolved(self, alg: BiAlgebra) -> dict:
        fiber = alg.fiber
        out = {}
        for gen, terms in self.values:
            g = fiber.index(gen)
            if g not in fiber.generators:
                raise SpectralSequenceError(f"{gen!r} is not a fiber generator")
            terms = [(p, fiber.unit if f is None else f, c) for p, f, c in terms]
            val = alg.element(terms)
            want = (self.page, fiber.degrees[g] - self.page + 1)
            bad = alg.bidegrees(val) - {want}
            if bad:
                raise SpectralSequenceError(
                    f"d_{self.page}({gen}) must have bidegree {want}, got {sorted(bad)}")
            out[g] = val
        return out

    def to_json(self) -> dict:
        return {"page": self.page, "values": {
            gen: [{"base": str(p).replace(" ", ""), "fiber": f or "1", "coeff": str(Fraction(c))}
                  for p, f, c in terms]
            for gen, terms in self.values}}


class _ChainMap:
    """E2-level formula for ``d_r``: ``d(b ⊗ x) = (-1)^|b| b · d(x)``."""

    def __init__(self, alg: BiAlgebra, spec: Optional[DifferentialSpec]):
        self.alg = alg
        self.page = spec.page if spec else None
        self.gen_values = spec.resolved(alg) if spec else {}
        self._fiber_d = {}
        self._words = _fiber_words(alg.fiber)

    def _word_d(self, word: tuple) -> dict:
        # d(g w) = d(g) w + (-1)^|g| g d(w)
        alg = self.alg
        if not word:
            return {}
        g, rest = word[0], word[1:]
        rest_el = alg.fiber_class(alg.fiber.unit)
        for h in reversed(rest):
            rest_el = alg.multiply(alg.fiber_class(h), rest_el)
        first = alg.multiply(self.gen_values.get(g, {}), rest_el)
        sign = -1 if alg.fiber.degrees[g] % 2 else 1
        second = alg.multiply(alg.fiber_class(g), self._word_d(rest))
        return alg.add(first, second, sign)

    def fiber_d(self, k: int) -> dict:
        if k not in self._fiber_d:
            acc = {}
            for word, c in self._words[k].items():
                acc = self.alg.add(acc, self._word_d(word), c)
            self._fiber_d[k] = acc
        return self._fiber_d[k]

    def apply(self, vec: Mapping, basis: Sequence) -> dict:
        """Image of an E2 coordinate vector (indices into ``basis``)."""
        alg = self.alg
        out = {}
        for i, c in vec.items():
            m, k = basis[i]
            dx = self.fiber_d(k)
            if not dx:
                continue
            sign = -1 if alg.base_degree(m) % 2 else 1
            b = {(m, alg.fiber.unit): Fraction(sign) * c}
            out = alg.add(out, alg.multiply(b, dx))
        return out


def _fiber_words(fiber: FiberAlgebra) -> dict:
    """Express every fiber basis element as a combination of generator words."""
    n = len(fiber)
    ech = Echelon()
    vectors = {(): {fiber.unit: Fraction(1)}}
    ech.insert(vectors[()], tag=())
    level = [()]
    min_deg = min((fiber.degrees[g] for g in fiber.generators), default=0)
    max_len = fiber.top_degree // min_deg + 1 if min_deg else 0
    for _ in range(max_len):
        nxt = []
        for w in level:
            for g in fiber.generators:
                v = fiber.multiply({g: Fraction(1)}, vectors[w])
                word = (g,) + w
                if v and ech.insert(v, tag=word):
                    vectors[word] = v
                    nxt.append(word)
        level = nxt
        if ech.rank == n or not level:
            break
    out = {}
    for k in range(n):
        rem, coeffs = ech.decompose({k: 1})
        if rem:
            raise SpectralSequenceError(
                f"fiber class {fiber.labels[k]!r} is not a product of generators")
        out[k] = coeffs
    return out


# ---------------------------------------------------------------------------
# pages


class Entry:
    """Subquotient ``Z / B`` of an E2 entry, with a chosen basis of representatives."""

    def __init__(self, ambient: int, boundaries: Sequence[dict], reps: Sequence[dict]):
        self.ambient = ambient
        self.boundaries = [dict(b) for b in boundaries]
        self.reps = [dict(r) for r in reps]
        self._frame = Echelon()
        for b in self.boundaries:
            self._frame.insert(b)
        for i, r in enumerate(self.reps):
            if not self._frame.insert(r, tag=i):
                raise SpectralSequenceError("dependent representatives")

    @classmethod
    def full(cls, n: int) -> "Entry":
        return cls(n, [], [{i: Fraction(1)} for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coordinates(self, v: Mapping) -> list:
        rem, coeffs = self._frame.decompose(v)
        if rem:
            raise SpectralSequenceError("vector is not a cycle on this page")
        return [coeffs.get(i, Fraction(0)) for i in range(self.dim)]


@dataclass
class Page:
    r: int
    alg: BiAlgebra
    box: tuple  # (P, Q)
    bases: dict  # (p, q) -> list of (base monomial, fiber index); E2 labels
    entries: dict  # (p, q) -> Entry
    differentials: dict = field(default_factory=dict)  # (p, q) -> matrix rows (target x source)
    spec: Optional[DifferentialSpec] = None

    def dim(self, p: int, q: int) -> int:
        e = self.entries.get((p, q))
        return e.dim if e else 0

    def dims(self) -> dict:
        return {k: e.dim for k, e in self.entries.items() if e.dim}

    def target(self, p: int, q: int) -> tuple:
        return (p + self.r, q - self.r + 1)

    def matrix(self, p: int, q: int) -> list:
        """Matrix of d_r out of (p, q); zero if no differential is stored."""
        if (p, q) in self.differentials:
            return self.differentials[(p, q)]
        t = self.target(p, q)
        return [[Fraction(0)] * self.dim(p, q) for _ in range(self.dim(*t))]

    def has_nonzero_differential(self) -> bool:
        return any(any(x for row in m for x in row) for m in self.differentials.values())

    def labels(self, p: int, q: int) -> list:
        """Readable names of the representatives at (p, q)."""
        out = []
        basis = self.bases.get((p, q), [])
        for rep in self.entries[(p, q)].reps:
            lead = min(rep)
            m, k = basis[lead]
            b = format_monomial(m, self.alg.base.ring)
            f = self.alg.fiber.labels[k]
            name = f if b == "1" else (b if f == "1" else f"{b}*{f}")
            out.append(name + ("+..." if len(rep) > 1 else ""))
        return out

    def chart(self, max_p: Optional[int] = None) -> str:
        P, Q = self.box
        max_p = P if max_p is None else min(max_p, P)
        width = max(2, len(str(max([self.dim(p, q) for p in range(max_p + 1)
                                     for q in range(Q + 1)] or [0]))))
        lines = [f"E_{self.r}"]
        for q in range(Q, -1, -1):
            cells = [str(self.dim(p, q)) if self.dim(p, q) else "." for p in range(max_p + 1)]
            lines.append(f"{q:>3} | " + " ".join(c.rjust(width) for c in cells))
        lines.append("    +-" + "-" * ((width + 1) * (max_p + 1)))
        lines.append("      " + " ".join(str(p).rjust(width) for p in range(max_p + 1)))
        return "\n".join(lines)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (p + q) * e.dim for (p, q), e in self.entries.items())


def build_e2(base: BaseRing, fiber: FiberAlgebra, max_p: int, max_q: Optional[int] = None) -> Page:
    """Künneth E2 page on the box ``0 <= p <= max_p``, ``0 <= q <= max_q``."""
    alg = BiAlgebra(base, fiber)
    max_q = fiber.top_degree if max_q is None else max_q
    bases = {}
    for p in range(max_p + 1):
        monos = base.basis(p)
        if not monos:
            continue
        for q in range(max_q + 1):
            fib = [k for k in range(len(fiber)) if fiber.degrees[k] == q]
            if fib:
                bases[(p, q)] = [(m, k) for k in fib for m in monos]
    entries = {key: Entry.full(len(b)) for key, b in bases.items()}
    return Page(2, alg, (max_p, max_q), bases, entries)


def _index(page: Page, key) -> dict:
    return {lab: i for i, lab in enumerate(page.bases.get(key, []))}


def _chain_images(page: Page, chain: _ChainMap, src: tuple) -> list:
    """E2-coordinate images at the target of every representative at ``src``."""
    tgt = page.target(*src)
    idx = _index(page, tgt)
    basis = page.bases[src]
    out = []
    for rep in page.entries[src].reps:
        img = chain.apply(rep, basis)
        vec = {}
        for lab, c in img.items():
            if lab not in idx:
                raise SpectralSequenceError(f"differential image outside E2 at {tgt}")
            vec[idx[lab]] = c
        out.append(vec)
    return out


def apply_leibniz(page: Page, spec: DifferentialSpec) -> Page:
    """Fill the differentials of ``page`` from generator values by the Leibniz rule."""
    if spec.page != page.r:
        raise SpectralSequenceError(f"spec is for page {spec.page}, page is E_{page.r}")
    P, Q = page.box
    chain = _ChainMap(page.alg, spec)
    fiber = page.alg.fiber
    for g in chain.gen_values:
        # generator must still be alive on this page
        e = page.entries.get((0, fiber.degrees[g]))
        key = (0, fiber.degrees[g])
        if e is None:
            continue
        vec = {_index(page, key)[((0,) * page.alg.base.ring.nvars, g)]: Fraction(1)}
        e.coordinates(vec)
    diffs = {}
    for src, entry in page.entries.items():
        tgt = page.target(*src)
        if entry.dim == 0 or tgt not in page.entries or page.entries[tgt].dim == 0:
            continue
        images = _chain_images(page, chain, src)
        t_entry = page.entries[tgt]
        cols = [t_entry.coordinates(v) for v in images]
        diffs[src] = [[cols[j][i] for j in range(len(cols))] for i in range(t_entry.dim)]
    return Page(page.r, page.alg, page.box, page.bases, page.entries, diffs, spec)


def check_d_squared(page: Page):
    for src, m1 in page.differentials.items():
        mid = page.target(*src)
        m2 = page.differentials.get(mid)
        if not m2:
            continue
        for i in range(len(m2)):
            for j in range(len(m1[0]) if m1 else 0):
                if sum(m2[i][k] * m1[k][j] for k in range(len(m1))):
                    raise SpectralSequenceError(f"d∘d != 0 starting at {src} on E_{page.r}")


def turn_page(page: Page) -> Page:
    """E_{r+1} = ker d_r / im d_r at every bidegree of the box."""
    check_d_squared(page)
    chain = _ChainMap(page.alg, page.spec) if page.spec else None
    new_entries = {}
    for key, entry in page.entries.items():
        # cycles: kernel of the outgoing matrix in representative coordinates
        m = page.differentials.get(key)
        if m:
            columns = [{i: m[i][j] for i in range(len(m)) if m[i][j]} for j in range(entry.dim)]
            kvecs = kernel(columns, entry.dim)
        else:
            kvecs = [[Fraction(int(i == j)) for i in range(entry.dim)] for j in range(entry.dim)]
        cycles = []
        for kv in kvecs:
            z = {}
            for coef, rep in zip(kv, entry.reps):
                if coef:
                    for i, c in rep.items():
                        z[i] = z.get(i, 0) + coef * c
            cycles.append({i: c for i, c in z.items() if c})
        # boundaries: old ones plus images of the incoming differential
        boundaries = list(entry.boundaries)
        src = (key[0] - page.r, key[1] + page.r - 1)
        if chain is not None and src in page.differentials:
            boundaries += [v for v in _chain_images(page, chain, src) if v]
        frame = Echelon()
        kept_b = []
        for b in boundaries:
            if frame.insert(b):
                kept_b.append(b)
        reps = []
        for z in cycles:
            red = frame.reduce(z)
            if red and frame.insert(red):
                reps.append(red)
        new_entries[key] = Entry(entry.ambient, kept_b, reps)
    return Page(page.r + 1, page.alg, page.box, page.bases, new_entries)


# ---------------------------------------------------------------------------
# driver


@dataclass
class SpectralResult:
    totals: GradedDims
    collapse_page: int
    pages: list  # E_2, E_3, ... up to the first page with no possible differential
    window: int  # reported total degrees 0..window
    box: tuple

    @property
    def e_infinity(self) -> Page:
        return self.pages[-1]

    def e_infinity_dims(self) -> dict:
        """Nonzero ``dim E_inf^{p,q}`` inside the window (p + q <= window)."""
        return {k: v for k, v in self.e_infinity.dims().items() if sum(k) <= self.window}

    def to_json(self) -> dict:
        return {
            "totals": self.totals.to_json(),
            "collapse_page": self.collapse_page,
            "e_infinity": {f"{p},{q}": d for (p, q), d in sorted(self.e_infinity_dims().items())},
        }


def minimum_window(fiber: FiberAlgebra, specs: Sequence[DifferentialSpec]) -> int:
    """Smallest reportable total degree: the whole fiber column shifted by the
    longest differential must fit in the window."""
    r_max = max((s.page for s in specs), default=2)
    return fiber.top_degree + r_max


def _possible_differential(page: Page, window: int) -> bool:
    """Could some d_s (s >= page.r) be nonzero on a class with p + q <= window?"""
    P, Q = page.box
    dims = page.dims()
    live = {k for k in dims if sum(k) <= window}
    if all(sum(k) % 2 == 0 for k in dims):
        return False
    for (p, q) in live:
        for s in range(page.r, Q + 2):
            if dims.get((p + s, q - s + 1)):
                return True
    return False


def run_to_infinity(base: BaseRing, fiber: FiberAlgebra, specs: Sequence[DifferentialSpec],
                    max_degree: int) -> SpectralResult:
    """Turn pages until no differential can act in the window; report E_inf totals."""
    specs = list(specs)
    by_page = {}
    for s in specs:
        if s.page in by_page:
            raise SpectralSequenceError(f"two specs for page {s.page}")
        if not 2 <= s.page <= fiber.top_degree + 1:
            raise SpectralSequenceError(f"d_{s.page} cannot be nonzero in this box")
        by_page[s.page] = s
    need = minimum_window(fiber, specs)
    if max_degree < need:
        raise TruncationError(
            f"window {max_degree} is below the minimum {need} for this spectral sequence")
    r_max = max(by_page, default=2)
    P = max_degree + max(r_max, fiber.top_degree + 1)
    page = build_e2(base, fiber, P)
    pages = []
    last_nonzero = None
    while True:
        if page.r in by_page:
            page = apply_leibniz(page, by_page[page.r])
            if page.has_nonzero_differential():
                last_nonzero = page.r
        pages.append(page)
        if page.r >= r_max and not page.has_nonzero_differential() \
                and not _possible_differential(page, max_degree):
            break
        page = turn_page(page)
    totals = [0] * (max_degree + 1)
    for (p, q), d in page.dims().items():
        if p + q <= max_degree:
            totals[p + q] += d
    collapse = 2 if last_nonzero is None else last_nonzero + 1
    return SpectralResult(GradedDims(max_degree, tuple(totals)), collapse, pages,
                          max_degree, page.box)


def compare_with_ring(dims: GradedDims, ideal: Ideal, order: Optional[MonomialOrder] = None) -> tuple:
    """``dims_equal`` against the Hilbert function of ``R/I`` at the same bound."""
    return dims_equal(dims, hilbert_function(ideal, order, dims.bound))
