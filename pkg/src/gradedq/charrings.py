"""Rational cohomology of BSO(n) and the ring maps between the classifying spaces.

H*(BSO(4)) is modelled as the free ring Q[p1, e]: the relation e^2 = p2
never enters the computation and p2 is not tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from . import catalog
from .groebner import Ideal
from .polyring import Polynomial, RingSpec
from .quotient import BaseRing


class IllDefinedMapError(ValueError):
    pass


def bso_ring(n) -> BaseRing:
    """H*(BSO(n); Q) for n in {2, 3, 4}; ``n="2x2"`` gives BSO(2) x BSO(2)."""
    if n == 2:
        return BaseRing(RingSpec.from_pairs(("e", 2)), name="H*(BSO(2))")
    if n == 3:
        return BaseRing(RingSpec.from_pairs(("p1", 4)), name="H*(BSO(3))")
    if n == 4:
        return BaseRing(RingSpec.from_pairs(("p1", 4), ("e", 4)), name="H*(BSO(4))")
    if n in ("2x2", (2, 2)):
        return BaseRing(RingSpec.from_pairs(("e1", 2), ("e2", 2)), name="H*(BSO(2)xBSO(2))")
    raise ValueError(f"unsupported n={n!r}; expected 2, 3, 4 or '2x2'")


@dataclass
class RingMap:
    name: str
    source: BaseRing
    target: BaseRing
    images: dict  # source variable name -> target Polynomial
    anchor: str = ""

    def __post_init__(self):
        sring, tring = self.source.ring, self.target.ring
        missing = set(sring.names) - set(self.images)
        if missing:
            raise ValueError(f"{self.name}: no image for {sorted(missing)}")
        for var, img in self.images.items():
            if img.ring != tring:
                raise ValueError(f"{self.name}: image of {var} is not in the target ring")
            deg = sring.vars[sring.index(var)].degree
            if img and img.degrees() != {deg}:
                raise ValueError(f"{self.name}: image of {var} must be homogeneous of degree {deg}")

    @classmethod
    def from_strings(cls, name, source: BaseRing, target: BaseRing,
                     images: Mapping[str, str], anchor: str = "") -> "RingMap":
        return cls(name, source, target,
                   {v: target.ring.poly(s) for v, s in images.items()}, anchor)

    def lift(self, p: Polynomial) -> Polynomial:
        """Substitute generator images without reducing modulo the target ideal."""
        if p.ring != self.source.ring:
            raise ValueError(f"{p} is not in the source ring of {self.name}")
        tring = self.target.ring
        imgs = [self.images[n] for n in self.source.ring.names]
        out = tring.zero
        for m, c in p.items():
            term = tring.constant(c)
            for img, e in zip(imgs, m):
                if e:
                    term = term * img ** e
            out = out + term
        return out

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply_ring_map(self, p)

    def describe(self) -> str:
        parts = ", ".join(f"{v} -> {self.images[v]}" for v in self.source.ring.names)
        return f"{self.name}: {self.source} -> {self.target}; {parts}"


def check_well_defined(m: RingMap) -> tuple:
    """``(ok, offending source relations)``: every relation must map into the target ideal."""
    bad = [g for g in m.source.ideal.generators if not m.target.is_zero(m.lift(g))]
    return not bad, bad


def apply_ring_map(m: RingMap, p: Polynomial, check: bool = True) -> Polynomial:
    if check:
        ok, bad = check_well_defined(m)
        if not ok:
            raise IllDefinedMapError(
                f"{m.name} does not respect the relations " + ", ".join(map(str, bad)))
    return m.target.reduce(m.lift(p))


def kernel_element_check(m: RingMap, p: Polynomial) -> bool:
    return not apply_ring_map(m, p)


def _catalogue() -> dict:
    bso2, bso3, bso4, torus = bso_ring(2), bso_ring(3), bso_ring(4), bso_ring("2x2")
    point, disc = catalog.point_ring(), catalog.disc_ring()
    free_r = BaseRing(catalog.R, name="Q[m,h,n,t]")
    product = BaseRing.from_strings(catalog.R, ["m*h", "n*t"], order=catalog.LEX_MHNT,
                                    name="Q[m,h]/(m*h) (x) Q[n,t]/(n*t)")
    main = catalog.main_ring()
    maps = [
        RingMap.from_strings("i_star", bso4, torus, {"p1": "e1^2+e2^2", "e": "e1*e2"},
                             "sends p_1 to (e⊗1)² + (1⊗e)² and e to (e⊗1)(1⊗e)"),
        RingMap.from_strings("restrict_bso3", bso4, bso3, {"p1": "p1", "e": "0"},
                             "sends p_1 to p_1 and e to 0"),
        RingMap.from_strings("t_pt_star", bso3, point, {"p1": "m^2+h^2"},
                             "sends p₁ to μ²+η²"),
        RingMap.from_strings("point_surjection", torus, point, {"e1": "m", "e2": "h"},
                             "Q[μ, η]/(μη)"),
        RingMap.from_strings("disc_surjection", torus, disc, {"e1": "m", "e2": "h"},
                             "Q[μ, η]/(μ²+η², μη)"),
        RingMap.from_strings("point_to_disc", point, disc, {"m": "m", "h": "h"},
                             "induces a surjection on rational cohomology"),
        RingMap.from_strings("b_iota_1", torus, bso2, {"e1": "0", "e2": "e"},
                             "Bι₁(e⊗1) = 0"),
        RingMap.from_strings("pi_iota_1", point, bso2, {"m": "0", "h": "e"},
                             "sends μ to 0 and η to e"),
        RingMap.from_strings("pi_iota_1j", point, bso2, {"m": "e", "h": "0"},
                             "sends μ to e and η to 0"),
        RingMap.from_strings("so2_to_gl3", bso3, bso2, {"p1": "e^2"},
                             "sends p_1 to e^2"),
        RingMap.from_strings("f", product, main, {v: v for v in "mhnt"},
                             "(μ²+η²−ν²−ϑ²) ∈ ker(f)"),
        RingMap.from_strings("quotient_i2", free_r, main, {v: v for v in "mhnt"},
                             "Q[μ, η,ν, ϑ]/(μη, νϑ, μ²+η² − ν²−ϑ²)"),
    ]
    return {m.name: m for m in maps}


_CACHE: Optional[dict] = None


def catalogue() -> dict:
    """Named maps, in a fixed order."""
    global _CACHE
    if _CACHE is None:
        _CACHE = _catalogue()
    return _CACHE


def get_map(name: str) -> RingMap:
    try:
        return catalogue()[name]
    except KeyError:
        raise KeyError(f"unknown map {name!r}; known: {', '.join(catalogue())}") from None
