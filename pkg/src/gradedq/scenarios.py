"""Built-in spectral sequence configurations and the scenario file format.

Scenario file (JSON)::

    {"name": "...",
     "base": {"ring": {"vars": [...]}, "ideal": ["m*h"], "order": {...}},
     "fiber": {"basis": [{"label": "1", "degree": 0}, ...], "unit": "1",
               "generators": ["a"], "products": [{"left": "a", "right": "b",
                                                  "result": {"ab": "1"}}]},
     "differentials": [{"page": 4, "values": {"a": [{"base": "e1*e2",
                                                       "fiber": "1", "coeff": "1"}]}}],
     "max_degree": 40}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from . import catalog
from .groebner import Ideal, MonomialOrder
from .polyring import RingSpec
from .quotient import BaseRing
from .specseq import DifferentialSpec, FiberAlgebra, SpectralResult, run_to_infinity


@dataclass
class Scenario:
    name: str
    title: str
    base: BaseRing
    fiber: FiberAlgebra
    specs: list
    anchor: str = ""
    compare_ideal: Optional[Ideal] = None  # E_inf totals should match this quotient
    max_degree: Optional[int] = None

    def run(self, max_degree: int = 40) -> SpectralResult:
        return run_to_infinity(self.base, self.fiber, self.specs, max_degree)

    def to_json(self) -> dict:
        b = self.base
        out = {
            "name": self.name,
            "base": {"ring": b.ring.to_json(),
                     "ideal": [str(g).replace(" ", "") for g in b.ideal.generators],
                     "order": b.order.to_json(b.ring)},
            "fiber": self.fiber.to_json(),
            "differentials": [s.to_json() for s in self.specs],
        }
        if self.max_degree is not None:
            out["max_degree"] = self.max_degree
        return out


def from_json(data: Mapping) -> Scenario:
    try:
        bdata = data["base"]
        ring = RingSpec.from_json(bdata["ring"])
        order = MonomialOrder.from_json(bdata.get("order", {"kind": "lex"}), ring)
        base = BaseRing(ring, Ideal.from_strings(ring, bdata.get("ideal", [])), order)
        fiber = FiberAlgebra.from_json(data["fiber"])
        specs = []
        for d in data.get("differentials", []):
            values = {
                gen: [(ring.poly(t["base"]), t.get("fiber", "1"), Fraction(t.get("coeff", 1)))
                      for t in terms]
                for gen, terms in d["values"].items()
            }
            specs.append(DifferentialSpec.from_mapping(d["page"], values))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed scenario file: missing or bad field {exc}") from None
    return Scenario(data.get("name", "custom"), data.get("title", ""), base, fiber, specs,
                    max_degree=data.get("max_degree"))


# --- the four sequences of the lens-space computation -------------------------

TORUS = RingSpec.from_pairs(("e1", 2), ("e2", 2))
BSO4 = RingSpec.from_pairs(("p1", 4), ("e", 4))


def point_over_torus() -> Scenario:
    """S³ → S³//(SO(2)×SO(2)) → BSO(2)×BSO(2), d4(s) = (e⊗1)(1⊗e)."""
    base = BaseRing(TORUS, name="H*(BSO(2)xBSO(2))")
    fiber = FiberAlgebra.exterior([("s", 3)])
    spec = DifferentialSpec.from_mapping(4, {"s": TORUS.poly("e1*e2")})
    return Scenario("point-over-torus", "A: S^3 over BSO(2)xBSO(2)", base, fiber, [spec],
                    anchor="non-zero multiple of (e⊗1)(1⊗e)",
                    compare_ideal=Ideal.from_strings(TORUS, ["e1*e2"]))


def disc_over_bso4() -> Scenario:
    """Emb⁺(D³,S³) → ... → BSO(4), d4(α) = e, d4(β) = p₁; total space contractible."""
    base = BaseRing(BSO4, name="H*(BSO(4))")
    fiber = FiberAlgebra.exterior([("a", 3), ("b", 3)])
    spec = DifferentialSpec.from_mapping(4, {"a": BSO4.poly("e"), "b": BSO4.poly("p1")})
    return Scenario("disc-over-bso4", "B: Emb(D^3,S^3) over BSO(4)", base, fiber, [spec],
                    anchor="Since E∞^{∗,∗} ≅ 0")


def disc_over_torus() -> Scenario:
    """Emb⁺(D³,S³) → ... → BSO(2)×BSO(2), d4(α) = μη, d4(β) = μ²+η²."""
    base = BaseRing(TORUS, name="H*(BSO(2)xBSO(2))")
    fiber = FiberAlgebra.exterior([("a", 3), ("b", 3)])
    spec = DifferentialSpec.from_mapping(
        4, {"a": TORUS.poly("e1*e2"), "b": TORUS.poly("e1^2+e2^2")})
    return Scenario("disc-over-torus", "C: Emb(D^3,S^3) over BSO(2)xBSO(2)", base, fiber, [spec],
                    anchor="only non-trivial entries that remain are D∞^{0,0}, D∞^{2,0}, and D∞^{4,0}",
                    compare_ideal=Ideal.from_strings(TORUS, ["e1^2+e2^2", "e1*e2"]))


def main_sequence() -> Scenario:
    """Fiber H*(BDiff_D3(L₁)₀), base H*(BDiff_pt(L₂)₀); no differentials."""
    base = BaseRing.from_strings(catalog.RNT, ["n*t"], name="Q[n,t]/(n*t)")
    fiber = FiberAlgebra.from_quotient(catalog.disc_ring())
    return Scenario("main", "D: the main spectral sequence", base, fiber, [],
                    anchor="collapses on the E₂-page",
                    compare_ideal=catalog.ideal_i2())


BUILTIN = {
    "point-over-torus": point_over_torus,
    "disc-over-bso4": disc_over_bso4,
    "disc-over-torus": disc_over_torus,
    "main": main_sequence,
}
ALIASES = {"A": "point-over-torus", "B": "disc-over-bso4", "C": "disc-over-torus", "D": "main"}


def get(name: str) -> Scenario:
    key = ALIASES.get(name, name)
    if key not in BUILTIN:
        raise KeyError(f"unknown scenario {name!r}; built-ins: {', '.join(BUILTIN)}")
    return BUILTIN[key]()
