"""Named rings, ideals and group actions for the lens-space computation.

ASCII names: m = μ, h = η, n = ν, t = ϑ; e1 = e⊗1, e2 = 1⊗e.
"""

from __future__ import annotations

from .groebner import Ideal, MonomialOrder
from .invariants import GroupAction, close_group
from .polyring import RingSpec, SignedSubstitution
from .quotient import BaseRing

# Q[μ, η, ν, ϑ], all in degree 2
R = RingSpec.from_pairs(("m", 2), ("h", 2), ("n", 2), ("t", 2))
# Q[μ, η] for a single lens space
RMH = RingSpec.from_pairs(("m", 2), ("h", 2))
# the second lens space's copy, Q[ν, ϑ]
RNT = RingSpec.from_pairs(("n", 2), ("t", 2))

LEX_MHNT = MonomialOrder.lex(R, ["m", "h", "n", "t"])

I1_GENERATORS = ("m*h", "n*t", "m^2+h^2")
I2_GENERATORS = ("m*h", "n*t", "m^2+h^2-n^2-t^2")

# The last relation of I₂ also circulates as μ²+η²−ν²−η², a misprint for
# μ²+η²−ν²−ϑ²: the misprinted ideal has dims 8, 9, 10, ... in degrees 6, 8, 10
# instead of the stable value 8.
I2_TYPO_NOTE = ("relation sometimes printed as mu^2+eta^2-nu^2-eta^2; "
                "computed with mu^2+eta^2-nu^2-theta^2")


def ideal_i1() -> Ideal:
    return Ideal.from_strings(R, I1_GENERATORS)


def ideal_i2() -> Ideal:
    return Ideal.from_strings(R, I2_GENERATORS)


def point_ring() -> BaseRing:
    """H*(BDiff_pt(L)_0) = Q[μ, η]/(μη)."""
    return BaseRing.from_strings(RMH, ["m*h"], name="Q[m,h]/(m*h)")


def disc_ring() -> BaseRing:
    """H*(BDiff_D3(L)_0) = Q[μ, η]/(μ²+η², μη)."""
    return BaseRing.from_strings(RMH, ["m^2+h^2", "m*h"], name="Q[m,h]/(m^2+h^2, m*h)")


def main_ring() -> BaseRing:
    return BaseRing(R, ideal_i2(), LEX_MHNT, name="Q[m,h,n,t]/I2")


def c_minus_plus() -> SignedSubstitution:
    """c_(-1,1): μ ↦ −μ, η ↦ −η."""
    return SignedSubstitution.from_mapping(R, {"m": "-m", "h": "-h"})


def c_plus_minus() -> SignedSubstitution:
    """c_(1,-1): ν ↦ −ν, ϑ ↦ −ϑ."""
    return SignedSubstitution.from_mapping(R, {"n": "-n", "t": "-t"})


def mapping_class_action() -> GroupAction:
    """C2 × C2 acting on R by the two sign flips."""
    return close_group([c_minus_plus(), c_plus_minus()], R, expected_order=4)


# H*(BDiff(M)) as a subring: generators μ², η², ν², ϑ² in degree 4
R_SQUARES = RingSpec.from_pairs(("a", 4), ("b", 4), ("c", 4), ("d", 4))
SQUARES_GENERATORS = ("a*b", "c*d", "a+b-c-d")


def squares_presentation() -> Ideal:
    """Q[μ², η², ν², ϑ²]/(μ²η², ν²ϑ², μ²+η²−ν²−ϑ²) with a=μ², b=η², c=ν², d=ϑ²."""
    return Ideal.from_strings(R_SQUARES, SQUARES_GENERATORS)
