"""The automorphism group (x, y) -> (x + a, eps*y + b) of the curve.

Parameters: a with a^q + a = 0 (q choices), b with p(b) = 0 (q/3
choices, all in F_q), and a sign eps, giving 2q^2/3 elements.  The
translations form an elementary abelian 3-group acting sharply
transitively on each coset {p(y) = const}; the sign flips p(y).  Every
element fixes the place at infinity and preserves beta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .curve import Curve, Place
from .fields import FieldElement


@dataclass(frozen=True)
class Automorphism:
    a: FieldElement     # a^q + a = 0
    b: FieldElement     # p(b) = 0
    eps: int            # +1 or -1

    def __post_init__(self):
        assert self.eps in (1, -1)

    def is_identity(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.eps == 1


def make_automorphism(curve: Curve, a: FieldElement, b: FieldElement,
                      eps: int) -> Automorphism:
    if not (curve.frob_q(a) + a).is_zero():
        raise ValueError("a must satisfy a^q + a = 0")
    if not curve.p_map(b).is_zero():
        raise ValueError("b must satisfy p(b) = 0")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return Automorphism(a, b, eps)


def identity(curve: Curve) -> Automorphism:
    lvl = curve.base
    return Automorphism(lvl.zero(), lvl.zero(), 1)


def compose(sigma: Automorphism, tau: Automorphism) -> Automorphism:
    """sigma o tau (tau applied first): (a1+a2, b1+eps1*b2, eps1*eps2)."""
    a = sigma.a + tau.a
    b = sigma.b + (tau.b if sigma.eps == 1 else -tau.b)
    return Automorphism(a, b, sigma.eps * tau.eps)


def inverse(sigma: Automorphism) -> Automorphism:
    b = -sigma.b if sigma.eps == 1 else sigma.b
    return Automorphism(-sigma.a, b, sigma.eps)


def apply_coords(curve: Curve, sigma: Automorphism,
                 a0: FieldElement, b0: FieldElement):
    """Image of the point (a0, b0); embeds the group parameters up if the
    point lives in an extension level."""
    n = a0.level.n
    sa = curve.tower.embed(sigma.a, n) if sigma.a.level.n != n else sigma.a
    sb = curve.tower.embed(sigma.b, n) if sigma.b.level.n != n else sigma.b
    y = b0 if sigma.eps == 1 else -b0
    return a0 + sa, y + sb

def apply(curve: Curve, sigma: Automorphism, place: Place) -> Place:
    """Image place; the place at infinity is fixed by the whole group."""
    if place.is_infinity():
        return place
    a1, b1 = apply_coords(curve, sigma, place.a, place.b)
    return curve.place_from_coords(a1, b1)


def group_elements(curve: Curve) -> list[Automorphism]:
    """All 2q^2/3 automorphisms, in a deterministic order."""
    n = 2 * curve.t
    a_kernel = curve.kernel_artin_schreier(n)
    b_kernel = curve.kernel_trace_p(n)
    assert len(a_kernel) == curve.t            # q choices of a
    assert len(b_kernel) == curve.t - 1        # q/3 choices of b
    lvl = curve.base
    elements = []
    for eps in (1, -1):
        for a_coeffs in itertools.product(range(3), repeat=len(a_kernel)):
            a = lvl.zero()
            for cc, v in zip(a_coeffs, a_kernel):
                if cc:
                    a = a + cc * v
            for b_coeffs in itertools.product(range(3), repeat=len(b_kernel)):
                b = lvl.zero()
                for cc, v in zip(b_coeffs, b_kernel):
                    if cc:
                        b = b + cc * v
                elements.append(Automorphism(a, b, eps))
    assert len(elements) == 2 * curve.q * curve.q // 3
    return elements


def orbit(curve: Curve, place: Place,
          elements: list[Automorphism] | None = None) -> set:
    """The G-orbit of a rational place, as a set of coordinate keys
    ((a-pk, b-pk) pairs; the infinite place maps to a marker)."""
    if elements is None:
        elements = group_elements(curve)
    if place.is_infinity():
        return {"infinity"}
    out = set()
    for sigma in elements:
        a1, b1 = apply_coords(curve, sigma, place.a, place.b)
        out.add((a1.pk, b1.pk))
    return out


def orbit_partition(curve: Curve, places: list[Place],
                    elements: list[Automorphism] | None = None) -> list[set]:
    """Partition of the given places into G-orbits (coordinate-key sets)."""
    if elements is None:
        elements = group_elements(curve)
    seen = set()
    orbits = []
    for p in places:
        key = "infinity" if p.is_infinity() else (p.a.pk, p.b.pk)
        if key in seen:
            continue
        orb = orbit(curve, p, elements)
        seen |= orb
        orbits.append(orb)
    return orbits
