"""Integral Weierstrass models and their standard invariants.

A model is the long equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
with all coefficients in the valuation ring.  The long form is essential:
residue characteristics 2 and 3 are the interesting cases and short forms
cannot represent them faithfully.

Every construction re-checks the discriminant identity
1728*Delta = c4^3 - c6^2, which catches sign mistakes in the invariant
formulas immediately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .localfield import LocalFieldSpec, ValuedElement, parse_element


class SingularCurve(ValueError):
    """The discriminant vanishes; there is no smooth generic fiber."""


class ZeroScale(ValueError):
    """Coordinate change with u = 0."""


@dataclass(frozen=True)
class StandardInvariants:
    b2: ValuedElement
    b4: ValuedElement
    b6: ValuedElement
    b8: ValuedElement
    c4: ValuedElement
    c6: ValuedElement
    delta: ValuedElement
    j: ValuedElement


class WeierstrassModel:
    """Long Weierstrass coefficients over the valuation ring R."""

    __slots__ = ("spec", "a1", "a2", "a3", "a4", "a6", "_invariants")

    def __init__(self, spec: LocalFieldSpec, a1, a2, a3, a4, a6):
        coeffs = {"a1": a1, "a2": a2, "a3": a3, "a4": a4, "a6": a6}
        for name, a in coeffs.items():
            if not isinstance(a, ValuedElement) or a.spec != spec:
                raise ValueError(f"{name} must be a ValuedElement over {spec}")
            if not a.is_integral():
                raise ValueError(f"{name} = {a} is not integral (v = {a.valuation()})")
        self.spec = spec
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1, a2, a3, a4, a6
        self._invariants = None
        if invariants(self).delta.is_zero():
            raise SingularCurve("discriminant vanishes")

    @classmethod
    def from_literals(cls, field_spec: str, a1: str, a2: str, a3: str, a4: str, a6: str):
        spec = LocalFieldSpec.parse(field_spec)
        return cls(spec, *(parse_element(spec, s) for s in (a1, a2, a3, a4, a6)))

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def base_change_substitute(self, d: int) -> "WeierstrassModel":
        """Apply t -> t^d to every coefficient (laurent backends)."""
        return WeierstrassModel(
            self.spec, *(a.base_change_substitute(d) for a in self.coefficients())
        )

    def __eq__(self, other):
        return (
            isinstance(other, WeierstrassModel)
            and self.spec == other.spec
            and self.coefficients() == other.coefficients()
        )

    def __str__(self):
        return (
            f"[a1={self.a1}, a2={self.a2}, a3={self.a3}, "
            f"a4={self.a4}, a6={self.a6}] over {self.spec}"
        )


def invariants(model: WeierstrassModel) -> StandardInvariants:
    """b2..b8, c4, c6, Delta, j; computed once per model and cached."""
    if model._invariants is not None:
        return model._invariants
    a1, a2, a3, a4, a6 = model.coefficients()
    spec = model.spec

    def n(k: int) -> ValuedElement:
        return ValuedElement.from_int(spec, k)

    b2 = a1 * a1 + n(4) * a2
    b4 = n(2) * a4 + a1 * a3
    b6 = a3 * a3 + n(4) * a6
    b8 = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - n(24) * b4
    c6 = -(b2 * b2 * b2) + n(36) * b2 * b4 - n(216) * b6
    delta = -(b2 * b2) * b8 - n(8) * (b4 * b4 * b4) - n(27) * (b6 * b6) + n(9) * b2 * b4 * b6

    # Identities that pin the sign conventions, re-checked on every construction.
    if n(4) * b8 != b2 * b6 - b4 * b4:
        raise AssertionError("4*b8 != b2*b6 - b4^2: invariant formulas are wrong")
    if n(1728) * delta != c4 * c4 * c4 - c6 * c6:
        raise AssertionError("1728*Delta != c4^3 - c6^2: invariant formulas are wrong")

    if delta.is_zero():
        raise SingularCurve("discriminant vanishes")
    j = (c4 * c4 * c4) / delta
    model._invariants = StandardInvariants(b2, b4, b6, b8, c4, c6, delta, j)
    return model._invariants


def transform(model: WeierstrassModel, u, r, s, t) -> WeierstrassModel:
    """Coordinate change x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.

    Delta scales by u^-12, c4 by u^-4; j is untouched.
    """
    spec = model.spec
    args = []
    for name, val in (("u", u), ("r", r), ("s", s), ("t", t)):
        if isinstance(val, int):
            val = ValuedElement.from_int(spec, val)
        if not isinstance(val, ValuedElement) or val.spec != spec:
            raise ValueError(f"{name} must be an element of {spec}")
        args.append(val)
    u, r, s, t = args
    if u.is_zero():
        raise ZeroScale("transform with u = 0")

    a1, a2, a3, a4, a6 = model.coefficients()

    def n(k: int) -> ValuedElement:
        return ValuedElement.from_int(spec, k)

    u2 = u * u
    u3 = u2 * u
    new_a1 = (a1 + n(2) * s) / u
    new_a2 = (a2 - s * a1 + n(3) * r - s * s) / u2
    new_a3 = (a3 + r * a1 + n(2) * t) / u3
    new_a4 = (a4 - s * a3 + n(2) * r * a2 - (t + r * s) * a1 + n(3) * r * r - n(2) * s * t) / (u2 * u2)
    new_a6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / (u3 * u3)
    return WeierstrassModel(spec, new_a1, new_a2, new_a3, new_a4, new_a6)
