"""Facts about companion knots in the three-sphere.

The engine never computes Heegaard Floer homology: KnotFacts is a
declarative record (genus, L-space flags, fiberedness) that the caller
asserts, with the torus-knot family built in.  The slope set a companion
complement contributes to the gluing argument, and the exact cable
criterion used as ground truth in tests, both live here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .projective import SlopeSet
from .slopes import INFINITY, Slope


class NotCoprimeError(ValueError):
    pass


class InvalidPError(ValueError):
    pass


class UnknotCompanionError(ValueError):
    """The satellite construction requires a nontrivial companion."""


class InvalidKnotFactsError(ValueError):
    pass


@dataclass(frozen=True)
class KnotFacts:
    """Seifert genus and surgery flags of a knot in S^3.

    is_lspace: admits a positive L-space surgery.
    is_neg_lspace: the mirror admits one.
    """

    name: str
    genus: int
    is_lspace: bool
    is_neg_lspace: bool
    is_fibered: bool
    is_unknot: bool

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise InvalidKnotFactsError("genus must be nonnegative")
        if self.is_unknot and not (
            self.genus == 0
            and self.is_lspace
            and self.is_neg_lspace
            and self.is_fibered
        ):
            raise InvalidKnotFactsError("unknot facts are genus 0 with all flags set")
        if self.genus >= 1 and self.is_lspace and self.is_neg_lspace:
            raise InvalidKnotFactsError(
                "a nontrivial knot cannot admit both positive and negative "
                "L-space surgeries"
            )
        if (self.is_lspace or self.is_neg_lspace) and not self.is_fibered:
            raise InvalidKnotFactsError("L-space knots are fibered")


UNKNOT = KnotFacts("unknot", 0, True, True, True, True)


def torus_knot(p: int, m: int) -> KnotFacts:
    """The (p, m) torus knot, p >= 2; m = ±1 gives the unknot.

    Genus (p-1)(|m|-1)/2; admits a positive L-space surgery iff m >= -1
    and a negative one iff m <= 1.
    """
    if p < 2:
        raise InvalidPError(f"longitudinal winding p must be >= 2, got {p}")
    if gcd(p, m) != 1:
        raise NotCoprimeError(f"T({p},{m}) needs gcd(p, m) = 1")
    genus = (p - 1) * (abs(m) - 1) // 2
    return KnotFacts(
        name=f"T({p},{m})",
        genus=genus,
        is_lspace=m >= -1,
        is_neg_lspace=m <= 1,
        is_fibered=True,
        is_unknot=abs(m) == 1,
    )


def mirror_facts(k: KnotFacts) -> KnotFacts:
    name = k.name[2:-1] if k.name.startswith("m(") and k.name.endswith(")") else f"m({k.name})"
    if k.is_unknot:
        name = k.name
    return KnotFacts(
        name, k.genus, k.is_neg_lspace, k.is_lspace, k.is_fibered, k.is_unknot
    )


def lspace_slope_set(k: KnotFacts) -> SlopeSet:
    """The set of L-space filling slopes of the knot complement.

    [2g-1, ∞] for an L-space knot, [-∞, -2g+1] for a negative one (both
    closed arcs containing the ∞ filling, which gives back S^3), empty
    otherwise.  Strict slopes are the interior.
    """
    if k.is_unknot:
        raise UnknotCompanionError("companion must be nontrivial")
    if k.is_lspace:
        return SlopeSet.arc(Slope(2 * k.genus - 1), INFINITY)
    if k.is_neg_lspace:
        return SlopeSet.arc(INFINITY, Slope(-2 * k.genus + 1))
    return SlopeSet.empty()


def cable_is_lspace_exact(companion: KnotFacts, p: int, q: int) -> bool:
    """The exact cabling criterion: the (p, q)-cable of K is an L-space
    knot iff K is an L-space knot and q > p(2g(K) - 1)."""
    if p <= 1:
        raise InvalidPError(f"longitudinal winding p must be > 1, got {p}")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"cable needs gcd(p, q) = 1, got ({p}, {q})")
    return companion.is_lspace and q > p * (2 * companion.genus - 1)


def cable_facts(companion: KnotFacts, p: int, q: int) -> KnotFacts:
    """Derived facts of the (p, q)-cable, as a convenience for building
    companions out of cables.  Genus p·g + (p-1)(|q|-1)/2; L-space flags
    from the exact criterion on each side."""
    if p <= 1:
        raise InvalidPError(f"longitudinal winding p must be > 1, got {p}")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"cable needs gcd(p, q) = 1, got ({p}, {q})")
    genus = p * companion.genus + (p - 1) * (abs(q) - 1) // 2
    is_unknot = companion.is_unknot and abs(q) == 1
    return KnotFacts(
        name=f"({companion.name})_{{{p},{q}}}",
        genus=genus,
        is_lspace=is_unknot or cable_is_lspace_exact(companion, p, q),
        is_neg_lspace=is_unknot
        or (companion.is_neg_lspace and -q > p * (2 * companion.genus - 1)),
        is_fibered=companion.is_fibered,
        is_unknot=is_unknot,
    )


_NAMED = {
    "unknot": UNKNOT,
    "trefoil": torus_knot(2, 3),
    "figure8": KnotFacts("4_1", 1, False, False, True, False),
}


def companion_from_json(obj) -> KnotFacts:
    """Build KnotFacts from the documented JSON forms.

    Accepts {"torus_knot": [p, m]}, {"cable": {"companion": ..., "p": p,
    "q": q}}, an explicit field dictionary, or a shortcut name like
    "trefoil" or "T(2,3)".
    """
    if isinstance(obj, str):
        key = obj.strip()
        if key in _NAMED:
            return _NAMED[key]
        m = re.fullmatch(r"T\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)", key)
        if m:
            return torus_knot(int(m.group(1)), int(m.group(2)))
        raise ValueError(f"unknown companion name {obj!r}")
    if not isinstance(obj, dict):
        raise ValueError(f"cannot parse companion from {obj!r}")
    if "torus_knot" in obj:
        p, m = obj["torus_knot"]
        return torus_knot(int(p), int(m))
    if "cable" in obj:
        spec = obj["cable"]
        inner = companion_from_json(spec["companion"])
        return cable_facts(inner, int(spec["p"]), int(spec["q"]))
    return KnotFacts(
        name=str(obj["name"]),
        genus=int(obj["genus"]),
        is_lspace=bool(obj["is_lspace"]),
        is_neg_lspace=bool(obj["is_neg_lspace"]),
        is_fibered=bool(obj["is_fibered"]),
        is_unknot=bool(obj["is_unknot"]),
    )


def companion_to_json(k: KnotFacts) -> dict:
    return {
        "name": k.name,
        "genus": k.genus,
        "is_lspace": k.is_lspace,
        "is_neg_lspace": k.is_neg_lspace,
        "is_fibered": k.is_fibered,
        "is_unknot": k.is_unknot,
    }
