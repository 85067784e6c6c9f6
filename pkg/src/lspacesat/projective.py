"""Circular-arc subsets of QP^1.

A SlopeSet is one of: the empty set, all of QP^1, the complement of a
single point, or a canonical finite union of arcs.  An arc runs from its
start slope to its end slope in the positive orientation of the circle,
with independent closure flags at the two endpoints; a single point is
the degenerate arc with start = end, both closed.

Canonical form is computed pointwise: the endpoints of all contributing
arcs cut the circle into points and open gaps, each gap gets one exact
rational witness, and maximal covered runs are reassembled into arcs.
Because witnesses are exact this decides coverage questions outright --
no sampling is ever needed outside the test suite's brute-force oracles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .slopes import INFINITY, Slope, circular_key, slope_ccw


@dataclass(frozen=True)
class Arc:
    """A closed, half-open or open arc of QP^1, or a single point.

    The arc is traversed from start to end in the positive orientation.
    start == end is only allowed with both endpoints closed (a point);
    a coincident open pair would denote the full circle minus a point,
    which lives at the SlopeSet level instead.
    """

    start: Slope
    end: Slope
    start_closed: bool = True
    end_closed: bool = True

    def __post_init__(self) -> None:
        if self.start == self.end and not (self.start_closed and self.end_closed):
            raise ValueError("degenerate arc must be a closed point")

    @property
    def is_point(self) -> bool:
        return self.start == self.end

    def contains(self, x: Slope) -> bool:
        if x == self.start:
            return self.start_closed
        if x == self.end:
            return self.end_closed
        if self.is_point:
            return False
        return slope_ccw(self.start, x, self.end)


_EMPTY = "empty"
_FULL = "full"
_COPOINT = "copoint"
_ARCS = "arcs"


@dataclass(frozen=True)
class SlopeSet:
    """A canonical finite union of arcs and points on QP^1."""

    kind: str = _EMPTY
    arcs: tuple[Arc, ...] = ()
    hole: Slope | None = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def empty(cls) -> "SlopeSet":
        return cls(_EMPTY)

    @classmethod
    def full(cls) -> "SlopeSet":
        return cls(_FULL)

    @classmethod
    def copoint(cls, hole: Slope) -> "SlopeSet":
        """All of QP^1 except the given point."""
        return cls(_COPOINT, hole=hole)

    @classmethod
    def point(cls, x: Slope) -> "SlopeSet":
        return cls(_ARCS, (Arc(x, x),))

    @classmethod
    def arc(
        cls,
        start: Slope,
        end: Slope,
        start_closed: bool = True,
        end_closed: bool = True,
    ) -> "SlopeSet":
        return cls(_ARCS, (Arc(start, end, start_closed, end_closed),))

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc]) -> "SlopeSet":
        """Canonical set with the same points as the given arcs."""
        arcs = tuple(arcs)
        if not arcs:
            return cls.empty()
        endpoints = [p for a in arcs for p in (a.start, a.end)]
        return _from_membership(endpoints, lambda x: any(a.contains(x) for a in arcs))

    # -- queries --------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self.kind == _EMPTY

    @property
    def is_full(self) -> bool:
        return self.kind == _FULL

    def contains(self, x: Slope) -> bool:
        if self.kind == _EMPTY:
            return False
        if self.kind == _FULL:
            return True
        if self.kind == _COPOINT:
            return x != self.hole
        return any(a.contains(x) for a in self.arcs)

    def endpoints(self) -> list[Slope]:
        if self.kind == _COPOINT:
            assert self.hole is not None
            return [self.hole]
        if self.kind == _ARCS:
            return [p for a in self.arcs for p in (a.start, a.end)]
        return []

    # -- operations -----------------------------------------------------

    def union(self, other: "SlopeSet") -> "SlopeSet":
        if self.is_full or other.is_full:
            return SlopeSet.full()
        if self.is_empty:
            return other
        if other.is_empty:
            return self
        endpoints = self.endpoints() + other.endpoints()
        return _from_membership(
            endpoints, lambda x: self.contains(x) or other.contains(x)
        )

    def interior(self) -> "SlopeSet":
        """Topological interior in QP^1.

        Closed endpoints of non-degenerate arcs open up, isolated points
        vanish; Empty, Full and complements of a point are already open.
        """
        if self.kind != _ARCS:
            return self
        opened = [
            Arc(a.start, a.end, False, False) for a in self.arcs if not a.is_point
        ]
        if not opened:
            return SlopeSet.empty()
        return SlopeSet.from_arcs(opened)

    # -- serialization --------------------------------------------------

    def __str__(self) -> str:
        if self.kind == _EMPTY:
            return "EMPTY"
        if self.kind == _FULL:
            return "FULL"
        if self.kind == _COPOINT:
            return f"QP1 \\ {{{self.hole}}}"
        return " ∪ ".join(_arc_to_str(a) for a in self.arcs)

    @classmethod
    def parse(cls, text: str) -> "SlopeSet":
        return _parse_set(text)


def _arc_to_str(a: Arc) -> str:
    if a.is_point:
        return f"{{{a.start}}}"
    sb = "[" if a.start_closed else "("
    eb = "]" if a.end_closed else ")"
    if a.start.is_infinity:
        return f"{sb}-inf, {a.end}{eb}"
    if a.end.is_infinity:
        return f"{sb}{a.start}, inf{eb}"
    if slope_ccw(a.start, INFINITY, a.end):
        # Wraps through ∞; print in the two-interval notation.
        return f"{sb}{a.start}, inf] ∪ [-inf, {a.end}{eb}"
    return f"{sb}{a.start}, {a.end}{eb}"


# -- canonicalization ---------------------------------------------------


def _witness_between(a: Slope, b: Slope) -> Slope:
    """An exact rational strictly inside the positive arc a -> b."""
    if a == b:
        return INFINITY if not a.is_infinity else Slope(0, 1)
    if a.is_infinity:
        return Slope.from_fraction(b.value - 1)
    if b.is_infinity:
        return Slope.from_fraction(a.value + 1)
    if a.value < b.value:
        return Slope.from_fraction(Fraction(a.value + b.value, 2))
    return Slope.from_fraction(a.value + 1)  # arc wraps through ∞


def _from_membership(
    endpoints: Sequence[Slope], member: Callable[[Slope], bool]
) -> SlopeSet:
    """Canonical SlopeSet for a membership predicate whose boundary is
    contained in the given endpoint list."""
    pts = sorted(set(endpoints), key=circular_key)
    if not pts:
        return SlopeSet.full() if member(Slope(0, 1)) else SlopeSet.empty()
    n = len(pts)
    # Alternating pieces around the circle: each endpoint, then the open
    # gap to the next endpoint, probed at one interior witness.
    pieces: list[tuple[str, object, bool]] = []
    for i, p in enumerate(pts):
        nxt = pts[(i + 1) % n]
        pieces.append(("pt", p, member(p)))
        pieces.append(("gap", (p, nxt), member(_witness_between(p, nxt))))
    covered = [c for (_, _, c) in pieces]
    if all(covered):
        return SlopeSet.full()
    if not any(covered):
        return SlopeSet.empty()
    holes = [i for i, c in enumerate(covered) if not c]
    if len(holes) == 1 and pieces[holes[0]][0] == "pt":
        return SlopeSet.copoint(pieces[holes[0]][1])  # type: ignore[arg-type]
    start = holes[0]
    order = pieces[start:] + pieces[:start]
    arcs: list[Arc] = []
    run: list[tuple[str, object, bool]] = []
    for piece in order:
        if piece[2]:
            run.append(piece)
        elif run:
            arcs.append(_run_to_arc(run))
            run = []
    if run:
        arcs.append(_run_to_arc(run))
    arcs.sort(key=lambda a: circular_key(a.start))
    return SlopeSet(_ARCS, tuple(arcs))


def _run_to_arc(run: list[tuple[str, object, bool]]) -> Arc:
    first, last = run[0], run[-1]
    if first[0] == "pt":
        start, start_closed = first[1], True
    else:
        start, start_closed = first[1][0], False  # type: ignore[index]
    if last[0] == "pt":
        end, end_closed = last[1], True
    else:
        end, end_closed = last[1][1], False  # type: ignore[index]
    return Arc(start, end, start_closed, end_closed)  # type: ignore[arg-type]


# -- module-level operations -------------------------------------------


def union(s1: SlopeSet, s2: SlopeSet) -> SlopeSet:
    return s1.union(s2)


def interior(s: SlopeSet) -> SlopeSet:
    return s.interior()


def contains(s: SlopeSet, x: Slope) -> bool:
    return s.contains(x)


def covers_circle(s1: SlopeSet, s2: SlopeSet) -> bool:
    """True iff every slope of QP^1 lies in s1 or in s2.

    Both sets must already live in a common boundary coordinate system;
    apply the gluing map to one side first.
    """
    return s1.union(s2).is_full


def rr_shape_check(s: SlopeSet, longitude: Slope) -> bool:
    """Whether s has one of the admissible shapes for a set of L-space
    filling slopes: empty, a point, a closed arc, or the whole circle
    minus the rational longitude."""
    if s.is_empty:
        return True
    if s.is_full:
        return False
    if s.kind == _COPOINT:
        return s.hole == longitude
    if len(s.arcs) != 1:
        return False
    a = s.arcs[0]
    return a.start_closed and a.end_closed


# -- parsing ------------------------------------------------------------

_INF_TOKENS = {"inf", "+inf", "∞", "+∞"}
_NEG_INF_TOKENS = {"-inf", "-∞"}


def _parse_set(text: str) -> SlopeSet:
    t = text.strip()
    if not t:
        raise ValueError("empty slope-set expression")
    if t.upper() == "EMPTY":
        return SlopeSet.empty()
    if t.upper() == "FULL":
        return SlopeSet.full()
    m = re.fullmatch(r"QP1\s*\\\s*\{(.+)\}", t)
    if m:
        return SlopeSet.copoint(Slope.from_string(m.group(1)))
    pieces = [_parse_piece(p) for p in _split_top_level(t)]
    out = SlopeSet.empty()
    for p in pieces:
        out = out.union(p)
    return out


def _split_top_level(text: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in text:
        if ch in "[({":
            depth += 1
        elif ch in "])}":
            depth -= 1
        if depth == 0 and ch in "∪Uu":
            parts.append("".join(cur))
            cur = []
            continue
        cur.append(ch)
    parts.append("".join(cur))
    parts = [p.strip() for p in parts if p.strip()]
    if not parts:
        raise ValueError(f"cannot parse slope set {text!r}")
    return parts


def _parse_piece(text: str) -> SlopeSet:
    t = text.strip()
    m = re.fullmatch(r"\{(.+)\}", t)
    if m:
        return SlopeSet.point(Slope.from_string(m.group(1)))
    m = re.fullmatch(r"([\[(])(.+?),(.+?)([\])])", t)
    if m is None:
        raise ValueError(f"cannot parse arc {text!r}")
    sb, astr, bstr, eb = m.groups()
    start_closed = sb == "["
    end_closed = eb == "]"
    a_inf = astr.strip() in _INF_TOKENS | _NEG_INF_TOKENS
    b_inf = bstr.strip() in _INF_TOKENS | _NEG_INF_TOKENS
    if a_inf and b_inf:
        # (-inf, inf) is everything but ∞; a closed bracket on either
        # side puts ∞ back in.
        if start_closed or end_closed:
            return SlopeSet.full()
        return SlopeSet.copoint(INFINITY)
    start = INFINITY if a_inf else Slope.from_string(astr)
    end = INFINITY if b_inf else Slope.from_string(bstr)
    if start == end:
        if start_closed and end_closed:
            return SlopeSet.point(start)
        raise ValueError(f"degenerate open arc {text!r}")
    return SlopeSet.arc(start, end, start_closed, end_closed)
