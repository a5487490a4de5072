"""Exact piecewise polynomial / absolute-value cost functions of one integer.

A cost is a list of closed integer segments, each carrying a body

    sum_k a_k * v**k  +  sum_l b_l * |v - c_l|

with rational coefficients.  Evaluation is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import CostError, GapInSegments, MalformedRational, OutOfDomain, OverlappingSegments

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse an int or a string like ``"77/120"`` / ``"-3"`` into a Fraction.

    Floats are refused: they cannot be represented exactly.
    """
    if isinstance(value, bool):
        raise MalformedRational(f"boolean is not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m:
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise MalformedRational(f"zero denominator in {value!r}")
            return Fraction(num, den)
    raise MalformedRational(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class PolyAbsBody:
    """``poly[k]`` is the coefficient of v**k; ``abs_terms`` holds (coeff, c)."""

    poly: tuple[Fraction, ...] = ()
    abs_terms: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        poly = list(self.poly)
        while poly and poly[-1] == 0:
            poly.pop()
        object.__setattr__(self, "poly", tuple(Fraction(c) for c in poly))
        object.__setattr__(
            self, "abs_terms", tuple((Fraction(a), int(c)) for a, c in self.abs_terms if a != 0)
        )

    def __call__(self, v: int) -> Fraction:
        acc = Fraction(0)
        for coeff in reversed(self.poly):  # Horner
            acc = acc * v + coeff
        for coeff, c in self.abs_terms:
            acc += coeff * abs(v - c)
        return acc

    def eval_naive(self, v: int) -> Fraction:
        total = sum((coeff * Fraction(v) ** k for k, coeff in enumerate(self.poly)), Fraction(0))
        return total + sum((coeff * abs(v - c) for coeff, c in self.abs_terms), Fraction(0))

    def substitute_scaled(self, alpha: int) -> "PolyAbsBody":
        """Body of ``v -> body(v / alpha)``."""
        poly = tuple(coeff / Fraction(alpha) ** k for k, coeff in enumerate(self.poly))
        # |v/alpha - c| = |v - c*alpha| / alpha
        abs_terms = tuple((coeff / alpha, c * alpha) for coeff, c in self.abs_terms)
        return PolyAbsBody(poly, abs_terms)


@dataclass(frozen=True)
class Segment:
    lo: Optional[int]  # None means -infinity
    hi: Optional[int]  # None means +infinity
    body: PolyAbsBody

    def contains(self, v: int) -> bool:
        return (self.lo is None or self.lo <= v) and (self.hi is None or v <= self.hi)


@dataclass(frozen=True)
class CostExpr:
    segments: tuple[Segment, ...] = field(default_factory=tuple)

    def __post_init__(self):
        segs = tuple(sorted(self.segments, key=_segment_key))
        _check_segments(segs)
        object.__setattr__(self, "segments", segs)

    def __call__(self, v: int) -> Fraction:
        return eval_cost(self, v)

    def covers(self, lo: int, hi: int) -> bool:
        """True if every integer in [lo, hi] lies in some segment."""
        v = lo
        for seg in self.segments:
            if seg.hi is not None and seg.hi < v:
                continue
            if seg.lo is not None and seg.lo > v:
                return False
            if seg.hi is None:
                return True
            v = seg.hi + 1
            if v > hi:
                return True
        return v > hi

    @classmethod
    def polynomial(cls, coeffs, abs_terms=()) -> "CostExpr":
        """Single unbounded segment; ``coeffs[k]`` multiplies v**k."""
        body = PolyAbsBody(tuple(parse_rational(c) for c in coeffs),
                           tuple((parse_rational(a), int(c)) for a, c in abs_terms))
        return cls((Segment(None, None, body),))

    @classmethod
    def table(cls, values) -> "CostExpr":
        """Cost given by its value at 0, 1, ..., len(values)-1."""
        return cls(tuple(Segment(v, v, PolyAbsBody((parse_rational(val),)))
                         for v, val in enumerate(values)))


def _segment_key(seg: Segment):
    return (0, 0) if seg.lo is None else (1, seg.lo)


def _check_segments(segs):
    for a, b in zip(segs, segs[1:]):
        if a.hi is None or b.lo is None or a.hi >= b.lo:
            raise OverlappingSegments(f"segments [{a.lo}, {a.hi}] and [{b.lo}, {b.hi}] overlap")
        if a.hi + 1 < b.lo:
            raise GapInSegments(f"no segment covers integers {a.hi + 1}..{b.lo - 1}")
    for seg in segs:
        if seg.lo is not None and seg.hi is not None and seg.lo > seg.hi:
            raise CostError(f"empty segment [{seg.lo}, {seg.hi}]")


def eval_cost(f: CostExpr, v: int) -> Fraction:
    for seg in f.segments:
        if seg.contains(v):
            return seg.body(v)
    raise OutOfDomain(f"cost undefined at {v}")


def _parse_body(doc, path) -> PolyAbsBody:
    if not isinstance(doc, dict):
        raise MalformedRational(f"{path}: body must be an object")
    poly: dict[int, Fraction] = {}
    for term in doc.get("poly", []):
        if not (isinstance(term, (list, tuple)) and len(term) == 2):
            raise MalformedRational(f"{path}.poly: term must be [coeff, power]")
        coeff, power = term
        if not isinstance(power, int) or isinstance(power, bool) or power < 0:
            raise MalformedRational(f"{path}.poly: bad power {power!r}")
        poly[power] = poly.get(power, Fraction(0)) + parse_rational(coeff)
    dense = [poly.get(k, Fraction(0)) for k in range(max(poly, default=-1) + 1)]
    abs_terms = []
    for term in doc.get("abs", []):
        if not (isinstance(term, (list, tuple)) and len(term) == 2):
            raise MalformedRational(f"{path}.abs: term must be [coeff, center]")
        coeff, center = term
        if not isinstance(center, int) or isinstance(center, bool):
            raise MalformedRational(f"{path}.abs: center must be an integer")
        abs_terms.append((parse_rational(coeff), center))
    return PolyAbsBody(tuple(dense), tuple(abs_terms))


def _bound(value, path):
    if value is None:
        return None
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedRational(f"{path}: segment bound must be an integer or null")
    return value


def parse_cost(doc, path: str = "cost") -> CostExpr:
    """Build a CostExpr from its structured description.

    Either a single body ``{"poly": [[coeff, power], ...], "abs": [[coeff, c], ...]}``
    valid on all integers, or ``{"pieces": [{"lo": .., "hi": .., "poly": .., "abs": ..}]}``.
    """
    if not isinstance(doc, dict):
        raise MalformedRational(f"{path}: cost must be an object")
    if "pieces" in doc:
        segs = []
        for k, piece in enumerate(doc["pieces"]):
            p = f"{path}.pieces[{k}]"
            segs.append(Segment(_bound(piece.get("lo"), p + ".lo"),
                                _bound(piece.get("hi"), p + ".hi"),
                                _parse_body(piece, p)))
        return CostExpr(tuple(segs))
    return CostExpr((Segment(None, None, _parse_body(doc, path)),))


def _body_doc(body: PolyAbsBody) -> dict:
    doc = {"poly": [[format_rational(c), k] for k, c in enumerate(body.poly) if c != 0]}
    if body.abs_terms:
        doc["abs"] = [[format_rational(a), c] for a, c in body.abs_terms]
    return doc


def cost_to_doc(f: CostExpr) -> dict:
    if len(f.segments) == 1 and f.segments[0].lo is None and f.segments[0].hi is None:
        return _body_doc(f.segments[0].body)
    return {"pieces": [{"lo": s.lo, "hi": s.hi, **_body_doc(s.body)} for s in f.segments]}


def scale_cost(f: CostExpr, alpha: int) -> CostExpr:
    """Cost of the scaled variable y = alpha * v, i.e. ``y -> f(y / alpha)``.

    A segment [lo, hi] becomes [lo*alpha, hi*alpha]; when the next segment
    starts at hi + 1 the scaled segment is stretched to meet it so the
    fractional points in between stay covered.
    """
    if alpha == 1:
        return f
    segs = f.segments
    out = []
    for k, seg in enumerate(segs):
        lo = None if seg.lo is None else seg.lo * alpha
        if seg.hi is None:
            hi = None
        elif k + 1 < len(segs) and segs[k + 1].lo == seg.hi + 1:
            hi = segs[k + 1].lo * alpha - 1
        else:
            hi = seg.hi * alpha
        out.append(Segment(lo, hi, seg.body.substitute_scaled(alpha)))
    return CostExpr(tuple(out))
