"""Sparse multivariate polynomials over Q under lex order z1 > z2 > ... > zN.

Exponent vectors are fixed-length tuples, so Python's tuple comparison is
exactly the lexicographic monomial order.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MultiPoly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms", "_lm")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            if c != 0:
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has wrong length for {nvars} variables")
                clean[tuple(mono)] = Fraction(c)
        self.terms = clean
        self._lm = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._lm = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        mono = [0] * nvars
        mono[i] = 1
        return cls._raw(nvars, {tuple(mono): Fraction(1)})

    @classmethod
    def linear(cls, const, coeffs: Sequence) -> "MultiPoly":
        """``const + sum coeffs[i] * z_i``."""
        nvars = len(coeffs)
        terms = {(0,) * nvars: Fraction(const)}
        for i, c in enumerate(coeffs):
            if c:
                mono = [0] * nvars
                mono[i] = 1
                terms[tuple(mono)] = Fraction(c)
        return cls(nvars, terms)

    @classmethod
    def univariate(cls, nvars: int, i: int, coeffs: Sequence) -> "MultiPoly":
        """``sum coeffs[k] * z_i**k``."""
        terms = {}
        for k, c in enumerate(coeffs):
            mono = [0] * nvars
            mono[i] = k
            terms[tuple(mono)] = Fraction(c)
        return cls(nvars, terms)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def lm(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms)
        return self._lm

    def lc(self) -> Fraction:
        return self.terms[self.lm()]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def univariate_coeffs(self, i: int) -> list[Fraction]:
        """Ascending coefficients in z_i; raises if another variable occurs."""
        if self.support() - {i}:
            raise ValueError("polynomial is not univariate in the requested variable")
        deg = max((m[i] for m in self.terms), default=-1)
        coeffs = [Fraction(0)] * (deg + 1)
        for m, c in self.terms.items():
            coeffs[m[i]] = c
        return coeffs

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return MultiPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "MultiPoly":
        c = Fraction(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def monic(self) -> "MultiPoly":
        if self.is_zero():
            return self
        lc = self.lc()
        return self if lc == 1 else self.scale(1 / lc)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- evaluation ---------------------------------------------------------

    def __call__(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def substitute(self, values: Mapping[int, object]) -> "MultiPoly":
        """Fix the variables in ``values``; result keeps the same arity."""
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            coeff = c
            mono = list(m)
            for i, v in values.items():
                if mono[i]:
                    coeff *= Fraction(v) ** mono[i]
                    mono[i] = 0
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + coeff
        return MultiPoly(self.nvars, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            vars_ = "*".join(
                f"z{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            if not vars_:
                parts.append(str(c))
            elif c == 1:
                parts.append(vars_)
            elif c == -1:
                parts.append("-" + vars_)
            else:
                parts.append(f"{c}*{vars_}")
        return " + ".join(parts).replace("+ -", "- ")


def product(factors: Iterable[MultiPoly], nvars: int) -> MultiPoly:
    acc = MultiPoly.constant(nvars, 1)
    for f in factors:
        acc = acc * f
    return acc


def poly_divide(f: MultiPoly, divisors: Sequence[MultiPoly]):
    """Multivariate division: ``f = sum q_i * g_i + r``.

    No monomial of ``r`` is divisible by any divisor's leading monomial.
    Returns ``(quotients, remainder)``.
    """
    return _divide(f, divisors, want_quotients=True)


def reduce(f: MultiPoly, divisors: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of ``f`` on division by ``divisors``."""
    return _divide(f, divisors, want_quotients=False)[1]


def _divide(f, divisors, want_quotients):
    nvars = f.nvars
    divs = [(g.lm(), g.lc(), g) for g in divisors if not g.is_zero()]
    if len(divs) != len(divisors):
        raise ValueError("division by the zero polynomial")
    quotients = [dict() for _ in divisors] if want_quotients else None
    rem: dict[Monomial, Fraction] = {}
    work = dict(f.terms)
    # max-heap on lex order via negated exponents; stale entries are skipped
    heap = [tuple(-e for e in m) for m in work]
    heapq.heapify(heap)
    while heap:
        key = heapq.heappop(heap)
        mono = tuple(-e for e in key)
        c = work.pop(mono, None)
        if c is None:
            continue
        while heap and heap[0] == key:
            heapq.heappop(heap)
        for idx, (lm, lc, g) in enumerate(divs):
            if mono_divides(lm, mono):
                shift = mono_div(mono, lm)
                factor = c / lc
                if want_quotients:
                    quotients[idx][shift] = quotients[idx].get(shift, 0) + factor
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    m = mono_mul(gm, shift)
                    old = work.get(m)
                    if old is None:
                        work[m] = -factor * gc
                        heapq.heappush(heap, tuple(-e for e in m))
                    else:
                        v = old - factor * gc
                        if v:
                            work[m] = v
                        else:
                            del work[m]
                break
        else:
            rem[mono] = c
    remainder = MultiPoly._raw(nvars, rem)
    if want_quotients:
        return [MultiPoly(nvars, q) for q in quotients], remainder
    return None, remainder
