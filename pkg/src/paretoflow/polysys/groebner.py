"""Buchberger's algorithm (lex order) and variety extraction by elimination."""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import NonIntegerRoot, PolyError, ResourceCap
from .poly import MultiPoly, mono_coprime, mono_div, mono_divides, mono_lcm, reduce

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple[MultiPoly, ...]
    nvars: int
    order: str = "lex"
    reduced: bool = True

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and not self.polys[0].is_zero()


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lcm = mono_lcm(f.lm(), g.lm())
    return (f.mul_term(mono_div(lcm, f.lm()), 1 / f.lc())
            - g.mul_term(mono_div(lcm, g.lm()), 1 / g.lc()))


def _interreduce(polys: list[MultiPoly]) -> list[MultiPoly]:
    """Reduce every member modulo the others until nothing changes."""
    polys = [p.monic() for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        # largest leading monomial first; it is the one most likely to shrink
        polys.sort(key=lambda p: p.lm(), reverse=True)
        for k, p in enumerate(polys):
            others = polys[:k] + polys[k + 1:]
            if not others:
                break
            r = reduce(p, others)
            if r != p:
                changed = True
                if r.is_zero():
                    polys.pop(k)
                else:
                    polys[k] = r.monic()
                break
    return polys


def buchberger(generators: Sequence[MultiPoly], max_pairs: int = 20_000,
               max_basis: int = 2_000) -> GroebnerBasis:
    """Reduced lex Groebner basis of the ideal spanned by ``generators``.

    Pairs are taken smallest-lcm first.  Buchberger's coprime criterion and
    the chain criterion prune pairs.  ``ResourceCap`` is raised once more
    than ``max_pairs`` S-polynomials have been reduced or the working basis
    grows past ``max_basis`` members.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("all generators are zero")
    nvars = gens[0].nvars
    if any(g.is_constant() for g in gens):
        return GroebnerBasis((MultiPoly.constant(nvars, 1),), nvars)

    G = _interreduce(gens)
    if any(g.is_constant() for g in G):
        return GroebnerBasis((MultiPoly.constant(nvars, 1),), nvars)

    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push(i, j):
        pending.add((i, j))
        heapq.heappush(heap, (mono_lcm(G[i].lm(), G[j].lm()), i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)

    processed = 0
    while heap:
        lcm, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        fi, fj = G[i], G[j]
        if mono_coprime(fi.lm(), fj.lm()):
            continue
        if _chain_criterion(i, j, lcm, G, pending):
            continue
        processed += 1
        if processed > max_pairs:
            raise ResourceCap(f"Buchberger exceeded {max_pairs} S-pair reductions")
        h = reduce(s_polynomial(fi, fj), G)
        if h.is_zero():
            continue
        if h.is_constant():
            return GroebnerBasis((MultiPoly.constant(nvars, 1),), nvars)
        G.append(h.monic())
        if len(G) > max_basis:
            raise ResourceCap(f"Groebner basis grew beyond {max_basis} polynomials")
        k = len(G) - 1
        for i2 in range(k):
            push(i2, k)
    log.debug("buchberger: %d S-pairs reduced, %d polynomials before reduction", processed, len(G))
    return GroebnerBasis(tuple(_reduce_basis(G)), nvars)


def _chain_criterion(i, j, lcm, G, pending) -> bool:
    for k in range(len(G)):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        if mono_divides(G[k].lm(), lcm):
            return True
    return False


def _reduce_basis(G: list[MultiPoly]) -> list[MultiPoly]:
    # minimal basis: drop members whose leading monomial is a multiple of another's
    G = sorted((g.monic() for g in G), key=lambda g: g.lm())
    minimal: list[MultiPoly] = []
    for g in G:
        if not any(mono_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        reduced.append(reduce(g, others).monic() if others else g)
    return sorted(reduced, key=lambda g: g.lm(), reverse=True)


def is_consistent(G: GroebnerBasis) -> bool:
    """The variety is nonempty iff the reduced basis is not {1}."""
    return not G.is_unit()


# -- univariate helpers ------------------------------------------------------

def _strip(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _upoly_divmod(a: list[Fraction], b: list[Fraction]):
    a, b = _strip(a), _strip(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for k, c in enumerate(b):
            a[k + shift] -= factor * c
        a = _strip(a)
    return q, a


def upoly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd over Q of two coefficient lists (ascending powers)."""
    a, b = _strip(a), _strip(b)
    while b:
        a, b = b, _upoly_divmod(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def _upoly_eval(p: Sequence[Fraction], x: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def integer_roots(p: Sequence[Fraction]) -> list[int]:
    """Distinct integer roots of a nonzero univariate polynomial over Q.

    Candidates are divisors of the trailing nonzero coefficient (after
    clearing denominators), bounded by the Cauchy root bound.
    """
    p = _strip(p)
    if not p:
        raise PolyError("zero polynomial has every integer as a root")
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    roots = []
    shift = next(k for k, c in enumerate(ints) if c)
    if shift:
        roots.append(0)
    ints = ints[shift:]
    if len(ints) == 1:
        return roots
    trailing = abs(ints[0])
    lead = abs(ints[-1])
    bound = 1 + -(-max(abs(c) for c in ints[:-1]) // lead)
    for cand in range(1, min(bound, trailing) + 1):
        if trailing % cand:
            continue
        for r in (cand, -cand):
            if _upoly_eval(ints, r) == 0:
                roots.append(r)
    return sorted(roots)


def _split_integer_roots(p: list[Fraction]) -> list[int]:
    """Roots of p, all of which must be integers."""
    roots = integer_roots(p)
    rest = list(p)
    for r in roots:
        while True:
            q, rem = _upoly_divmod(rest, [Fraction(-r), Fraction(1)])
            if rem:
                break
            rest = q
    if len(_strip(rest)) > 1:
        raise NonIntegerRoot(f"polynomial {p} has non-integer roots")
    return roots


def extract_variety(G: GroebnerBasis) -> list[tuple[int, ...]]:
    """All points of V(G) by back-substitution through the elimination ideals.

    G must be a reduced lex basis of a zero-dimensional ideal whose variety
    is integral.  Works from the last variable upward: G_l = G ∩ Q[z_l..z_N]
    restricted to each partial solution becomes univariate in z_l; its
    common roots (gcd) extend that partial solution.  Partial solutions with
    no extension are dropped.
    """
    if G.is_unit():
        return []
    N = G.nvars
    if N == 0:
        return [()]
    first_var = [min(p.support(), default=N) for p in G.polys]
    partial: list[tuple[int, ...]] = [()]  # values for z_{l+1}..z_N
    for l in range(N - 1, -1, -1):
        level = [p for p, v in zip(G.polys, first_var) if v >= l]
        extended = []
        for tail in partial:
            fixed = {l + 1 + k: v for k, v in enumerate(tail)}
            g = []
            dead = False
            for p in level:
                s = p.substitute(fixed) if fixed else p
                if s.is_zero():
                    continue
                if s.is_constant():
                    dead = True
                    break
                g = upoly_gcd(g, s.univariate_coeffs(l)) if g else _strip(s.univariate_coeffs(l))
            if dead:
                continue
            if not g:
                raise PolyError(f"ideal is not zero-dimensional: z{l + 1} is unconstrained")
            if len(g) == 1:
                continue
            for root in _split_integer_roots(g):
                extended.append((root,) + tail)
        partial = extended
    return sorted(partial)
