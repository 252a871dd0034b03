"""Combinatorics of monomial ideals in a block-graded ring.

Monomials are exponent tuples (the kernel convention).  A MonomialIdeal
stores the unique minimal generating antichain.  This module has no
dependency on the Groebner engine; everything here is exact combinatorics
and serves as an independent oracle for it.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from multigb.errors import (HypothesisNotSatisfiedError, NotSquarefreeError,
                            PolarizationCapacityError, RingMismatchError)
from multigb.ring import BlockRing, exp_divides, exp_gcd, exp_lcm, total_degree


def _minimal_antichain(exps: Iterable[tuple]) -> list:
    """Drop duplicates and anything divisible by another element."""
    uniq = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in uniq:
        if not any(exp_divides(m, e) for m in out):
            out.append(e)
    return out


class MonomialIdeal:
    """A monomial ideal, kept as its minimal generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: BlockRing, gens: Iterable[tuple], *, _minimal: bool = False):
        exps = [tuple(int(x) for x in e) for e in gens]
        for e in exps:
            if len(e) != ring.nvars:
                raise RingMismatchError("exponent length does not match ring")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
        if not _minimal:
            exps = _minimal_antichain(exps)
        self.ring = ring
        self.gens = tuple(sorted(exps))

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains_monomial(self, exp: tuple) -> bool:
        return any(exp_divides(g, exp) for g in self.gens)

    def monomial_str(self, exp: tuple) -> str:
        if not any(exp):
            return "1"
        parts = []
        for v, e in enumerate(exp):
            if e == 1:
                parts.append(self.ring.var_label(v))
            elif e > 1:
                parts.append(f"{self.ring.var_label(v)}^{e}")
        return "*".join(parts)

    def generator_strings(self) -> list:
        return [self.monomial_str(g) for g in self.gens]

    def __repr__(self):
        inside = ", ".join(self.generator_strings()) if self.gens else "0"
        return f"MonomialIdeal({inside})"

    def multidegrees(self) -> list:
        return [self.ring.multidegree(g) for g in self.gens]

    def max_total_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)


def minimalize(ring: BlockRing, gens: Iterable[tuple]) -> MonomialIdeal:
    """Minimal generating antichain of the ideal the monomials generate."""
    return MonomialIdeal(ring, gens)


def colon_monomial(I: MonomialIdeal, exp: tuple) -> MonomialIdeal:
    """I : x^exp, by the elementwise rule m -> m / gcd(m, x^exp)."""
    gens = [tuple(g - min(g, e) for g, e in zip(m, exp)) for m in I.gens]
    return MonomialIdeal(I.ring, gens)


def sum_monomial(I: MonomialIdeal, extra: Iterable[tuple]) -> MonomialIdeal:
    return MonomialIdeal(I.ring, list(I.gens) + list(extra))


def intersect_monomial(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Pairwise-lcm rule; independent oracle for the engine's intersect."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    return MonomialIdeal(I.ring, [exp_lcm(a, b) for a in I.gens for b in J.gens])


def support(exp: tuple) -> tuple:
    return tuple(v for v, e in enumerate(exp) if e)


def is_radical_monomial(I: MonomialIdeal) -> bool:
    """A monomial ideal is radical iff its minimal generators are squarefree."""
    return all(all(e <= 1 for e in g) for g in I.gens)


def is_squarefree(I: MonomialIdeal) -> bool:
    return is_radical_monomial(I)


def is_extended_from_first_variables(I: MonomialIdeal) -> bool:
    """True iff every generator only involves the first variable of each block."""
    firsts = {I.ring.var_index(i, 1) for i in range(1, I.ring.v + 1)}
    return all(set(support(g)) <= firsts for g in I.gens)


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Single-exchange condition: x_{ik} * (u / x_{ij}) stays in I for k < j."""
    ring = I.ring
    for u in I.gens:
        for var, c in enumerate(u):
            if c == 0:
                continue
            block, pos = ring.var_pair(var)
            for k in range(1, pos):
                w = ring.var_index(block, k)
                moved = list(u)
                moved[var] -= 1
                moved[w] += 1
                if not I.contains_monomial(tuple(moved)):
                    return False
    return True


def is_borel_fixed(I: MonomialIdeal, char: int | None = None) -> bool:
    """Exchange condition with binomial coefficients taken mod the characteristic."""
    ring = I.ring
    p = ring.characteristic if char is None else char
    for u in I.gens:
        for var, c in enumerate(u):
            if c == 0:
                continue
            block, pos = ring.var_pair(var)
            for k in range(1, pos):
                w = ring.var_index(block, k)
                for d in range(1, c + 1):
                    if math.comb(c, d) % p == 0:
                        continue
                    moved = list(u)
                    moved[var] -= d
                    moved[w] += d
                    if not I.contains_monomial(tuple(moved)):
                        return False
    return True


def regularity_strongly_stable(I: MonomialIdeal) -> int:
    """Castelnuovo-Mumford regularity of a strongly stable ideal: the max
    total degree of its minimal generators."""
    if not is_strongly_stable(I):
        raise HypothesisNotSatisfiedError("ideal is not strongly stable")
    if I.is_zero:
        raise HypothesisNotSatisfiedError("regularity of the zero ideal is undefined")
    return I.max_total_degree()


# -- Alexander duality ---------------------------------------------------------

def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Dual of a squarefree ideal: intersection of the support primes of the
    generators, expanded with interleaved minimalization."""
    if not is_radical_monomial(I):
        raise NotSquarefreeError("Alexander dual requires squarefree generators")
    if I.is_zero or I.is_unit:
        raise HypothesisNotSatisfiedError(
            "Alexander dual requires a nonzero proper ideal")
    ring = I.ring
    current = None
    for g in I.gens:
        prime = [ring.unit_exp(v) for v in support(g)]
        if current is None:
            current = prime
        else:
            current = _minimal_antichain(
                [exp_lcm(a, b) for a in current for b in prime])
    return MonomialIdeal(ring, current, _minimal=True)


def alexander_dual_bruteforce(I: MonomialIdeal) -> MonomialIdeal:
    """Oracle: generators of the dual are the minimal transversals of the
    generator supports.  Exponential; test use only."""
    if not is_radical_monomial(I):
        raise NotSquarefreeError("Alexander dual requires squarefree generators")
    if I.is_zero or I.is_unit:
        raise HypothesisNotSatisfiedError(
            "Alexander dual requires a nonzero proper ideal")
    ring = I.ring
    supports = [set(support(g)) for g in I.gens]
    universe = sorted(set().union(*supports))
    transversals = []
    for mask in range(1, 1 << len(universe)):
        subset = {universe[k] for k in range(len(universe)) if mask >> k & 1}
        if all(subset & s for s in supports):
            transversals.append(subset)
    minimal = [s for s in transversals
               if not any(t < s for t in transversals)]
    gens = []
    for s in minimal:
        e = [0] * ring.nvars
        for v in s:
            e[v] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


# -- polarization --------------------------------------------------------------

def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Expand each power x^c into a product of c distinct variables.

    The first factor is the variable itself; the remaining c-1 occurrences
    map to reserved positions of the same block, allocated bottom-up among
    positions untouched by the generators.  The slot map is shared by all
    generators, as the standard polarization requires.
    """
    ring = I.ring
    used = [set() for _ in range(ring.v)]
    occ_needed: dict = {}
    for g in I.gens:
        for var, e in enumerate(g):
            if e:
                block, pos = ring.var_pair(var)
                used[block - 1].add(pos)
                if e > 1:
                    occ_needed[var] = max(occ_needed.get(var, 1), e)
    slot: dict = {}
    for block in range(1, ring.v + 1):
        free = [pos for pos in range(1, ring.block_sizes[block - 1] + 1)
                if pos not in used[block - 1]]
        demands = [(var, occ)
                   for var in sorted(v for v in ring.block_vars(block)
                                     if v in occ_needed)
                   for occ in range(2, occ_needed[var] + 1)]
        if len(demands) > len(free):
            raise PolarizationCapacityError(
                f"block {block} lacks {len(demands) - len(free)} free "
                f"positions for polarization")
        for (var, occ), pos in zip(demands, free):
            slot[(var, occ)] = ring.var_index(block, pos)
    gens = []
    for g in I.gens:
        e = [0] * ring.nvars
        for var, c in enumerate(g):
            if c:
                e[var] = 1
                for occ in range(2, c + 1):
                    e[slot[(var, occ)]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


# -- Hilbert numerators ----------------------------------------------------------

class HilbertNumerator:
    """Integer polynomial in y_1..y_v: the numerator of a multigraded Hilbert
    series over the implied denominator prod (1 - y_i)^{n_i}."""

    __slots__ = ("v", "coeffs")

    def __init__(self, v: int, coeffs: dict):
        self.v = v
        self.coeffs = {tuple(a): int(c) for a, c in coeffs.items() if c}

    @classmethod
    def zero(cls, v: int) -> "HilbertNumerator":
        return cls(v, {})

    @classmethod
    def one(cls, v: int) -> "HilbertNumerator":
        return cls(v, {(0,) * v: 1})

    @classmethod
    def monomial(cls, v: int, a: tuple, c: int = 1) -> "HilbertNumerator":
        return cls(v, {tuple(a): c})

    def __eq__(self, other):
        return (isinstance(other, HilbertNumerator) and self.v == other.v
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.v, frozenset(self.coeffs.items())))

    def __add__(self, other):
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return HilbertNumerator(self.v, out)

    def __neg__(self):
        return HilbertNumerator(self.v, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict = {}
        for a, c in self.coeffs.items():
            for b, d in other.coeffs.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out.get(key, 0) + c * d
        return HilbertNumerator(self.v, out)

    def shifted(self, a: tuple) -> "HilbertNumerator":
        return HilbertNumerator(
            self.v, {tuple(x + y for x, y in zip(b, a)): c
                     for b, c in self.coeffs.items()})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        def mono(a):
            parts = [f"y{i + 1}" if e == 1 else f"y{i + 1}^{e}"
                     for i, e in enumerate(a) if e]
            return "*".join(parts)
        chunks = []
        for a in sorted(self.coeffs, key=lambda t: (sum(t), t)):
            c = self.coeffs[a]
            m = mono(a)
            body = str(abs(c)) if not m else (m if abs(c) == 1 else f"{abs(c)}*{m}")
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"HilbertNumerator({self})"


def _pairwise_coprime(gens: Sequence[tuple]) -> bool:
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if any(exp_gcd(gens[i], gens[j])):
                return False
    return True


def hilbert_numerator(I: MonomialIdeal) -> HilbertNumerator:
    """K-polynomial of S/I by pivot splitting:
    K(S/I) = y^{deg x} * K(S/(I:x)) + K(S/(I+(x))) for a pivot variable x."""
    ring = I.ring
    v = ring.v
    memo: dict = {}

    def rec(gens: tuple) -> HilbertNumerator:
        if gens in memo:
            return memo[gens]
        if not gens:
            out = HilbertNumerator.one(v)
        elif _pairwise_coprime(gens):
            out = HilbertNumerator.one(v)
            for g in gens:
                out = out * (HilbertNumerator.one(v)
                             - HilbertNumerator.monomial(v, ring.multidegree(g)))
        else:
            counts = [0] * ring.nvars
            for g in gens:
                for var, e in enumerate(g):
                    if e:
                        counts[var] += 1
            pivot = max(range(ring.nvars), key=lambda var: (counts[var], -var))
            px = ring.unit_exp(pivot)
            ideal = MonomialIdeal(ring, gens, _minimal=True)
            colon = colon_monomial(ideal, px)
            plus = sum_monomial(ideal, [px])
            out = (rec(colon.gens).shifted(ring.multidegree(px))
                   + rec(plus.gens))
        memo[gens] = out
        return out

    return rec(I.gens)


def hilbert_numerator_inclusion_exclusion(I: MonomialIdeal) -> HilbertNumerator:
    """Oracle: K(S/I) = sum over generator subsets of (-1)^|T| y^{deg lcm(T)}.
    Exponential; test use only."""
    ring = I.ring
    v = ring.v
    out = HilbertNumerator.zero(v)
    gens = I.gens
    for mask in range(1 << len(gens)):
        chosen = [gens[k] for k in range(len(gens)) if mask >> k & 1]
        lcm = (0,) * ring.nvars
        for g in chosen:
            lcm = exp_lcm(lcm, g)
        sign = -1 if len(chosen) % 2 else 1
        out = out + HilbertNumerator.monomial(v, ring.multidegree(lcm), sign)
    return out


def ambient_dimension(ring: BlockRing, a: Sequence[int]) -> int:
    """dim of the degree-a component of the full ring."""
    if any(x < 0 for x in a):
        return 0
    dim = 1
    for deg, size in zip(a, ring.block_sizes):
        dim *= math.comb(deg + size - 1, size - 1)
    return dim


def quotient_dimension_from_numerator(num: HilbertNumerator, ring: BlockRing,
                                      a: Sequence[int]) -> int:
    """dim (S/I)_a read off the K-polynomial."""
    a = tuple(a)
    return sum(c * ambient_dimension(ring, tuple(x - y for x, y in zip(a, b)))
               for b, c in num.coeffs.items())


def graded_dimension(I: MonomialIdeal, a: Sequence[int]) -> int:
    """Brute-force dim (S/I)_a: count standard monomials of multidegree a."""
    return sum(1 for exp in I.ring.monomials_of_multidegree(tuple(a))
               if not I.contains_monomial(exp))
