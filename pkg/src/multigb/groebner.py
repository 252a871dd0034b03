"""Buchberger engine and the ideal operations built on it.

The driver keeps the Gebauer-Moeller pair bookkeeping and the normal
selection strategy in Python; per-term arithmetic lives in the kernel
(compiled when available).  All computations are deterministic: the
reduced Groebner basis of an ideal under an order is unique, so caches
and cross-checks can compare results structurally.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from multigb import kernel
from multigb.errors import (HypothesisNotSatisfiedError,
                            InternalConsistencyError, ResourceLimitError,
                            RingMismatchError)
from multigb.monomials import (HilbertNumerator, MonomialIdeal,
                               hilbert_numerator)
from multigb.poly import Polynomial
from multigb.ring import (BlockRing, TermOrder, degrevlex, elimination_order,
                          exp_divides, exp_gcd, exp_lcm)


@dataclass(frozen=True)
class EngineLimits:
    """Caps that turn runaway computations into clean aborts."""
    max_basis: int = 5000
    max_terms: int = 100_000


DEFAULT_LIMITS = EngineLimits()


def _monic(f: list, p: int) -> list:
    c = f[0][1]
    if c == 1:
        return f
    return kernel.poly_scale(f, pow(c, p - 2, p), p)


def _gm_update(basis: list, pairs: set, f: list) -> None:
    """Add ``f`` to the basis, pruning S-pairs by the Gebauer-Moeller
    criteria (lcm chain rule, duplicate-lcm collapse, coprime leads)."""
    m = len(basis)
    lf = f[0][0]
    leads = [g[0][0] for g in basis]
    zero = (0,) * len(lf)

    survivors = set()
    for i, j in pairs:
        gamma = exp_lcm(leads[i], leads[j])
        if (exp_divides(lf, gamma)
                and gamma != exp_lcm(leads[i], lf)
                and gamma != exp_lcm(leads[j], lf)):
            continue
        survivors.add((i, j))

    by_lcm: dict = {}
    for i in range(m):
        by_lcm.setdefault(exp_lcm(leads[i], lf), []).append(i)
    kept = []
    for gamma in sorted(by_lcm, key=lambda e: (sum(e), e)):
        if any(exp_divides(mu, gamma) for mu in kept):
            continue
        kept.append(gamma)
        group = by_lcm[gamma]
        if any(exp_gcd(leads[i], lf) == zero for i in group):
            continue
        survivors.add((group[0], m))

    basis.append(f)
    pairs.clear()
    pairs.update(survivors)


def _reduced_basis_raw(gens: Sequence[list], matrix: tuple, p: int,
                       limits: EngineLimits) -> list:
    """Reduced Groebner basis as raw term lists sorted under ``matrix``."""
    basis: list = []
    pairs: set = set()
    for g in gens:
        g = kernel.sort_terms(list(g), matrix, p)
        if not g:
            continue
        r = kernel.normal_form(g, basis, matrix, p, limits.max_terms) if basis else g
        if r:
            _gm_update(basis, pairs, _monic(r, p))

    while pairs:
        if len(basis) > limits.max_basis:
            raise ResourceLimitError(
                f"basis exceeded {limits.max_basis} elements")
        best = min(pairs, key=lambda ij: (
            sum(exp_lcm(basis[ij[0]][0][0], basis[ij[1]][0][0])),
            kernel.order_key(matrix, exp_lcm(basis[ij[0]][0][0], basis[ij[1]][0][0]))))
        pairs.remove(best)
        s = kernel.spoly(basis[best[0]], basis[best[1]], matrix, p)
        r = kernel.normal_form(s, basis, matrix, p, limits.max_terms)
        if r:
            if len(r) > limits.max_terms:
                raise ResourceLimitError(
                    f"element exceeded {limits.max_terms} terms")
            _gm_update(basis, pairs, _monic(r, p))

    # minimal heads, then full tail reduction
    keep = []
    for i, g in enumerate(basis):
        lead = g[0][0]
        if any(j != i and exp_divides(basis[j][0][0], lead)
               and (basis[j][0][0] != lead or j < i) for j in range(len(basis))):
            continue
        keep.append(g)
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = kernel.normal_form(g, others, matrix, p, limits.max_terms)
        reduced.append(_monic(r, p))
    reduced.sort(key=lambda g: kernel.order_key(matrix, g[0][0]), reverse=True)
    return reduced


class GroebnerBasis:
    """Reduced Groebner basis under a fixed term order."""

    __slots__ = ("ring", "order", "elements", "_limits")

    def __init__(self, ring: BlockRing, order: TermOrder,
                 elements: Sequence[Polynomial], limits: EngineLimits = DEFAULT_LIMITS):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self._limits = limits

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.ring, self.elements))

    def lead_exponents(self) -> list:
        return [g.lead_exp(self.order) for g in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatchError("polynomial lives in a different ring")
        raw = kernel.sort_terms(f.terms, self.order.rows, self.ring.characteristic)
        r = kernel.normal_form(raw, [kernel.sort_terms(g.terms, self.order.rows,
                                                       self.ring.characteristic)
                                     for g in self.elements],
                               self.order.rows, self.ring.characteristic,
                               self._limits.max_terms)
        return Polynomial(self.ring, r)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    def __repr__(self):
        return f"GroebnerBasis({self.order}, {list(self.elements)})"


class Ideal:
    """An ideal with cached reduced Groebner bases keyed by order matrix."""

    def __init__(self, ring: BlockRing, gens: Iterable[Polynomial],
                 limits: EngineLimits | None = None):
        self.ring = ring
        cleaned = []
        for g in gens:
            if isinstance(g, (tuple, list)):
                g = Polynomial(ring, g)
            if g.ring != ring:
                raise RingMismatchError("generator lives in a different ring")
            if not g.is_zero:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self.limits = limits if limits is not None else DEFAULT_LIMITS
        self._gb_cache: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens) or '0'})"

    @property
    def is_zero_ideal(self) -> bool:
        return not self.gens

    @property
    def is_multihomogeneous(self) -> bool:
        return all(g.is_multihomogeneous for g in self.gens)

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.gens)

    def _default_order(self) -> TermOrder:
        return self.ring.storage_order

    def groebner_basis(self, order: TermOrder | None = None) -> GroebnerBasis:
        order = order or self._default_order()
        key = order.rows
        with self._lock:
            hit = self._gb_cache.get(key)
        if hit is not None:
            return hit
        p = self.ring.characteristic
        raw = _reduced_basis_raw([g.terms for g in self.gens], order.rows, p,
                                 self.limits)
        gb = GroebnerBasis(self.ring, order,
                           [Polynomial(self.ring, g) for g in raw], self.limits)
        with self._lock:
            self._gb_cache.setdefault(key, gb)
            return self._gb_cache[key]

    def initial_ideal(self, order: TermOrder | None = None) -> MonomialIdeal:
        gb = self.groebner_basis(order)
        return MonomialIdeal(self.ring, gb.lead_exponents(), _minimal=True)

    def normal_form(self, f: Polynomial, order: TermOrder | None = None) -> Polynomial:
        return self.groebner_basis(order).normal_form(f)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")
        return (self.groebner_basis().elements
                == other.groebner_basis().elements)

    @property
    def is_unit_ideal(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant and not gb[0].is_zero

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other], self.limits)
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")
        return Ideal(self.ring, self.gens + other.gens, self.limits)

    # -- derived constructions ---------------------------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J by eliminating t from t*I + (1-t)*J in an extended ring.

        The auxiliary variable is appended as a one-variable block; the
        extension is internal plumbing and never surfaces in results.
        """
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")
        ring = self.ring
        if self.is_zero_ideal or other.is_zero_ideal:
            return Ideal(ring, [], self.limits)
        ext = BlockRing(ring.block_sizes + (1,), ring.characteristic)
        t_var = ext.nvars - 1

        def lift(f: Polynomial) -> Polynomial:
            return Polynomial(ext, [(e + (0,), c) for e, c in f.terms])

        t = Polynomial.monomial(ext, ext.unit_exp(t_var))
        one_minus_t = Polynomial.one(ext) - t
        gens = [t * lift(f) for f in self.gens]
        gens += [one_minus_t * lift(g) for g in other.gens]
        extended = Ideal(ext, gens, self.limits)
        order = elimination_order(ext.nvars, {t_var})
        kept = []
        for g in extended.groebner_basis(order):
            if all(e[t_var] == 0 for e, _ in g.terms):
                kept.append(Polynomial(ring, [(e[:-1], c) for e, c in g.terms]))
        return Ideal(ring, kept, self.limits)

    def eliminate(self, front: Iterable[int]) -> "Ideal":
        """Generators of I cap K[variables outside ``front``] (same ring)."""
        front = frozenset(front)
        order = elimination_order(self.ring.nvars, front)
        kept = [g for g in self.groebner_basis(order)
                if not (g.support_vars() & front)]
        return Ideal(self.ring, kept, self.limits)

    def colon(self, f: Polynomial) -> "Ideal":
        """I : f, via (1/f) * (I cap (f))."""
        if f.is_zero:
            raise ValueError("colon by zero")
        if f.ring != self.ring:
            raise RingMismatchError("polynomial lives in a different ring")
        meet = self.intersect(Ideal(self.ring, [f], self.limits))
        return Ideal(self.ring, [exact_divide(g, f) for g in meet.gens],
                     self.limits)

    def hilbert_series(self, order: TermOrder | None = None) -> HilbertNumerator:
        """K-polynomial of S/I, computed on the initial ideal (Macaulay)."""
        if not self.is_multihomogeneous:
            raise HypothesisNotSatisfiedError(
                "Hilbert series needs multigraded generators")
        return hilbert_numerator(self.initial_ideal(order))

    def minimal_generators(self) -> list:
        """Irredundant subset of the (multihomogeneous) generators; for graded
        ideals irredundant means minimal."""
        if not self.is_multihomogeneous:
            raise HypothesisNotSatisfiedError(
                "minimal generators need multigraded input")
        gens = sorted(self.gens, key=lambda g: (sum(g.lead_exp()), g.lead_exp()))
        kept = list(gens)
        i = 0
        while i < len(kept):
            rest = kept[:i] + kept[i + 1:]
            if Ideal(self.ring, rest, self.limits).contains(kept[i]):
                kept.pop(i)
            else:
                i += 1
        return kept

    def monomial_ideal(self) -> MonomialIdeal:
        """The ideal as a MonomialIdeal; requires monomial generators."""
        if not self.is_monomial:
            raise HypothesisNotSatisfiedError("generators are not monomials")
        return MonomialIdeal(self.ring, [g.lead_exp() for g in self.gens])


# -- free-function forms -------------------------------------------------------

def buchberger(I: Ideal, order: TermOrder | None = None) -> GroebnerBasis:
    return I.groebner_basis(order)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def initial_ideal(I: Ideal, order: TermOrder | None = None) -> MonomialIdeal:
    return I.initial_ideal(order)


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def colon(I: Ideal, f: Polynomial) -> Ideal:
    return I.colon(f)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    return I.intersect(J)


def eliminate(I: Ideal, variables: Iterable[int]) -> Ideal:
    return I.eliminate(variables)


def hilbert_series(I: Ideal, order: TermOrder | None = None) -> HilbertNumerator:
    return I.hilbert_series(order)


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient g / f when f divides g exactly."""
    ring = g.ring
    p = ring.characteristic
    matrix = ring.storage_order.rows
    fraw = f.terms
    work = g.terms
    quotient: list = []
    flead, flc = fraw[0]
    inv = pow(flc, p - 2, p)
    while work:
        lead, lc = work[0]
        if not exp_divides(flead, lead):
            raise InternalConsistencyError(
                "exact division left a nonzero remainder")
        shift = tuple(a - b for a, b in zip(lead, flead))
        c = lc * inv % p
        quotient.append((shift, c))
        work = kernel.poly_sub(work, kernel.poly_mul_term(fraw, shift, c, p),
                               matrix, p)
    return Polynomial(ring, quotient)


def ideal_from_monomials(M: MonomialIdeal, limits: EngineLimits = DEFAULT_LIMITS) -> Ideal:
    return Ideal(M.ring, [Polynomial.monomial(M.ring, e) for e in M.gens], limits)


def regular_sequence_test(I: Ideal, forms: Sequence[Polynomial],
                          allow_unit: bool = False) -> bool:
    """True iff the forms are a regular sequence on S/I, in the given order:
    each colon (I + earlier forms) : f equals the ideal itself, and the final
    sum stays proper unless ``allow_unit``."""
    current = I
    for f in forms:
        if f.is_zero:
            raise ValueError("regular sequence test with a zero form")
        if not current.colon(f).equals(current):
            return False
        current = current + f
    if not allow_unit and current.contains(Polynomial.one(I.ring)):
        return False
    return True


# -- ring surgery (quotient by a linear form, coordinate subrings) -------------

def _graded_linear_block(L: Polynomial) -> int:
    """1-based block of a Z^v-graded linear form; raises otherwise."""
    deg = L.multidegree()
    if L.is_zero or deg is None or sum(deg) != 1:
        raise HypothesisNotSatisfiedError(
            "expected a nonzero multigraded linear form")
    return deg.index(1) + 1


def ring_without_variable(ring: BlockRing, var: int) -> BlockRing:
    block, _ = ring.var_pair(var)
    if ring.block_sizes[block - 1] == 1:
        raise HypothesisNotSatisfiedError(
            "cannot drop the only variable of a block")
    sizes = list(ring.block_sizes)
    sizes[block - 1] -= 1
    return BlockRing(sizes, ring.characteristic)


def project_out_variable(f: Polynomial, small: BlockRing, var: int) -> Polynomial:
    """Reinterpret a polynomial not involving ``var`` in the smaller ring."""
    terms = []
    for e, c in f.terms:
        if e[var]:
            raise InternalConsistencyError("polynomial still involves the variable")
        terms.append((e[:var] + e[var + 1:], c))
    return Polynomial(small, terms)


def quotient_by_linear_form(I: Ideal, L: Polynomial) -> tuple:
    """(I + (L))/(L) in S/(L), identified with the ring that drops one variable.

    The dropped variable is the highest-position variable of L's block with a
    nonzero coefficient, so the remaining variables keep their order.
    Returns (ideal in the smaller ring, smaller ring, dropped flat index).
    """
    ring = I.ring
    _graded_linear_block(L)
    var = max(L.support_vars())
    small = ring_without_variable(ring, var)
    coeff = 0
    for e, c in L.terms:
        if e[var]:
            coeff = c
    inv = pow(coeff, ring.characteristic - 2, ring.characteristic)
    x_var = Polynomial.monomial(ring, ring.unit_exp(var))
    image = x_var - (L * inv)
    gens = []
    for g in I.gens:
        h = g.substitute({var: image})
        if not h.is_zero:
            gens.append(project_out_variable(h, small, var))
    return Ideal(small, gens, I.limits), small, var


def coordinate_section(I: Ideal, var: int) -> tuple:
    """I cap K[all variables but ``var``], living in the smaller ring.

    Returns (ideal in the smaller ring, smaller ring).
    """
    small = ring_without_variable(I.ring, var)
    section = I.eliminate({var})
    gens = [project_out_variable(g, small, var) for g in section.gens]
    return Ideal(small, gens, I.limits), small
