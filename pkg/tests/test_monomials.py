"""Monomial-ideal combinatorics: duals, polarization, Hilbert numerators."""

import random

import pytest

from multigb.errors import (HypothesisNotSatisfiedError, NotSquarefreeError,
                            PolarizationCapacityError)
from multigb.monomials import (HilbertNumerator, MonomialIdeal, alexander_dual,
                               alexander_dual_bruteforce, ambient_dimension,
                               colon_monomial, graded_dimension,
                               hilbert_numerator,
                               hilbert_numerator_inclusion_exclusion,
                               intersect_monomial, is_borel_fixed,
                               is_extended_from_first_variables,
                               is_radical_monomial, is_strongly_stable,
                               minimalize, polarize,
                               quotient_dimension_from_numerator,
                               regularity_strongly_stable, sum_monomial,
                               support)
from multigb.ring import BlockRing


def M(R, *gens):
    return MonomialIdeal(R, gens)


def test_minimal_antichain():
    R = BlockRing((3,))
    I = M(R, (1, 1, 0), (1, 1, 1), (2, 1, 0), (1, 1, 0))
    assert I.gens == ((1, 1, 0),)
    assert I.contains_monomial((1, 2, 3))
    assert not I.contains_monomial((0, 5, 5))


def test_colon_and_sum_and_intersect():
    R = BlockRing((2, 2))
    I = M(R, (1, 0, 2, 0), (0, 1, 0, 1))
    assert colon_monomial(I, (0, 0, 1, 0)).gens == ((0, 1, 0, 1), (1, 0, 1, 0))
    assert sum_monomial(I, [(1, 0, 0, 0)]).gens == ((0, 1, 0, 1), (1, 0, 0, 0))
    J = M(R, (0, 0, 1, 0))
    K = intersect_monomial(I, J)
    assert K.gens == ((0, 1, 1, 1), (1, 0, 2, 0))


def test_predicates():
    R = BlockRing((2, 2))
    assert is_radical_monomial(M(R, (1, 0, 1, 0)))
    assert not is_radical_monomial(M(R, (2, 0, 0, 0)))
    assert is_extended_from_first_variables(M(R, (1, 0, 1, 0), (2, 0, 0, 0)))
    assert not is_extended_from_first_variables(M(R, (0, 1, 0, 0)))
    assert support((0, 2, 0, 1)) == (1, 3)


def test_strongly_stable():
    R = BlockRing((3,))
    # (x1^2, x1x2, x2^2) is strongly stable; (x2) alone is not
    assert is_strongly_stable(M(R, (2, 0, 0), (1, 1, 0), (0, 2, 0)))
    assert not is_strongly_stable(M(R, (0, 1, 0)))
    # per-block condition in a product ring
    R2 = BlockRing((2, 2))
    assert is_strongly_stable(M(R2, (1, 0, 1, 0)))
    assert not is_strongly_stable(M(R2, (1, 0, 0, 1)))


def test_borel_fixed_char_dependence():
    # (x2^2, x1^2) with the exchange x2^2 -> x1x2 missing: Borel-fixed in
    # characteristic 2 (binomial 2 choose 1 vanishes) but not strongly stable
    R = BlockRing((2,), characteristic=2)
    I = M(R, (0, 2), (2, 0))
    assert is_borel_fixed(I)
    assert not is_strongly_stable(I)
    assert not is_borel_fixed(I, char=32003)
    # strongly stable always implies Borel-fixed
    J = M(R, (0, 2), (1, 1), (2, 0))
    assert is_strongly_stable(J)
    assert is_borel_fixed(J)
    assert is_borel_fixed(J, char=32003)


def test_regularity_strongly_stable():
    R = BlockRing((3,))
    I = M(R, (2, 0, 0), (1, 1, 0), (0, 2, 0))
    assert regularity_strongly_stable(I) == 2
    J = M(R, (1, 0, 0))
    assert regularity_strongly_stable(J) == 1
    with pytest.raises(HypothesisNotSatisfiedError):
        regularity_strongly_stable(M(R, (0, 1, 0)))
    with pytest.raises(HypothesisNotSatisfiedError):
        regularity_strongly_stable(M(R))


def test_alexander_dual_frozen_pair():
    # in K[x,y] with two singleton blocks: dual of (xy) is (x) cap (y)'s
    # transversal ideal (x, y), and dual of (x, y) is (xy)
    R = BlockRing((1, 1))
    I = M(R, (1, 1))
    D = alexander_dual(I)
    assert D.gens == ((0, 1), (1, 0))
    assert alexander_dual(D) == I


def test_alexander_dual_against_bruteforce():
    rng = random.Random(11)
    for _ in range(40):
        v = rng.randrange(1, 4)
        sizes = tuple(rng.randrange(1, 4) for _ in range(v))
        R = BlockRing(sizes)
        if R.nvars < 2:
            continue
        gens = []
        for _ in range(rng.randrange(1, 5)):
            e = [0] * R.nvars
            for var in rng.sample(range(R.nvars), rng.randrange(1, min(4, R.nvars + 1))):
                e[var] = 1
            gens.append(tuple(e))
        I = minimalize(R, gens)
        if I.is_zero or I.is_unit:
            continue
        D = alexander_dual(I)
        assert D == alexander_dual_bruteforce(I)
        assert alexander_dual(D) == I


def test_alexander_dual_errors():
    R = BlockRing((2,))
    with pytest.raises(NotSquarefreeError):
        alexander_dual(M(R, (2, 0)))
    with pytest.raises(HypothesisNotSatisfiedError):
        alexander_dual(M(R))
    with pytest.raises(HypothesisNotSatisfiedError):
        alexander_dual(M(R, (0, 0)))


def test_polarize_within_block():
    # (x1^2, x1x2) in a 3-variable block: the second occurrence of x1 takes
    # the free position 3, giving (x1x3, x1x2)
    R = BlockRing((3,))
    I = M(R, (2, 0, 0), (1, 1, 0))
    P = polarize(I)
    assert P.gens == ((1, 0, 1), (1, 1, 0))
    assert is_radical_monomial(P)


def test_polarize_capacity_error():
    R = BlockRing((2,))
    with pytest.raises(PolarizationCapacityError):
        polarize(M(R, (2, 0), (1, 1)))


def test_polarize_extended_from_first_variables():
    # (x11^2, x11*x21) over blocks (3, 2) polarizes to (x11x12, x11x21)
    R = BlockRing((3, 2))
    I = M(R, (2, 0, 0, 0, 0), (1, 0, 0, 1, 0))
    P = polarize(I)
    assert P.gens == ((1, 0, 0, 1, 0), (1, 1, 0, 0, 0))


def test_polarize_preserves_squarefree_input():
    R = BlockRing((2, 2))
    I = M(R, (1, 0, 1, 0), (0, 1, 0, 1))
    assert polarize(I) == I


def test_polarize_hilbert_consistency():
    # polarization preserves the numerator up to the degree identification:
    # here both blocks stay, so total-degree specializations agree
    R = BlockRing((4,))
    I = M(R, (2, 0, 0, 0), (1, 1, 0, 0))
    P = polarize(I)
    nI = hilbert_numerator(I)
    nP = hilbert_numerator(P)
    # same total-degree generating function: compare coefficient sums by degree
    def by_total(num):
        out = {}
        for a, c in num.coeffs.items():
            out[sum(a)] = out.get(sum(a), 0) + c
        return {k: v for k, v in out.items() if v}
    assert by_total(nI) == by_total(nP)


def test_hilbert_numerator_frozen():
    # leads of (x11x22 - x12x21, x13x21) under the default order:
    # numerator 1 - 2 y1 y2 + y1^2 y2^2
    R = BlockRing((3, 3))
    x = R.var_index
    gens = []
    e = [0] * 6
    e[x(1, 2)] = 1
    e[x(2, 1)] = 1
    gens.append(tuple(e))
    e = [0] * 6
    e[x(1, 3)] = 1
    e[x(2, 1)] = 1
    gens.append(tuple(e))
    e = [0] * 6
    e[x(1, 1)] = 1
    e[x(1, 3)] = 1
    e[x(2, 2)] = 1
    gens.append(tuple(e))
    num = hilbert_numerator(M(R, *gens))
    assert num.coeffs == {(0, 0): 1, (1, 1): -2, (2, 2): 1}


def test_hilbert_numerator_against_inclusion_exclusion():
    rng = random.Random(23)
    for _ in range(40):
        v = rng.randrange(1, 4)
        sizes = tuple(rng.randrange(1, 4) for _ in range(v))
        R = BlockRing(sizes)
        gens = [tuple(rng.randrange(3) for _ in range(R.nvars))
                for _ in range(rng.randrange(0, 5))]
        gens = [g for g in gens if any(g)]
        I = minimalize(R, gens)
        assert hilbert_numerator(I) == hilbert_numerator_inclusion_exclusion(I)


def test_numerator_counts_standard_monomials():
    rng = random.Random(31)
    for _ in range(15):
        R = BlockRing((2, 2))
        gens = [tuple(rng.randrange(3) for _ in range(4))
                for _ in range(rng.randrange(1, 4))]
        gens = [g for g in gens if any(g)]
        I = minimalize(R, gens)
        num = hilbert_numerator(I)
        for a in ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)):
            assert quotient_dimension_from_numerator(num, R, a) == \
                graded_dimension(I, a)


def test_ambient_dimension():
    R = BlockRing((2, 3))
    assert ambient_dimension(R, (0, 0)) == 1
    assert ambient_dimension(R, (1, 0)) == 2
    assert ambient_dimension(R, (1, 1)) == 6
    assert ambient_dimension(R, (2, 2)) == 18
    assert ambient_dimension(R, (-1, 0)) == 0


def test_numerator_of_zero_and_principal():
    R = BlockRing((2, 2))
    assert hilbert_numerator(M(R)) == HilbertNumerator.one(2)
    num = hilbert_numerator(M(R, (1, 0, 1, 0)))
    assert num.coeffs == {(0, 0): 1, (1, 1): -1}
