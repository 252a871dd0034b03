"""Multigraded generic initial ideals via random Borel coordinate changes.

A Borel element is one upper-triangular invertible matrix per block.  It
acts by sending each variable into the span of the earlier-or-equal
variables of its block, so lead terms drift toward the first variable,
matching the convention that x[i,1] is the largest variable of block i.
The gin is computed as in(b(I)) for several random b; agreement across
trials is the (probabilistic) genericity certificate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from multigb.errors import InconclusiveError, InternalConsistencyError
from multigb.groebner import Ideal
from multigb.monomials import MonomialIdeal, is_borel_fixed
from multigb.poly import Polynomial
from multigb.ring import BlockRing, TermOrder

SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class BorelElement:
    """Per block, an upper-triangular invertible matrix over F_p.

    ``blocks[i][k][j]`` (0-based, k <= j) is the coefficient of x[i+1,k+1]
    in the image of x[i+1,j+1].
    """
    ring: BlockRing
    blocks: tuple

    def is_identity(self) -> bool:
        for mat in self.blocks:
            for k, row in enumerate(mat):
                for j, c in enumerate(row):
                    if c != (1 if k == j else 0):
                        return False
        return True


def identity_borel(ring: BlockRing) -> BorelElement:
    blocks = tuple(
        tuple(tuple(1 if k == j else 0 for j in range(n)) for k in range(n))
        for n in ring.block_sizes)
    return BorelElement(ring, blocks)


def random_borel(ring: BlockRing, seed: int) -> BorelElement:
    """Deterministic-per-seed Borel element: diagonal uniform in F_p minus
    zero, strictly-upper entries uniform in F_p."""
    rng = random.Random(seed)
    p = ring.characteristic
    blocks = []
    for n in ring.block_sizes:
        mat = [[0] * n for _ in range(n)]
        for k in range(n):
            for j in range(k, n):
                mat[k][j] = rng.randrange(1, p) if k == j else rng.randrange(p)
        blocks.append(tuple(tuple(row) for row in mat))
    return BorelElement(ring, tuple(blocks))


def _variable_images(g: BorelElement) -> dict:
    ring = g.ring
    images = {}
    for block in range(1, ring.v + 1):
        mat = g.blocks[block - 1]
        n = ring.block_sizes[block - 1]
        for j in range(1, n + 1):
            terms = []
            for k in range(1, j + 1):
                c = mat[k - 1][j - 1]
                if c:
                    terms.append((ring.unit_exp(ring.var_index(block, k)), c))
            images[ring.var_index(block, j)] = Polynomial(ring, terms)
    return images


def apply_change_poly(g: BorelElement, f: Polynomial) -> Polynomial:
    return f.substitute(_variable_images(g))


def apply_change(g: BorelElement, I: Ideal) -> Ideal:
    images = _variable_images(g)
    return Ideal(I.ring, [f.substitute(images) for f in I.gens], I.limits)


@dataclass
class GinReport:
    """Outcome of a randomized gin computation."""
    result: MonomialIdeal | None
    candidates: list
    trials: int
    agreement: bool
    seeds: list
    order: TermOrder

    def require(self) -> MonomialIdeal:
        if not self.agreement or self.result is None:
            raise InconclusiveError(
                f"gin trials disagreed under {self.order} (seeds {self.seeds})")
        return self.result


def gin(I: Ideal, order: TermOrder | None = None, trials: int = 3,
        seed: int = 0) -> GinReport:
    """in(b(I)) over ``trials`` random Borel elements; agreement required for
    a definitive result.  An agreeing result must be Borel fixed."""
    ring = I.ring
    order = order or ring.storage_order
    if not order.respects_block_convention(ring):
        raise ValueError(
            "gin needs an order with x[i,j] > x[i,k] for j < k in every block")
    seeds = [seed * SEED_STRIDE + k for k in range(trials)]
    candidates = []
    for s in seeds:
        moved = apply_change(random_borel(ring, s), I)
        candidates.append(moved.initial_ideal(order))
    agreement = all(c == candidates[0] for c in candidates[1:])
    result = candidates[0] if agreement else None
    if agreement and not is_borel_fixed(result):
        raise InternalConsistencyError(
            "agreeing gin candidate is not Borel fixed; the randomness was "
            "degenerate or the engine is wrong")
    return GinReport(result=result, candidates=candidates, trials=trials,
                     agreement=agreement, seeds=seeds, order=order)


def gin_order_independence(I: Ideal, orders: Sequence[TermOrder],
                           trials: int = 3, seed: int = 0) -> tuple:
    """(True, None) when the gin agrees across all orders, else a witness
    (order_a, order_b, gin_a, gin_b)."""
    reports = []
    for k, o in enumerate(orders):
        rep = gin(I, o, trials=trials, seed=seed + 7 * k + 1)
        reports.append((o, rep.require()))
    first_order, first = reports[0]
    for o, res in reports[1:]:
        if res != first:
            return False, (first_order, o, first, res)
    return True, None
