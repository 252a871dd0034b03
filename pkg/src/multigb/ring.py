"""Block-graded polynomial rings, multidegrees and term orders.

A ring has ``v`` blocks of variables; the variable ``x[i,j]`` (block ``i``,
position ``j``, both 1-based) carries multidegree ``e_i``.  Monomials are
plain tuples of exponents over the flat variable list, ordered block 1
first, and within each block by position.  Term orders are represented by
integer matrices: monomials compare by the lexicographic order of their
matrix-vector products, which covers lex, degrevlex, weight orders and
elimination orders uniformly.

The standing convention is that within each block ``x[i,j] > x[i,k]`` for
``j < k``; orders violating it are allowed but flagged unrestricted and are
only used where the theory does not need the convention (universal Groebner
sampling, elimination internals).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from multigb.errors import RingMismatchError

DEFAULT_CHARACTERISTIC = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- exponent-vector helpers -------------------------------------------------

def exp_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def exp_divides(a: tuple, b: tuple) -> bool:
    """True when monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def exp_div(a: tuple, b: tuple) -> tuple:
    """Exact quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def total_degree(a: tuple) -> int:
    return sum(a)


class BlockRing:
    """A polynomial ring over F_p with a block grading."""

    __slots__ = ("block_sizes", "characteristic", "v", "nvars", "_block_of",
                 "_var_pairs", "__dict__")

    def __init__(self, block_sizes: Sequence[int], characteristic: int = DEFAULT_CHARACTERISTIC):
        sizes = tuple(int(n) for n in block_sizes)
        if not sizes or any(n < 1 for n in sizes):
            raise ValueError("need at least one block, every block nonempty")
        if not _is_prime(characteristic):
            raise ValueError(f"characteristic must be prime, got {characteristic}")
        self.block_sizes = sizes
        self.characteristic = characteristic
        self.v = len(sizes)
        self.nvars = sum(sizes)
        block_of = []
        pairs = []
        for i, n in enumerate(sizes):
            for j in range(n):
                block_of.append(i)
                pairs.append((i + 1, j + 1))
        self._block_of = tuple(block_of)
        self._var_pairs = tuple(pairs)

    def __eq__(self, other):
        return (isinstance(other, BlockRing)
                and self.block_sizes == other.block_sizes
                and self.characteristic == other.characteristic)

    def __hash__(self):
        return hash((self.block_sizes, self.characteristic))

    def __repr__(self):
        return f"BlockRing(blocks={list(self.block_sizes)}, char={self.characteristic})"

    def block_of(self, var: int) -> int:
        """0-based block index of a flat variable index."""
        return self._block_of[var]

    def var_index(self, block: int, pos: int) -> int:
        """Flat index of ``x[block,pos]`` (both 1-based)."""
        if not 1 <= block <= self.v:
            raise RingMismatchError(f"block {block} out of range 1..{self.v}")
        if not 1 <= pos <= self.block_sizes[block - 1]:
            raise RingMismatchError(
                f"position {pos} out of range 1..{self.block_sizes[block - 1]} in block {block}")
        return sum(self.block_sizes[:block - 1]) + pos - 1

    def var_pair(self, var: int) -> tuple:
        """(block, pos), 1-based, of a flat variable index."""
        return self._var_pairs[var]

    def var_label(self, var: int) -> str:
        i, j = self._var_pairs[var]
        return f"x[{i},{j}]"

    def block_vars(self, block: int) -> range:
        """Flat indices of the variables in a 1-based block."""
        start = sum(self.block_sizes[:block - 1])
        return range(start, start + self.block_sizes[block - 1])

    def unit_exp(self, var: int, power: int = 1) -> tuple:
        e = [0] * self.nvars
        e[var] = power
        return tuple(e)

    def multidegree(self, exp: tuple) -> tuple:
        """Blockwise degree vector of an exponent tuple."""
        if len(exp) != self.nvars:
            raise RingMismatchError("exponent length does not match ring")
        deg = [0] * self.v
        for var, e in enumerate(exp):
            deg[self._block_of[var]] += e
        return tuple(deg)

    def unit_degree(self, block: int) -> tuple:
        """The multidegree e_block (1-based block)."""
        if not 1 <= block <= self.v:
            raise RingMismatchError(f"block {block} out of range 1..{self.v}")
        deg = [0] * self.v
        deg[block - 1] = 1
        return tuple(deg)

    @cached_property
    def storage_order(self) -> "TermOrder":
        """Canonical order used to store polynomial term lists."""
        return degrevlex(self)

    def variable(self, block: int, pos: int):
        from multigb.poly import Polynomial
        return Polynomial.variable(self, block, pos)

    def monomials_of_multidegree(self, degree: Sequence[int]) -> Iterable[tuple]:
        """All exponent tuples with the given multidegree."""
        if len(degree) != self.v:
            raise RingMismatchError("degree length does not match block count")

        def compositions(total, parts):
            if parts == 1:
                yield (total,)
                return
            for first in range(total + 1):
                for rest in compositions(total - first, parts - 1):
                    yield (first,) + rest

        def rec(block):
            if block == self.v:
                yield ()
                return
            for tail in rec(block + 1):
                for head in compositions(degree[block], self.block_sizes[block]):
                    yield head + tail

        for exp in rec(0):
            yield exp


def multidegree_of(exp: tuple, ring: BlockRing) -> tuple:
    return ring.multidegree(exp)


# -- term orders --------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """A term order given by an integer matrix (rows compared in turn)."""

    name: str
    rows: tuple

    @property
    def nvars(self) -> int:
        return len(self.rows[0])

    def key(self, exp: tuple) -> tuple:
        return tuple(sum(r * e for r, e in zip(row, exp)) for row in self.rows)

    def compare(self, a: tuple, b: tuple) -> int:
        """1 if a > b, -1 if a < b, 0 if equal."""
        if len(a) != self.nvars or len(b) != self.nvars:
            raise RingMismatchError("exponent length does not match order")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def respects_block_convention(self, ring: BlockRing) -> bool:
        """True when x[i,j] > x[i,k] for j < k within every block."""
        for block in range(1, ring.v + 1):
            vars_ = list(ring.block_vars(block))
            for a, b in zip(vars_, vars_[1:]):
                if self.compare(ring.unit_exp(a), ring.unit_exp(b)) <= 0:
                    return False
        return True

    def __str__(self):
        return self.name


def _natural_priority(n: int, priority=None) -> tuple:
    if priority is None:
        return tuple(range(n))
    priority = tuple(priority)
    if sorted(priority) != list(range(n)):
        raise ValueError("priority must be a permutation of the variable indices")
    return priority


def lex(ring_or_n, priority=None) -> TermOrder:
    """Lexicographic order; ``priority`` lists variables most significant first."""
    n = ring_or_n.nvars if isinstance(ring_or_n, BlockRing) else int(ring_or_n)
    prio = _natural_priority(n, priority)
    rows = tuple(tuple(1 if k == v else 0 for k in range(n)) for v in prio)
    name = "lex" if priority is None else f"lex{list(prio)}"
    return TermOrder(name, rows)


def degrevlex(ring_or_n, priority=None) -> TermOrder:
    """Degree reverse lexicographic order with an optional variable priority."""
    n = ring_or_n.nvars if isinstance(ring_or_n, BlockRing) else int(ring_or_n)
    prio = _natural_priority(n, priority)
    rows = [tuple([1] * n)]
    for v in reversed(prio[1:]):
        rows.append(tuple(-1 if k == v else 0 for k in range(n)))
    name = "degrevlex" if priority is None else f"degrevlex{list(prio)}"
    return TermOrder(name, tuple(rows))


def degrevlex_blocks_reversed(ring: BlockRing) -> TermOrder:
    """Degrevlex with the blocks visited last-to-first; still respects the
    within-block convention."""
    prio = []
    for block in range(ring.v, 0, -1):
        prio.extend(ring.block_vars(block))
    order = degrevlex(ring, tuple(prio))
    return TermOrder("degrevlex[blocks reversed]", order.rows)


def weight_order(ring_or_n, weights: Sequence[int], tie: TermOrder | None = None,
                 name: str | None = None) -> TermOrder:
    """Weight vector order with a tie-breaking term order (degrevlex default)."""
    n = ring_or_n.nvars if isinstance(ring_or_n, BlockRing) else int(ring_or_n)
    w = tuple(int(x) for x in weights)
    if len(w) != n:
        raise ValueError("weight vector length does not match variable count")
    if any(x <= 0 for x in w):
        raise ValueError("weights must be positive")
    tie = tie if tie is not None else degrevlex(n)
    label = name if name is not None else f"weight{list(w)}+{tie.name}"
    return TermOrder(label, (w,) + tie.rows)


def elimination_order(n: int, front: Iterable[int], inner: TermOrder | None = None) -> TermOrder:
    """Order eliminating the ``front`` variables (any monomial touching them
    beats any monomial that does not)."""
    front = frozenset(front)
    if not front:
        raise ValueError("front variable set is empty")
    inner = inner if inner is not None else degrevlex(n)
    indicator = tuple(1 if k in front else 0 for k in range(n))
    return TermOrder(f"elim{sorted(front)}+{inner.name}", (indicator,) + inner.rows)


def compare_monomials(order: TermOrder, a: tuple, b: tuple) -> int:
    """Three-way monomial comparison under a term order."""
    return order.compare(a, b)
