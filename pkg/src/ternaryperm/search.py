"""Backtracking search for ternary permutations, with forced-move pruning.

The defining conditions leave little freedom: once positions j - 1 and j
are chosen for an even j, the word at j + 1 must be their XOR.  The open
choices are position 1 and the even positions, 2**(n-1) slots in all; the
search branches only there and fills each forced follower immediately.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Optional

from ._version import VERSION
from .sequences import TernarySequence, verify
from .words import Word, total_xor

#: Exhaustive search stays desk-scale up to here; raise at your own risk.
MAX_SEARCH_DIM = 6

#: Applied in first mode at dimensions 5 and 6 when no budget is given.
DEFAULT_FIRST_MODE_BUDGET = 10**9


class SearchMode(Enum):
    FIRST = "first"
    COUNT = "count"
    PROVE_NONE = "prove_none"


class BudgetExhaustedError(Exception):
    """The node budget ran out before the search reached a conclusive answer."""

    def __init__(self, nodes_explored: int):
        super().__init__(f"node budget exhausted after {nodes_explored} nodes")
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class SearchConfig:
    """What to search for and how hard to try.

    count and prove_none answers require exhaustive traversal, so hitting
    the node budget in those modes raises rather than returning a guess.
    """

    dim: int
    mode: SearchMode = SearchMode.FIRST
    symmetry_reduction: bool = False
    node_budget: Optional[int] = None

    def __post_init__(self) -> None:
        if not isinstance(self.mode, SearchMode):
            object.__setattr__(self, "mode", SearchMode(self.mode))
        if not 2 <= self.dim <= MAX_SEARCH_DIM:
            raise ValueError(f"search dimension must be in [2, {MAX_SEARCH_DIM}], got {self.dim}")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError(f"node budget must be positive, got {self.node_budget}")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search run.

    nodes_explored counts candidate assignments attempted at open slots,
    including ones whose forced follower immediately collided; candidates
    skipped because their word was already in use are not assignments.
    Fields other than the one matching the mode stay None.
    """

    dim: int
    mode: SearchMode
    symmetry_reduction: bool
    nodes_explored: int
    sequence: Optional[TernarySequence] = None
    count: Optional[int] = None
    nonexistent: Optional[bool] = None


def canonical_prefix(dim: int) -> tuple[Word, Word]:
    """The fixed opening pair (decimal 1, decimal 2) used under symmetry reduction.

    Pinning the first two entries loses no generality for existence
    questions.  The defining conditions are XOR equations, so any
    invertible linear map of GF(2)^n carries ternary permutations to
    ternary permutations; the first two entries of any candidate are
    distinct and nonzero, hence linearly independent, and some invertible
    map takes them to this pair.  Solution counts are another matter:
    a reduced count covers only sequences opening with (1, 2) and is
    reported as such, never scaled up.
    """
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    return Word(1, dim), Word(2, dim)


def _free_positions(dim: int) -> list[int]:
    size = (1 << dim) - 1
    return [1] + list(range(2, size, 2))


def _apply_prefix(dim: int, prefix: tuple[int, ...]):
    """Fill the leading open slots with fixed values, forced moves included.

    Returns (seq, used) on success, where seq is 1-based position storage
    and used is a bitmask over word values, or None if the prefix is
    inconsistent (a repeated word, or a forced follower already taken).
    """
    size = (1 << dim) - 1
    free = _free_positions(dim)
    if len(prefix) > len(free):
        raise ValueError(f"prefix longer than the {len(free)} open slots")
    seq = [0] * (size + 1)
    used = 0
    for slot, w in enumerate(prefix):
        if not 1 <= w <= size:
            raise ValueError(f"prefix value {w} out of range [1, {size}]")
        m = 1 << w
        if used & m:
            return None
        p = free[slot]
        if p & 1:
            seq[p] = w
            used |= m
            continue
        f = seq[p - 1] ^ w  # nonzero: seq[p - 1] is a different used word
        fm = 1 << f
        if used & fm:
            return None
        seq[p] = w
        seq[p + 1] = f
        used |= m | fm
    return seq, used


def _explore(
    dim: int,
    mode: SearchMode,
    prefix: tuple[int, ...] = (),
    node_budget: Optional[int] = None,
):
    """Depth-first scan of every ternary permutation extending `prefix`.

    prefix fixes the values of the leading open slots and costs no nodes.
    Candidates at each open slot run in ascending decimal order, so with
    an empty prefix the first full assignment found is the smallest
    solution in decimal-tuple order.  Stops at the first solution except
    in count mode.  Returns (first solution as decimals or None,
    solution count so far, nodes).
    """
    size = (1 << dim) - 1
    free = _free_positions(dim)
    n_free = len(free)
    applied = _apply_prefix(dim, prefix)
    if applied is None:
        return None, 0, 0
    seq, used = applied
    start = len(prefix)
    if start == n_free:
        # the prefix and its forced moves already fill every position
        return tuple(seq[1:]), 1, 0

    nodes = 0
    count = 0
    first: Optional[tuple[int, ...]] = None
    nxt = [1] * n_free  # next candidate value to try at each slot
    und = [0] * n_free  # used-bits to clear when a slot's assignment is undone
    d = start
    while d >= start:
        w = nxt[d]
        placed = 0
        p = free[d]
        while w <= size:
            m = 1 << w
            if not used & m:
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    raise BudgetExhaustedError(nodes)
                if p & 1:
                    seq[p] = w
                    used |= m
                    placed = m
                    break
                f = seq[p - 1] ^ w
                fm = 1 << f
                if not used & fm:
                    seq[p] = w
                    seq[p + 1] = f
                    used |= m | fm
                    placed = m | fm
                    break
            w += 1
        if not placed:
            nxt[d] = 1
            d -= 1
            if d >= start:
                used &= ~und[d]
            continue
        nxt[d] = w + 1
        und[d] = placed
        if d + 1 == n_free:
            count += 1
            if first is None:
                first = tuple(seq[1:])
            if mode is not SearchMode.COUNT:
                break
            used &= ~und[d]
            continue
        d += 1
    return first, count, nodes


def search(config: SearchConfig) -> SearchOutcome:
    """Run the configured search to completion (or budget exhaustion).

    Mode semantics: first returns the smallest solution in candidate
    order, or none after exhausting the space; count returns the exact
    number of solutions found (of the reduced space when reduction is
    on); prove_none reports True only after a full traversal finds
    nothing, and short-circuits to False on the first solution.
    """
    prefix: tuple[int, ...] = ()
    if config.symmetry_reduction:
        a, b = canonical_prefix(config.dim)
        prefix = (a.bits, b.bits)
    budget = config.node_budget
    if budget is None and config.mode is SearchMode.FIRST and config.dim >= 5:
        budget = DEFAULT_FIRST_MODE_BUDGET
    first, count, nodes = _explore(config.dim, config.mode, prefix, budget)

    sequence = None
    out_count = None
    nonexistent = None
    if config.mode is SearchMode.FIRST:
        if first is not None:
            sequence = TernarySequence.from_decimals(config.dim, first)
            report = verify(sequence)
            if not report.valid:  # search kernel regression; cannot happen otherwise
                raise RuntimeError(f"search returned an invalid sequence: {report.failure}")
    elif config.mode is SearchMode.COUNT:
        out_count = count
    else:
        nonexistent = count == 0
    return SearchOutcome(
        dim=config.dim,
        mode=config.mode,
        symmetry_reduction=config.symmetry_reduction,
        nodes_explored=nodes,
        sequence=sequence,
        count=out_count,
        nonexistent=nonexistent,
    )


def _subtree_task(args: tuple[int, str, tuple[int, ...]]) -> tuple[int, int]:
    dim, mode_value, prefix = args
    _, count, nodes = _explore(dim, SearchMode(mode_value), prefix)
    return count, nodes


def search_parallel(config: SearchConfig, workers: int) -> SearchOutcome:
    """Split the first open slot's candidates across worker processes.

    Only count and prove_none run here: their per-subtree results merge
    by plain addition, so completion order does not matter.  first mode
    stays sequential to keep its smallest-solution guarantee.  Node
    totals match the sequential search exactly, except that prove_none
    workers cannot short-circuit each other, so when solutions exist the
    parallel total may be higher.
    """
    if config.mode is SearchMode.FIRST:
        raise ValueError("first mode is sequential; use search()")
    if config.node_budget is not None:
        raise ValueError("node budgets do not split across workers; run sequentially")
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    base: tuple[int, ...] = ()
    if config.symmetry_reduction:
        a, b = canonical_prefix(config.dim)
        base = (a.bits, b.bits)
    size = (1 << config.dim) - 1
    applied = _apply_prefix(config.dim, base)
    if applied is None:  # unreachable for the fixed (1, 2) prefix
        raise RuntimeError("reduction prefix is inconsistent")
    _, used = applied
    candidates = [c for c in range(1, size + 1) if not (used >> c) & 1]
    tasks = [(config.dim, config.mode.value, base + (c,)) for c in candidates]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        results = list(pool.map(_subtree_task, tasks))
    count = sum(c for c, _ in results)
    # each split candidate is itself one attempted assignment
    nodes = len(tasks) + sum(n for _, n in results)
    return SearchOutcome(
        dim=config.dim,
        mode=config.mode,
        symmetry_reduction=config.symmetry_reduction,
        nodes_explored=nodes,
        count=count if config.mode is SearchMode.COUNT else None,
        nonexistent=(count == 0) if config.mode is SearchMode.PROVE_NONE else None,
    )


def _explore_ordered(
    dim: int,
    prefix: tuple[int, ...],
    orders: list[list[int]],
    node_budget: int,
):
    """First-solution scan with a fixed candidate order per open slot.

    Same tree as _explore, different visiting order.  Used by the seeded
    discovery path; exhaustive modes stay with the ascending kernel.
    Returns (solution decimals or None, nodes).
    """
    size = (1 << dim) - 1
    free = _free_positions(dim)
    n_free = len(free)
    applied = _apply_prefix(dim, prefix)
    if applied is None:
        return None, 0
    seq, used = applied
    start = len(prefix)
    if start == n_free:
        return tuple(seq[1:]), 0

    nodes = 0
    idx = [0] * n_free
    und = [0] * n_free
    d = start
    while d >= start:
        p = free[d]
        order = orders[d - start]
        placed = 0
        while idx[d] < size:
            w = order[idx[d]]
            idx[d] += 1
            m = 1 << w
            if used & m:
                continue
            nodes += 1
            if nodes > node_budget:
                return None, nodes
            if p & 1:
                seq[p] = w
                used |= m
                placed = m
                break
            f = seq[p - 1] ^ w
            fm = 1 << f
            if used & fm:
                continue
            seq[p] = w
            seq[p + 1] = f
            used |= m | fm
            placed = m | fm
            break
        if not placed:
            idx[d] = 0
            d -= 1
            if d >= start:
                used &= ~und[d]
            continue
        und[d] = placed
        if d + 1 == n_free:
            return tuple(seq[1:]), nodes
        d += 1
    return None, nodes


def search_randomized(
    dim: int,
    seed: int = 0,
    symmetry_reduction: bool = True,
    attempts: int = 64,
    attempt_budget: int = 2_000_000,
) -> SearchOutcome:
    """Find some ternary permutation quickly via seeded random candidate order.

    Ascending order pays for its smallest-solution guarantee: at dimension
    6 the first solution in that order sits beyond any practical budget
    (an optimized native mirror of the kernel passed 10**11 nodes without
    reaching it).  Solutions themselves are plentiful, so visiting
    candidates in a seeded shuffled order finds one within a few hundred
    thousand nodes.  Deterministic for a fixed seed: attempt i shuffles
    with seed + i, so reruns are bit-identical.  Raises
    BudgetExhaustedError only after every attempt runs out.
    """
    if not 2 <= dim <= MAX_SEARCH_DIM:
        raise ValueError(f"search dimension must be in [2, {MAX_SEARCH_DIM}], got {dim}")
    if attempts < 1 or attempt_budget < 1:
        raise ValueError("attempts and attempt_budget must be positive")
    prefix: tuple[int, ...] = ()
    if symmetry_reduction:
        a, b = canonical_prefix(dim)
        prefix = (a.bits, b.bits)
    size = (1 << dim) - 1
    n_open = len(_free_positions(dim)) - len(prefix)
    total_nodes = 0
    for attempt in range(attempts):
        rng = random.Random(seed + attempt)
        orders = [rng.sample(range(1, size + 1), size) for _ in range(n_open)]
        first, nodes = _explore_ordered(dim, prefix, orders, attempt_budget)
        total_nodes += nodes
        if first is not None:
            sequence = TernarySequence.from_decimals(dim, first)
            report = verify(sequence)
            if not report.valid:  # kernel regression; cannot happen otherwise
                raise RuntimeError(f"search returned an invalid sequence: {report.failure}")
            return SearchOutcome(
                dim=dim,
                mode=SearchMode.FIRST,
                symmetry_reduction=symmetry_reduction,
                nodes_explored=total_nodes,
                sequence=sequence,
            )
    raise BudgetExhaustedError(total_nodes)


def naive_count(dim: int) -> int:
    """Count solutions by filtering every permutation of the nonzero words.

    No pruning and no shared code with the search kernel, which is the
    point: this is the independent cross-check.  Feasible for dim <= 3
    (at most 7! candidates).
    """
    if not 2 <= dim <= 3:
        raise ValueError(f"naive filtering is feasible for dimensions 2 and 3, got {dim}")
    size = (1 << dim) - 1
    total = 0
    for perm in permutations(range(1, size + 1)):
        for i in range(2, size, 2):
            if perm[i - 2] ^ perm[i - 1] ^ perm[i]:
                break
        else:
            total += 1
    return total


def lemma_n3() -> bool:
    """XOR of all seven nonzero 3-bit words is zero.

    This is the counting fact behind the dimension-3 impossibility: the
    whole sequence XORs to zero, so if both outer triples vanished the
    middle word would have to be zero, which no entry is.
    """
    return total_xor(3).is_zero


@dataclass(frozen=True)
class ImpossibilityCertificate:
    """Record of an exhaustive nonexistence run, printable as key=value lines."""

    dim: int
    nonexistent: bool
    symmetry_reduction: bool
    nodes_explored: int
    cross_check_unreduced_nodes: Optional[int] = None
    total_xor_zero: Optional[bool] = None
    verifier_version: str = VERSION

    def to_text(self) -> str:
        def flag(value: bool) -> str:
            return "true" if value else "false"

        lines = [
            f"dim={self.dim}",
            f"nonexistent={flag(self.nonexistent)}",
            f"symmetry_reduction={flag(self.symmetry_reduction)}",
            f"nodes_explored={self.nodes_explored}",
        ]
        if self.cross_check_unreduced_nodes is not None:
            lines.append(f"cross_check_unreduced_nodes={self.cross_check_unreduced_nodes}")
        if self.total_xor_zero is not None:
            lines.append(f"total_xor_zero={flag(self.total_xor_zero)}")
        lines.append(f"verifier_version={self.verifier_version}")
        return "\n".join(lines) + "\n"


def prove_impossibility(dim: int) -> ImpossibilityCertificate:
    """Exhaustively confirm that no ternary permutation exists at dim 3 or 4.

    Runs the reduced search to completion; at dimension 3, where the
    space is tiny, an unreduced traversal and the XOR-sum lemma are run
    as cross-checks and recorded in the certificate.
    """
    if dim not in (3, 4):
        raise ValueError(f"exhaustive impossibility runs cover dimensions 3 and 4, got {dim}")
    reduced = search(SearchConfig(dim=dim, mode=SearchMode.PROVE_NONE, symmetry_reduction=True))
    cross_nodes = None
    lemma = None
    if dim == 3:
        unreduced = search(SearchConfig(dim=dim, mode=SearchMode.PROVE_NONE))
        if unreduced.nonexistent != reduced.nonexistent:  # soundness tripwire
            raise RuntimeError("reduced and unreduced searches disagree")
        cross_nodes = unreduced.nodes_explored
        lemma = lemma_n3()
    return ImpossibilityCertificate(
        dim=dim,
        nonexistent=bool(reduced.nonexistent),
        symmetry_reduction=True,
        nodes_explored=reduced.nodes_explored,
        cross_check_unreduced_nodes=cross_nodes,
        total_xor_zero=lemma,
    )
