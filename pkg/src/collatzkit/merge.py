"""How the odd chains of N, 2N+1, and 4N+3 run in lockstep and merge.

For odd N put n_0 = N, m_0 = 2N + 1, l_0 = 4N + 3 and let n_i, m_i, l_i be
their odd chains.  Up to the first n-step whose valuation k exceeds 1 (at
index r) the chains satisfy m_i = 2 n_i + 1 and l_i = 2 m_i + 1; one step
past it m_{r+1} = 2**k n_{r+1} + 1, and the m chain takes its own k > 1
step one index later (valuation j).  When k == 2 the m chain collapses
onto the n chain from index r + 2 on; when k > 2 it is the l chain that
collapses onto m from index r + 3 on, with l_{r+2} = 4 m_{r+2} + 1.

The index r always equals the tail length of N, which is how the merge
point can be predicted from the binary form alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import next_odd, tail_info
from .reporting import RelationCheck

DEFAULT_WINDOW = 8


class MergeKind(Enum):
    M_MERGES_WITH_N = "m_merges_with_n"   # k == 2
    L_MERGES_WITH_M = "l_merges_with_m"   # k > 2


class StepLimitExceededError(RuntimeError):
    """No valuation > 1 found within max_steps (internal inconsistency)."""


@dataclass(frozen=True)
class MergeReport:
    start: int
    r: int
    k: int
    j: int
    merge_kind: MergeKind
    n_chain: tuple[int, ...]
    m_chain: tuple[int, ...]
    l_chain: tuple[int, ...]
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> tuple[RelationCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)


def _chain_with_valuations(start: int, steps: int) -> tuple[list[int], list[int]]:
    # Runs through the fixed point 1 -> 1 (valuation 2) instead of stopping,
    # so merged chains can be compared term by term inside the window.
    terms = [start]
    valuations = []
    current = start
    for _ in range(steps):
        current, k = next_odd(current)
        terms.append(current)
        valuations.append(k)
    return terms, valuations


def analyze_merge(start: int, max_steps: int | None = None,
                  window: int = DEFAULT_WINDOW) -> MergeReport:
    """Locate the merge index r for odd N = start and verify every relation.

    max_steps bounds the search for the first valuation > 1 on the n chain
    (default: tail_length(N) + 4, which always suffices); window is how
    many terms past the merge the collapsed chains are compared for.
    """
    tail = tail_info(start).tail_length
    if max_steps is None:
        max_steps = tail + 4

    current = start
    r = None
    k = 0
    for i in range(max_steps):
        current, val = next_odd(current)
        if val > 1:
            r, k = i, val
            break
    if r is None:
        raise StepLimitExceededError(
            f"no odd step of N = {start} had valuation > 1 within {max_steps} steps")

    length = r + window + 2
    n_chain, _ = _chain_with_valuations(start, length)
    m_chain, m_vals = _chain_with_valuations(2 * start + 1, length)
    l_chain, _ = _chain_with_valuations(4 * start + 3, length)
    j = m_vals[r + 1]

    checks: list[RelationCheck] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        checks.append(RelationCheck(name, passed, "" if passed else detail))

    bad = [i for i in range(r + 1) if m_chain[i] != 2 * n_chain[i] + 1]
    record("m_i = 2 n_i + 1 for i <= r", not bad, f"fails at i = {bad[:3]}")

    record("m_{r+1} = 2^k n_{r+1} + 1",
           m_chain[r + 1] == (1 << k) * n_chain[r + 1] + 1,
           f"m_{r + 1} = {m_chain[r + 1]}, 2^{k} n_{r + 1} + 1 = {(1 << k) * n_chain[r + 1] + 1}")

    bad = [i for i in range(r + 2) if l_chain[i] != 2 * m_chain[i] + 1]
    record("l_i = 2 m_i + 1 for i <= r+1", not bad, f"fails at i = {bad[:3]}")

    record("l_{r+2} = 2^j m_{r+2} + 1",
           l_chain[r + 2] == (1 << j) * m_chain[r + 2] + 1,
           f"l_{r + 2} = {l_chain[r + 2]}, 2^{j} m_{r + 2} + 1 = {(1 << j) * m_chain[r + 2] + 1}")

    # j > 1 is stated without proof; a j == 1 sighting is a finding, not an assumption.
    record("j > 1", j > 1, f"j = {j}")

    record("r = tail_length(N)", r == tail, f"r = {r}, tail_length = {tail}")

    if k == 2:
        kind = MergeKind.M_MERGES_WITH_N
        bad = [i for i in range(r + 2, r + 2 + window) if m_chain[i] != n_chain[i]]
        record("m_i = n_i for i > r+1", not bad, f"fails at i = {bad[:3]}")
    else:
        kind = MergeKind.L_MERGES_WITH_M
        record("l_{r+2} = 4 m_{r+2} + 1",
               l_chain[r + 2] == 4 * m_chain[r + 2] + 1,
               f"l_{r + 2} = {l_chain[r + 2]}, 4 m_{r + 2} + 1 = {4 * m_chain[r + 2] + 1}")
        bad = [i for i in range(r + 3, r + 2 + window) if l_chain[i] != m_chain[i]]
        record("l_i = m_i for i > r+2", not bad, f"fails at i = {bad[:3]}")

    return MergeReport(start=start, r=r, k=k, j=j, merge_kind=kind,
                       n_chain=tuple(n_chain), m_chain=tuple(m_chain),
                       l_chain=tuple(l_chain), checks=tuple(checks))
