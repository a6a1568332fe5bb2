"""Reverse Collatz sequences and the structure of their odd subsequences.

The full reverse sequence undoes raw steps: from r, go to (r - 1) / 3 when
that is a legal odd-step preimage (r even, r = 1 mod 3), else double.  It
never stops on its own; once the odd subsequence hits a multiple of 3 the
full sequence doubles forever.

On odd values the same dynamics collapses to one rule: for odd p not
divisible by 3 the smallest odd q with an odd-step image p is

    q = (2p - 1) / 3   when p = 2 mod 3,
    q = (4p - 1) / 3   when p = 1 mod 3,

and no odd predecessor exists when 3 divides p.  reverse_odd_chain
iterates that until a multiple of 3 (the only self-termination these
sequences have) or a step limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import v3, _check_odd, _check_positive
from .reporting import RelationCheck

DEFAULT_REVERSE_ODD_LIMIT = 10**5


class ReverseTermination(Enum):
    REACHED_MULTIPLE_OF_3 = "multiple_of_3"
    STEP_LIMIT = "step_limit"


@dataclass(frozen=True)
class ReverseTrace:
    start: int
    terms: tuple[int, ...]
    termination: ReverseTermination


@dataclass(frozen=True)
class ReverseOddChain:
    start: int
    terms: tuple[int, ...]
    termination: ReverseTermination


@dataclass(frozen=True)
class Pow3Decomposition:
    """value == 3**n * base + 1 with n >= 1 and base not divisible by 3."""

    value: int
    n: int
    base: int


@dataclass(frozen=True)
class Pow3LadderReport:
    """Outcome of checking the 3**n B + 1 ladder of a value = 1 mod 3."""

    start: int
    n: int
    base: int
    chain: tuple[int, ...]
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


@dataclass(frozen=True)
class UnwindStepReport:
    """Outcome of checking the single reverse step of a value = 2 mod 3."""

    start: int
    u: int
    r1: int
    t1: int | None
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def reverse_step(r: int) -> int:
    """One backward raw step: (r - 1) / 3 if r is even and 1 mod 3, else 2r."""
    _check_positive(r, "r")
    if r % 2 == 0 and r % 3 == 1:
        return (r - 1) // 3
    return 2 * r


def reverse_sequence(start: int, limit: int) -> ReverseTrace:
    """Iterate reverse_step exactly limit times; there is no earlier stop."""
    _check_positive(start, "start")
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    terms = [start]
    for _ in range(limit):
        terms.append(reverse_step(terms[-1]))
    return ReverseTrace(start=start, terms=tuple(terms),
                        termination=ReverseTermination.STEP_LIMIT)


def reverse_next_odd(p: int) -> int | None:
    """Smallest odd predecessor of odd p, or None when 3 divides p."""
    _check_odd(p, "p")
    residue = p % 3
    if residue == 0:
        return None
    if residue == 2:
        return (2 * p - 1) // 3
    return (4 * p - 1) // 3


def reverse_odd_chain(start: int, limit: int = DEFAULT_REVERSE_ODD_LIMIT) -> ReverseOddChain:
    """Iterate reverse_next_odd until a multiple of 3 or the step limit."""
    _check_odd(start, "start")
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    terms = [start]
    for _ in range(limit):
        nxt = reverse_next_odd(terms[-1])
        if nxt is None:
            break
        terms.append(nxt)
    if terms[-1] % 3 == 0:
        termination = ReverseTermination.REACHED_MULTIPLE_OF_3
    else:
        termination = ReverseTermination.STEP_LIMIT
    return ReverseOddChain(start=start, terms=tuple(terms), termination=termination)


def decompose_pow3(a: int) -> Pow3Decomposition:
    """Write odd a = 1 mod 3 (a > 1) as 3**n * B + 1 with 3 not dividing B."""
    _check_odd(a, "a")
    if a % 3 != 1 or a == 1:
        raise ValueError(f"a must be an odd number > 1 with a = 1 mod 3, got {a}")
    n = v3(a - 1)
    return Pow3Decomposition(value=a, n=n, base=(a - 1) // 3**n)


def verify_3n1_lemma(a: int) -> Pow3LadderReport:
    """Check the predecessor ladder of a = 3**n B + 1.

    The first n reverse-odd steps must give r_i = 4**i * 3**(n-i) * B + 1,
    all strictly increasing, 1 mod 3 before the top, and the top residue
    is decided by B: r_n = 2 mod 3 when B = 1 mod 3, 0 mod 3 when B = 2.
    """
    decomposition = decompose_pow3(a)
    n, base = decomposition.n, decomposition.base
    chain = [a]
    checks: list[RelationCheck] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        checks.append(RelationCheck(name, passed, "" if passed else detail))

    for i in range(1, n + 1):
        nxt = reverse_next_odd(chain[-1])
        if nxt is None:
            record("ladder reaches r_n", False,
                   f"r_{i - 1} = {chain[-1]} is a multiple of 3 before the top")
            break
        chain.append(nxt)

    if len(chain) == n + 1:
        record("ladder reaches r_n", True)
        bad = [i for i in range(n + 1) if chain[i] != 4**i * 3**(n - i) * base + 1]
        record("r_i = 4^i 3^(n-i) B + 1", not bad, f"fails at i = {bad[:3]}")
        bad = [i for i in range(n) if chain[i] % 3 != 1]
        record("r_i = 1 mod 3 for i < n", not bad, f"fails at i = {bad[:3]}")
        expected_top = 2 if base % 3 == 1 else 0
        record("top residue decided by B mod 3", chain[n] % 3 == expected_top,
               f"r_n = {chain[n]} is {chain[n] % 3} mod 3, expected {expected_top}")
        bad = [i for i in range(1, n + 1) if chain[i] <= chain[i - 1]]
        record("r_i > r_(i-1)", not bad, f"fails at i = {bad[:3]}")

    return Pow3LadderReport(start=a, n=n, base=base, chain=tuple(chain),
                            checks=tuple(checks))


def verify_unwind_lemma(a: int) -> UnwindStepReport:
    """Check the reverse step of odd a = 2 mod 3 against u = (a - 2) / 3.

    r_1 must equal 2u + 1 (hence r_1 < a), the residue of r_1 mod 3 is the
    image of u's under 0 -> 1, 1 -> 0, 2 -> 2, and when u = 2 mod 3 the
    reverse step of u itself is (r_1 - 2) / 3.
    """
    _check_odd(a, "a")
    if a % 3 != 2:
        raise ValueError(f"a must be 2 mod 3, got {a}")
    u = (a - 2) // 3
    r1 = reverse_next_odd(a)
    checks: list[RelationCheck] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        checks.append(RelationCheck(name, passed, "" if passed else detail))

    record("r_1 = 2u + 1", r1 == 2 * u + 1, f"r_1 = {r1}, 2u + 1 = {2 * u + 1}")
    expected = {0: 1, 1: 0, 2: 2}[u % 3]
    record("residue map u -> r_1", r1 % 3 == expected,
           f"u = {u % 3} mod 3 but r_1 = {r1 % 3} mod 3, expected {expected}")
    record("r_1 < r_0", r1 < a, f"r_1 = {r1} >= r_0 = {a}")

    t1 = None
    if u % 3 == 2:
        t1 = reverse_next_odd(u)
        record("t_1 = (r_1 - 2)/3", t1 == (r1 - 2) // 3 and (r1 - 2) % 3 == 0,
               f"t_1 = {t1}, (r_1 - 2)/3 = {(r1 - 2) / 3}")

    return UnwindStepReport(start=a, u=u, r1=r1, t1=t1, checks=tuple(checks))
