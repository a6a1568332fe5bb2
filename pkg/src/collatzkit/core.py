"""Forward Collatz dynamics: raw trajectories, accelerated odd chains,
binary tails, and jumps.

Everything here works on plain Python ints, which are arbitrary precision,
so values never overflow.  Iterations never assume a trajectory terminates:
each one takes an explicit step or term limit and records which way it
stopped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

DEFAULT_STEP_LIMIT = 10**6   # raw Collatz steps
DEFAULT_ODD_LIMIT = 10**5    # accelerated odd-chain terms


class Termination(Enum):
    """How an iteration stopped."""

    REACHED_ONE = "reached_one"
    STEP_LIMIT = "step_limit"


class TailDescentStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


def _check_positive(n: int, name: str) -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def _check_odd(n: int, name: str) -> None:
    _check_positive(n, name)
    if n % 2 == 0:
        raise ValueError(f"{name} must be odd, got {n}")


def v2(n: int) -> int:
    """2-adic valuation of n >= 1: the number of trailing zero bits."""
    if n < 1:
        raise ValueError(f"v2 needs n >= 1, got {n}")
    return (n & -n).bit_length() - 1


def v3(n: int) -> int:
    """3-adic valuation of n >= 1."""
    if n < 1:
        raise ValueError(f"v3 needs n >= 1, got {n}")
    count = 0
    while n % 3 == 0:
        n //= 3
        count += 1
    return count


@dataclass(frozen=True)
class CollatzTrace:
    """A raw trajectory, cut at the first 1 or at the step limit."""

    start: int
    terms: tuple[int, ...]
    termination: Termination
    steps: int


@dataclass(frozen=True)
class OddChain:
    """The odd-valued terms of a trajectory, one accelerated step apart.

    valuations[i] is the power of two divided out between terms[i] and
    terms[i+1], i.e. terms[i+1] * 2**valuations[i] == 3 * terms[i] + 1.
    """

    start: int
    terms: tuple[int, ...]
    valuations: tuple[int, ...]
    termination: Termination


@dataclass(frozen=True)
class TailInfo:
    """Binary decomposition of an odd number into head bits plus a tail.

    The tail is the maximal run of trailing one bits; with tail_length n
    the tail is 2**n + ... + 2 + 1, and every head exponent exceeds n + 1.
    """

    value: int
    tail_length: int
    head_exponents: tuple[int, ...]


@dataclass(frozen=True)
class JumpDescriptor:
    """value == 4**height * base + (4**height - 1) // 3 with base odd."""

    base: int
    height: int
    value: int


@dataclass(frozen=True)
class TailDescentReport:
    start: int
    tail_length: int
    chain: tuple[int, ...]
    tail_lengths: tuple[int, ...]
    status: TailDescentStatus
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is TailDescentStatus.PASS


def collatz_next(c: int) -> int:
    """One raw step: 3c + 1 for odd c, c // 2 for even c."""
    _check_positive(c, "c")
    return 3 * c + 1 if c % 2 else c // 2


def collatz_sequence(start: int, step_limit: int = DEFAULT_STEP_LIMIT) -> CollatzTrace:
    """Iterate collatz_next from start, stopping at the first 1.

    The trailing 4, 2, 1 cycle is never entered: a trajectory that reaches
    1 ends there.  If step_limit raw steps pass without reaching 1 the
    trace is cut and flagged STEP_LIMIT.
    """
    _check_positive(start, "start")
    if step_limit < 0:
        raise ValueError(f"step_limit must be >= 0, got {step_limit}")
    terms = [start]
    current = start
    while current != 1 and len(terms) <= step_limit:
        current = collatz_next(current)
        terms.append(current)
    termination = Termination.REACHED_ONE if current == 1 else Termination.STEP_LIMIT
    return CollatzTrace(start=start, terms=tuple(terms), termination=termination,
                        steps=len(terms) - 1)


def next_odd(a: int) -> tuple[int, int]:
    """Next odd term after odd a, plus the valuation of the step.

    Returns (value, k) with value * 2**k == 3 * a + 1 and value odd.
    next_odd(1) == (1, 2): the fixed point 1 -> 4 -> 1.
    """
    _check_odd(a, "a")
    m = 3 * a + 1
    k = v2(m)
    return m >> k, k


def odd_subsequence(start: int, max_terms: int = DEFAULT_ODD_LIMIT) -> OddChain:
    """Accelerated odd chain from an odd start, stopping at the first 1."""
    _check_odd(start, "start")
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    terms = [start]
    valuations: list[int] = []
    current = start
    while current != 1 and len(terms) < max_terms:
        current, k = next_odd(current)
        terms.append(current)
        valuations.append(k)
    termination = Termination.REACHED_ONE if current == 1 else Termination.STEP_LIMIT
    return OddChain(start=start, terms=tuple(terms), valuations=tuple(valuations),
                    termination=termination)


def tail_info(a: int) -> TailInfo:
    """Split odd a into head powers of two and its trailing-ones tail.

    Example: 27 == 0b11011 has tail 2 + 1 (tail_length 1) and head
    exponents (4, 3).
    """
    _check_odd(a, "a")
    # trailing ones of a == trailing zeros of a + 1
    ones = v2(a + 1)
    n = ones - 1
    head = a + 1 - (1 << ones)
    exponents: list[int] = []
    while head:
        top = head.bit_length() - 1
        exponents.append(top)
        head ^= 1 << top
    return TailInfo(value=a, tail_length=n, head_exponents=tuple(exponents))


def verify_tail_descent(a: int) -> TailDescentReport:
    """Check the tail descent of an odd a with tail_length n >= 1.

    Each of the first n accelerated steps must halve exactly once, drop
    the tail length by one, and satisfy 2**i * (a_i + 1) == 3**i * (a + 1).
    """
    _check_odd(a, "a")
    n = tail_info(a).tail_length
    if n == 0:
        return TailDescentReport(start=a, tail_length=0, chain=(a,), tail_lengths=(0,),
                                 status=TailDescentStatus.NOT_APPLICABLE,
                                 detail="tail length is 0")
    chain = [a]
    tails = [n]
    current = a
    for i in range(1, n + 1):
        current, k = next_odd(current)
        chain.append(current)
        t = tail_info(current).tail_length
        tails.append(t)
        if k != 1:
            return TailDescentReport(a, n, tuple(chain), tuple(tails), TailDescentStatus.FAIL,
                                     f"step {i}: valuation {k} != 1")
        if t != n - i:
            return TailDescentReport(a, n, tuple(chain), tuple(tails), TailDescentStatus.FAIL,
                                     f"step {i}: tail length {t} != {n - i}")
        if (current + 1) << i != 3**i * (a + 1):
            return TailDescentReport(a, n, tuple(chain), tuple(tails), TailDescentStatus.FAIL,
                                     f"step {i}: closed form 2^i (a_i + 1) = 3^i (a + 1) fails")
    return TailDescentReport(a, n, tuple(chain), tuple(tails), TailDescentStatus.PASS)


def jump_value(base: int, height: int) -> int:
    """The jump of odd base at the given height >= 1.

    jump_value(P, i) == 4**i * P + 4**(i-1) + ... + 4 + 1, always 1 mod 4.
    """
    _check_odd(base, "base")
    if height < 1:
        raise ValueError(f"height must be >= 1, got {height}")
    pow4 = 4**height
    return pow4 * base + (pow4 - 1) // 3


def jump_decompose(a: int) -> tuple[JumpDescriptor, ...]:
    """All ways odd a arises as a jump, deepest base last.

    Descends base -> (base - 1) / 4 while that stays odd; empty when a is
    not of the form 4 * odd + 1.
    """
    _check_odd(a, "a")
    descriptors: list[JumpDescriptor] = []
    current = a
    height = 0
    while current % 4 == 1:
        base = (current - 1) // 4
        if base < 1 or base % 2 == 0:
            break
        height += 1
        descriptors.append(JumpDescriptor(base=base, height=height, value=a))
        current = base
    return tuple(descriptors)


def equivalent(a: int, b: int) -> bool:
    """Whether the trajectories of odd a and odd b share their second odd term."""
    return next_odd(a)[0] == next_odd(b)[0]
