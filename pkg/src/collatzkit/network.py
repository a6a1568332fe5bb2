"""Diagonal array tying the doubling sequence u_i = 2 u_{i-1} + 1 to odd
Collatz chains.

Seeded by u_0 = 4n + 1 (n not 1 mod 3), the array has the u row on top, a
diagonal growing by v_{k,k} = 3 v_{k-1,k-1} + 2, and rows extending right
by v_{i,j} = 2 v_{i,j-1} + 1.  Column j then reads off the first odd terms
of the trajectory of u_j, each step halving exactly once, which is what
verify_network checks against direct iteration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import next_odd, odd_subsequence
from .reporting import CellFailure


class SeedCongruenceError(ValueError):
    """Seed n was 1 mod 3, for which the congruence structure breaks."""


@dataclass(frozen=True)
class NetworkArray:
    seed: int
    rows: int
    cols: int
    u: tuple[int, ...]                 # u[0] ... u[cols]
    v: dict[tuple[int, int], int]      # (i, j) -> entry, 1 <= i <= min(j, rows)

    def entry(self, i: int, j: int) -> int:
        if i == 0:
            return self.u[j]
        return self.v[(i, j)]

    def column(self, j: int) -> list[int]:
        return [self.entry(i, j) for i in range(min(j, self.rows) + 1)]


@dataclass(frozen=True)
class ArrayVerification:
    seed: int
    rows: int
    cols: int
    checked: int
    failures: tuple[CellFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def build_network(seed: int, rows: int, cols: int) -> NetworkArray:
    """Populate the array for the given seed; rows may not exceed cols."""
    if seed < 0:
        raise ValueError(f"seed must be >= 0, got {seed}")
    if seed % 3 == 1:
        raise SeedCongruenceError(f"seed must not be 1 mod 3, got {seed}")
    if rows < 0 or cols < 0:
        raise ValueError("rows and cols must be >= 0")
    if rows > cols:
        raise ValueError(f"rows ({rows}) must not exceed cols ({cols})")

    u = [4 * seed + 1]
    for _ in range(cols):
        u.append(2 * u[-1] + 1)

    v: dict[tuple[int, int], int] = {}
    diagonal = u[0]
    for k in range(1, rows + 1):
        diagonal = 3 * diagonal + 2
        v[(k, k)] = diagonal
        for j in range(k + 1, cols + 1):
            v[(k, j)] = 2 * v[(k, j - 1)] + 1

    return NetworkArray(seed=seed, rows=rows, cols=cols, u=tuple(u), v=v)


def _z(k: int) -> int:
    # z_k = 2^0 + ... + 2^k; empty sum for k = -1
    return (1 << (k + 1)) - 1


def verify_network(arr: NetworkArray) -> ArrayVerification:
    """Check every stated property of the array.

    part1  residues mod 3: the u row avoids 2, every v entry is 2
    part2  residues mod 4: exactly the diagonal (and u_0) is 1
    part3  column j is the odd chain of u_j, valuation 1 per step
    part4  v_{i,j} = 3 v_{i-1,j-1} + 2 across the whole triangle
    increasing  each column grows strictly down to its diagonal entry
    descent     the odd term after a diagonal entry > 1 is smaller
    identity    (3 z_{d-1} + 1) / 2 == 2^d + z_{d-2} for the column offsets

    Failures carry (part, i, j) witnesses; an empty list means all parts hold.
    """
    failures: list[CellFailure] = []
    checked = 0

    def fail(part: str, i: int, j: int, detail: str) -> None:
        failures.append(CellFailure(part, i, j, detail))

    # part 1
    for idx, value in enumerate(arr.u):
        checked += 1
        if value % 3 == 2:
            fail("part1", 0, idx, f"u_{idx} = {value} is 2 mod 3")
    for (i, j), value in sorted(arr.v.items()):
        checked += 1
        if value % 3 != 2:
            fail("part1", i, j, f"v = {value} is {value % 3} mod 3, expected 2")

    # part 2
    checked += 1
    if arr.u[0] % 4 != 1:
        fail("part2", 0, 0, f"u_0 = {arr.u[0]} is not 1 mod 4")
    for idx in range(1, len(arr.u)):
        checked += 1
        if arr.u[idx] % 4 == 1:
            fail("part2", 0, idx, f"u_{idx} = {arr.u[idx]} is 1 mod 4")
    for (i, j), value in sorted(arr.v.items()):
        checked += 1
        if i == j and value % 4 != 1:
            fail("part2", i, j, f"diagonal v = {value} is not 1 mod 4")
        if i != j and value % 4 == 1:
            fail("part2", i, j, f"off-diagonal v = {value} is 1 mod 4")

    # part 3: columns against direct iteration; the step out of the
    # diagonal entry itself is deliberately not taken.
    for j in range(1, arr.cols + 1):
        depth = min(j, arr.rows)
        column = arr.column(j)
        chain = odd_subsequence(arr.u[j], max_terms=depth + 1)
        for i in range(depth + 1):
            checked += 1
            if i >= len(chain.terms):
                fail("part3", i, j, f"odd chain of u_{j} ended before row {i}")
                continue
            if chain.terms[i] != column[i]:
                fail("part3", i, j,
                     f"column entry {column[i]} != odd-chain term {chain.terms[i]}")
        for i, k in enumerate(chain.valuations):
            checked += 1
            if k != 1:
                fail("part3", i + 1, j, f"step into row {i + 1} has valuation {k} != 1")

    # part 4
    for (i, j), value in sorted(arr.v.items()):
        checked += 1
        expected = 3 * arr.entry(i - 1, j - 1) + 2
        if value != expected:
            fail("part4", i, j, f"v = {value} != 3 v_(i-1,j-1) + 2 = {expected}")

    # strictly increasing down each column
    for j in range(1, arr.cols + 1):
        column = arr.column(j)
        for i in range(1, len(column)):
            checked += 1
            if column[i] <= column[i - 1]:
                fail("increasing", i, j, f"{column[i]} <= {column[i - 1]}")

    # the diagonal is a local peak of its trajectory
    for i in range(min(arr.rows, arr.cols) + 1):
        diagonal = arr.entry(i, i)
        if diagonal > 1:
            checked += 1
            after, _ = next_odd(diagonal)
            if after >= diagonal:
                fail("descent", i, i, f"next odd {after} >= diagonal {diagonal}")

    # the halving identity behind part 3, purely in exact arithmetic
    for d in range(1, arr.cols):
        checked += 1
        lhs_numerator = 3 * _z(d - 1) + 1
        if lhs_numerator % 2 or lhs_numerator // 2 != (1 << d) + _z(d - 2):
            fail("identity", 0, d, f"(3 z_{d - 1} + 1)/2 != 2^{d} + z_{d - 2}")

    return ArrayVerification(seed=arr.seed, rows=arr.rows, cols=arr.cols,
                             checked=checked, failures=tuple(failures))
