"""Witness automata, their expected state counts, and end-to-end checks."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .concat import oracle_concat, power_construction, yzs_concat
from .dfa import DEFAULT_STATE_LIMIT, Dfa
from .minimize import equivalent, isomorphic, minimize
from .unary import chrobak_size, from_length_set, to_length_set, unary_power, unary_power_size

ORACLE_MAX_N = 6

CSV_HEADER = "family,n,k,raw,minimal,expected,pass,ms"


class VerificationError(AssertionError):
    """Two independent routes to the same language disagree."""


def binary_witness(n: int) -> Dfa:
    """``n``-state binary DFA whose square needs ``n*2**n - 2**(n-1)`` states.

    Symbol 1 advances ``i -> i+1 mod n``; symbol 0 sends state 1 back to 0
    and fixes every other state.  Start 0, single final ``n-1``.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    delta = [[0 if i == 1 else i, (i + 1) % n] for i in range(n)]
    return Dfa(alphabet_size=2, num_states=n, start=0, finals=frozenset({n - 1}), delta=delta)


def unary_cycle_witness(n: int) -> Dfa:
    """Directed ``n``-cycle with final ``n-1``: lengths ``n-1 mod n``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return Dfa(
        alphabet_size=1,
        num_states=n,
        start=0,
        finals=frozenset({n - 1}),
        delta=[[(i + 1) % n] for i in range(n)],
    )


def expected_square_states(n: int) -> int:
    if n < 3:
        raise ValueError("n must be >= 3")
    return n * 2**n - 2 ** (n - 1)


def expected_unary_power_states(n: int, k: int) -> int:
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 2:
        raise ValueError("k must be >= 2")
    return k * n - k + 1


@dataclass(frozen=True)
class VerificationReport:
    family: str  # "binary_square" or "unary_power"
    n: int
    k: int
    raw_states: int
    minimal_states: int
    expected_states: int
    passed: bool
    elapsed_ms: float | None = None

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if not timing:
            d["elapsed_ms"] = None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        d = dict(d)
        d["passed"] = d.pop("pass")
        return cls(**d)

    def csv_row(self, timing: bool = True) -> str:
        ms = f"{self.elapsed_ms:.1f}" if timing and self.elapsed_ms is not None else ""
        return (
            f"{self.family},{self.n},{self.k},{self.raw_states},{self.minimal_states},"
            f"{self.expected_states},{str(self.passed).lower()},{ms}"
        )


def verify_square(n: int, *, state_limit: int | None = DEFAULT_STATE_LIMIT) -> VerificationReport:
    """Build the full square construction of ``binary_witness(n)``, minimize
    it, and compare against the closed form.  For ``n <= ORACLE_MAX_N`` the
    language is also checked against :func:`oracle_concat`."""
    t0 = time.perf_counter()
    expected = expected_square_states(n)
    m = binary_witness(n)
    raw = yzs_concat(m, m, state_limit=state_limit).dfa
    minimal = minimize(raw)
    if n <= ORACLE_MAX_N and not equivalent(raw, oracle_concat(m, m, state_limit=state_limit)):
        raise VerificationError(f"square construction and subset oracle disagree at n={n}")
    return VerificationReport(
        family="binary_square",
        n=n,
        k=2,
        raw_states=raw.num_states,
        minimal_states=minimal.num_states,
        expected_states=expected,
        passed=minimal.num_states == expected,
        elapsed_ms=(time.perf_counter() - t0) * 1000,
    )


def verify_unary(n: int, k: int, *, state_limit: int | None = DEFAULT_STATE_LIMIT) -> VerificationReport:
    """Compute ``L**k`` for the unary cycle witness by the length-set route
    and by the automaton route; both minimal DFAs must be isomorphic.

    ``raw_states`` is the size of the uncanonicalized length-set frame.
    """
    t0 = time.perf_counter()
    expected = expected_unary_power_states(n, k)
    m = unary_cycle_witness(n)

    lengths = unary_power(to_length_set(m), k, state_limit=state_limit)
    frame = unary_power_size(chrobak_size(m), k)
    if lengths.size != frame:
        raise VerificationError(f"length-set frame {lengths.size} differs from closed form {frame}")
    via_lengths = from_length_set(lengths)

    via_automaton = minimize(power_construction(m, k, state_limit=state_limit))
    if not isomorphic(via_lengths, via_automaton):
        raise VerificationError(f"length-set and automaton routes disagree at n={n}, k={k}")

    return VerificationReport(
        family="unary_power",
        n=n,
        k=k,
        raw_states=frame.total,
        minimal_states=via_lengths.num_states,
        expected_states=expected,
        passed=via_lengths.num_states == expected,
        elapsed_ms=(time.perf_counter() - t0) * 1000,
    )
