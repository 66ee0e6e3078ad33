"""Unary languages as eventually periodic sets of word lengths.

A connected unary DFA is a tail of ``mu`` states feeding a cycle of ``lam``
states.  :class:`EventuallyPeriodicSet` mirrors that shape directly: one
bit per tail position and one bit per cycle residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .dfa import DEFAULT_STATE_LIMIT, Dfa, DfaError, check_state_limit


@dataclass(frozen=True)
class ChrobakSize:
    lam: int
    mu: int

    def __post_init__(self):
        if self.lam < 1 or self.mu < 0:
            raise ValueError(f"invalid size (lam={self.lam}, mu={self.mu})")

    @property
    def total(self) -> int:
        return self.lam + self.mu


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """Lengths ``t < mu`` are members iff ``tail[t]``; lengths ``t >= mu``
    iff ``cycle[(t - mu) % lam]``."""

    tail: tuple[bool, ...]
    cycle: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "tail", tuple(bool(b) for b in self.tail))
        object.__setattr__(self, "cycle", tuple(bool(b) for b in self.cycle))
        if not self.cycle:
            raise ValueError("cycle must have length >= 1")

    @property
    def mu(self) -> int:
        return len(self.tail)

    @property
    def lam(self) -> int:
        return len(self.cycle)

    @property
    def size(self) -> ChrobakSize:
        return ChrobakSize(self.lam, self.mu)

    def __contains__(self, t: int) -> bool:
        if t < 0:
            return False
        if t < self.mu:
            return self.tail[t]
        return self.cycle[(t - self.mu) % self.lam]

    def is_empty(self) -> bool:
        return not any(self.tail) and not any(self.cycle)

    def lengths(self, up_to: int) -> list[int]:
        """Members ``<= up_to``, ascending."""
        return [t for t in range(up_to + 1) if t in self]

    @classmethod
    def empty(cls) -> EventuallyPeriodicSet:
        return cls((), (False,))

    @classmethod
    def from_lengths(cls, lengths, mu: int, lam: int) -> EventuallyPeriodicSet:
        """Set agreeing with ``lengths`` on ``0..mu+lam-1``, periodic beyond."""
        members = set(lengths)
        return cls(
            tuple(t in members for t in range(mu)),
            tuple(t in members for t in range(mu, mu + lam)),
        )

    def canonical(self) -> EventuallyPeriodicSet:
        """Same set with primitive period and shortest tail."""
        cycle = self.cycle
        lam = len(cycle)
        for p in range(1, lam + 1):
            if lam % p == 0 and cycle == cycle[p:] + cycle[:p]:
                cycle = cycle[:p]
                break
        tail = list(self.tail)
        while tail and tail[-1] == cycle[-1]:
            tail.pop()
            cycle = cycle[-1:] + cycle[:-1]
        return EventuallyPeriodicSet(tuple(tail), cycle)

    def to_dict(self) -> dict:
        return {"mu": self.mu, "lambda": self.lam, "tail": list(self.tail), "cycle": list(self.cycle)}

    @classmethod
    def from_dict(cls, data) -> EventuallyPeriodicSet:
        try:
            mu, lam, tail, cycle = data["mu"], data["lambda"], data["tail"], data["cycle"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed eventually periodic set: {exc}") from exc
        if not isinstance(tail, list) or not isinstance(cycle, list):
            raise ValueError("tail and cycle must be lists")
        if not all(isinstance(b, bool) for b in tail + cycle):
            raise ValueError("tail and cycle entries must be booleans")
        if len(tail) != mu or len(cycle) != lam:
            raise ValueError("mu/lambda disagree with tail/cycle lengths")
        return cls(tuple(tail), tuple(cycle))


def _require_unary(d: Dfa) -> None:
    if d.alphabet_size != 1:
        raise DfaError(f"expected a unary DFA, got alphabet_size={d.alphabet_size}")


def _path(d: Dfa) -> tuple[list[int], int]:
    """States along the successor path from start, and the cycle entry index."""
    _require_unary(d)
    seen: dict[int, int] = {}
    path = []
    q = d.start
    while q not in seen:
        seen[q] = len(path)
        path.append(q)
        q = d.delta[q][0]
    return path, seen[q]


def chrobak_size(d: Dfa) -> ChrobakSize:
    path, entry = _path(d)
    return ChrobakSize(lam=len(path) - entry, mu=entry)


def to_length_set(d: Dfa) -> EventuallyPeriodicSet:
    path, entry = _path(d)
    bits = [q in d.finals for q in path]
    return EventuallyPeriodicSet(tuple(bits[:entry]), tuple(bits[entry:]))


def from_length_set(s: EventuallyPeriodicSet) -> Dfa:
    """Minimal unary DFA: the canonical tail laid out before the canonical cycle."""
    c = s.canonical()
    n = c.mu + c.lam
    bits = c.tail + c.cycle
    return Dfa(
        alphabet_size=1,
        num_states=n,
        start=0,
        finals=frozenset(i for i in range(n) if bits[i]),
        delta=[[i + 1] for i in range(n - 1)] + [[c.mu]],
    )


def concat_frame(a: ChrobakSize, b: ChrobakSize) -> ChrobakSize:
    lam = lcm(a.lam, b.lam)
    return ChrobakSize(lam=lam, mu=a.mu + b.mu + lam - 1)


def unary_concat(
    s1: EventuallyPeriodicSet,
    s2: EventuallyPeriodicSet,
    *,
    state_limit: int | None = DEFAULT_STATE_LIMIT,
) -> EventuallyPeriodicSet:
    """Sumset ``{a + b}``, laid out in the frame ``lam = lcm(lam1, lam2)``,
    ``mu = mu1 + mu2 + lam - 1``.  The frame is not canonicalized."""
    frame = concat_frame(s1.size, s2.size)
    check_state_limit(frame.total, state_limit)
    horizon = frame.total
    if s1.is_empty() or s2.is_empty():
        return EventuallyPeriodicSet((False,) * frame.mu, (False,) * frame.lam)
    left = [t for t in range(horizon) if t in s1]
    bits = [any((t - a) in s2 for a in left if a <= t) for t in range(horizon)]
    return EventuallyPeriodicSet(tuple(bits[: frame.mu]), tuple(bits[frame.mu :]))


def unary_power_size(size: ChrobakSize, k: int) -> ChrobakSize:
    """Frame of ``L**k``: ``(lam, k*mu + (k-1)*lam - k + 1)``; total ``k*n - k + 1``."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return ChrobakSize(size.lam, k * size.mu + (k - 1) * size.lam - k + 1)


def unary_power(
    s: EventuallyPeriodicSet,
    k: int,
    *,
    state_limit: int | None = DEFAULT_STATE_LIMIT,
) -> EventuallyPeriodicSet:
    """``s**k`` as the left fold ``((s s) s) ...``, frame left uncanonicalized."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = s
    for _ in range(k - 1):
        acc = unary_concat(acc, s, state_limit=state_limit)
    return acc
