"""Concatenation of DFA languages and the powers built from it.

The main construction pairs a state ``i`` of the first machine with a set
``R`` of states of the second machine (stored as an int bitmask).  Entering a
final state of the first machine injects the second machine's start state
into ``R``; the pair is accepting as soon as ``R`` meets the second
machine's finals.
"""

from __future__ import annotations

from typing import NamedTuple

from .dfa import DEFAULT_STATE_LIMIT, Dfa, DfaError, StateLimitError, Word, check_state_limit
from .minimize import minimize

MASK_WIDTH = 64


class PairState(NamedTuple):
    first: int
    subset: int  # bit r set <=> state r of the second machine is in the set

    def members(self) -> list[int]:
        return [r for r in range(self.subset.bit_length()) if self.subset >> r & 1]

    @classmethod
    def of(cls, first: int, members) -> PairState:
        mask = 0
        for r in members:
            mask |= 1 << r
        return cls(first, mask)


class Concatenation(NamedTuple):
    dfa: Dfa
    pair_states: list[PairState]

    def index(self) -> dict[PairState, int]:
        return {p: i for i, p in enumerate(self.pair_states)}


def raw_concat_size(m1: Dfa, m2: Dfa) -> int:
    n = m2.num_states
    return m1.num_states * 2**n - len(m1.finals) * 2 ** (n - 1)


def _image_table(m: Dfa, a: int) -> list[int]:
    # img[mask] built from img[mask without its lowest bit]
    n = m.num_states
    targets = [1 << m.delta[r][a] for r in range(n)]
    img = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        img[mask] = img[mask ^ low] | targets[low.bit_length() - 1]
    return img


def _image(m: Dfa, mask: int, a: int) -> int:
    out = 0
    r = 0
    delta = m.delta
    while mask:
        if mask & 1:
            out |= 1 << delta[r][a]
        mask >>= 1
        r += 1
    return out


def yzs_concat(
    m1: Dfa,
    m2: Dfa,
    *,
    trim: bool = False,
    state_limit: int | None = DEFAULT_STATE_LIMIT,
) -> Concatenation:
    """DFA for ``L(m1) L(m2)`` via the subset-tracking pair construction.

    With ``trim=False`` every legal pair is materialized, reachable or not,
    in lexicographic ``(first, mask)`` order; the state count is then exactly
    ``|Q1| * 2**|Q2| - |F1| * 2**(|Q2| - 1)``.  With ``trim=True`` only pairs
    reachable from the start are built, numbered breadth-first.
    """
    if m1.alphabet_size != m2.alphabet_size:
        raise DfaError("alphabet mismatch")
    n2 = m2.num_states
    if n2 > MASK_WIDTH:
        raise StateLimitError(f"second machine has {n2} states; subset masks are capped at {MASK_WIDTH}")
    sigma = m1.alphabet_size
    s2 = 1 << m2.start
    f1 = m1.finals
    f2_mask = sum(1 << f for f in m2.finals)
    start = PairState(m1.start, s2 if m1.start in f1 else 0)

    if trim:
        images = [dict() for _ in range(sigma)]

        def image(mask, a):
            cache = images[a]
            if mask not in cache:
                cache[mask] = _image(m2, mask, a)
            return cache[mask]

        pairs = [start]
        index = {start: 0}
        delta = []
        i = 0
        while i < len(pairs):
            first, mask = pairs[i]
            row = []
            for a in range(sigma):
                j = m1.delta[first][a]
                r = image(mask, a)
                if j in f1:
                    r |= s2
                nxt = PairState(j, r)
                t = index.get(nxt)
                if t is None:
                    t = index[nxt] = len(pairs)
                    pairs.append(nxt)
                    check_state_limit(len(pairs), state_limit)
                row.append(t)
            delta.append(row)
            i += 1
    else:
        check_state_limit(raw_concat_size(m1, m2), state_limit)
        images = [_image_table(m2, a) for a in range(sigma)]
        pairs = [
            PairState(first, mask)
            for first in range(m1.num_states)
            for mask in range(1 << n2)
            if first not in f1 or mask & s2
        ]
        index = {p: i for i, p in enumerate(pairs)}
        delta = []
        for first, mask in pairs:
            row = []
            for a in range(sigma):
                j = m1.delta[first][a]
                r = images[a][mask]
                if j in f1:
                    r |= s2
                row.append(index[PairState(j, r)])
            delta.append(row)

    dfa = Dfa(
        alphabet_size=sigma,
        num_states=len(pairs),
        start=index[start],
        finals=frozenset(i for i, p in enumerate(pairs) if p.subset & f2_mask),
        delta=delta,
        labels=m1.labels,
    )
    return Concatenation(dfa, pairs)


def square_construction(m: Dfa, *, trim: bool = False, state_limit: int | None = DEFAULT_STATE_LIMIT) -> Dfa:
    return yzs_concat(m, m, trim=trim, state_limit=state_limit).dfa


def power_construction(m: Dfa, k: int, *, state_limit: int | None = DEFAULT_STATE_LIMIT) -> Dfa:
    """DFA for ``L(m)**k``, built as ``L**(k-1) L`` with minimization between steps.

    Intermediate concatenations keep only reachable pairs; the full pair set
    of the square construction would be exponential in ``|Q|`` regardless
    of how small the reachable part is.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = m
    for _ in range(k - 1):
        acc = yzs_concat(minimize(acc), m, trim=True, state_limit=state_limit).dfa
    return acc


def subset_concat(m1: Dfa, m2: Dfa, *, state_limit: int | None = DEFAULT_STATE_LIMIT) -> Dfa:
    """Accessible subset construction for ``L(m1) L(m2)``, not minimized.

    The glued machine is nondeterministic on the disjoint union of both state
    sets (second machine offset by ``|Q1|``); every move of the first machine
    into one of its finals also enters the second machine's start.  Subsets
    are frozensets, explored from the start set only.
    """
    if m1.alphabet_size != m2.alphabet_size:
        raise DfaError("alphabet mismatch")
    off = m1.num_states
    sigma = m1.alphabet_size
    s2 = off + m2.start

    def moves(q: int, a: int) -> tuple[int, ...]:
        if q < off:
            t = m1.delta[q][a]
            return (t, s2) if t in m1.finals else (t,)
        return (off + m2.delta[q - off][a],)

    start = frozenset({m1.start, s2} if m1.start in m1.finals else {m1.start})
    subsets = [start]
    index = {start: 0}
    delta = []
    i = 0
    while i < len(subsets):
        cur = subsets[i]
        row = []
        for a in range(sigma):
            nxt = frozenset(t for q in cur for t in moves(q, a))
            if nxt not in index:
                index[nxt] = len(subsets)
                subsets.append(nxt)
                check_state_limit(len(subsets), state_limit)
            row.append(index[nxt])
        delta.append(row)
        i += 1
    finals = frozenset(
        i for i, s in enumerate(subsets) if any(q >= off and (q - off) in m2.finals for q in s)
    )
    return Dfa(sigma, len(subsets), 0, finals, delta, labels=m1.labels)


def oracle_concat(m1: Dfa, m2: Dfa, *, state_limit: int | None = DEFAULT_STATE_LIMIT) -> Dfa:
    """Independent route to ``L(m1) L(m2)``: glue, determinize, minimize."""
    return minimize(subset_concat(m1, m2, state_limit=state_limit))


def reachability_word(n: int, target: PairState) -> Word:
    """Word leading the square of the ``n``-state binary witness from
    ``(0, {})`` to ``target``.

    Each block ``1**n (10)**s`` first cycles the first component once (which
    injects 0 into the set) and then rotates the set by ``s`` positions; the
    blocks are emitted so that the members land, last to first, on their
    target positions.  A nonzero first component is reached by rotating the
    set back by ``i`` first and finishing with ``1**i``.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    first, mask = target
    if not 0 <= first < n or not 0 <= mask < 1 << n:
        raise ValueError(f"state {tuple(target)} out of range for n={n}")
    if first == n - 1 and not mask & 1:
        raise ValueError(f"illegal state {tuple(target)}: final first component requires 0 in the set")
    members = [r for r in range(n) if mask >> r & 1]
    if first:
        members = [(r - first) % n for r in members]
    ordered = sorted(r for r in members if r != 0)
    if 0 in members:
        ordered.append(0)
    shifts = []
    prev = 1
    for r in ordered:
        shifts.append((r - prev) % n)
        prev = r
    word: list[int] = []
    for s in reversed(shifts):
        word += [1] * n + [1, 0] * s
    word += [1] * first
    return tuple(word)
