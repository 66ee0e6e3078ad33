"""Trimming, Moore-style minimization, and language/structure comparison."""

from __future__ import annotations

from collections import deque

from .dfa import Dfa, DfaError


def _bfs_order(d: Dfa) -> list[int]:
    delta = d.delta
    order = [d.start]
    seen = {d.start}
    i = 0
    while i < len(order):
        for t in delta[order[i]]:
            if t not in seen:
                seen.add(t)
                order.append(t)
        i += 1
    return order


def trim(d: Dfa) -> Dfa:
    """Restrict ``d`` to its reachable states, renumbered breadth-first.

    Symbols are scanned in increasing index order, so the numbering is a
    function of the language-and-structure alone, which is what makes
    :func:`isomorphic` a plain equality test.
    """
    order = _bfs_order(d)
    new = {q: i for i, q in enumerate(order)}
    return Dfa(
        alphabet_size=d.alphabet_size,
        num_states=len(order),
        start=0,
        finals=frozenset(new[q] for q in order if q in d.finals),
        delta=[[new[t] for t in d.delta[q]] for q in order],
        labels=d.labels,
    )


canonical = trim


def refine(d: Dfa) -> list[int]:
    """Block index of every state under the coarsest stable partition."""
    delta, finals = d.delta, d.finals
    block = [1 if q in finals else 0 for q in range(d.num_states)]
    count = len(set(block))
    while True:
        ids: dict[tuple, int] = {}
        new_block = []
        for q, row in enumerate(delta):
            sig = (block[q], *[block[t] for t in row])
            new_block.append(ids.setdefault(sig, len(ids)))
        block = new_block
        if len(ids) == count:
            return block
        count = len(ids)


def minimize(d: Dfa) -> Dfa:
    """The canonical minimal complete DFA for ``L(d)``."""
    t = trim(d)
    block = refine(t)
    nblocks = max(block) + 1
    rows: list[list[int] | None] = [None] * nblocks
    finals = set()
    for q, row in enumerate(t.delta):
        b = block[q]
        if rows[b] is None:
            rows[b] = [block[x] for x in row]
            if q in t.finals:
                finals.add(b)
    quotient = Dfa(
        alphabet_size=t.alphabet_size,
        num_states=nblocks,
        start=block[t.start],
        finals=frozenset(finals),
        delta=rows,
        labels=t.labels,
    )
    return trim(quotient)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Whether ``L(a) == L(b)``, by searching the synchronized product."""
    if a.alphabet_size != b.alphabet_size:
        raise DfaError("alphabet mismatch")
    start = (a.start, b.start)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in a.finals) != (q in b.finals):
            return False
        for x, y in zip(a.delta[p], b.delta[q]):
            if (x, y) not in seen:
                seen.add((x, y))
                queue.append((x, y))
    return True


def distinguishing_word(a: Dfa, b: Dfa) -> tuple[int, ...] | None:
    """A shortest word accepted by exactly one of ``a``, ``b`` (or None)."""
    if a.alphabet_size != b.alphabet_size:
        raise DfaError("alphabet mismatch")
    start = (a.start, b.start)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in a.finals) != (q in b.finals):
            word = []
            while parent[pair] is not None:
                pair, sym = parent[pair]
                word.append(sym)
            return tuple(reversed(word))
        for sym, nxt in enumerate(zip(a.delta[p], b.delta[q])):
            if nxt not in parent:
                parent[nxt] = (pair, sym)
                queue.append(nxt)
    return None


def isomorphic(a: Dfa, b: Dfa) -> bool:
    ca, cb = canonical(a), canonical(b)
    return (
        ca.alphabet_size == cb.alphabet_size
        and ca.num_states == cb.num_states
        and ca.finals == cb.finals
        and ca.delta == cb.delta
    )
