"""Random automata and brute-force oracles shared by the test modules.

Nothing here calls into the construction or minimization code; the
oracles only simulate DFAs word by word.
"""

import itertools
import random

import numpy as np

from scx.dfa import Dfa, run_from


def random_dfa(rng: random.Random, max_states=6, max_alpha=3, alpha=None) -> Dfa:
    n = rng.randint(1, max_states)
    k = alpha if alpha is not None else rng.randint(1, max_alpha)
    delta = [[rng.randrange(n) for _ in range(k)] for _ in range(n)]
    p = rng.random()
    finals = {q for q in range(n) if rng.random() < p}
    return Dfa(k, n, rng.randrange(n), finals, delta)


def scramble(rng: random.Random, d: Dfa, extra=2) -> Dfa:
    """Equivalent DFA with states permuted, duplicated, and junk appended."""
    n, k = d.num_states, d.alphabet_size
    # clone every state once; clones route into the clone half at random
    copies = 2 * n
    delta = []
    for q in range(copies):
        row = []
        for a in range(k):
            t = d.delta[q % n][a]
            row.append(t + n * rng.randrange(2))
        delta.append(row)
    finals = {q for q in range(copies) if q % n in d.finals}
    for _ in range(extra):
        delta.append([rng.randrange(copies + extra) for _ in range(k)])
        if rng.random() < 0.5:
            finals.add(len(delta) - 1)
    total = len(delta)
    perm = list(range(total))
    rng.shuffle(perm)
    new_delta = [None] * total
    for q in range(total):
        new_delta[perm[q]] = [perm[t] for t in delta[q]]
    return Dfa(k, total, perm[d.start], {perm[q] for q in finals}, new_delta)


def all_words(k, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(range(k), repeat=length)


def acceptance_bitmaps(d: Dfa, max_len):
    """``out[L][i]``: whether the ``i``-th word of length ``L`` (base-k,
    first symbol most significant) is accepted."""
    delta = np.asarray(d.delta, dtype=np.int64)
    final = np.zeros(d.num_states, dtype=bool)
    final[list(d.finals)] = True
    states = np.array([d.start])
    out = [final[states]]
    for _ in range(max_len):
        states = delta[states].ravel()
        out.append(final[states])
    return out


def word_index(w, k):
    i = 0
    for a in w:
        i = i * k + a
    return i


def words_to_bitmaps(words, k, max_len):
    out = [np.zeros(k**L, dtype=bool) for L in range(max_len + 1)]
    for w in words:
        out[len(w)][word_index(w, k)] = True
    return out


def concat_bitmaps(a, b):
    """Word-set concatenation ``{uv}`` restricted to ``|uv| <= max_len``."""
    max_len = len(a) - 1
    out = []
    for L in range(max_len + 1):
        acc = np.zeros(len(a[L]), dtype=bool)
        for i in range(L + 1):
            acc |= np.outer(a[i], b[L - i]).ravel()
        out.append(acc)
    return out


def nerode_class_count(d: Dfa, start_len=0):
    """Number of reachable states distinguishable by some word.

    Signatures are acceptance vectors over every word of length <= L; L
    grows until two consecutive lengths give the same class count.
    """
    reach = {d.start}
    frontier = [d.start]
    while frontier:
        frontier = [t for q in frontier for t in d.delta[q] if t not in reach and not reach.add(t)]
    prev = None
    L = start_len
    while True:
        words = list(all_words(d.alphabet_size, L))
        count = len({tuple(run_from(d, q, w) in d.finals for w in words) for q in reach})
        if count == prev:
            return count
        prev = count
        L += 1


def sumset_members(s1, s2, up_to):
    a = [t for t in range(up_to + 1) if t in s1]
    b = [t for t in range(up_to + 1) if t in s2]
    return {x + y for x in a for y in b if x + y <= up_to}


def random_length_set(rng, max_lam=6, max_mu=5):
    from scx.unary import EventuallyPeriodicSet

    lam = rng.randint(1, max_lam)
    mu = rng.randint(0, max_mu)
    p = rng.random()
    return EventuallyPeriodicSet(
        tuple(rng.random() < p for _ in range(mu)),
        tuple(rng.random() < p for _ in range(lam)),
    )
