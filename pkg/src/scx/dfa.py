"""Complete deterministic finite automata over an indexed alphabet.

States are the integers ``0..num_states-1`` and symbols the integers
``0..alphabet_size-1``.  ``delta[q][a]`` is the successor of ``q`` on ``a``.
A :class:`Dfa` is immutable and always total.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_STATE_LIMIT = 1 << 20

Word = tuple[int, ...]


class DfaError(ValueError):
    """A DFA (or a word fed to it) violates a structural invariant."""


class StateLimitError(RuntimeError):
    """A construction would exceed the configured state limit."""


def check_state_limit(count: int, limit: int | None) -> None:
    if limit is not None and count > limit:
        raise StateLimitError(f"construction needs {count} states, limit is {limit}")


@dataclass(frozen=True)
class Dfa:
    alphabet_size: int
    num_states: int
    start: int
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        validate(self)

    def __repr__(self):
        return (
            f"Dfa(alphabet_size={self.alphabet_size}, num_states={self.num_states}, "
            f"start={self.start}, finals={sorted(self.finals)}, delta={[list(r) for r in self.delta]})"
        )

    def is_final(self, q: int) -> bool:
        return q in self.finals

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "alphabet_size": self.alphabet_size,
            "num_states": self.num_states,
            "start": self.start,
            "finals": sorted(self.finals),
            "delta": [list(row) for row in self.delta],
        }
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data) -> Dfa:
        if not isinstance(data, dict):
            raise DfaError("DFA JSON must be an object")
        required = ("alphabet_size", "num_states", "start", "finals", "delta")
        missing = [key for key in required if key not in data]
        if missing:
            raise DfaError(f"missing required field(s): {', '.join(missing)}")
        for key in ("alphabet_size", "num_states", "start"):
            if not _is_int(data[key]):
                raise DfaError(f"field {key!r} must be an integer")
        finals = data["finals"]
        if not isinstance(finals, list) or not all(_is_int(f) for f in finals):
            raise DfaError("field 'finals' must be a list of integers")
        delta = data["delta"]
        if not isinstance(delta, list) or not all(isinstance(row, list) for row in delta):
            raise DfaError("field 'delta' must be a list of rows")
        for row in delta:
            if not all(_is_int(t) for t in row):
                raise DfaError("transition targets must be integers")
        labels = data.get("labels")
        if labels is not None:
            if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
                raise DfaError("field 'labels' must be a list of strings")
            if len(labels) != data["alphabet_size"]:
                raise DfaError("labels length does not match alphabet_size")
        return cls(
            alphabet_size=data["alphabet_size"],
            num_states=data["num_states"],
            start=data["start"],
            finals=frozenset(finals),
            delta=delta,
            labels=labels,
        )

    def to_json(self, **extra) -> str:
        return json.dumps({**self.to_dict(), **extra})

    @classmethod
    def from_json(cls, text: str) -> Dfa:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DfaError(f"malformed JSON: {exc}") from exc
        return cls.from_dict(data)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def validate(d: Dfa) -> None:
    """Raise :class:`DfaError` describing the first violated invariant."""
    if d.alphabet_size < 1:
        raise DfaError("alphabet_size must be positive")
    if d.num_states < 1:
        raise DfaError("num_states must be positive")
    if not 0 <= d.start < d.num_states:
        raise DfaError("start state out of range")
    for f in sorted(d.finals):
        if not 0 <= f < d.num_states:
            raise DfaError(f"final state out of range: {f}")
    if len(d.delta) != d.num_states:
        raise DfaError(f"missing transition row: expected {d.num_states} rows, got {len(d.delta)}")
    for q, row in enumerate(d.delta):
        if len(row) != d.alphabet_size:
            raise DfaError(f"missing transition row entries for state {q}: ragged delta row")
        for a, t in enumerate(row):
            if not 0 <= t < d.num_states:
                raise DfaError(f"transition target out of range: delta[{q}][{a}] = {t}")


def step(d: Dfa, q: int, a: int) -> int:
    if not 0 <= q < d.num_states:
        raise DfaError(f"state out of range: {q}")
    if not 0 <= a < d.alphabet_size:
        raise DfaError(f"symbol out of range: {a}")
    return d.delta[q][a]


def run_from(d: Dfa, q: int, w: Iterable[int]) -> int:
    """State reached from ``q`` after reading ``w``."""
    delta, k = d.delta, d.alphabet_size
    for a in w:
        if not 0 <= a < k:
            raise DfaError(f"symbol out of range: {a}")
        q = delta[q][a]
    return q


def run(d: Dfa, w: Iterable[int]) -> int:
    return run_from(d, d.start, w)


def accepts(d: Dfa, w: Iterable[int]) -> bool:
    return run(d, w) in d.finals


def enumerate_language(d: Dfa, max_len: int) -> list[Word]:
    """All accepted words of length <= ``max_len``, shortlex ordered.

    Expands the word tree level by level, carrying the reached state with
    each word, so no word is re-simulated from the start.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    delta, finals = d.delta, d.finals
    symbols = range(d.alphabet_size)
    level: list[tuple[Word, int]] = [((), d.start)]
    out = [w for w, q in level if q in finals]
    for _ in range(max_len):
        level = [(w + (a,), delta[q][a]) for w, q in level for a in symbols]
        out.extend(w for w, q in level if q in finals)
    return out


def parse_word(text: str, labels: Sequence[str] | None = None) -> Word:
    """Turn ``"0110"`` (or a label string) into a symbol tuple."""
    if labels is None:
        return tuple(int(ch) for ch in text)
    index = {s: i for i, s in enumerate(labels)}
    return tuple(index[ch] for ch in text)


def format_word(w: Sequence[int], labels: Sequence[str] | None = None) -> str:
    if labels is None:
        return "".join(str(a) for a in w)
    return "".join(labels[a] for a in w)
