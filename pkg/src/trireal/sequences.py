"""Degree sequences, graphicality tests and Havel-Hakimi reduction."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Optional

from .errors import MalformedInput, NotReducible

__all__ = [
    "DegreeSequence",
    "BiregularSpec",
    "SequenceClass",
    "parse_degree_sequence",
    "render_sequence",
    "classify",
    "is_graphical",
    "is_graphical_biregular",
    "havel_hakimi_reduce",
    "strip_excess_kb1",
]


class DegreeSequence(tuple):
    """Immutable non-increasing tuple of non-negative integers.

    The constructor sorts its input, so ``DegreeSequence([4, 6, 6])`` is
    ``(6, 6, 4)``. Equality is tuple equality, which for sorted tuples is
    multiset equality.
    """

    def __new__(cls, terms: Iterable[int] = ()):
        values = [int(t) for t in terms]
        if any(t < 0 for t in values):
            raise MalformedInput(f"negative term in {values}")
        return super().__new__(cls, sorted(values, reverse=True))

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"DegreeSequence({render_sequence(self) or '<empty>'})"

    def __str__(self) -> str:
        return render_sequence(self)


@dataclass(frozen=True)
class BiregularSpec:
    """The sequence (a^p, b^q) with a > b.

    Regular sequences (b^q) are stored with ``p = 0`` and ``a = b + 1``.
    """

    a: int
    p: int
    b: int
    q: int

    def __post_init__(self):
        if not (self.a > self.b >= 0 and self.p >= 0 and self.q > 0):
            raise MalformedInput(f"invalid biregular spec {self.astuple()}")

    @classmethod
    def regular(cls, b: int, q: int) -> "BiregularSpec":
        return cls(b + 1, 0, b, q)

    @property
    def is_regular(self) -> bool:
        return self.p == 0

    @property
    def n(self) -> int:
        return self.p + self.q

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.p, self.b, self.q)

    def expand(self) -> DegreeSequence:
        return DegreeSequence([self.a] * self.p + [self.b] * self.q)

    def __str__(self) -> str:
        return render_sequence(self.expand())


@dataclass(frozen=True)
class SequenceClass:
    tag: str  # "Regular", "Biregular" or "General"
    spec: Optional[BiregularSpec] = None


_POWER = re.compile(r"^(\d+)\^(\d+)$")
_PLAIN = re.compile(r"^\d+$")


def parse_degree_sequence(text: str) -> DegreeSequence:
    """Parse ``"6^3,4^4"`` or ``"5 5 5"`` (commas and whitespace both separate).

    Raises:
        MalformedInput: on a bad token, a negative value or an empty result.
    """
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    terms: list[int] = []
    for tok in tokens:
        m = _POWER.match(tok)
        if m:
            terms.extend([int(m.group(1))] * int(m.group(2)))
        elif _PLAIN.match(tok):
            terms.append(int(tok))
        else:
            raise MalformedInput(f"malformed token {tok!r}")
    if not terms:
        raise MalformedInput(f"empty degree sequence: {text!r}")
    return DegreeSequence(terms)


def render_sequence(d: Iterable[int]) -> str:
    """Canonical power-notation text, e.g. ``"6^3,4^4"``."""
    values = sorted(d, reverse=True)
    return ",".join(f"{v}^{len(list(g))}" for v, g in groupby(values))


def classify(d: DegreeSequence) -> SequenceClass:
    d = DegreeSequence(d)
    distinct = sorted(set(d), reverse=True)
    if len(distinct) == 1:
        return SequenceClass("Regular", BiregularSpec.regular(distinct[0], len(d)))
    if len(distinct) == 2:
        a, b = distinct
        return SequenceClass("Biregular", BiregularSpec(a, d.count(a), b, d.count(b)))
    return SequenceClass("General")


def is_graphical_biregular(s: BiregularSpec) -> bool:
    """Closed-form Erdos-Gallai test for (a^p, b^q).

    For p > 0 the sequence is graphical iff ap + bq is even,
    a <= p + q - 1 and ap <= p(p - 1) + bq. For p = 0 the regular
    sequence (b^q) is graphical iff bq is even and b <= q - 1.
    """
    a, p, b, q = s.astuple()
    if p == 0:
        return (b * q) % 2 == 0 and b <= q - 1
    if (a * p + b * q) % 2:
        return False
    return a <= p + q - 1 and a * p <= p * (p - 1) + b * q


def is_graphical(d: Iterable[int]) -> bool:
    """Iterated Havel-Hakimi test on the largest term.

    The empty sequence is rejected.
    """
    work = sorted(d, reverse=True)
    if not work or work[-1] < 0:
        return False
    if sum(work) % 2:
        return False
    while work and work[0] > 0:
        top = work.pop(0)
        if top > len(work):
            return False
        for i in range(top):
            work[i] -= 1
            if work[i] < 0:
                return False
        work.sort(reverse=True)
    return True


def havel_hakimi_reduce(d: DegreeSequence, k: int) -> DegreeSequence:
    """Remove the k-th term (1-based) and lower the first d_k remaining terms by one.

    Among equal values the reduced terms are sorted after the untouched ones.

    Raises:
        NotReducible: if the step would produce a negative term or there
            are fewer than d_k remaining terms.
    """
    terms = list(d)
    if not 1 <= k <= len(terms):
        raise IndexError(f"k={k} outside 1..{len(terms)}")
    dk = terms.pop(k - 1)
    if dk > len(terms):
        raise NotReducible(f"term {dk} exceeds the {len(terms)} remaining vertices")
    tagged = []
    for i, t in enumerate(terms):
        if i < dk:
            if t == 0:
                raise NotReducible(f"reducing {render_sequence(d)} at k={k} goes negative")
            tagged.append((t - 1, 1, i))
        else:
            tagged.append((t, 0, i))
    tagged.sort(key=lambda x: (-x[0], x[1], x[2]))
    return DegreeSequence(t for t, _, _ in tagged)


def strip_excess_kb1(s: BiregularSpec) -> tuple[BiregularSpec, int]:
    """Lower q by b + 1 until a + b >= p + q - 1.

    Each removed block of b + 1 vertices is realised separately by a copy
    of K_{b+1}; the caller reassembles by disjoint union.
    """
    a, p, b, q = s.astuple()
    count = 0
    while a + b < p + q - 1:
        q -= b + 1
        count += 1
    return BiregularSpec(a, p, b, q), count
