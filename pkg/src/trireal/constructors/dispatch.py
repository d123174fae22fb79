"""Route a degree sequence to the construction that covers it."""

from __future__ import annotations

from ..errors import MalformedInput, NotGraphical, NoTriangularRealization, UnsupportedClass
from ..sequences import BiregularSpec, DegreeSequence, classify, is_graphical, strip_excess_kb1
from .biregular import (
    is_dense,
    realize_dense,
    realize_gap_alpha,
    realize_p_ge_b,
    realize_p_lt_b_gap4,
    realize_small_regular,
)
from .realization import Realization, with_clique_copies
from .width1 import realize_regular, realize_width1

__all__ = ["realize", "realize_spec"]

_HINT = "; try the exhaustive search (`trireal oracle`) for small sequences"


def realize(d) -> Realization:
    """Triangular realisation of a regular or biregular graphical sequence.

    Raises:
        UnsupportedClass: three or more distinct terms, or terms below 4
            outside the (2^n) / (3^n) cases.
        NotGraphical: the sequence has no realisation at all.
        NoTriangularRealization: (1^n), or (2^n) / (3^n) with the wrong n.
    """
    d = DegreeSequence(d)
    if not d:
        raise MalformedInput("empty sequence")
    cls = classify(d)
    if cls.tag == "General":
        raise UnsupportedClass(f"{d} has more than two distinct terms" + _HINT)
    if not is_graphical(d):
        raise NotGraphical(f"{d} is not graphical")
    s = cls.spec
    if s.is_regular and s.b < 4:
        if s.b == 0:
            raise UnsupportedClass("(0^n) is outside the covered classes" + _HINT)
        return realize_small_regular(s.b, s.q)
    if s.b < 4:
        raise UnsupportedClass(f"{d}: smaller term below 4" + _HINT)
    return realize_spec(s)


def realize_spec(s: BiregularSpec) -> Realization:
    """Dispatch a graphical spec with b >= 4."""
    a, p, b, q = s.astuple()
    if s.is_regular:
        return realize_regular(b, q)
    if is_dense(s):
        return realize_dense(s)
    if a == b + 1:
        m = p + q if (p, q) != (b, 2) else p + q - 1
        return realize_width1(b, p, q, m)
    if p >= b:
        return realize_p_ge_b(s)
    reduced, copies = strip_excess_kb1(s)
    if is_dense(reduced):
        r = realize_dense(reduced)
    elif b >= p + 4:
        r = realize_p_lt_b_gap4(reduced)
    else:
        r = realize_gap_alpha(reduced, b - p)
    return with_clique_copies(r, copies, b)
