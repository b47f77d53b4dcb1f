"""Independent ground truth: exhaustive bracket state sum.

The state sum enumerates all 2^n smoothing states directly, with no
skein recursion, no reductions and no memoization; only the A/B
smoothing rule is shared with the main engine.  The bracket satisfies
the same one-crossing laws as the two-variable engine specialized at
``a = -A^3, z = A - A^-1`` (with loop value ``-A^2 - A^-2``), which
gives an exact cross-check on whole diagrams.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import DiagramError, FramedDiagram
from .ring import GaussRational, LaurentPoly
from .skein import evaluate_laurent

MAX_STATESUM_CROSSINGS = 20


class BracketPoly:
    """Sparse one-variable Laurent polynomial in A with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {d: c for d, c in (terms or {}).items() if c}

    @staticmethod
    def one() -> "BracketPoly":
        return BracketPoly({0: 1})

    @staticmethod
    def monomial(deg: int, coeff: int = 1) -> "BracketPoly":
        return BracketPoly({deg: coeff})

    def __add__(self, other: "BracketPoly") -> "BracketPoly":
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return BracketPoly(out)

    def __mul__(self, other: "BracketPoly") -> "BracketPoly":
        out: dict[int, int] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return BracketPoly(out)

    def __pow__(self, k: int) -> "BracketPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise ArithmeticError("cannot invert a non-monomial")
            ((d, c),) = self.terms.items()
            if c not in (1, -1):
                raise ArithmeticError("cannot invert a non-unit coefficient")
            return BracketPoly({-d: c}) ** (-k)
        out = BracketPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, BracketPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d in sorted(self.terms):
            c = self.terms[d]
            mono = "" if d == 0 else ("A" if d == 1 else f"A^{d}")
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BracketPoly({self})"


_DELTA = BracketPoly({2: -1, -2: -1})  # -A^2 - A^-2


def bracket_statesum(d: FramedDiagram) -> BracketPoly:
    """State sum ``sum_state A^(#A - #B) * (-A^2 - A^-2)^(loops - 1)``.

    Unknot-normalized: the crossingless one-circle diagram gives 1.
    """
    if d.is_singular():
        raise DiagramError("state sum needs a resolved diagram")
    n = d.n_crossings
    if n > MAX_STATESUM_CROSSINGS:
        raise DiagramError(
            f"state sum limited to {MAX_STATESUM_CROSSINGS} crossings")
    if n == 0:
        if d.free_loops == 0:
            raise DiagramError("empty diagram")
        return _DELTA ** (d.free_loops - 1)

    total = BracketPoly()
    for state in range(1 << n):
        internal: dict[tuple[int, int], tuple[int, int]] = {}
        exponent = 0
        for c in range(n):
            kind = "A" if (state >> c) & 1 == 0 else "B"
            exponent += 1 if kind == "A" else -1
            (s1, s2), (s3, s4) = d._smoothing_pairs(c, kind)
            internal[(c, s1)] = (c, s2)
            internal[(c, s2)] = (c, s1)
            internal[(c, s3)] = (c, s4)
            internal[(c, s4)] = (c, s3)
        loops = d.free_loops
        seen: set[tuple[int, int]] = set()
        for h0 in d.half_edges():
            if h0 in seen:
                continue
            loops += 1
            h = h0
            while True:
                seen.add(h)
                m = d.mates[h]
                seen.add(m)
                h = internal[m]
                if h == h0:
                    break
        total = total + BracketPoly.monomial(exponent) * _DELTA ** (loops - 1)
    return total


def specialize_to_bracket(p: LaurentPoly) -> BracketPoly:
    """Evaluate a two-variable value at ``a = -A^3, z = A - A^-1``.

    Negative powers of z are cleared first and divided back out exactly;
    the division is exact for every actual invariant value.
    """
    zK = max(0, -p.min_z_degree())
    zb = BracketPoly({1: 1, -1: -1})
    num: dict[int, Fraction] = {}
    for (da, dz), coeff in p.terms.items():
        if coeff.im != 0:
            raise ArithmeticError("value has a non-real coefficient")
        mono = BracketPoly.monomial(3 * da, (-1) ** (da % 2))
        term = mono * zb ** (dz + zK)
        for deg, c in term.terms.items():
            num[deg] = num.get(deg, Fraction(0)) + coeff.re * c
    num = {d: c for d, c in num.items() if c}
    # exact division by (A - A^-1)^K
    for _ in range(zK):
        num = _divide_by_z(num)
    out: dict[int, int] = {}
    for deg, c in num.items():
        if c.denominator != 1:
            raise ArithmeticError("specialization is not integral")
        out[deg] = int(c)
    return BracketPoly(out)


def _divide_by_z(num: dict[int, Fraction]) -> dict[int, Fraction]:
    # Divide a one-variable Laurent polynomial by A - A^-1, exactly.
    if not num:
        return {}
    quot: dict[int, Fraction] = {}
    rem = dict(num)
    while rem:
        top = max(rem)
        c = rem.pop(top)
        if c == 0:
            continue
        qd = top - 1
        quot[qd] = quot.get(qd, Fraction(0)) + c
        low = qd - 1
        rem[low] = rem.get(low, Fraction(0)) + c
        if rem[low] == 0:
            del rem[low]
    return {d: c for d, c in quot.items() if c}


def specialization_check(d: FramedDiagram) -> bool:
    """Engine value at ``a = -A^3, z = A - A^-1`` equals the state sum."""
    return specialize_to_bracket(evaluate_laurent(d)) == bracket_statesum(d)
