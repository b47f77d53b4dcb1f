"""Exact coefficient arithmetic.

Everything here is computed over the Gaussian rationals (complex numbers
with rational real and imaginary part), so all downstream identities can
be tested with exact equality.  Four carrier rings are provided:

* :class:`LaurentPoly` -- sparse Laurent polynomials in two variables
  ``a`` and ``z``;
* :class:`PowerSeries` -- univariate power series in ``x`` truncated at an
  explicit order;
* :class:`LaurentSeries` -- power series with a finite principal part,
  used only as a substitution bridge (``z`` maps to a series of positive
  valuation, so its negative powers pick up poles that must cancel);
* :class:`BiSeries` -- bivariate series in ``x, y`` truncated by total
  degree.

No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping


class NotAUnitError(ArithmeticError):
    """Raised when inverting an element with no inverse in its ring."""


class OrderMismatchError(ValueError):
    """Raised when combining truncated series of different orders."""


# ---------------------------------------------------------------------------
# Gaussian rationals


@dataclass(frozen=True)
class GaussRational:
    """A complex number ``re + im*i`` with rational parts, kept exact."""

    re: Fraction
    im: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(re: int | Fraction, im: int | Fraction = 0) -> "GaussRational":
        return GaussRational(Fraction(re), Fraction(im))

    def __add__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other: "GaussRational") -> "GaussRational":
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise NotAUnitError("division by zero Gaussian rational")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other: "GaussRational") -> "GaussRational":
        return self * other.inverse()

    def __pow__(self, k: int) -> "GaussRational":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


ZERO = GaussRational.of(0)
ONE = GaussRational.of(1)
I = GaussRational.of(0, 1)


def _coerce(value) -> GaussRational:
    if isinstance(value, GaussRational):
        return value
    return GaussRational.of(Fraction(value))


# ---------------------------------------------------------------------------
# Sparse Laurent polynomials in a, z


class LaurentPoly:
    """Sparse Laurent polynomial in ``a`` and ``z``.

    Terms are a map ``(deg_a, deg_z) -> GaussRational``; zero coefficients
    are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], GaussRational] | None = None):
        clean: dict[tuple[int, int], GaussRational] = {}
        if terms:
            for exp, c in terms.items():
                c = _coerce(c)
                if not c.is_zero():
                    clean[exp] = c
        self.terms = clean

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({(0, 0): ONE})

    @staticmethod
    def term(coeff, deg_a: int = 0, deg_z: int = 0) -> "LaurentPoly":
        return LaurentPoly({(deg_a, deg_z): _coerce(coeff)})

    @staticmethod
    def var_a(power: int = 1) -> "LaurentPoly":
        return LaurentPoly.term(1, power, 0)

    @staticmethod
    def var_z(power: int = 1) -> "LaurentPoly":
        return LaurentPoly.term(1, 0, power)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, ZERO) + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[tuple[int, int], GaussRational] = {}
        for (a1, z1), c1 in self.terms.items():
            for (a2, z2), c2 in other.terms.items():
                exp = (a1 + a2, z1 + z2)
                s = out.get(exp, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return LaurentPoly(out)

    def scale(self, c) -> "LaurentPoly":
        c = _coerce(c)
        return LaurentPoly({e: k * c for e, k in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "LaurentPoly":
        # Only monomials are units in the Laurent ring.
        if not self.is_monomial():
            raise NotAUnitError("only monomials are invertible Laurent polynomials")
        ((da, dz), c), = self.terms.items()
        return LaurentPoly({(-da, -dz): c.inverse()})

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, int], GaussRational]]:
        return sorted(self.terms.items())

    def min_z_degree(self) -> int:
        if not self.terms:
            return 0
        return min(dz for (_, dz) in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (da, dz), c in self.sorted_terms():
            mono = []
            if da:
                mono.append(f"a^{da}" if da != 1 else "a")
            if dz:
                mono.append(f"z^{dz}" if dz != 1 else "z")
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]):
                cs = f"({cs})"
            parts.append("*".join([cs] + mono) if mono else cs)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


# ---------------------------------------------------------------------------
# Truncated univariate power series


class PowerSeries:
    """Power series in ``x`` computed modulo ``x^(order+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [_coerce(c) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        while len(cs) < order + 1:
            cs.append(ZERO)
        self.order = order
        self.coeffs = tuple(cs)

    @staticmethod
    def constant(c, order: int) -> "PowerSeries":
        return PowerSeries(order, [_coerce(c)])

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries.constant(1, order)

    @staticmethod
    def x(order: int) -> "PowerSeries":
        return PowerSeries(order, [ZERO, ONE])

    def _check(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(n, out)

    def scale(self, c) -> "PowerSeries":
        c = _coerce(c)
        return PowerSeries(self.order, [k * c for k in self.coeffs])

    def inverse(self) -> "PowerSeries":
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise NotAUnitError("series with zero constant term is not a unit")
        n = self.order
        inv = [c0.inverse()] + [ZERO] * n
        for k in range(1, n + 1):
            acc = ZERO
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * inv[k - j]
            inv[k] = -(acc * inv[0])
        return PowerSeries(n, inv)

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PowerSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise OrderMismatchError("cannot extend a truncated series")
        return PowerSeries(order, self.coeffs[: order + 1])

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                parts.append(f"({c})*{mono}" if str(c) not in ("1",) else mono)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"PowerSeries(order={self.order}, {self})"


def series_exp(c, order: int) -> PowerSeries:
    """Return ``e^(c*x)`` truncated at the given order."""
    c = _coerce(c)
    return PowerSeries(order, [c**k * GaussRational.of(Fraction(1, factorial(k)))
                               for k in range(order + 1)])


# ---------------------------------------------------------------------------
# Laurent series (finite principal part)


class LaurentSeries:
    """Series ``sum c_k x^k`` for ``min_deg <= k <= order``.

    ``order`` is the largest exponent whose coefficient is trusted; binary
    operations propagate it conservatively, so products of series with
    poles lose high-order terms as expected.
    """

    __slots__ = ("min_deg", "order", "coeffs")

    def __init__(self, min_deg: int, order: int, coeffs: Iterable):
        cs = [_coerce(c) for c in coeffs]
        if len(cs) != order - min_deg + 1:
            raise ValueError("coefficient count does not match degree range")
        # Strip exactly-zero leading coefficients; the valuation matters for
        # multiplication precision, so keep it tight.
        while cs and min_deg < 0 and cs[0].is_zero():
            cs.pop(0)
            min_deg += 1
        if not cs:
            min_deg = order
            cs = [ZERO]
        self.min_deg = min_deg
        self.order = order
        self.coeffs = tuple(cs)

    @staticmethod
    def from_power_series(ps: PowerSeries) -> "LaurentSeries":
        return LaurentSeries(0, ps.order, ps.coeffs)

    @staticmethod
    def constant(c, order: int) -> "LaurentSeries":
        return LaurentSeries(0, order, [_coerce(c)] + [ZERO] * order)

    def coeff(self, k: int) -> GaussRational:
        if k < self.min_deg:
            return ZERO
        if k > self.order:
            raise OrderMismatchError(f"coefficient of x^{k} beyond trusted order")
        return self.coeffs[k - self.min_deg]

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return self.min_deg + k
        return self.order + 1

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        m = min(self.min_deg, other.min_deg)
        o = min(self.order, other.order)
        out = [self.coeff(k) + other.coeff(k) for k in range(m, o + 1)]
        return LaurentSeries(m, o, out)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_deg, self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        m = self.min_deg + other.min_deg
        o = min(self.order + other.min_deg, other.order + self.min_deg)
        out = [ZERO] * (o - m + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            di = self.min_deg + i
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                d = di + other.min_deg + j
                if d > o:
                    break
                out[d - m] = out[d - m] + a * b
        return LaurentSeries(m, o, out)

    def scale(self, c) -> "LaurentSeries":
        c = _coerce(c)
        return LaurentSeries(self.min_deg, self.order, [k * c for k in self.coeffs])

    def inverse(self) -> "LaurentSeries":
        v = self.valuation()
        if v > self.order:
            raise NotAUnitError("cannot invert a series that is zero to working order")
        # self = x^v * u with u a unit power series
        length = self.order - v
        unit = PowerSeries(length, self.coeffs[v - self.min_deg:])
        inv = unit.inverse()
        return LaurentSeries(-v, -v + length, inv.coeffs)

    def __pow__(self, k: int) -> "LaurentSeries":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return LaurentSeries.constant(1, self.order)
        # Repeated multiplication keeps the precision bookkeeping honest.
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def has_principal_part(self) -> bool:
        return self.valuation() < 0

    def to_power_series(self, order: int | None = None) -> PowerSeries:
        """Embed into a plain power series; the principal part must vanish."""
        if self.has_principal_part():
            raise ValueError("series has a non-vanishing principal part")
        if order is None:
            order = self.order
        if order > self.order:
            raise OrderMismatchError("requested order beyond trusted order")
        return PowerSeries(order, [self.coeff(k) for k in range(order + 1)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        o = min(self.order, other.order)
        m = min(self.min_deg, other.min_deg)
        return all(self.coeff(k) == other.coeff(k) for k in range(m, o + 1))

    def __str__(self) -> str:
        parts = []
        for k in range(self.min_deg, self.order + 1):
            c = self.coeff(k)
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"LaurentSeries([{self.min_deg},{self.order}], {self})"


# ---------------------------------------------------------------------------
# Bivariate series truncated by total degree


class BiSeries:
    """Series in ``x, y`` modulo total degree ``order + 1``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[tuple[int, int], GaussRational] | None = None):
        if order < 0:
            raise ValueError("order must be non-negative")
        clean: dict[tuple[int, int], GaussRational] = {}
        if coeffs:
            for (j, k), c in coeffs.items():
                if j + k > order:
                    continue
                c = _coerce(c)
                if not c.is_zero():
                    clean[(j, k)] = c
        self.order = order
        self.coeffs = clean

    @staticmethod
    def constant(c, order: int) -> "BiSeries":
        return BiSeries(order, {(0, 0): _coerce(c)})

    @staticmethod
    def one(order: int) -> "BiSeries":
        return BiSeries.constant(1, order)

    def coeff(self, j: int, k: int) -> GaussRational:
        return self.coeffs.get((j, k), ZERO)

    def _check(self, other: "BiSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, ZERO) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return BiSeries(self.order, out)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.order, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        out: dict[tuple[int, int], GaussRational] = {}
        for (j1, k1), c1 in self.coeffs.items():
            for (j2, k2), c2 in other.coeffs.items():
                j, k = j1 + j2, k1 + k2
                if j + k > self.order:
                    continue
                e = (j, k)
                s = out.get(e, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return BiSeries(self.order, out)

    def inverse(self) -> "BiSeries":
        c0 = self.coeff(0, 0)
        if c0.is_zero():
            raise NotAUnitError("series with zero constant term is not a unit")
        # 1/s = (1/c0) * sum (-h)^k  with  h = s/c0 - 1  (positive valuation)
        c0inv = c0.inverse()
        h = BiSeries(self.order, {e: c * c0inv for e, c in self.coeffs.items()})
        h = h - BiSeries.one(self.order)
        acc = BiSeries.one(self.order)
        power = BiSeries.one(self.order)
        for _ in range(self.order):
            power = power * (-h)
            acc = acc + power
        return BiSeries(self.order, {e: c * c0inv for e, c in acc.coeffs.items()})

    def __pow__(self, k: int) -> "BiSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = BiSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (j, k) in sorted(self.coeffs):
            c = self.coeffs[(j, k)]
            mono = []
            if j:
                mono.append("x" if j == 1 else f"x^{j}")
            if k:
                mono.append("y" if k == 1 else f"y^{k}")
            parts.append("*".join([f"({c})"] + mono))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BiSeries(order={self.order}, {self})"


# ---------------------------------------------------------------------------
# The value-ring constants and the loop factor


def base_constants(order: int) -> dict[str, PowerSeries | BiSeries]:
    """Constants of the completed coefficient ring.

    Returns ``t = e^x`` as a univariate series and the two invertible
    constants ``a = i*e^y`` and ``z = i*e^x + i*e^(-x) = 2i + i*x^2 + ...``
    as bivariate series.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    t = series_exp(1, order)
    a = BiSeries(order, {
        (0, k): I * GaussRational.of(Fraction(1, factorial(k)))
        for k in range(order + 1)
    })
    z_coeffs = {}
    for j in range(order + 1):
        # i/j! + i*(-1)^j/j!
        val = Fraction(1 + (-1) ** j, factorial(j))
        if val:
            z_coeffs[(j, 0)] = I * GaussRational.of(val)
    z = BiSeries(order, z_coeffs)
    return {"t": t, "a": a, "z": z}


def loop_factor_series(n: int, order: int) -> PowerSeries:
    """The disjoint-unknot factor ``(t^(n+1) - t^-(n+1))/(t - t^-1) + 1``.

    The quotient is evaluated through the telescoped sum
    ``t^n + t^(n-2) + ... + t^-n`` so the non-unit denominator never
    appears; negative ``n`` uses the antisymmetry of the quotient.
    The constant term is always ``n + 2``.
    """
    if n >= 0:
        acc = PowerSeries.constant(1, order)
        for j in range(n + 1):
            acc = acc + series_exp(n - 2 * j, order)
        return acc
    if n == -1:
        return PowerSeries.one(order)
    # quotient(n) = -quotient(-n-2)
    m = -n - 2
    acc = PowerSeries.constant(1, order)
    for j in range(m + 1):
        acc = acc - series_exp(m - 2 * j, order)
    return acc


def substitute_laurent(p: LaurentPoly, a_val, z_val):
    """Evaluate a Laurent polynomial at ring elements ``a_val, z_val``.

    The values may be any elements supporting ``+``, ``*``, ``scale`` and
    (when negative exponents occur) ``inverse``; in practice they are
    :class:`LaurentSeries` for the series bridge and Laurent monomials for
    degree shifts.
    """
    result = None
    for (da, dz), c in p.sorted_terms():
        term = None
        if da:
            term = a_val ** da
        if dz:
            zp = z_val ** dz
            term = zp if term is None else term * zp
        if term is None:
            if isinstance(a_val, LaurentSeries):
                term = LaurentSeries.constant(1, a_val.order)
            else:
                term = a_val ** 0
        term = term.scale(c)
        result = term if result is None else result + term
    if result is None:
        if isinstance(a_val, LaurentSeries):
            return LaurentSeries.constant(0, a_val.order)
        return (a_val ** 0).scale(ZERO)
    return result

# ---------------------------------------------------------------------------
# JSON serialization (bit-exact round-trip)


def _coeff_str(c: GaussRational) -> str:
    sign = "-" if c.im < 0 else "+"
    return f"{c.re}{sign}{abs(c.im)}·i"


def _parse_coeff(s: str) -> GaussRational:
    body, dot_i = s.rsplit("·", 1)
    if dot_i != "i":
        raise ValueError(f"malformed coefficient {s!r}")
    # split at the sign separating the real and imaginary parts; the
    # real part may itself start with a sign
    for k in range(1, len(body)):
        if body[k] in "+-" and body[k - 1] not in "+-/":
            re, im = body[:k], body[k:]
            return GaussRational(Fraction(re), Fraction(im))
    raise ValueError(f"malformed coefficient {s!r}")


def laurent_to_json(p: LaurentPoly) -> list[dict]:
    """Term list sorted lexicographically by (deg_a, deg_z)."""
    out = []
    for (da, dz), c in p.sorted_terms():
        out.append({"deg_a": da, "deg_z": dz,
                    "re": str(c.re), "im": str(c.im)})
    return out


def laurent_from_json(data: list[dict]) -> LaurentPoly:
    terms = {}
    for t in data:
        exp = (int(t["deg_a"]), int(t["deg_z"]))
        if exp in terms:
            raise ValueError(f"duplicate exponent {exp}")
        terms[exp] = GaussRational(Fraction(t["re"]), Fraction(t["im"]))
    return LaurentPoly(terms)


def series_to_json(s: PowerSeries) -> dict:
    return {"order": s.order, "coeffs": [_coeff_str(c) for c in s.coeffs]}


def series_from_json(data: dict) -> PowerSeries:
    order = int(data["order"])
    coeffs = [_parse_coeff(c) for c in data["coeffs"]]
    if len(coeffs) != order + 1:
        raise ValueError("coefficient count does not match the order")
    return PowerSeries(order, coeffs)
