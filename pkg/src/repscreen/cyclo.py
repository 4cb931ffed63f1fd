"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`CycNum` stores exact coordinates over the power basis
``1, z, ..., z^(phi(N)-1)`` of Q(zeta_N), where ``z = exp(2*pi*i/N)`` and
coordinates are reduced modulo the N-th cyclotomic polynomial.  The
representation is canonical: two values with the same conductor are equal
exactly when their coefficient vectors are equal.

Rational numbers are plain :class:`fractions.Fraction` (always in lowest
terms, positive denominator), so no wrapper type is needed.

All arithmetic is exact.  The floating-point embedding
(:meth:`CycNum.to_complex`) exists only as a test oracle and is never used
in a computation path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import cmath
import math


# ---------------------------------------------------------------------------
# small number-theory helpers

def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables

@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by the product of Phi_d over proper
    divisors d of n; the result is monic with integer coefficients and
    degree phi(n).

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(4)
    (1, 0, 1)
    >>> cyclotomic_poly(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("conductor must be >= 1")
    # x^n - 1, divided successively by Phi_d for proper divisors d.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (den monic, remainder zero)."""
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    quot = [0] * (dn - dd + 1)
    for i in range(dn - dd, -1, -1):
        c = num[i + dd]
        if c:
            quot[i] = c
            for j, b in enumerate(den):
                num[i + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


_POW_ROWS: dict[int, list[tuple[int, ...]]] = {}


def _pow_row(n: int, e: int) -> tuple[int, ...]:
    """x^e reduced mod Phi_n, for phi(n) <= e < n (integer coefficients)."""
    phi = euler_phi(n)
    rows = _POW_ROWS.setdefault(n, [])
    if not rows:
        # seed with x^phi = -(lower part of Phi_n)
        rows.append(tuple(-c for c in cyclotomic_poly(n)[:phi]))
    while len(rows) <= e - phi:
        prev = rows[-1]
        shifted = [0] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            first = rows[0]
            for j in range(phi):
                shifted[j] += lead * first[j]
        rows.append(tuple(shifted))
    return rows[e - phi]


# ---------------------------------------------------------------------------
# the number type

_ZERO = Fraction(0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


class CycNum:
    """An exact element of Q(zeta_N) in canonical power-basis form.

    Construct values with :func:`root`, :meth:`CycNum.from_rational`, or
    arithmetic on existing values.  Binary operations embed both operands
    into the least common conductor; results are not automatically pushed
    down to smaller conductors (use :meth:`normalized` for that).
    """

    __slots__ = ("N", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != euler_phi(conductor):
            raise ValueError("coefficient vector has wrong length for conductor")
        self.N = conductor
        self.coeffs = coeffs
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q, conductor: int = 1) -> "CycNum":
        q = _as_fraction(q)
        c = [_ZERO] * euler_phi(conductor)
        c[0] = q
        return cls(conductor, tuple(c))

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycNum":
        return cls.from_rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "CycNum":
        return cls.from_rational(1, conductor)

    # -- representation predicates -------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction when it is rational, else None."""
        return self.coeffs[0] if self.is_rational() else None

    # -- conductor management -------------------------------------------

    def embedded(self, conductor: int) -> "CycNum":
        """This value rewritten over Q(zeta_M) for a multiple M of N."""
        if conductor == self.N:
            return self
        if conductor % self.N:
            raise ValueError(f"{conductor} is not a multiple of conductor {self.N}")
        ratio = conductor // self.N
        phi = euler_phi(conductor)
        acc = [_ZERO] * phi
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            e = j * ratio
            if e < phi:
                acc[e] += a
            else:
                for idx, r in enumerate(_pow_row(conductor, e)):
                    if r:
                        acc[idx] += a * r
        return CycNum(conductor, tuple(acc))

    def normalized(self) -> "CycNum":
        """Equal value over the smallest conductor dividing N that admits it."""
        if self.is_rational():
            return self if self.N == 1 else CycNum(1, (self.coeffs[0],))
        for m in divisors(self.N)[:-1]:
            down = _try_descend(self, m)
            if down is not None:
                return down
        return self

    # -- Galois actions -------------------------------------------------

    def galois(self, k: int) -> "CycNum":
        """Apply the automorphism zeta -> zeta^k (k coprime to the conductor)."""
        n = self.N
        k %= n
        if math.gcd(k, n) != 1:
            raise ValueError(f"galois exponent {k} is not coprime to conductor {n}")
        if k == 1:
            return self
        phi = euler_phi(n)
        acc = [_ZERO] * phi
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            e = (j * k) % n
            if e < phi:
                acc[e] += a
            else:
                for idx, r in enumerate(_pow_row(n, e)):
                    if r:
                        acc[idx] += a * r
        return CycNum(n, tuple(acc))

    def conj(self) -> "CycNum":
        """Complex conjugation, i.e. the Galois map zeta -> zeta^(-1)."""
        return self.galois(self.N - 1) if self.N > 1 else self

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "CycNum | None":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = math.lcm(self.N, o.N)
        a, b = self.embedded(n), o.embedded(n)
        return CycNum(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.N, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            q = o.coeffs[0]
            return CycNum(self.N, tuple(x * q for x in self.coeffs))
        if self.is_rational():
            q = self.coeffs[0]
            return CycNum(o.N, tuple(x * q for x in o.coeffs))
        n = math.lcm(self.N, o.N)
        a, b = self.embedded(n), o.embedded(n)
        phi = len(a.coeffs)
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    conv[i + j] += x * y
        acc = conv[:phi]
        for e in range(phi, len(conv)):
            c = conv[e]
            if not c:
                continue
            e %= n  # zeta^n = 1
            if e < phi:
                acc[e] += c
            else:
                for idx, r in enumerate(_pow_row(n, e)):
                    if r:
                        acc[idx] += c * r
        return CycNum(n, tuple(acc))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = CycNum.one(self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison and hashing ------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.N == o.N:
            return self.coeffs == o.coeffs
        n = math.lcm(self.N, o.N)
        return self.embedded(n).coeffs == o.embedded(n).coeffs

    def __hash__(self):
        if self._hash is None:
            norm = self.normalized()
            self._hash = hash((norm.N, norm.coeffs))
        return self._hash

    # -- output ------------------------------------------------------------

    def to_complex(self) -> complex:
        """Numeric embedding via zeta_N = exp(2*pi*i/N).  Test oracle only."""
        z = cmath.exp(2j * cmath.pi / self.N)
        total = 0j
        for j, a in enumerate(self.coeffs):
            if a:
                total += float(a) * z**j
        return total

    def __repr__(self):
        if self.is_rational():
            return f"CycNum({self.coeffs[0]})"
        terms = []
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            if j == 0:
                terms.append(str(a))
            else:
                mag = "" if abs(a) == 1 else f"{abs(a)}*"
                sign = "-" if a < 0 else ("+" if terms else "")
                terms.append(f"{sign}{mag}z{self.N}^{j}")
        return f"CycNum({''.join(terms)})"

    # -- serialization ------------------------------------------------------

    def to_json(self):
        """Canonical JSON form: bare rational string, or {"N":..,"coeffs":{exp: rat}}."""
        q = self.as_rational()
        if q is not None:
            return _fraction_str(q)
        return {
            "N": self.N,
            "coeffs": {
                str(j): _fraction_str(a) for j, a in enumerate(self.coeffs) if a
            },
        }

    @classmethod
    def from_json(cls, obj) -> "CycNum":
        if isinstance(obj, str):
            return cls.from_rational(parse_fraction(obj))
        if isinstance(obj, int):
            return cls.from_rational(obj)
        if not isinstance(obj, dict) or "N" not in obj or "coeffs" not in obj:
            raise ValueError(f"not a serialized cyclotomic number: {obj!r}")
        n = obj["N"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"bad conductor {n!r}")
        phi = euler_phi(n)
        c = [_ZERO] * phi
        for key, val in obj["coeffs"].items():
            j = int(key)
            if not 0 <= j < phi:
                raise ValueError(f"exponent {j} out of range for conductor {n}")
            c[j] = parse_fraction(val)
        return cls(n, tuple(c))


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_fraction(s) -> Fraction:
    """Parse 'p' or 'p/q' (also accepts plain ints)."""
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"not a rational literal: {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {s!r}") from exc


def _try_descend(x: CycNum, m: int) -> CycNum | None:
    """Rewrite x over Q(zeta_m) for m | N, or None if it does not lie there."""
    phi_m = euler_phi(m)
    # columns: embeddings of the conductor-m power basis into conductor N
    cols = [root(m, j).embedded(x.N).coeffs for j in range(phi_m)]
    # solve cols * y = x.coeffs by Gaussian elimination over Q
    phi_n = euler_phi(x.N)
    rows = [[cols[j][i] for j in range(phi_m)] + [x.coeffs[i]] for i in range(phi_n)]
    piv_cols: list[int] = []
    r = 0
    for c in range(phi_m):
        pivot = next((i for i in range(r, phi_n) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(phi_n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    # inconsistent rows mean x is not in the subfield
    for i in range(r, phi_n):
        if rows[i][phi_m]:
            return None
    y = [_ZERO] * phi_m
    for i, c in enumerate(piv_cols):
        y[c] = rows[i][phi_m]
    return CycNum(m, tuple(y))


def root(conductor: int, k: int = 1) -> CycNum:
    """zeta_conductor^k in canonical form.

    >>> root(5, 1) + root(5, 2) + root(5, 3) + root(5, 4)
    CycNum(-1)
    """
    if conductor < 1:
        raise ValueError("conductor must be >= 1")
    k %= conductor
    phi = euler_phi(conductor)
    c = [_ZERO] * phi
    if k < phi:
        c[k] = Fraction(1)
    else:
        for idx, r in enumerate(_pow_row(conductor, k)):
            if r:
                c[idx] = Fraction(r)
    return CycNum(conductor, tuple(c))
