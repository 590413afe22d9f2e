"""Exact scalar arithmetic over Q and GF(p), including square roots.

Rational scalars are ``fractions.Fraction`` (canonical lowest terms,
positive denominator).  Prime-field scalars are :class:`Mod` instances,
residues reduced modulo p.  Field descriptors (:data:`QQ`, :func:`GF`)
coerce, parse, render and take square roots of their scalars.

There is no floating-point path anywhere in this package.
"""

from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch, NonPrimeModulus, ParseError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for n < 2**64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Mod:
    """Residue modulo a prime p with exact field arithmetic."""

    __slots__ = ("r", "p")

    def __init__(self, r, p):
        self.r = r % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other
        if isinstance(other, int):
            return Mod(other, self.p)
        raise FieldMismatch(f"cannot mix GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        return Mod(self.r + self._coerce(other).r, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod(self.r - self._coerce(other).r, self.p)

    def __rsub__(self, other):
        return Mod(self._coerce(other).r - self.r, self.p)

    def __mul__(self, other):
        return Mod(self.r * self._coerce(other).r, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.r, self.p)

    def inverse(self):
        if self.r == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.p})")
        return Mod(pow(self.r, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        return Mod(pow(self.r, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.r == other.r
        if isinstance(other, int):
            return self.r == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.r, self.p))

    def __bool__(self):
        return self.r != 0

    def __repr__(self):
        return f"Mod({self.r}, {self.p})"


def _parse_int(text):
    t = text.strip()
    sign = 1
    if t.startswith("-"):
        sign, t = -1, t[1:]
    elif t.startswith("+"):
        t = t[1:]
    if not t.isdigit():
        raise ParseError(f"bad integer {text!r}")
    return sign * int(t)


class Rationals:
    """Field descriptor for Q (arbitrary-precision rationals)."""

    kind = "rationals"
    characteristic = 0
    p = None

    def __call__(self, x, y=None):
        if isinstance(x, Mod):
            raise FieldMismatch("GF(p) scalar used where a rational was expected")
        return Fraction(x) if y is None else Fraction(x, y)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def sqrt(self, a):
        """Some r >= 0 with r*r == a, or None when a is not a rational square."""
        a = self(a)
        if a < 0:
            return None
        rn, rd = isqrt(a.numerator), isqrt(a.denominator)
        if rn * rn == a.numerator and rd * rd == a.denominator:
            return Fraction(rn, rd)
        return None

    def parse(self, text):
        t = text.strip()
        if "/" in t:
            num, _, den = t.partition("/")
            d = _parse_int(den)
            if d == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(_parse_int(num), d)
        return Fraction(_parse_int(t))

    def render(self, a):
        return str(self(a))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Field descriptor for GF(p), p prime."""

    kind = "gf"

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeModulus(f"{p!r} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({x.p})")
            return x
        if isinstance(x, int):
            return Mod(x, self.p)
        if isinstance(x, Fraction):
            raise FieldMismatch(f"rational scalar used where GF({self.p}) was expected")
        raise FieldMismatch(f"cannot coerce {type(x).__name__} into GF({self.p})")

    @property
    def zero(self):
        return Mod(0, self.p)

    @property
    def one(self):
        return Mod(1, self.p)

    def elements(self):
        return (Mod(r, self.p) for r in range(self.p))

    def sqrt(self, a):
        """The square root with smaller residue, or None for non-residues."""
        a = self(a)
        p = self.p
        if a.r == 0:
            return Mod(0, p)
        if p == 2:
            return a
        if pow(a.r, (p - 1) // 2, p) != 1:
            return None
        r = _tonelli_shanks(a.r, p)
        return Mod(min(r, p - r), p)

    def parse(self, text):
        return Mod(_parse_int(text), self.p)

    def render(self, a):
        return str(self(a).r)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def _tonelli_shanks(a, p):
    """Square root of the quadratic residue a modulo odd prime p."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


QQ = Rationals()

_GF_CACHE = {}


def GF(p):
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def parse_field(text):
    """Field spec grammar: 'q' or 'gf <p>' (also 'gf<p>' / 'gf(<p>)')."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    if t.startswith("gf"):
        rest = t[2:].strip().lstrip("(").rstrip(")").strip()
        if rest.isdigit():
            return GF(int(rest))
    raise ParseError(f"bad field spec {text!r}")


def render_field(field):
    return "q" if field == QQ else f"gf {field.p}"
