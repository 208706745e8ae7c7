"""Exact scalar arithmetic over the three admissible coefficient fields.

Values are lightweight: plain ``fractions.Fraction`` for the rationals,
:class:`GaussianRational` (a pair of Fractions) for Q(i), and :class:`ModP`
residues for odd prime fields.  A :class:`Field` object interprets, parses
and formats values; arithmetic goes through the ordinary operators so the
linear-algebra layer never needs to know which field it is working over.

Characteristic 2 is rejected everywhere: 2 must be invertible (nu^2 = 1
forces [nu, nu] = 2).  Floating point never appears.
"""
from __future__ import annotations

import re
from fractions import Fraction


class ScalarError(ValueError):
    """Malformed scalar text or an operation outside the field."""


class GaussianRational:
    """a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        # most values met in practice are real; skip the full product then
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re, 0)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        if not other.re and not other.im:
            raise ZeroDivisionError("division by zero in Q(i)")
        if not self.im and not other.im:
            return GaussianRational(self.re / other.re, 0)
        n = other.re * other.re + other.im * other.im
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __eq__(self, other):
        return (
            isinstance(other, GaussianRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)


class ModP:
    """Canonical residue in [0, p-1], p an odd prime."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _check(self, other):
        if self.p != other.p:
            raise ScalarError("mixed prime fields: p=%d vs p=%d" % (self.p, other.p))

    def __add__(self, other):
        self._check(other)
        return ModP(self.val + other.val, self.p)

    def __sub__(self, other):
        self._check(other)
        return ModP(self.val - other.val, self.p)

    def __neg__(self):
        return ModP(-self.val, self.p)

    def __mul__(self, other):
        self._check(other)
        return ModP(self.val * other.val, self.p)

    def __truediv__(self, other):
        self._check(other)
        if other.val == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.val * pow(other.val, -1, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, ModP) and self.p == other.p and self.val == other.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "ModP(%d, %d)" % (self.val, self.p)


_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_RE = re.compile(r"^(%s)$" % _RAT)
# imaginary tail: an explicitly signed rational (or bare sign) followed by i
_GAUSS_RE = re.compile(r"^(?P<re>%s)?(?P<im>[+-](?:\d+(?:/\d+)?)?|(?:\d+(?:/\d+)?))?i$" % _RAT)


def _parse_fraction(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ScalarError("not a rational: %r" % text)
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarError("zero denominator: %r" % text)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Shared interface: parse/format, unit elements, characteristic."""

    kind = ""
    characteristic = 0

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def invert(self, x):
        return self.one / x

    def sqrt_minus_one(self):
        """A value i with i*i = -1, or None if the field has none."""
        return None

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.kind, self.characteristic))

    def __repr__(self):
        return "<field %s>" % self.name

    @property
    def name(self):
        if self.kind == "prime-field":
            return "F_%d" % self.characteristic
        return {"rationals": "Q", "gaussian-rationals": "Q(i)"}[self.kind]


class RationalField(Field):
    kind = "rationals"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def parse(self, text):
        return _parse_fraction(text.strip())

    def format(self, x):
        return str(x)

    def from_int(self, n):
        return Fraction(n)


class GaussianRationalField(Field):
    kind = "gaussian-rationals"
    characteristic = 0

    def __init__(self):
        self.zero = GaussianRational(0, 0)
        self.one = GaussianRational(1, 0)
        self.i = GaussianRational(0, 1)

    def parse(self, text):
        text = text.strip()
        if "i" not in text:
            return GaussianRational(_parse_fraction(text), 0)
        m = _GAUSS_RE.match(text)
        if not m:
            raise ScalarError("not a gaussian rational: %r" % text)
        re_part = m.group("re")
        im_part = m.group("im")
        if re_part is not None and im_part is None:
            # e.g. "3/2i": the regex can eat the whole coefficient as re
            re_part, im_part = None, re_part
        re_val = _parse_fraction(re_part) if re_part is not None else Fraction(0)
        if im_part is None or im_part == "+":
            im_val = Fraction(1)
        elif im_part == "-":
            im_val = Fraction(-1)
        else:
            im_val = _parse_fraction(im_part)
        return GaussianRational(re_val, im_val)

    def format(self, x):
        if not x.im:
            return str(x.re)
        if abs(x.im) == 1:
            tail = "i" if x.im > 0 else "-i"
        else:
            tail = "%si" % x.im
        if not x.re:
            return tail
        if x.im > 0:
            return "%s+%s" % (x.re, tail)
        return "%s%s" % (x.re, tail)

    def from_int(self, n):
        return GaussianRational(n, 0)

    def sqrt_minus_one(self):
        return self.i


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ScalarError("modulus %d is not prime" % p)
        if p == 2:
            raise ScalarError("characteristic 2 is not admissible (2 must be invertible)")
        self.characteristic = p
        self.p = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def parse(self, text):
        text = text.strip()
        q = _parse_fraction(text)
        if q.denominator % self.p == 0:
            raise ScalarError("denominator of %r vanishes in F_%d" % (text, self.p))
        return ModP(q.numerator * pow(q.denominator, -1, self.p), self.p)

    def format(self, x):
        return str(x.val)

    def from_int(self, n):
        return ModP(n, self.p)

    def sqrt_minus_one(self):
        if self.p % 4 != 1:
            return None
        a = 2
        while pow(a, (self.p - 1) // 2, self.p) != self.p - 1:
            a += 1
        return ModP(pow(a, (self.p - 1) // 4, self.p), self.p)


QQ = RationalField()
QI = GaussianRationalField()


def field_from_spec(kind: str, characteristic=None) -> Field:
    """Build a field from the (kind, characteristic) pair used in JSON files."""
    if kind == "rationals":
        return QQ
    if kind == "gaussian-rationals":
        return QI
    if kind == "prime-field":
        if characteristic is None:
            raise ScalarError("prime-field needs a characteristic")
        return PrimeField(int(characteristic))
    raise ScalarError("unknown scalar kind: %r" % kind)


def parse_field_flag(flag: str) -> Field:
    """CLI field syntax: Q | Qi | Fp:P."""
    flag = flag.strip()
    if flag == "Q":
        return QQ
    if flag == "Qi":
        return QI
    if flag.startswith("Fp:"):
        tail = flag[3:]
        if not tail.isdigit():
            raise ScalarError("bad prime in field flag: %r" % flag)
        return PrimeField(int(tail))
    raise ScalarError("unknown field flag: %r (expected Q, Qi or Fp:P)" % flag)
