"""Exact univariate polynomial arithmetic over Z2 and Z4.

Polynomials are dense coefficient tuples in ascending order (index i is the
coefficient of x^i), kept canonical: no trailing zeros, the zero polynomial
is the empty tuple and has degree -inf.  BinPoly lives over Z2, QuatPoly
over Z4; arithmetic never mixes the two rings.  Division over Z4 is
restricted to monic divisors, which covers every divisor of x^n - 1 needed
here.

Text syntax accepted by ``parse``: a human form such as ``x^3+2x^2+x+3``
(terms in any order, ``-`` allowed and folded into the ring) or an array
form ``[3, 1, 2, 1]`` with ascending coefficients.  ``str()`` prints the
human form with descending powers and canonical residue coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, InternalError

NEG_INF = float("-inf")

_TERM_RE = re.compile(
    r"(?P<sign>[+-])?(?P<coeff>\d+)?(?P<var>x(?:\^(?P<exp>\d+))?)?"
)


class _Poly:
    """Shared dense-coefficient machinery for both rings."""

    MOD = 0
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        mod = self.MOD
        cs = [int(c) % mod for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # ------------------------------------------------------------------
    # constructors
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1):
        if k < 0:
            raise DomainError("monomial exponent must be nonnegative")
        return cls((0,) * k + (c,))

    @classmethod
    def xn_minus_1(cls, n: int):
        """x^n - 1 with coefficients reduced into the ring."""
        if n <= 0:
            raise DomainError("length must be positive")
        return cls((cls.MOD - 1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def parse(cls, obj: str | Sequence[int]):
        """Build a polynomial from human text or an ascending coefficient array."""
        if isinstance(obj, (list, tuple)):
            return cls(obj)
        if not isinstance(obj, str):
            raise DomainError(f"cannot parse polynomial from {type(obj).__name__}")
        text = obj.replace("−", "-").replace(" ", "")
        if not text:
            raise DomainError("empty polynomial string")
        if text[0] == "[":
            import json

            try:
                arr = json.loads(text)
            except ValueError as exc:
                raise DomainError(f"bad polynomial array: {obj!r}") from exc
            if not isinstance(arr, list) or not all(isinstance(v, int) for v in arr):
                raise DomainError(f"bad polynomial array: {obj!r}")
            return cls(arr)
        coeffs: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if m is None or m.end() == pos:
                raise DomainError(f"bad polynomial syntax near {text[pos:]!r}")
            if m.group("coeff") is None and m.group("var") is None:
                raise DomainError(f"bad polynomial syntax near {text[pos:]!r}")
            if m.group("sign") is None and not first:
                raise DomainError(f"missing +/- between terms in {obj!r}")
            sign = -1 if m.group("sign") == "-" else 1
            c = int(m.group("coeff")) if m.group("coeff") else 1
            if m.group("var") is None:
                k = 0
            elif m.group("exp") is None:
                k = 1
            else:
                k = int(m.group("exp"))
            coeffs[k] = coeffs.get(k, 0) + sign * c
            pos = m.end()
            first = False
        out = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return cls(out)

    # ------------------------------------------------------------------
    # basic queries
    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # ------------------------------------------------------------------
    # ring arithmetic
    def _check_ring(self, other):
        if type(self) is not type(other):
            raise DomainError(
                f"mixed-ring arithmetic: {type(self).__name__} and {type(other).__name__}"
            )

    def __add__(self, other):
        self._check_ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.MOD
        return type(self)(out)

    def __neg__(self):
        return type(self)(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        self._check_ring(other)
        return self + (-other)

    def __mul__(self, other):
        self._check_ring(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return type(self)()
        out = [0] * (len(a) + len(b) - 1)
        mod = self.MOD
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % mod
        return type(self)(out)

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative polynomial power")
        out = type(self).one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, d):
        self._check_ring(d)
        if d.is_zero:
            raise DomainError("division by the zero polynomial")
        if self.MOD == 4 and not d.is_monic:
            raise DomainError("Z4 division requires a monic divisor")
        mod = self.MOD
        rem = list(self.coeffs)
        dd = len(d.coeffs) - 1
        if len(rem) - 1 < dd:
            return type(self)(), self
        q = [0] * (len(rem) - dd)
        # over Z2 the leading coefficient is always 1, over Z4 monic is enforced
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                q[k - dd] = c
                for j, cd in enumerate(d.coeffs):
                    rem[k - dd + j] = (rem[k - dd + j] - c * cd) % mod
        return type(self)(q), type(self)(rem)

    def __mod__(self, d):
        return divmod(self, d)[1]

    def __floordiv__(self, d):
        return divmod(self, d)[0]

    def divides(self, other) -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    # ------------------------------------------------------------------
    # printing
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                xs = "x" if k == 1 else f"x^{k}"
                parts.append(xs if c == 1 else f"{c}{xs}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class BinPoly(_Poly):
    """Polynomial over Z2."""

    MOD = 2
    __slots__ = ()


class QuatPoly(_Poly):
    """Polynomial over Z4."""

    MOD = 4
    __slots__ = ()


def cyclic_reduce(p, n: int):
    """Reduce p modulo x^n - 1 by folding exponents mod n."""
    if n <= 0:
        raise DomainError("cyclic length must be positive")
    if len(p.coeffs) <= n:
        return p
    out = [0] * n
    for i, c in enumerate(p.coeffs):
        out[i % n] = (out[i % n] + c) % p.MOD
    return type(p)(out)


def cyclic_mul(a, b, n: int):
    """Product of a and b in the quotient ring modulo x^n - 1."""
    return cyclic_reduce(a * b, n)


def reduce_mod2(p: QuatPoly) -> BinPoly:
    """Coefficient-wise mod-2 image of a Z4 polynomial."""
    return BinPoly(p.coeffs)


def lift_to_quat(p: BinPoly) -> QuatPoly:
    """The 0/1-coefficient lift of a Z2 polynomial into Z4[x]."""
    return QuatPoly(p.coeffs)


def gcd2(a: BinPoly, b: BinPoly) -> BinPoly:
    """Greatest common divisor over Z2 (monic by construction)."""
    if a.is_zero and b.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a


def ext_gcd2(a: BinPoly, b: BinPoly) -> tuple[BinPoly, BinPoly, BinPoly]:
    """Extended Euclid over Z2: returns (g, s, t) with s*a + t*b = g."""
    if a.is_zero and b.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    s, s1 = BinPoly.one(), BinPoly.zero()
    t, t1 = BinPoly.zero(), BinPoly.one()
    while not b.is_zero:
        q, r = divmod(a, b)
        a, b = b, r
        s, s1 = s1, s + q * s1
        t, t1 = t1, t + q * t1
    return a, s, t


def graeffe_lift(p2: BinPoly, n: int) -> QuatPoly:
    """Lift a monic divisor of x^n - 1 (n odd) from Z2[x] to Z4[x].

    Splits p2(x) = e(x^2) + x*o(x^2) and returns +/-(e(y)^2 - y*o(y)^2),
    the sign chosen to make the result monic.  The output q is the unique
    monic divisor of x^n - 1 over Z4 with q mod 2 = p2.
    """
    if n <= 0 or n % 2 == 0:
        raise DomainError("length must be odd for the lift")
    if p2.is_zero or not p2.is_monic:
        raise DomainError("lift requires a monic nonzero polynomial")
    if not p2.divides(BinPoly.xn_minus_1(n)):
        raise DomainError(f"{p2} does not divide x^{n}-1 over Z2")
    even = QuatPoly(p2.coeffs[0::2])
    odd = QuatPoly(p2.coeffs[1::2])
    lifted = even * even - QuatPoly.x() * odd * odd
    if lifted.leading == 3:
        lifted = -lifted
    if reduce_mod2(lifted) != p2 or not lifted.divides(QuatPoly.xn_minus_1(n)):
        raise InternalError(f"lift of {p2} failed its own checks")
    return lifted


@dataclass(frozen=True)
class BezoutPair:
    """Witness polynomials with lam*h + mu*g = 1 exactly in Z4[x]."""

    lam: QuatPoly
    mu: QuatPoly


def bezout_lift(h: QuatPoly, g: QuatPoly) -> BezoutPair:
    """Solve lam*h + mu*g = 1 in Z4[x] for h, g with coprime mod-2 images.

    Extended Euclid over Z2 gives the identity up to an even error 2r;
    multiplying both cofactors by 1 + 2r repairs it since (1+2r)^2 = 1.
    """
    ht, gt = reduce_mod2(h), reduce_mod2(g)
    d, s, t = ext_gcd2(ht, gt)
    if d != BinPoly.one():
        raise DomainError(f"mod-2 images share the factor {d}")
    lam0, mu0 = lift_to_quat(s), lift_to_quat(t)
    unit = lam0 * h + mu0 * g  # equals 1 + 2r, a square root of itself's inverse
    lam, mu = unit * lam0, unit * mu0
    if lam * h + mu * g != QuatPoly.one():
        raise InternalError("Bezout correction failed")
    return BezoutPair(lam, mu)
