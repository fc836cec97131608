"""Cyclic additive codes from canonical generator polynomial data.

A cyclic code in Z2^alpha x Z4^beta (beta odd) is generated as a module by
(b | 0) and (ell | f*h + 2f) where b divides x^alpha - 1 over Z2,
f*h*g = x^beta - 1 over Z4, and deg(ell) < deg(b).  Canonical data also
satisfies two divisibility conditions:

    b | (x^beta - 1)/f~ * gcd(b, ell)      and      b | h~ * gcd(b, ell*g~)

(p~ denotes the mod-2 image of p).  ``validate`` reports violations;
constructed instances are validated unless built with ``from_unchecked``.

Module multiplication is p star (u | v) = (p~ u mod x^alpha - 1 |
p v mod x^beta - 1); multiplication by x is the simultaneous cyclic shift.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from math import lcm
from typing import Iterator

from .additive import Code, CodeType, GeneratorMatrix, MixedVector, resolve_capacity
from .cyclofield import divisors_of_xn_minus_1_z2, factor_xn_minus_1_z4
from .errors import CapacityError, DomainError, PreconditionError
from .polyring import (
    BinPoly,
    QuatPoly,
    bezout_lift,
    cyclic_mul,
    cyclic_reduce,
    gcd2,
    reduce_mod2,
)

log = logging.getLogger("z2z4")


@dataclass(frozen=True)
class ResidueWord:
    """A pair of residues in Z2[x]/(x^alpha - 1) x Z4[x]/(x^beta - 1)."""

    alpha: int
    beta: int
    bpart: BinPoly
    qpart: QuatPoly

    def __post_init__(self):
        object.__setattr__(self, "bpart", cyclic_reduce(self.bpart, self.alpha))
        object.__setattr__(self, "qpart", cyclic_reduce(self.qpart, self.beta))

    def to_vector(self) -> MixedVector:
        b = list(self.bpart.coeffs) + [0] * (self.alpha - len(self.bpart.coeffs))
        q = list(self.qpart.coeffs) + [0] * (self.beta - len(self.qpart.coeffs))
        return MixedVector(tuple(b), tuple(q))

    @classmethod
    def from_vector(cls, v: MixedVector) -> "ResidueWord":
        return cls(v.alpha, v.beta, BinPoly(v.bin), QuatPoly(v.quat))

    def __str__(self) -> str:
        return f"({self.bpart} | {self.qpart})"


def star(p: QuatPoly, w: ResidueWord) -> ResidueWord:
    """Module multiplication: mod-2 image acts on the binary residue."""
    return ResidueWord(
        w.alpha,
        w.beta,
        cyclic_mul(reduce_mod2(p), w.bpart, w.alpha),
        cyclic_mul(p, w.qpart, w.beta),
    )


def violations(
    alpha: int, beta: int, b: BinPoly, ell: BinPoly, f: QuatPoly, h: QuatPoly, g: QuatPoly
) -> list[str]:
    """All canonical-form conditions that fail for the given data."""
    out = []
    if b.is_zero or not b.divides(BinPoly.xn_minus_1(alpha)):
        out.append(f"b = {b} does not divide x^{alpha}-1 over Z2")
    if f * h * g != QuatPoly.xn_minus_1(beta):
        out.append(f"f*h*g != x^{beta}-1 over Z4")
    for name, p in (("f", f), ("h", h), ("g", g)):
        if not p.is_monic:
            out.append(f"{name} = {p} is not monic")
    ft, ht, gt = reduce_mod2(f), reduce_mod2(h), reduce_mod2(g)
    if not (ft.is_zero or ht.is_zero or gt.is_zero):
        pairs = [("f", ft, "h", ht), ("f", ft, "g", gt), ("h", ht, "g", gt)]
        for n1, p1, n2, p2 in pairs:
            if gcd2(p1, p2) != BinPoly.one():
                out.append(f"mod-2 images of {n1} and {n2} are not coprime")
    if not b.is_zero and f * h * g == QuatPoly.xn_minus_1(beta):
        cof = BinPoly.xn_minus_1(beta) // ft
        if not b.divides(cof * gcd2(b, ell)):
            out.append("b does not divide (x^beta-1)/f~ * gcd(b, ell)")
        if not b.divides(ht * gcd2(b, ell * gt)):
            out.append("b does not divide h~ * gcd(b, ell*g~)")
    return out


@dataclass(frozen=True)
class CyclicGenerators:
    """Canonical tuple (alpha, beta, b, ell, f, h, g) of a cyclic code."""

    alpha: int
    beta: int
    b: BinPoly
    ell: BinPoly
    f: QuatPoly
    h: QuatPoly
    g: QuatPoly
    checked: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.alpha < 1:
            raise DomainError("alpha must be at least 1")
        if self.beta < 1 or self.beta % 2 == 0:
            raise DomainError("beta must be odd")
        ell = self.ell
        if not self.b.is_zero and ell.degree >= self.b.degree:
            ell = ell % self.b
            log.info("reduced ell modulo b to %s", ell)
            object.__setattr__(self, "ell", ell)
        if self.checked:
            errs = violations(self.alpha, self.beta, self.b, self.ell, self.f, self.h, self.g)
            if errs:
                raise DomainError("; ".join(errs))

    @classmethod
    def from_unchecked(cls, alpha, beta, b, ell, f, h, g) -> "CyclicGenerators":
        """Skip canonical-form validation; type formulas refuse such data."""
        return cls(alpha, beta, b, ell, f, h, g, checked=False)

    # -- derived data ---------------------------------------------------
    @property
    def fh_plus_2f(self) -> QuatPoly:
        return cyclic_reduce(self.f * self.h + QuatPoly((2,)) * self.f, self.beta)

    def generator_words(self) -> tuple[ResidueWord, ResidueWord]:
        return (
            ResidueWord(self.alpha, self.beta, self.b, QuatPoly.zero()),
            ResidueWord(self.alpha, self.beta, self.ell, self.fh_plus_2f),
        )

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "b": list(self.b.coeffs),
            "ell": list(self.ell.coeffs),
            "f": list(self.f.coeffs),
            "h": list(self.h.coeffs),
            "g": list(self.g.coeffs),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CyclicGenerators":
        try:
            return cls(
                int(obj["alpha"]),
                int(obj["beta"]),
                BinPoly.parse(obj["b"]),
                BinPoly.parse(obj.get("ell", [])),
                QuatPoly.parse(obj["f"]),
                QuatPoly.parse(obj["h"]),
                QuatPoly.parse(obj["g"]),
            )
        except KeyError as exc:
            raise DomainError(f"code JSON is missing the field {exc}") from exc


def _require_checked(gens: CyclicGenerators, what: str) -> None:
    if not gens.checked:
        raise PreconditionError(f"{what} requires validated generator data")


def code_type(gens: CyclicGenerators) -> CodeType:
    """Type parameters from polynomial degrees.

    gamma = alpha - deg b + deg h, delta = deg g,
    kappa = alpha - deg gcd(ell*g~, b), and the refinements
    kappa1 = alpha - deg b, kappa2 = deg b - deg gcd(b, ell*g~),
    delta1 = deg gcd(b, ell*g~) - deg gcd(b, ell), delta2 = deg g - delta1.
    """
    _require_checked(gens, "code_type")
    db = int(gens.b.degree)
    dh = int(gens.h.degree)
    dg = int(gens.g.degree)
    lg = gens.ell * reduce_mod2(gens.g)
    d_blg = int(gcd2(gens.b, lg).degree) if not lg.is_zero else db
    d_bl = int(gcd2(gens.b, gens.ell).degree) if not gens.ell.is_zero else db
    return CodeType(
        alpha=gens.alpha,
        beta=gens.beta,
        gamma=gens.alpha - db + dh,
        delta=dg,
        kappa=gens.alpha - d_blg,
        kappa1=gens.alpha - db,
        kappa2=db - d_blg,
        delta1=d_blg - d_bl,
        delta2=dg - (d_blg - d_bl),
    )


def order_two_generators(gens: CyclicGenerators) -> tuple[ResidueWord, ResidueWord]:
    """Generators of the order-two subcode: (b | 0) and (mu~ ell g~ | 2f)."""
    _require_checked(gens, "order_two_generators")
    mu = bezout_lift(gens.h, gens.g).mu
    left = cyclic_reduce(reduce_mod2(mu) * gens.ell * reduce_mod2(gens.g), gens.alpha)
    two_f = cyclic_reduce(QuatPoly((2,)) * gens.f, gens.beta)
    return (
        ResidueWord(gens.alpha, gens.beta, gens.b, QuatPoly.zero()),
        ResidueWord(gens.alpha, gens.beta, left, two_f),
    )


def three_generator_form(
    gens: CyclicGenerators,
) -> tuple[ResidueWord, ResidueWord, ResidueWord]:
    """Equivalent generating triple (b|0), (ell g~ | 2fg), (ell' | fh)
    with ell' = ell - mu~ ell g~."""
    _require_checked(gens, "three_generator_form")
    mu = bezout_lift(gens.h, gens.g).mu
    gt = reduce_mod2(gens.g)
    lg = cyclic_reduce(gens.ell * gt, gens.alpha)
    two_fg = cyclic_reduce(QuatPoly((2,)) * gens.f * gens.g, gens.beta)
    ellp = cyclic_reduce(gens.ell + reduce_mod2(mu) * gens.ell * gt, gens.alpha)
    fh = cyclic_reduce(gens.f * gens.h, gens.beta)
    a, b_ = gens.alpha, gens.beta
    return (
        ResidueWord(a, b_, gens.b, QuatPoly.zero()),
        ResidueWord(a, b_, lg, two_fg),
        ResidueWord(a, b_, ellp, fh),
    )


def shifts_of(word: ResidueWord, count: int) -> list[MixedVector]:
    """The vectors x^i star word for i = 0 .. count-1."""
    out = []
    w = word
    x = QuatPoly.x()
    for _ in range(count):
        out.append(w.to_vector())
        w = star(x, w)
    return out


def span_words(
    words: list[ResidueWord], counts: list[int], capacity: int | None = None
) -> Code:
    """Enumerated additive span of the given shift families."""
    if not words:
        raise DomainError("need at least one generator word")
    vecs = []
    for w, c in zip(words, counts):
        vecs.extend(shifts_of(w, c))
    return Code.from_vectors_span(words[0].alpha, words[0].beta, vecs, capacity)


def realize(gens: CyclicGenerators, capacity: int | None = None) -> GeneratorMatrix:
    """Generator matrix made of shifts: alpha of (b|0), beta of (ell|fh+2f).

    For unchecked data the second family is extended to lcm(alpha, beta)
    shifts, which spans the module for arbitrary inputs.
    """
    g1, g2 = gens.generator_words()
    n2 = gens.beta if gens.checked else lcm(gens.alpha, gens.beta)
    rows = shifts_of(g1, gens.alpha) + shifts_of(g2, n2)
    return GeneratorMatrix(gens.alpha, gens.beta, tuple(rows))


def enumerate_code(gens: CyclicGenerators, capacity: int | None = None) -> Code:
    return Code.from_matrix(realize(gens), capacity)


def separable_cyclic(
    b: BinPoly, f: QuatPoly, h: QuatPoly, g: QuatPoly, alpha: int, beta: int
) -> CyclicGenerators:
    """The separable cyclic code <(b|0), (0|fh+2f)>."""
    return CyclicGenerators(alpha, beta, b, BinPoly.zero(), f, h, g)


def enumerate_all_cyclic(
    alpha: int,
    beta: int,
    dedupe: bool = False,
    capacity: int | None = None,
    on_over_capacity: str = "raise",
) -> Iterator[CyclicGenerators]:
    """All valid canonical tuples for the given block lengths, in a fixed order.

    b runs over divisors of x^alpha - 1 by (degree, coefficients); (f, h, g)
    over assignments of the basic irreducible factors of x^beta - 1 ordered
    by the coefficients of h then g; ell over residues mod b by the integer
    value of its bit string, filtered by the divisibility conditions.
    """
    if beta % 2 == 0:
        raise DomainError("beta must be odd")
    if on_over_capacity not in ("raise", "skip"):
        raise DomainError("on_over_capacity must be 'raise' or 'skip'")
    cap = resolve_capacity(capacity)
    factors = factor_xn_minus_1_z4(beta)
    triples = []
    for assign in product(range(3), repeat=len(factors)):
        parts = [QuatPoly.one(), QuatPoly.one(), QuatPoly.one()]
        for fac, slot in zip(factors, assign):
            parts[slot] = parts[slot] * fac
        triples.append(tuple(parts))
    triples.sort(key=lambda t: (t[1].coeffs, t[2].coeffs))
    seen: set[frozenset[int]] = set()
    for b in divisors_of_xn_minus_1_z2(alpha):
        db = int(b.degree)
        for f, h, g in triples:
            predicted = 1 << ((alpha - db) + 2 * int(g.degree) + int(h.degree))
            for bits in range(1 << db):
                ell = BinPoly([(bits >> i) & 1 for i in range(db)])
                if violations(alpha, beta, b, ell, f, h, g):
                    continue
                if predicted > cap:
                    if on_over_capacity == "raise":
                        raise CapacityError(
                            f"candidate code size {predicted} exceeds the bound {cap}"
                        )
                    continue
                gens = CyclicGenerators(alpha, beta, b, ell, f, h, g)
                if dedupe:
                    key = enumerate_code(gens, capacity).words
                    if key in seen:
                        continue
                    seen.add(key)
                yield gens
