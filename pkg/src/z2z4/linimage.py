"""Linearity of Gray images and the double-cyclic structure of
Nechaev-Gray images.

For a quaternary cyclic code <f*h + 2f> of odd length n with
f*h*g = x^n - 1, the Gray image is linear iff gcd(f~, g~ (x) g~) = 1,
where (x) denotes the root-product polynomial (``tensor_square``).  For a
mixed cyclic code <(b|0), (ell | fh+2f)> the criterion becomes

    gcd( f~ * b / gcd(b, ell*g~),  g~ (x) g~ ) = 1.

When the criterion holds, the Nechaev-Gray image is a binary double-cyclic
code generated by (b | 0) and (ell' | f~^2 h~) with ell' = p~ ell mod b for
any p solving p * (fh + 2f) = psi^{-1}(f~^2 h~); this module picks the
solution with the lexicographically smallest coefficient vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .additive import Code, MixedVector, gray_is_linear_oracle, resolve_capacity
from .cyclofield import tensor_square
from .cycliccode import (
    CyclicGenerators,
    code_type,
    enumerate_all_cyclic,
    enumerate_code,
)
from .errors import CapacityError, DomainError, InternalError, PreconditionError
from .polyring import (
    BinPoly,
    QuatPoly,
    cyclic_reduce,
    gcd2,
    reduce_mod2,
)
from .zmaps import nechaev_gray_inv

# Codes at most this large are enumerated for oracle cross-checks; bigger
# quaternary codes use the algebraic membership test instead.
ORACLE_ENUM_LIMIT = 1 << 18


@dataclass(frozen=True)
class LinearityReport:
    """Outcome of the gcd criterion, with the polynomials that decide it."""

    criterion_poly_a: BinPoly
    tensor_poly: BinPoly
    gcd_value: BinPoly
    verdict: bool
    oracle_verdict: bool | None = None
    witness: tuple[MixedVector, MixedVector, MixedVector] | None = None

    def to_json(self) -> dict:
        out = {
            "criterion_poly_a": list(self.criterion_poly_a.coeffs),
            "tensor_poly": list(self.tensor_poly.coeffs),
            "gcd": list(self.gcd_value.coeffs),
            "linear": self.verdict,
        }
        if self.oracle_verdict is not None:
            out["oracle_linear"] = self.oracle_verdict
        if self.witness is not None:
            out["witness"] = [str(v) for v in self.witness]
        return out


def wolfmann_linear(f: QuatPoly, h: QuatPoly, g: QuatPoly, n: int) -> bool:
    """Gray-image linearity of the quaternary cyclic code <fh + 2f>."""
    if n < 1 or n % 2 == 0:
        raise DomainError("length must be odd")
    if f * h * g != QuatPoly.xn_minus_1(n):
        raise DomainError(f"f*h*g != x^{n}-1 over Z4")
    return gcd2(reduce_mod2(f), tensor_square(reduce_mod2(g), n)) == BinPoly.one()


def gray_linear_criterion(
    gens: CyclicGenerators, with_oracle: bool = False, capacity: int | None = None
) -> LinearityReport:
    """The gcd criterion for the extended Gray image of a mixed cyclic code."""
    ft = reduce_mod2(gens.f)
    gt = reduce_mod2(gens.g)
    denom = gcd2(gens.b, gens.ell * gt)
    num = ft * gens.b
    quot, rem = divmod(num, denom)
    if not rem.is_zero:
        raise InternalError("gcd(b, ell*g~) failed to divide f~*b")
    tensor = tensor_square(gt, gens.beta)
    gcd_val = gcd2(quot, tensor)
    verdict = gcd_val == BinPoly.one()
    oracle_verdict = None
    witness = None
    if with_oracle:
        rep = gray_is_linear_oracle(enumerate_code(gens, capacity))
        oracle_verdict = rep.linear
        witness = rep.witness
    return LinearityReport(quot, tensor, gcd_val, verdict, oracle_verdict, witness)


def family_g_subgroup(gens: CyclicGenerators) -> bool:
    """Whether g = 1 or g = x^s - 1 for a divisor s of beta.

    The roots of such a g~ form a multiplicative subgroup, so the
    root-product polynomial is g~ itself and the criterion holds.
    """
    gt = reduce_mod2(gens.g)
    if gt == BinPoly.one():
        return True
    return any(
        gt == BinPoly.xn_minus_1(s)
        for s in range(1, gens.beta + 1)
        if gens.beta % s == 0
    )


def cy_linear_implication_check(code: Code) -> tuple[bool, bool]:
    """(extended Gray image of C linear, Gray image of C_Y linear)."""
    whole = gray_is_linear_oracle(code).linear
    quat = gray_is_linear_oracle(code.puncture_y()).linear
    return whole, quat


# ----------------------------------------------------------------------
# binary codes with a two-block cyclic structure


@dataclass(frozen=True)
class BinaryBlockCode:
    """A set of binary words of length r + s, packed little-endian into ints."""

    r: int
    s: int
    words: frozenset[int]

    def __len__(self) -> int:
        return len(self.words)

    def to_tuples(self) -> list[tuple[int, ...]]:
        n = self.r + self.s
        return sorted(tuple((w >> i) & 1 for i in range(n)) for w in self.words)

    def double_shift(self, w: int) -> int:
        r, s = self.r, self.s
        left = w & ((1 << r) - 1)
        right = w >> r
        if r > 1:
            left = ((left << 1) | (left >> (r - 1))) & ((1 << r) - 1)
        if s > 1:
            right = ((right << 1) | (right >> (s - 1))) & ((1 << s) - 1)
        return left | (right << r)


def pack_bits(bits: Sequence[int]) -> int:
    return sum((b & 1) << i for i, b in enumerate(bits))


def ext_gray_image(code: Code) -> BinaryBlockCode:
    """The extended Gray image as a binary block code (r = alpha, s = 2*beta)."""
    ext = code.codec.ext_gray_bits
    return BinaryBlockCode(code.alpha, 2 * code.beta, frozenset(ext(w) for w in code.words))


def ext_psi_image(code: Code) -> BinaryBlockCode:
    """The extended Nechaev-Gray image; beta must be odd."""
    ext = code.codec.ext_psi_bits
    return BinaryBlockCode(code.alpha, 2 * code.beta, frozenset(ext(w) for w in code.words))


def is_double_cyclic(bc: BinaryBlockCode) -> bool:
    """Closure under the simultaneous cyclic shift of both coordinate blocks."""
    words = bc.words
    return all(bc.double_shift(w) in words for w in words)


@dataclass(frozen=True)
class DoubleCyclicGenerators:
    """Generators (b | 0), (ellp | a) of a binary double-cyclic code."""

    r: int
    s: int
    b: BinPoly
    ellp: BinPoly
    a: BinPoly

    def __post_init__(self):
        if not self.a.divides(BinPoly.xn_minus_1(self.s)) and not self.a.is_zero:
            raise DomainError(f"a = {self.a} does not divide x^{self.s}-1")
        if self.b.is_zero or not self.b.divides(BinPoly.xn_minus_1(self.r)):
            raise DomainError(f"b = {self.b} does not divide x^{self.r}-1")
        if self.ellp.degree >= self.b.degree:
            raise DomainError("deg(ellp) must be smaller than deg(b)")

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "b": list(self.b.coeffs),
            "ellp": list(self.ellp.coeffs),
            "a": list(self.a.coeffs),
        }


def double_cyclic_span(
    dcg: DoubleCyclicGenerators, capacity: int | None = None
) -> BinaryBlockCode:
    """GF(2) span of all simultaneous shifts of the two generators."""
    cap = resolve_capacity(capacity)
    r, s = dcg.r, dcg.s
    gens: list[int] = []
    for i in range(r):
        left = cyclic_reduce(BinPoly.monomial(i) * dcg.b, r)
        gens.append(pack_bits(left.coeffs + (0,) * (r - len(left.coeffs))))
    for i in range(lcm(r, s)):
        left = cyclic_reduce(BinPoly.monomial(i) * dcg.ellp, r)
        right = cyclic_reduce(BinPoly.monomial(i) * dcg.a, s)
        w = pack_bits(left.coeffs + (0,) * (r - len(left.coeffs)))
        w |= pack_bits(right.coeffs + (0,) * (s - len(right.coeffs))) << r
        gens.append(w)
    words = {0}
    for g in gens:
        if g in words:
            continue
        words |= {w ^ g for w in words}
        if len(words) > cap:
            raise CapacityError(f"double-cyclic span exceeds the bound {cap}")
    return BinaryBlockCode(r, s, frozenset(words))


# ----------------------------------------------------------------------
# solving p * gen = target in Z4[x]/(x^n - 1)


def _smith_solve_z4(m: list[list[int]], t: list[int]) -> list[int] | None:
    """One solution of M y = t over Z4 via diagonalization, or None.

    Row and column operations reduce M to diag(1..1, 2..2, 0..0); column
    operations are accumulated so a solution of the diagonal system can be
    mapped back.  Z4 is a chain ring, so this always succeeds.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [r[:] for r in m]
    rhs = t[:]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    diag: list[int] = []
    k = 0
    while k < min(rows, cols):
        pr = pc = -1
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j] % 2 == 1:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            for i in range(k, rows):
                for j in range(k, cols):
                    if a[i][j]:
                        pr, pc = i, j
                        break
                if pr >= 0:
                    break
        if pr < 0:
            break
        a[k], a[pr] = a[pr], a[k]
        rhs[k], rhs[pr] = rhs[pr], rhs[k]
        for row in a:
            row[k], row[pc] = row[pc], row[k]
        for vi in v:
            vi[k], vi[pc] = vi[pc], vi[k]
        piv = a[k][k]
        if piv in (3,):
            a[k] = [(3 * x) % 4 for x in a[k]]
            rhs[k] = (3 * rhs[k]) % 4
            piv = a[k][k]
        if piv == 1:
            for i in range(rows):
                if i != k and a[i][k]:
                    c = a[i][k]
                    a[i] = [(x - c * y) % 4 for x, y in zip(a[i], a[k])]
                    rhs[i] = (rhs[i] - c * rhs[k]) % 4
            for j in range(cols):
                if j != k and a[k][j]:
                    c = a[k][j]
                    for row in a:
                        row[j] = (row[j] - c * row[k]) % 4
                    for vi in v:
                        vi[j] = (vi[j] - c * vi[k]) % 4
        else:  # pivot 2; the whole remaining block is even
            for i in range(rows):
                if i != k and a[i][k]:
                    c = a[i][k] // 2
                    a[i] = [(x - c * y) % 4 for x, y in zip(a[i], a[k])]
                    rhs[i] = (rhs[i] - c * rhs[k]) % 4
            for j in range(cols):
                if j != k and a[k][j]:
                    c = a[k][j] // 2
                    for row in a:
                        row[j] = (row[j] - c * row[k]) % 4
                    for vi in v:
                        vi[j] = (vi[j] - c * vi[k]) % 4
        diag.append(a[k][k])
        k += 1
    y = [0] * cols
    for i, d in enumerate(diag):
        if d == 1:
            y[i] = rhs[i]
        else:  # d == 2
            if rhs[i] % 2:
                return None
            y[i] = (rhs[i] // 2) % 4
    for i in range(len(diag), rows):
        if rhs[i] % 4:
            return None
    sol = [sum(v[i][j] * y[j] for j in range(cols)) % 4 for i in range(cols)]
    for i in range(rows):
        if sum(m[i][j] * sol[j] for j in range(cols)) % 4 != t[i] % 4:
            return None
    return sol


def _cyclic_mult_matrix(gen: QuatPoly, n: int) -> list[list[int]]:
    cols = []
    cur = cyclic_reduce(gen, n)
    for _ in range(n):
        cols.append(list(cur.coeffs) + [0] * (n - len(cur.coeffs)))
        cur = cyclic_reduce(QuatPoly.x() * cur, n)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def solve_cyclic_z4(gen: QuatPoly, target: QuatPoly, n: int) -> QuatPoly | None:
    """Some p with p * gen = target in Z4[x]/(x^n - 1), or None."""
    m = _cyclic_mult_matrix(gen, n)
    t = list(cyclic_reduce(target, n).coeffs)
    t += [0] * (n - len(t))
    sol = _smith_solve_z4(m, t)
    return QuatPoly(sol) if sol is not None else None


def solve_cyclic_z4_lexmin(gen: QuatPoly, target: QuatPoly, n: int) -> QuatPoly | None:
    """The solution with the lexicographically smallest coefficient vector.

    Coefficients are fixed one at a time, smallest digit first, keeping the
    remaining system solvable; each step costs one elimination pass.
    """
    m = _cyclic_mult_matrix(gen, n)
    t = list(cyclic_reduce(target, n).coeffs)
    t += [0] * (n - len(t))
    if _smith_solve_z4(m, t) is None:
        return None
    fixed: list[int] = []
    for i in range(n):
        rest = [[row[j] for j in range(i + 1, n)] for row in m]
        for d in range(4):
            t2 = [
                (t[r] - sum(m[r][j] * fixed[j] for j in range(i)) - m[r][i] * d) % 4
                for r in range(n)
            ]
            if not rest[0] and any(t2[r] % 4 for r in range(n)):
                continue
            if not rest[0] or _smith_solve_z4(rest, t2) is not None:
                fixed.append(d)
                break
        else:
            raise InternalError("digit fixing lost solvability")
    return QuatPoly(fixed)


def all_cyclic_solutions(gen: QuatPoly, target: QuatPoly, n: int) -> list[QuatPoly]:
    """Every p with p * gen = target (exhaustive; intended for small n)."""
    from itertools import product as iproduct

    out = []
    tgt = cyclic_reduce(target, n)
    for coeffs in iproduct(range(4), repeat=n):
        p = QuatPoly(coeffs)
        if cyclic_reduce(p * gen, n) == tgt:
            out.append(p)
    return out


# ----------------------------------------------------------------------
# Nechaev-Gray image generators


def psi_image_generators(
    gens: CyclicGenerators, capacity: int | None = None
) -> DoubleCyclicGenerators:
    """Generators of the Nechaev-Gray image when the gcd criterion holds.

    Returns (b | 0) and (ell' | f~^2 h~) over blocks (alpha, 2*beta), with
    ell' = p~ * ell mod b for the lexicographically smallest p solving
    p * (fh + 2f) = psi^{-1}(f~^2 h~) in Z4[x]/(x^beta - 1).
    """
    report = gray_linear_criterion(gens)
    if not report.verdict:
        raise PreconditionError(
            "the Gray image is not linear; the Nechaev-Gray image has no "
            "double-cyclic generator pair"
        )
    beta = gens.beta
    ft, ht = reduce_mod2(gens.f), reduce_mod2(gens.h)
    a = cyclic_reduce(ft * ft * ht, 2 * beta)
    bits = list(a.coeffs) + [0] * (2 * beta - len(a.coeffs))
    target = QuatPoly(nechaev_gray_inv(bits))
    p = solve_cyclic_z4_lexmin(gens.fh_plus_2f, target, beta)
    if p is None:
        raise InternalError("psi preimage of f~^2 h~ is not in the quaternary code")
    if gens.b == BinPoly.one():
        ellp = BinPoly.zero()
    else:
        ellp = (reduce_mod2(p) * gens.ell) % gens.b
    return DoubleCyclicGenerators(gens.alpha, 2 * beta, gens.b, ellp, a)


# ----------------------------------------------------------------------
# quaternary-only oracle that scales past enumeration


def z4_gray_linear_oracle(
    f: QuatPoly, h: QuatPoly, g: QuatPoly, n: int, mode: str = "auto"
) -> bool:
    """Closure verdict for the quaternary cyclic code <fh + 2f>.

    ``enumerate`` builds the code and runs the generic pattern-pair oracle.
    ``algebraic`` checks the generator-pattern pairs only, using the fact
    that the order-two subcode is exactly 2 * <f~>: a doubled product
    2(s & t) lies in the code iff f~ divides the polynomial with
    coefficient vector s & t.  Both modes implement the same predicate.
    """
    if n < 1 or n % 2 == 0:
        raise DomainError("length must be odd")
    if f * h * g != QuatPoly.xn_minus_1(n):
        raise DomainError(f"f*h*g != x^{n}-1 over Z4")
    dg = int(g.degree) if not g.is_zero else 0
    dh = int(h.degree)
    size = 1 << (2 * dg + dh)
    if mode == "auto":
        mode = "enumerate" if size <= ORACLE_ENUM_LIMIT else "algebraic"
    if mode == "enumerate":
        cur = cyclic_reduce(f * h + QuatPoly((2,)) * f, n)
        rows = []
        for _ in range(n):
            rows.append(MixedVector((), cur.coeffs + (0,) * (n - len(cur.coeffs))))
            cur = cyclic_reduce(QuatPoly.x() * cur, n)
        code = Code.from_vectors_span(0, n, rows)
        return gray_is_linear_oracle(code).linear
    if mode != "algebraic":
        raise DomainError(f"unknown oracle mode {mode!r}")
    ft = reduce_mod2(f)
    fh_t = reduce_mod2(f * h)
    basis = []
    for i in range(dg):
        row = BinPoly.monomial(i) * fh_t
        basis.append(pack_bits(row.coeffs))
    for i, s in enumerate(basis):
        for t in basis[i:]:
            inter = s & t
            prod = BinPoly([(inter >> k) & 1 for k in range(n)])
            if not ft.divides(prod):
                return False
    return True


# ----------------------------------------------------------------------
# search


def _analyze_candidate(gens: CyclicGenerators) -> tuple[CyclicGenerators, LinearityReport]:
    return gens, gray_linear_criterion(gens)


def search_by_type(
    alpha: int,
    beta: int,
    gamma: int | None = None,
    delta: int | None = None,
    kappa: int | None = None,
    linear_only: bool = False,
    capacity: int | None = None,
    jobs: int = 1,
) -> list[tuple[CyclicGenerators, LinearityReport]]:
    """Cyclic codes of the requested type with their criterion reports.

    ``None`` acts as a wildcard; results keep the deterministic order of
    the candidate stream regardless of ``jobs``.
    """
    matching = []
    for gens in enumerate_all_cyclic(alpha, beta, capacity=capacity, on_over_capacity="skip"):
        ct = code_type(gens)
        if gamma is not None and ct.gamma != gamma:
            continue
        if delta is not None and ct.delta != delta:
            continue
        if kappa is not None and ct.kappa != kappa:
            continue
        matching.append(gens)
    if jobs > 1 and len(matching) > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(jobs) as pool:
            analyzed = pool.map(_analyze_candidate, matching)
    else:
        analyzed = [_analyze_candidate(g) for g in matching]
    if linear_only:
        analyzed = [(g, rep) for g, rep in analyzed if rep.verdict]
    return analyzed
