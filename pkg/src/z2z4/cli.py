"""Command-line front end.

Subcommands: factor, gray, analyze, code, linearity, image, search,
reproduce.  ``--json`` switches any of them to machine output with a
stable schema; identical inputs produce byte-identical output except for
the elapsed-time field.  Exit codes: 0 ok, 1 error, 2 precondition
failure.  The Z2Z4_CAPACITY environment variable overrides the
enumeration bound.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .additive import (
    Code,
    GeneratorMatrix,
    MixedVector,
    gray_is_linear_oracle,
    standard_form,
)
from .cyclofield import factor_xn_minus_1_z2, factor_xn_minus_1_z4
from .cycliccode import (
    CyclicGenerators,
    code_type,
    order_two_generators,
    three_generator_form,
    violations,
)
from .errors import DomainError, PreconditionError, Z2Z4Error
from .linimage import (
    double_cyclic_span,
    gray_linear_criterion,
    is_double_cyclic,
    psi_image_generators,
    search_by_type,
)
from .polyring import BinPoly, QuatPoly
from .reproduce import run_checks
from . import zmaps


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which this tool
    # reserves for precondition failures; route through DomainError instead
    def error(self, message):
        raise DomainError(message)


def _emit(args, report: dict, text: str) -> None:
    if args.json:
        report["version"] = __version__
        report["elapsed_s"] = time.time() - args._t0
        print(json.dumps(report, indent=2))
    else:
        print(text)


def _parse_vector_csv(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip() != "")


def _load_code_spec(arg: str) -> CyclicGenerators:
    if arg.lstrip().startswith("{"):
        raw = arg
    else:
        with open(arg, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        obj = json.loads(raw)
    except ValueError as exc:
        raise DomainError(f"bad code JSON: {exc}") from exc
    return CyclicGenerators.from_json(obj)


def _load_matrix(path: str) -> GeneratorMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    if raw.lstrip().startswith("{"):
        try:
            return GeneratorMatrix.from_json(json.loads(raw))
        except ValueError as exc:
            raise DomainError(f"bad matrix JSON: {exc}") from exc
    return GeneratorMatrix.from_text(raw)


# ----------------------------------------------------------------------
# subcommands


def cmd_factor(args) -> int:
    ring = args.ring
    if ring == "z2":
        factors = factor_xn_minus_1_z2(args.n)
    else:
        factors = factor_xn_minus_1_z4(args.n)
    report = {
        "command": "factor",
        "inputs": {"n": args.n, "ring": ring},
        "factors": [list(p.coeffs) for p in factors],
    }
    _emit(args, report, "\n".join(str(p) for p in factors))
    return 0


def cmd_gray(args) -> int:
    name = args.map
    vec = args.vector
    if name in ("phi", "psi"):
        if args.inv:
            bits = _parse_vector_csv(vec)
            out = zmaps.gray_inv(bits) if name == "phi" else zmaps.nechaev_gray_inv(bits)
        else:
            quats = _parse_vector_csv(vec)
            out = zmaps.gray(quats) if name == "phi" else zmaps.nechaev_gray(quats)
        text = ",".join(map(str, out))
        result = list(out)
    else:
        if args.inv:
            bits = _parse_vector_csv(vec)
            alpha = args.alpha
            if alpha is None:
                raise DomainError("--alpha is required to invert an extended map")
            binpart, image = bits[:alpha], bits[alpha:]
            quat = (
                zmaps.gray_inv(image) if name == "Phi" else zmaps.nechaev_gray_inv(image)
            )
            mv = MixedVector(binpart, quat)
            text = str(mv)
            result = {"bin": list(mv.bin), "quat": list(mv.quat)}
        else:
            mv = MixedVector.parse(vec, alpha=args.alpha, beta=args.beta)
            out = zmaps.ext_gray(mv) if name == "Phi" else zmaps.ext_nechaev_gray(mv)
            text = ",".join(map(str, out))
            result = list(out)
    report = {
        "command": "gray",
        "inputs": {"map": name, "inv": bool(args.inv), "vector": vec},
        "result": result,
    }
    _emit(args, report, text)
    return 0


def cmd_analyze(args) -> int:
    matrix = _load_matrix(args.matrix)
    code = Code.from_matrix(matrix)
    sf = standard_form(matrix)
    cyclic = code.is_cyclic()
    witness = None if cyclic else code.cyclic_witness()
    oracle = gray_is_linear_oracle(code, matrix, mode="generators")
    quat_oracle = gray_is_linear_oracle(code.puncture_y())
    report = {
        "command": "analyze",
        "inputs": {"matrix": matrix.to_json()},
        "type": {
            "alpha": sf.code_type.alpha,
            "beta": sf.code_type.beta,
            "gamma": sf.code_type.gamma,
            "delta": sf.code_type.delta,
            "kappa": sf.code_type.kappa,
        },
        "size": len(code),
        "cyclic": cyclic,
        "shift_witness": [str(w) for w in witness] if witness else None,
        "separable": code.is_separable(),
        "gray_image_linear": oracle.linear,
        "gray_witness": [str(w) for w in oracle.witness] if oracle.witness else None,
        "quaternary_image_linear": quat_oracle.linear,
    }
    lines = [
        f"type: {sf.code_type}",
        f"|C| = {len(code)}",
        f"cyclic: {'yes' if cyclic else 'no'}"
        + (f"   witness: {witness[0]} -> {witness[1]} not in code" if witness else ""),
        f"separable: {'yes' if code.is_separable() else 'no'}",
        f"extended Gray image linear: {'yes' if oracle.linear else 'no'}"
        + (
            f"   witness: 2*({oracle.witness[0]})*({oracle.witness[1]}) = {oracle.witness[2]} not in code"
            if oracle.witness
            else ""
        ),
        f"quaternary Gray image linear: {'yes' if quat_oracle.linear else 'no'}",
    ]
    _emit(args, report, "\n".join(lines))
    return 0


def _gens_from_args(args) -> CyclicGenerators:
    return CyclicGenerators(
        args.alpha,
        args.beta,
        BinPoly.parse(args.b),
        BinPoly.parse(args.ell) if args.ell is not None else BinPoly.zero(),
        QuatPoly.parse(args.f),
        QuatPoly.parse(args.h),
        QuatPoly.parse(args.g),
    )


def cmd_code(args) -> int:
    errs = violations(
        args.alpha,
        args.beta,
        BinPoly.parse(args.b),
        BinPoly.parse(args.ell) if args.ell is not None else BinPoly.zero(),
        QuatPoly.parse(args.f),
        QuatPoly.parse(args.h),
        QuatPoly.parse(args.g),
    )
    if errs:
        report = {"command": "code", "valid": False, "violations": errs}
        _emit(args, report, "invalid generator data:\n  " + "\n  ".join(errs))
        raise DomainError("generator data violates the canonical form")
    gens = _gens_from_args(args)
    ct = code_type(gens)
    w1, w2 = order_two_generators(gens)
    t1, t2, t3 = three_generator_form(gens)
    report = {
        "command": "code",
        "inputs": gens.to_json(),
        "valid": True,
        "type": {
            "gamma": ct.gamma,
            "delta": ct.delta,
            "kappa": ct.kappa,
            "kappa1": ct.kappa1,
            "kappa2": ct.kappa2,
            "delta1": ct.delta1,
            "delta2": ct.delta2,
        },
        "size": ct.size,
        "order_two_generators": [str(w1), str(w2)],
        "three_generator_form": [str(t1), str(t2), str(t3)],
    }
    lines = [
        "valid: yes",
        f"type: {ct}  (kappa1={ct.kappa1}, kappa2={ct.kappa2}, delta1={ct.delta1}, delta2={ct.delta2})",
        f"|C| = {ct.size}",
        f"order-two subcode generators: {w1}, {w2}",
        f"three-generator form: {t1}, {t2}, {t3}",
    ]
    _emit(args, report, "\n".join(lines))
    return 0


def cmd_linearity(args) -> int:
    gens = _load_code_spec(args.code)
    rep = gray_linear_criterion(gens, with_oracle=args.oracle)
    report = {
        "command": "linearity",
        "inputs": gens.to_json(),
        "report": rep.to_json(),
    }
    lines = [
        f"criterion polynomial f~*b/gcd(b, ell*g~): {rep.criterion_poly_a}",
        f"root-product polynomial of g~: {rep.tensor_poly}",
        f"gcd: {rep.gcd_value}",
        f"extended Gray image linear: {'yes' if rep.verdict else 'no'}",
    ]
    if rep.oracle_verdict is not None:
        lines.append(f"oracle agrees: {'yes' if rep.oracle_verdict == rep.verdict else 'NO'}")
    _emit(args, report, "\n".join(lines))
    return 0


def cmd_image(args) -> int:
    gens = _load_code_spec(args.code)
    dcg = psi_image_generators(gens)
    report = {
        "command": "image",
        "inputs": gens.to_json(),
        "map": "Psi",
        "generators": dcg.to_json(),
    }
    lines = [
        f"blocks: r = {dcg.r}, s = {dcg.s}",
        f"generators: ({dcg.b} | 0), ({dcg.ellp} | {dcg.a})",
    ]
    if args.dump:
        span = double_cyclic_span(dcg)
        words = ["".join(map(str, t)) for t in span.to_tuples()]
        report["words"] = words
        report["double_cyclic"] = is_double_cyclic(span)
        lines.append(f"|image| = {len(words)}")
        lines.extend(words)
    _emit(args, report, "\n".join(lines))
    return 0


def cmd_search(args) -> int:
    gamma = delta = kappa = None
    if args.type:
        parts = [p.strip() for p in args.type.split(",")]
        if len(parts) not in (2, 3):
            raise DomainError("--type expects gamma,delta or gamma,delta,kappa")
        gamma, delta = int(parts[0]), int(parts[1])
        if len(parts) == 3:
            kappa = int(parts[2])
    results = search_by_type(
        args.alpha, args.beta, gamma, delta, kappa,
        linear_only=args.linear_only, jobs=args.jobs,
    )
    rows = []
    for gens, rep in results:
        ct = code_type(gens)
        rows.append(
            {
                "b": list(gens.b.coeffs),
                "ell": list(gens.ell.coeffs),
                "f": list(gens.f.coeffs),
                "h": list(gens.h.coeffs),
                "g": list(gens.g.coeffs),
                "type": [ct.gamma, ct.delta, ct.kappa],
                "linear": rep.verdict,
            }
        )
    report = {
        "command": "search",
        "inputs": {
            "alpha": args.alpha,
            "beta": args.beta,
            "type": args.type,
            "linear_only": bool(args.linear_only),
        },
        "count": len(rows),
        "results": rows,
    }
    lines = [f"{len(rows)} codes"]
    for gens, rep in results:
        ct = code_type(gens)
        lines.append(
            f"b={gens.b}  ell={gens.ell}  f={gens.f}  h={gens.h}  g={gens.g}"
            f"  type=({ct.gamma},{ct.delta},{ct.kappa})  linear={'yes' if rep.verdict else 'no'}"
        )
    _emit(args, report, "\n".join(lines))
    return 0


def cmd_reproduce(args) -> int:
    checks = run_checks(quick=args.quick, jobs=args.jobs)
    all_passed = all(c.passed for c in checks)
    report = {
        "command": "reproduce",
        "inputs": {"quick": bool(args.quick)},
        "checks": [c.to_json() for c in checks],
        "all_passed": all_passed,
    }
    width = max(len(c.name) for c in checks)
    lines = [
        f"[{'ok' if c.passed else 'FAIL'}] {c.name.ljust(width)}  {json.dumps(c.details, sort_keys=True)}"
        for c in checks
    ]
    lines.append("all checks passed" if all_passed else "SOME CHECKS FAILED")
    _emit(args, report, "\n".join(lines))
    return 0 if all_passed else 1


# ----------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="z2z4", description=__doc__)
    parser.add_argument("--version", action="version", version=f"z2z4 {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("factor", help="factor x^n-1 over Z2 or Z4 (n odd)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", choices=("z2", "z4"), required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("gray", help="apply a Gray-type map or its inverse")
    p.add_argument("--map", choices=("phi", "psi", "Phi", "Psi"), required=True)
    p.add_argument("--inv", action="store_true")
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--beta", type=int, default=None)
    p.add_argument("vector", help="csv digits, or 'bits|quats' for extended maps")
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("analyze", help="analyze a generator matrix file")
    p.add_argument("--matrix", required=True, help="JSON or text-grid matrix file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("code", help="validate and describe a cyclic code")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--ell", default=None)
    p.add_argument("--f", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("linearity", help="gcd criterion for the Gray image")
    p.add_argument("--code", required=True, help="code JSON (inline or file path)")
    p.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
    p.set_defaults(func=cmd_linearity)

    p = sub.add_parser("image", help="Nechaev-Gray image generators")
    p.add_argument("--code", required=True, help="code JSON (inline or file path)")
    p.add_argument("--map", choices=("Psi",), default="Psi")
    p.add_argument("--dump", action="store_true", help="list every image word")
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("search", help="search cyclic codes by type")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--type", default=None, help="gamma,delta[,kappa]")
    p.add_argument("--linear-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="run the cross-validation checklist")
    p.add_argument("--quick", action="store_true", help="restricted sweep, a few seconds")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_reproduce)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        args._t0 = time.time()
        return args.func(args)
    except PreconditionError as exc:
        print(f"PreconditionError: {exc}", file=sys.stderr)
        return 2
    except Z2Z4Error as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
