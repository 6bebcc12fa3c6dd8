"""Command-line front end. Every command prints one JSON report.

Exit codes: 0 success, 1 a verification failed, 2 bad input or flags.
"""

from __future__ import annotations

import argparse
import os
import sys

from ppav import io
from ppav.errors import CapExceeded, PpavError, VerificationFailed
from ppav.levels import (
    conjugacy_certificate_check,
    conjugate_mod_p,
    g3_block_forms,
    g3_conjugator,
    g3_conjugator_constant,
    reduce_mod,
)
from ppav.siegel import act, is_fixed
from ppav.strata import (
    admissible_triples,
    component_count_bound,
    component_dimension,
    connectivity_certificate,
    dual_classes,
    family_F0_witness,
    family_Fx_witness,
    odd_g_master_witness,
    prop4_link,
    prop5_link,
    triple_count,
)
from ppav.symplectic import (
    InvolutionType,
    group_closure,
    involution_invariants,
    is_involution,
    is_symplectic,
    random_symplectic,
    reiner_normal_form,
    symplectic_inverse,
)

INT64_MAX = 2**63 - 1
DEFAULT_MAX_CLOSURE = 100_000


class UsageError(Exception):
    """Bad input: reported with exit code 2."""


def _load(path):
    try:
        obj = io.load_json(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except ValueError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    # a report produced by this tool can be fed back in directly
    if isinstance(obj, dict) and "command" in obj and "result" in obj:
        obj = obj["result"]
    return obj


def _report(command, inputs, result, verified=None):
    rep = {"command": command, "inputs": inputs, "result": result}
    if verified is not None:
        rep["verified"] = verified
    return rep


def _inputs(args, *names):
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


# commands ---------------------------------------------------------------------


def cmd_classify(args):
    R = io.decode_involution_matrix(_load(args.file))
    if not R.is_square or R.rows % 2:
        raise UsageError(f"expected a 2g x 2g matrix, got {R.rows}x{R.cols}")
    if not is_symplectic(R):
        raise UsageError("matrix is not symplectic")
    if not is_involution(R):
        raise UsageError("matrix does not square to the identity")
    inv = involution_invariants(R)
    result = {
        "g": R.rows // 2,
        "symplectic": True,
        "involution": True,
        "type": io.encode_type(inv.type),
        "admissible": inv.type.is_admissible,
        "trace": inv.trace,
        "fixed_lattice_rank": inv.fixed_rank,
        "anti_fixed_lattice_rank": inv.anti_fixed_rank,
        "index": str(inv.index),
    }
    return _report("classify", _inputs(args, "file"), result), 0


def _type_from_args(args) -> InvolutionType:
    if args.x is None or args.y is None or args.z is None:
        raise UsageError("--x, --y and --z are all required")
    t = InvolutionType(args.x, args.y, args.z)
    if args.g is not None and t.g != args.g:
        raise UsageError(f"2x + y + z = {t.g} does not match --g {args.g}")
    return t


def cmd_normal_form(args):
    t = _type_from_args(args)
    M = reiner_normal_form(t).matrix
    if args.seed is not None:
        E = random_symplectic(t.g, args.seed, args.word_length)
        M = symplectic_inverse(E) @ M @ E
    result = io.encode_involution(M)
    result["type"] = io.encode_type(t)
    return _report("normal-form", _inputs(args, "g", "x", "y", "z", "seed", "word_length"), result), 0


def cmd_act(args):
    R = io.decode_involution_matrix(_load(args.matrix))
    Z = io.decode_point(_load(args.point))
    return _report("act", _inputs(args, "matrix", "point"), io.encode_point(act(R, Z))), 0


def cmd_fixed(args):
    R = io.decode_involution_matrix(_load(args.matrix))
    Z = io.decode_point(_load(args.point))
    fixed = is_fixed(R, Z)
    return _report("fixed", _inputs(args, "matrix", "point"), {"fixed": fixed}, fixed), 0 if fixed else 1


def _closure_cap() -> int:
    raw = os.environ.get("PPAV_MAX_CLOSURE")
    if raw is None:
        return DEFAULT_MAX_CLOSURE
    try:
        cap = int(raw)
    except ValueError as exc:
        raise UsageError(f"PPAV_MAX_CLOSURE must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise UsageError("PPAV_MAX_CLOSURE must be positive")
    return cap


def cmd_witness(args):
    g, fam = args.g, args.family
    if g is None:
        raise UsageError("--g is required")
    involutions = []
    extra = {}
    if fam == "F0":
        Z = family_F0_witness(g)
    elif fam == "Fx":
        if args.x is None:
            raise UsageError("--x is required for the Fx family")
        Z = family_Fx_witness(g, args.x)
    elif fam == "prop4":
        if args.x is None:
            raise UsageError("--x is required for prop4")
        Z, inv = prop4_link(g, args.x)
        involutions = [inv]
    elif fam == "prop5":
        Z, inv = prop5_link(g)
        involutions = [inv]
    else:
        Z, found = odd_g_master_witness(g)
        involutions = list(found.values())
        bound = triple_count(g)
        try:
            order = len(group_closure([i.matrix for i in involutions], _closure_cap()))
            extra = {"group_order": order, "group_order_bound": bound, "capped": False}
        except CapExceeded as exc:
            order = exc.partial_size
            extra = {"group_order": order, "group_order_bound": bound, "capped": True}
    result = {
        "family": fam,
        "witness": io.encode_point(Z),
        "involutions": [
            dict(io.encode_involution(i), type=io.encode_type(i.type)) for i in involutions
        ],
        **extra,
    }
    ok = all(is_fixed(i.matrix, Z) for i in involutions)
    if extra:
        ok = ok and extra["group_order"] >= extra["group_order_bound"]
    return _report("witness", _inputs(args, "family", "g", "x"), result, ok), 0 if ok else 1


def cmd_strata(args):
    g = args.g
    if g is None or g < 2:
        raise UsageError("--g >= 2 is required")
    triples = admissible_triples(g)
    classes = dual_classes(g)
    result = {
        "g": g,
        "triples": [
            {"type": io.encode_type(t), "dimension": component_dimension(t)} for t in triples
        ],
        "classes": [io.encode_class(c) for c in classes],
        "triple_count": len(triples),
        "class_count": len(classes),
    }
    if g >= 3:
        result["class_count_bound"] = component_count_bound(g)
    return _report("strata", _inputs(args, "g"), result), 0


def _max_integer_entry(cert) -> int:
    best = 0
    for e in cert.edges:
        best = max(best, e.involution_a.matrix.max_abs_entry(), e.involution_b.matrix.max_abs_entry())
        for v in e.witness.Z.entries():
            for q in (v.re, v.im):
                best = max(best, abs(q.numerator), q.denominator)
    return best


def cmd_certify(args):
    if args.g is None:
        raise UsageError("--g is required")
    if args.g < 3:
        raise UsageError("certify needs g >= 3; the case g = 2 is not covered")
    cert = connectivity_certificate(args.g)
    result = io.encode_certificate(cert)
    ok = cert.connected and all(e.verified for e in cert.edges)
    if args.max_entry_check:
        m = _max_integer_entry(cert)
        result["max_entry"] = str(m)
        ok = ok and m <= INT64_MAX
    return _report("certify", _inputs(args, "g", "max_entry_check"), result, ok), 0 if ok else 1


def cmd_level(args):
    action = args.action
    if action == "reduce":
        if args.mod is None or len(args.files) != 1:
            raise UsageError("level reduce needs one matrix file and --mod")
        L = reduce_mod(io.decode_involution_matrix(_load(args.files[0])), args.mod)
        return _report("level reduce", _inputs(args, "files", "mod"), io.encode_level(L)), 0
    if action == "conjugate":
        if args.p is None or len(args.files) != 2:
            raise UsageError("level conjugate needs two matrix files and --p")
        a, b = (io.decode_level(_load(f), args.p) for f in args.files)
        c = conjugate_mod_p(a, b, args.p)
        return _report("level conjugate", _inputs(args, "files", "p"), {"conjugate": c}), 0
    if action == "certificate":
        if args.mod is None or len(args.files) != 3:
            raise UsageError("level certificate needs files E, Ra, Rb and --mod")
        E = io.decode_involution_matrix(_load(args.files[0]))
        a, b = (io.decode_level(_load(f), args.mod) for f in args.files[1:])
        ok = conjugacy_certificate_check(E, a, b, args.mod)
        return _report("level certificate", _inputs(args, "files", "mod"), {"valid": ok}, ok), 0 if ok else 1
    if args.p is None:
        raise UsageError("level conjugator needs --p")
    E = g3_conjugator(args.p)
    a, b = g3_block_forms(args.p)
    ok = conjugacy_certificate_check(E, a, b, args.p)
    result = {"p": args.p, "c": g3_conjugator_constant(args.p), "matrix": io.encode_matrix(E)}
    return _report("level conjugator", _inputs(args, "p"), result, ok), 0 if ok else 1


# parsing ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p = argparse.ArgumentParser(prog="ppav", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="type of an integral symplectic involution")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("normal-form", parents=[common], help="normal form W(x,y,z) + W(x,y,z)^T")
    for f in ("--g", "--x", "--y", "--z"):
        s.add_argument(f, type=int)
    s.add_argument("--seed", type=int, help="conjugate by a random symplectic matrix")
    s.add_argument("--word-length", type=int, default=12)
    s.set_defaults(func=cmd_normal_form)

    for name, func, text in (
        ("act", cmd_act, "apply R to a Siegel point"),
        ("fixed", cmd_fixed, "test whether R fixes a Siegel point"),
    ):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("--matrix", required=True)
        s.add_argument("--point", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("witness", parents=[common], help="witness period matrices")
    s.add_argument("--family", choices=["F0", "Fx", "prop4", "prop5", "master"], required=True)
    s.add_argument("--g", type=int)
    s.add_argument("--x", type=int)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("strata", parents=[common], help="admissible types, dimensions, classes")
    s.add_argument("--g", type=int)
    s.set_defaults(func=cmd_strata)

    s = sub.add_parser("certify", parents=[common], help="connectivity certificate for genus g")
    s.add_argument("--g", type=int)
    s.add_argument("--max-entry-check", action="store_true",
                   help="also require every certificate entry to fit in int64")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("level", parents=[common], help="level structures modulo n")
    s.add_argument("action", choices=["reduce", "conjugate", "certificate", "conjugator"])
    s.add_argument("files", nargs="*")
    s.add_argument("--p", type=int)
    s.add_argument("--mod", type=int)
    s.set_defaults(func=cmd_level)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except VerificationFailed as exc:
        print(f"ppav {args.command}: verification failed: {exc}", file=sys.stderr)
        return 1
    except (UsageError, io.FormatError, PpavError, ValueError) as exc:
        print(f"ppav {args.command}: {exc}", file=sys.stderr)
        return 2
    text = io.dumps(report, pretty=args.pretty)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
