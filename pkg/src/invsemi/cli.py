"""``invsemi`` command line.

Exit codes: 0 verified or success, 1 refuted (negative verification), 2
usage, input or size-limit error.
"""

import argparse
import json
import sys

from . import config, verify
from .bicyclic import bicyclic_format, bicyclic_inverse, bicyclic_is_idempotent, bicyclic_parse, bicyclic_product
from .congruences import all_congruences, is_congruence, is_congruence_free
from .constructions import (
    SandwichMatrix,
    adjoin_identity,
    adjoin_zero,
    brandt_extension,
    cyclic_group,
    dihedral_group,
    inverse_symmetric_monoid,
    klein_four_group,
    matrix_units,
    quaternion_group,
    rees_matrix,
    symmetric_group,
    trivial_semigroup,
)
from .core import is_group
from .document import load, load_congruence, store
from .errors import SemigroupError, SizeLimitError, UnsupportedStructureError
from .report import analyze, decomposition_report, format_analysis, format_decomposition

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def _origin(exc):
    tb = exc.__traceback__
    module = None
    while tb is not None:
        name = tb.tb_frame.f_globals.get("__name__", "")
        if name.startswith("invsemi.") and name != "invsemi.cli":
            module = name.split(".", 1)[1]
        tb = tb.tb_next
    return module or "cli"


def parse_group(spec):
    """``cyclic:N``, ``symmetric:N``, ``dihedral:N``, ``klein``, ``quaternion``, ``trivial`` or a document path."""
    kind, _, arg = spec.partition(":")
    makers = {"cyclic": cyclic_group, "symmetric": symmetric_group, "dihedral": dihedral_group}
    if kind in makers:
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"group spec {spec!r} needs an integer parameter") from None
        return makers[kind](n)
    if kind == "klein" and not arg:
        return klein_four_group()
    if kind == "quaternion" and not arg:
        return quaternion_group()
    if kind == "trivial" and not arg:
        return trivial_semigroup()
    G = load(spec)
    if not is_group(G):
        raise UsageError(f"{spec} is not a group")
    return G


def _sandwich(text):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--sandwich must be a JSON matrix: {exc.msg}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise UsageError("--sandwich must be a JSON list of lists")
    return SandwichMatrix(rows)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"construct {args.kind} needs --{name.replace('_', '-')}")


def cmd_construct(args):
    kind = args.kind
    if kind == "brandt":
        _need(args, "group", "lam")
        S = brandt_extension(parse_group(args.group), args.lam)
    elif kind == "matrix-units":
        _need(args, "lam")
        S = matrix_units(args.lam)
    elif kind == "rees":
        _need(args, "group", "sandwich")
        S = rees_matrix(parse_group(args.group), _sandwich(args.sandwich))
    elif kind == "cyclic":
        _need(args, "n")
        S = cyclic_group(args.n)
    elif kind == "inverse-symmetric":
        _need(args, "n")
        S = inverse_symmetric_monoid(args.n)
    elif kind in ("adjoin-zero", "adjoin-identity"):
        _need(args, "input")
        src = load(args.input)
        S = adjoin_zero(src) if kind == "adjoin-zero" else adjoin_identity(src)
    else:  # argparse restricts choices
        raise UsageError(f"unknown construction {kind!r}")
    store(S, args.output)
    return EXIT_OK


def _guard(S, bound, what):
    if S.order > bound:
        raise SizeLimitError(f"{what} refused: order {S.order} > bound {bound}")


def cmd_analyze(args):
    S = load(args.input)
    _guard(S, config.max_analyze_order(), "analyze")
    report = analyze(S)
    if args.json:
        _emit_json(report)
    else:
        sys.stdout.write(format_analysis(report))
    return EXIT_OK


def cmd_decompose(args):
    S = load(args.input)
    _guard(S, config.max_analyze_order(), "decompose")
    try:
        report = decomposition_report(S)
    except UnsupportedStructureError as exc:
        sys.stderr.write(f"invsemi: structure: {exc}\n")
        return EXIT_REFUTED
    if args.json:
        _emit_json(report)
    else:
        sys.stdout.write(format_decomposition(report))
    return EXIT_OK


def cmd_congruences(args):
    S = load(args.input)
    if args.check is not None:
        c = load_congruence(args.check)
        v = is_congruence(S, c)
        if args.json:
            _emit_json({"congruence": v.holds, "witness": None if v.holds else
                        {"pair": list(v.witness[0]), "translator": v.witness[1], "side": v.witness[2]}})
        else:
            sys.stdout.write(("true" if v else f"false ({v.reason})") + "\n")
        return EXIT_OK if v else EXIT_REFUTED
    if args.check_free:
        _guard(S, config.max_scan_order(), "congruence-free scan")
        v = is_congruence_free(S)
        if args.json:
            _emit_json({"congruence_free": v.holds,
                        "witness": None if v.holds else [list(b) for b in v.witness.blocks()]})
        else:
            line = "true" if v else "false (witness: " + " | ".join(
                " ".join(map(str, b)) for b in v.witness.blocks()) + ")"
            sys.stdout.write(line + "\n")
        return EXIT_OK if v else EXIT_REFUTED
    _guard(S, config.max_lattice_order(), "congruence lattice")
    lattice = all_congruences(S)
    if args.json:
        _emit_json({"count": len(lattice),
                    "congruences": [[list(b) for b in c.blocks()] for c in lattice],
                    "join": lattice.join.tolist()})
    else:
        sys.stdout.write(f"{len(lattice)} congruences\n")
        for i, c in enumerate(lattice):
            sys.stdout.write(f"{i}: " + " | ".join(" ".join(map(str, b)) for b in c.blocks()) + "\n")
    return EXIT_OK


def cmd_bicyclic(args):
    operands = [bicyclic_parse(t) for t in args.operands]
    if args.op == "mul":
        if len(operands) < 2:
            raise UsageError("bicyclic mul needs at least two operands")
        sys.stdout.write(bicyclic_format(bicyclic_product(operands)) + "\n")
        return EXIT_OK
    if len(operands) != 1:
        raise UsageError(f"bicyclic {args.op} takes exactly one operand")
    x = operands[0]
    if args.op == "inv":
        sys.stdout.write(bicyclic_format(bicyclic_inverse(x)) + "\n")
        return EXIT_OK
    idem = bicyclic_is_idempotent(x)
    sys.stdout.write(("true" if idem else "false") + "\n")
    return EXIT_OK if idem else EXIT_REFUTED


def cmd_verify(args):
    unknown = [s for s in args.suite if s not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(verify.SUITES)}")
    results = verify.run(args.suite)
    if args.json:
        _emit_json([{"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail} for c in results])
    else:
        for c in results:
            status = "PASS" if c.passed else "FAIL"
            detail = f"  {c.detail}" if c.detail else ""
            sys.stdout.write(f"{status} {c.suite} {c.name}{detail}\n")
        failed = sum(not c.passed for c in results)
        sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_OK if all(c.passed for c in results) else EXIT_REFUTED


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="invsemi", description="Exact tools for finite inverse semigroups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a semigroup document")
    c.add_argument("kind", choices=["brandt", "matrix-units", "rees", "cyclic", "inverse-symmetric",
                                    "adjoin-zero", "adjoin-identity"])
    c.add_argument("--group", help="group spec: cyclic:N, symmetric:N, dihedral:N, klein, quaternion, trivial, or a file")
    c.add_argument("--lambda", dest="lam", type=int)
    c.add_argument("--sandwich", help='JSON matrix over the group, null for zero, e.g. "[[0,null],[null,0]]"')
    c.add_argument("--n", type=int)
    c.add_argument("--input", help="source document for adjoin-* ('-' for stdin)")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(func=cmd_construct)

    for name, func, helptext in (("analyze", cmd_analyze, "report structural flags"),
                                 ("decompose", cmd_decompose, "Brandt decomposition")):
        a = sub.add_parser(name, help=helptext)
        a.add_argument("input")
        a.add_argument("--json", action="store_true")
        a.set_defaults(func=func)

    g = sub.add_parser("congruences", help="congruence lattice and checks")
    g.add_argument("input")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--list", action="store_true", help="list all congruences (default)")
    mode.add_argument("--check-free", action="store_true", help="exit 0 iff congruence-free")
    mode.add_argument("--check", metavar="PARTITION", help="exit 0 iff the partition document is a congruence")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_congruences)

    b = sub.add_parser("bicyclic", help="bicyclic monoid arithmetic on q^a p^b normal forms")
    b.add_argument("op", choices=["mul", "inv", "idem"])
    b.add_argument("operands", nargs="+")
    b.set_defaults(func=cmd_bicyclic)

    v = sub.add_parser("verify", help="run the finite verification suites")
    v.add_argument("suite", nargs="*", default=[])
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"invsemi: usage: {exc}\n")
        return EXIT_ERROR
    except (SemigroupError, ValueError) as exc:
        sys.stderr.write(f"invsemi: {_origin(exc)}: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
