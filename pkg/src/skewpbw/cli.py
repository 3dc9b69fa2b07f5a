"""Command line front end.

One invocation runs one verb against a presentation file plus optional
bracket or derivation files, writes results to standard output and encodes
the outcome in the exit status:

  0  computed / verified / classified
  1  a verification or classification failed, or a stated hypothesis does
     not hold for the given data (the counterexample is printed)
  2  unusable input: unknown files, syntax errors, bad options

`--machine` switches every result to the byte-stable machine format (one
scalar-TAB-exponents line per term, `terms=<k>` headers, TAB-separated
status lines).  `--seed` fixes the sampling used by the verification and
classification verbs, which are otherwise deterministic in all inputs.
"""

import argparse
import sys
from functools import reduce

from .algebra import validate_presentation
from .catalog import build_example, example_entry, list_examples
from .derivations import (
    GammaDerivation,
    ToricAutomorphism,
    adjoint_preimage,
    check_derivation,
    decompose_derivation,
    validate_automorphism,
)
from .errors import (
    AllCommutatorsZero,
    DecompositionFailure,
    DivisionByZero,
    ExprSyntaxError,
    FileFormatError,
    HypothesisViolation,
    InvalidOptions,
    NDependenceViolation,
    NotClassifiable,
    NotInvertible,
    SkewPBWError,
    UnknownExample,
    UnknownSymbol,
    ValidationFailure,
    ZeroElement,
)
from .exprs import format_element, parse_element
from .files import (
    read_bracket,
    read_derivation,
    read_presentation,
    write_bracket,
    write_presentation,
)
from .poisson import (
    bracket_eval,
    classify_bracket,
    laurent_extend,
    localize_presentation,
    verify_poisson,
)

_USAGE_ERRORS = (
    FileFormatError,
    ExprSyntaxError,
    UnknownSymbol,
    NotInvertible,
    UnknownExample,
    InvalidOptions,
    DivisionByZero,
)


def _read_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc.strerror}") from None


def _load_presentation(path):
    return read_presentation(_read_file(path))


def _mode(args):
    return "machine" if args.machine else "pretty"


def _print_element(args, el, label=None):
    if args.machine:
        if label is not None:
            print(label)
        print(format_element(el, "machine"))
    elif label is not None:
        print(f"{label} = {format_element(el)}")
    else:
        print(format_element(el))


def cmd_normalize(args):
    p = _load_presentation(args.presentation)
    _print_element(args, parse_element(p, args.expr))
    return 0


def cmd_mul(args):
    p = _load_presentation(args.presentation)
    eng = p.engine()
    factors = [parse_element(p, s) for s in [args.expr] + args.more]
    _print_element(args, reduce(eng.multiply, factors))
    return 0


def cmd_commutator(args):
    p = _load_presentation(args.presentation)
    a = parse_element(p, args.left)
    b = parse_element(p, args.right)
    _print_element(args, p.engine().commutator(a, b))
    return 0


def cmd_bracket(args):
    p = _load_presentation(args.presentation)
    B = read_bracket(p, _read_file(args.bracket))
    a = parse_element(p, args.left)
    b = parse_element(p, args.right)
    _print_element(args, bracket_eval(B, a, b))
    return 0


def cmd_verify_poisson(args):
    p = _load_presentation(args.presentation)
    B = read_bracket(p, _read_file(args.bracket))
    report = verify_poisson(B, sample_budget=args.samples, seed=args.seed)
    if report.ok:
        if args.machine:
            print(f"ok\t{report.checked}")
        else:
            print(f"poisson axioms verified ({report.checked} checks)")
        return 0
    if args.machine:
        print(f"FAIL\t{report.axiom}")
        for w in report.witness:
            print(format_element(w, "machine"))
    else:
        print(f"{report.axiom} fails on:")
        for w in report.witness:
            print(f"  {format_element(w)}")
    return 1


def cmd_classify(args):
    p = _load_presentation(args.presentation)
    B = read_bracket(p, _read_file(args.bracket))
    try:
        result = classify_bracket(B, spot_checks=args.spot_checks, seed=args.seed)
    except NotClassifiable as exc:
        if args.machine:
            where = f"\t{exc.pair[0]} {exc.pair[1]}" if exc.pair else ""
            print(f"FAIL\tnot-classifiable{where}")
            if exc.detail:
                print(exc.detail)
        else:
            print(exc)
        return 1
    except AllCommutatorsZero:
        if args.machine:
            print("FAIL\tall-commutators-zero")
        else:
            print("every generator commutator vanishes: no scale to read off")
        return 1
    if args.machine:
        print(f"xi\t{result.xi}")
    else:
        pairs = ", ".join(f"({i}, {j})" for i, j in result.certified_pairs)
        print(f"xi = {result.xi}")
        print(f"certified on pairs {pairs}")
    return 0


def _load_derivation(args, p):
    return read_derivation(p, _read_file(args.derivation))


def cmd_check_derivation(args):
    p = _load_presentation(args.presentation)
    d = _load_derivation(args, p)
    try:
        validate_automorphism(p, d.gamma)
        check_derivation(p, d)
    except ValidationFailure as exc:
        if args.machine:
            where = " ".join(str(k) for k in exc.indices or ())
            print(f"FAIL\t{exc.condition}\t{where}".rstrip())
            if exc.detail:
                print(exc.detail)
        else:
            print(exc)
        return 1
    print("ok" if args.machine else "twisted Leibniz rule holds on every relation")
    return 0


def cmd_decompose_derivation(args):
    p = _load_presentation(args.presentation)
    d = _load_derivation(args, p)
    validate_automorphism(p, d.gamma)
    check_derivation(p, d)
    w, lambdas = decompose_derivation(p, d)
    if args.machine:
        print("w")
        print(format_element(w, "machine"))
        for i, lam in enumerate(lambdas, start=1):
            print(f"lambda\t{i}\t{lam}")
    else:
        print(f"w = {format_element(w)}")
        for i, lam in enumerate(lambdas, start=1):
            print(f"lambda_{i} = {lam}")
    return 0


def cmd_adjoint_preimage(args):
    p = _load_presentation(args.presentation)
    if args.gamma is None:
        g = ToricAutomorphism.identity(p)
    else:
        gd = read_derivation(p, _read_file(args.gamma))
        if any(ui.terms for ui in gd.u):
            raise InvalidOptions(
                "the --gamma file must set only gamma entries, not derivation values"
            )
        g = gd.gamma
    validate_automorphism(p, g)
    v = parse_element(p, args.expr)
    w = adjoint_preimage(p, g, v)
    _print_element(args, w)
    return 0


def cmd_localize(args):
    p = _load_presentation(args.presentation)
    out = write_presentation(localize_presentation(p))
    if args.bracket is not None:
        B = read_bracket(p, _read_file(args.bracket))
        _, B2 = laurent_extend(p, B)
        out += "\n" + write_bracket(B2)
    sys.stdout.write(out)
    return 0


def cmd_examples(args):
    if args.action == "list":
        for entry in list_examples():
            opts = ", ".join(f"{k}={v!r}" for k, v in entry.options)
            if args.machine:
                print(f"{entry.key}\t{opts or '-'}\t{entry.description}")
            else:
                suffix = f" (options: {opts})" if opts else ""
                print(f"{entry.key:14} {entry.description}{suffix}")
        return 0
    if args.key is None:
        raise InvalidOptions("`examples show` needs a catalog key")
    options = {
        name: value
        for name, value in (("n", args.n), ("m", args.m), ("v", args.v))
        if value is not None
    }
    p = build_example(args.key, **options)
    if not args.machine:
        print(f"# {example_entry(args.key).key}: {example_entry(args.key).description}")
    sys.stdout.write(write_presentation(p))
    return 0


def cmd_validate(args):
    try:
        p = _load_presentation(args.presentation)
        if args.purpose != "basic":
            validate_presentation(p, args.purpose)
    except ValidationFailure as exc:
        if args.machine:
            where = " ".join(str(k) for k in exc.indices or ())
            print(f"FAIL\t{exc.condition}\t{where}".rstrip())
        else:
            print(exc)
        return 1
    print(f"ok\t{args.purpose}" if args.machine else f"valid for purpose {args.purpose}")
    return 0


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--machine", action="store_true", help="byte-stable machine output"
    )
    common.add_argument(
        "--seed", type=int, default=0, help="seed for sampled checks (default 0)"
    )

    parser = argparse.ArgumentParser(
        prog="skewpbw",
        description="exact computation in skew PBW extensions and their "
        "quantum Laurent localizations",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, handler, help_text, **kwargs):
        sp = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        sp.set_defaults(func=handler)
        return sp

    sp = add("normalize", cmd_normalize, "parse an expression into normal form")
    sp.add_argument("presentation")
    sp.add_argument("expr")

    sp = add("mul", cmd_mul, "multiply two or more expressions")
    sp.add_argument("presentation")
    sp.add_argument("expr")
    sp.add_argument("more", nargs="+", metavar="expr")

    sp = add("commutator", cmd_commutator, "commutator [a, b] = ab - ba")
    sp.add_argument("presentation")
    sp.add_argument("left")
    sp.add_argument("right")

    sp = add("bracket", cmd_bracket, "evaluate a bracket from its generator table")
    sp.add_argument("presentation")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--bracket", required=True, metavar="FILE")

    sp = add("verify-poisson", cmd_verify_poisson, "check the Poisson axioms")
    sp.add_argument("presentation")
    sp.add_argument("--bracket", required=True, metavar="FILE")
    sp.add_argument("--samples", type=int, default=50, help="random triples (default 50)")

    sp = add("classify", cmd_classify, "find xi with {a, b} = xi (ab - ba)")
    sp.add_argument("presentation")
    sp.add_argument("--bracket", required=True, metavar="FILE")
    sp.add_argument("--spot-checks", type=int, default=5)

    sp = add("check-derivation", cmd_check_derivation, "twisted Leibniz compatibility")
    sp.add_argument("presentation")
    sp.add_argument("--derivation", required=True, metavar="FILE")

    sp = add(
        "decompose-derivation",
        cmd_decompose_derivation,
        "split a derivation into an inner part and a toric scaling",
    )
    sp.add_argument("presentation")
    sp.add_argument("--derivation", required=True, metavar="FILE")

    sp = add(
        "adjoint-preimage",
        cmd_adjoint_preimage,
        "solve (1 - gamma_1 ad-conjugation) w recovering v = w x_1 - gamma_1 x_1 w",
    )
    sp.add_argument("presentation")
    sp.add_argument("expr")
    sp.add_argument("--gamma", metavar="FILE", help="derivation file with gamma entries")

    sp = add("localize", cmd_localize, "invert x_1 (print the r = 1 presentation)")
    sp.add_argument("presentation")
    sp.add_argument("--bracket", metavar="FILE", help="extend this bracket as well")

    sp = add("examples", cmd_examples, "list or export the builtin catalog")
    sp.add_argument("action", choices=("list", "show"))
    sp.add_argument("key", nargs="?")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--v")

    sp = add("validate", cmd_validate, "check presentation conditions")
    sp.add_argument("presentation")
    sp.add_argument(
        "--purpose", choices=("basic", "laurent", "poisson"), default="basic"
    )

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        ValidationFailure,
        NotClassifiable,
        AllCommutatorsZero,
        DecompositionFailure,
        HypothesisViolation,
        NDependenceViolation,
        ZeroElement,
    ) as exc:
        if args.machine:
            print(f"FAIL\t{type(exc).__name__}")
            print(exc)
        else:
            print(f"failed: {exc}")
        return 1
    except SkewPBWError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
