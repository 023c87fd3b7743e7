"""Command-line front end.

Exit codes: 0 success or pass, 1 a check failed (or matroids are not
isomorphic), 2 usage or input error.  Exactly one document goes to stdout.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from hypermatroid import constructions as cons
from hypermatroid import formats as fmt
from hypermatroid.corpus import enumerate_gpfs
from hypermatroid.hopf import ClassRegistry, MinorHopfAlgebra, Tensor, verify_bialgebra
from hypermatroid.hyperfield import (
    BUILTINS,
    KRASNER,
    HyperfieldError,
    canonical_to_krasner,
    identity_hom,
    verify_hyperfield_axioms,
)
from hypermatroid.iso import find_isomorphism
from hypermatroid.matroid import (
    DEFAULT_PERP_CAP,
    CircuitSet,
    GPFunction,
    MatroidError,
    check_circuit_axioms,
    check_gpf,
    circuits_from_gpf,
    dual_gpf,
    perp_minimal,
)
from hypermatroid.report import Report

PERP_ENV = "HYPERMATROID_MAX_PERP"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _matroid_text(m, with_circuits: bool = False) -> str:
    h = m.hyperfield
    doc = fmt.matroid_to_doc(m, with_circuits)
    lines = [f"hyperfield: {h.name}", "ground: " + " ".join(m.ground)]
    if "rank" in doc:
        lines.append(f"rank: {doc['rank']}")
    for entry in doc.get("gpf", []):
        lines.append(f"  {{{','.join(entry['subset'])}}} -> {entry['value']}")
    for c in doc.get("circuits", []):
        lines.append("  circuit " + " ".join(f"{x}:{v}" for x, v in c["coords"].items()))
    return "\n".join(lines) + "\n"


def _algebra_text(x) -> str:
    return repr(x) + "\n"


def emit(args, kind: str, obj, extra=None) -> None:
    if args.format == "json":
        if kind == "report":
            out = fmt.serialize_report(obj)
        elif kind == "matroid":
            out = fmt.serialize_matroid(obj, with_circuits=bool(extra))
        elif kind == "algebra":
            out = fmt.serialize_algebra(obj, extra)
        else:
            out = fmt.dumps(obj)
    else:
        if kind == "report":
            out = obj.text()
        elif kind == "matroid":
            out = _matroid_text(obj, bool(extra))
        elif kind == "algebra":
            out = _algebra_text(obj)
        else:
            out = json.dumps(obj, sort_keys=True) + "\n"
    sys.stdout.write(out)


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_matroid(path: str):
    return fmt.parse_matroid(_read(path))


def load_gpf(path: str) -> GPFunction:
    m = load_matroid(path)
    if not isinstance(m, GPFunction):
        raise UsageError(f"{path}: this command needs a Grassmann-Plücker function, not a circuit list")
    return m


def _split(text: str) -> list:
    return [x for x in text.split(",") if x] if text else []


def _perp_cap() -> int:
    raw = os.environ.get(PERP_ENV)
    if raw is None:
        return DEFAULT_PERP_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{PERP_ENV} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check_hyperfield(args) -> int:
    h = fmt.parse_hyperfield(_read(args.file), verify=False)
    if h.name in BUILTINS and not h.finite:
        raise UsageError(f"{h.name} is infinite; only finite tables can be checked")
    rep = verify_hyperfield_axioms(h)
    emit(args, "report", rep)
    return 0 if rep.passed else 1


def cmd_check_gpf(args) -> int:
    m = load_matroid(args.file)
    if isinstance(m, CircuitSet):
        rep = check_circuit_axioms(m, args.type)
    else:
        rep = check_gpf(m, args.type)
    emit(args, "report", rep)
    return 0 if rep.passed else 1


def cmd_circuits(args) -> int:
    emit(args, "matroid", circuits_from_gpf(load_gpf(args.file)))
    return 0


def cmd_dual(args) -> int:
    emit(args, "matroid", dual_gpf(load_gpf(args.file)))
    return 0


def cmd_perp(args) -> int:
    m = load_matroid(args.file)
    c = circuits_from_gpf(m) if isinstance(m, GPFunction) else m
    emit(args, "matroid", perp_minimal(c, args.type, cap=_perp_cap()))
    return 0


def _minor(op):
    def run(args) -> int:
        emit(args, "matroid", op(load_matroid(args.file), _split(args.set)))
        return 0
    return run


def cmd_dsum(args) -> int:
    a, b = load_gpf(args.left), load_gpf(args.right)
    if args.prefixes:
        parts = _split(args.prefixes)
        if len(parts) != 2:
            raise UsageError("--prefixes needs two comma-separated prefixes")
        out = cons.direct_sum_prefixed(a, b, tuple(p + "." for p in parts))
    else:
        out = cons.direct_sum(a, b)
    emit(args, "matroid", out)
    return 0


def _homomorphism(source, target_name: str):
    if target_name == source.name:
        return identity_hom(source)
    if target_name == KRASNER.name:
        return canonical_to_krasner(source)
    raise UsageError(f"no homomorphism from {source.name} to {target_name} is available")


def cmd_push(args) -> int:
    phi = load_gpf(args.file)
    emit(args, "matroid", cons.pushforward(_homomorphism(phi.hyperfield, args.to), phi))
    return 0


def cmd_underlying(args) -> int:
    phi = load_gpf(args.file)
    emit(args, "matroid", cons.pushforward(canonical_to_krasner(phi.hyperfield), phi), extra=True)
    return 0


def cmd_iso(args) -> int:
    a, b = load_gpf(args.left), load_gpf(args.right)
    w = find_isomorphism(a, b)
    rep = Report("isomorphism")
    rep.tick()
    if w is None:
        rep.fail("no-isomorphism", (), "no bijection and scalar match the two functions")
    else:
        rep.witness = w.to_dict(a.hyperfield)
    emit(args, "report", rep.finish())
    return 0 if w is not None else 1


def _algebra_for(args):
    """The Hopf algebra and the element named by the input file (a matroid or
    an algebra document)."""
    text = _read(args.file)
    doc = fmt._load(text)
    if isinstance(doc, dict) and doc.get("schema") == fmt.ALGEBRA_SCHEMA:
        x, h = fmt.parse_algebra(text)
        if isinstance(x, Tensor):
            raise UsageError("expected an algebra element, got a tensor")
        alg = MinorHopfAlgebra(ClassRegistry(h))
        return alg, x, h
    phi = fmt.matroid_from_doc(doc)
    if not isinstance(phi, GPFunction):
        raise UsageError("the Hopf algebra commands need a Grassmann-Plücker function")
    alg = MinorHopfAlgebra(ClassRegistry(phi.hyperfield))
    return alg, alg.registry.element(phi), phi.hyperfield


def cmd_coproduct(args) -> int:
    alg, x, h = _algebra_for(args)
    emit(args, "algebra", alg.coproduct(x), h)
    return 0


def cmd_antipode(args) -> int:
    alg, x, h = _algebra_for(args)
    s = alg.antipode_takeuchi(x) if args.method == "takeuchi" else alg.antipode_recursive(x)
    emit(args, "algebra", s, h)
    return 0


def cmd_verify_hopf(args) -> int:
    gens = [load_gpf(p) for p in args.files]
    if args.enumerate:
        name, _, size = args.enumerate.partition(":")
        if name not in BUILTINS or not BUILTINS[name].finite or not size.isdigit():
            raise UsageError("--enumerate expects FINITE_HYPERFIELD:N, e.g. signs:3")
        h = BUILTINS[name]
        for n in range(int(size) + 1):
            gens.extend(enumerate_gpfs(h, n))
    if not gens:
        raise UsageError("give matroid files or --enumerate")
    if args.sample is not None:
        rng = random.Random(args.seed)
        gens = rng.sample(gens, min(args.sample, len(gens)))
    hs = {g.hyperfield for g in gens}
    if len(hs) != 1:
        raise UsageError("all generators must share one hyperfield")
    alg = MinorHopfAlgebra(ClassRegistry(hs.pop()))
    for g in gens:
        alg.registry.monomial(g)
    rep = verify_bialgebra(alg, args.max_degree)
    emit(args, "report", rep)
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS,
                        help="output format (default json)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized subcommands (default 0)")

    p = argparse.ArgumentParser(prog="hypermatroid", parents=[common],
                                description="Matroids over hyperfields with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("check-hyperfield", cmd_check_hyperfield, "verify the axioms of a finite hyperfield table")
    sp.add_argument("file")
    sp = add("check-gpf", cmd_check_gpf, "check a GPF (or a circuit list) against the weak or strong axioms")
    sp.add_argument("--type", choices=["weak", "strong"], default="strong")
    sp.add_argument("file")
    sp = add("circuits", cmd_circuits, "H-circuits of a GPF")
    sp.add_argument("file")
    sp = add("dual", cmd_dual, "dual GPF")
    sp.add_argument("file")
    sp = add("perp", cmd_perp, f"brute-force cocircuits (finite hyperfields; cap from {PERP_ENV})")
    sp.add_argument("--type", choices=["weak", "strong"], default="strong")
    sp.add_argument("file")
    for name, op in [("restrict", cons.restrict), ("delete", cons.delete), ("contract", cons.contract)]:
        sp = add(name, _minor(op), f"{name} a matroid (GPF or circuits)")
        sp.add_argument("--set", required=True, help="comma-separated labels")
        sp.add_argument("file")
    sp = add("dsum", cmd_dsum, "direct sum of two GPFs")
    sp.add_argument("--prefixes", help="relabel with PREFIX. on each side, e.g. L,R")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = add("push", cmd_push, "push a GPF forward along a homomorphism")
    sp.add_argument("--to", required=True, help="target hyperfield (krasner, or the source itself)")
    sp.add_argument("file")
    sp = add("iso", cmd_iso, "search for an isomorphism (exit 1 when none exists)")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = add("underlying", cmd_underlying, "underlying ordinary matroid as a Krasner matroid with circuits")
    sp.add_argument("file")
    sp = add("coproduct", cmd_coproduct, "coproduct of a matroid class or algebra element")
    sp.add_argument("file")
    sp = add("antipode", cmd_antipode, "antipode of a matroid class or algebra element")
    sp.add_argument("--method", choices=["takeuchi", "recursive"], default="takeuchi")
    sp.add_argument("file")
    sp = add("verify-hopf", cmd_verify_hopf, "check the Hopf algebra axioms on a set of generators")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--enumerate", help="add every matroid over FINITE_HYPERFIELD on at most N elements")
    sp.add_argument("--sample", type=int, help="keep a random sample of this many generators")
    sp.add_argument("files", nargs="*")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "format"):
        args.format = "json"
    if not hasattr(args, "seed"):
        args.seed = 0
    try:
        return args.func(args)
    except (UsageError, fmt.FormatError, MatroidError, HyperfieldError, OSError) as exc:
        print(f"hypermatroid: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
