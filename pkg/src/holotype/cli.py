"""Command-line interface.

Exit codes: 0 success, 1 suite failure or a checked predicate is false,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acs, harness, lie, symplectic
from .ratlin import Mat

ALGEBRAS = ("thurston", "heisenberg", "milnor", "abelian")
STRUCTURES = ("kim", "pairing", "compatible", "lemma", "random")


class UsageError(Exception):
    pass


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(args) -> tuple[lie.LieAlgebra, acs.AlmostComplexStructure]:
    L = lie.from_json(_read_json(args.alg))
    J = acs.AlmostComplexStructure.from_json(_read_json(args.acs))
    if L.dim != J.dim:
        raise UsageError(f"algebra has dimension {L.dim} but the structure has {J.dim}")
    return L, J


def cmd_build(args) -> int:
    kind = args.kind
    if kind == "thurston":
        doc = lie.to_json(lie.thurston(args.n))
    elif kind == "heisenberg":
        doc = lie.to_json(lie.gen_heisenberg(args.q, args.p))
    elif kind == "milnor":
        doc = lie.to_json(lie.milnor(2 * args.n))
    elif kind == "abelian":
        doc = lie.to_json(lie.abelian(args.n))
    elif kind == "kim":
        doc = symplectic.lemma_structure(Mat.identity(args.n + 1)).to_json()
    elif kind == "pairing":
        doc = acs.standard_pairing(2 * args.n).to_json()
    elif kind == "compatible":
        doc = symplectic.sample_compatible(2 * args.n + 2, args.seed).to_json()
    elif kind == "lemma":
        doc = symplectic.sample_lemma_family(args.n, args.seed).to_json()
    else:  # random
        doc = acs.random_acs(2 * args.n, args.seed).to_json()
    _emit(doc, args.out)
    return 0


def cmd_type(args) -> int:
    L, J = _load(args)
    if L.dim % 2:
        raise UsageError("holomorphic type needs an even-dimensional algebra")
    ln = acs.nijenhuis_space(L, J)
    h = acs.minimal_ij_subalgebra(L, J)
    t = (L.dim - h.dim) // 2
    print(t)
    print(f"nijenhuis_dim {ln.dim}")
    print(f"minimal_ij_subalgebra_dim {h.dim}")
    for row in h.basis.to_strings():
        print("basis " + " ".join(row))
    if args.out:
        _emit(
            {
                "holomorphic_type": t,
                "nijenhuis_dim": ln.dim,
                "minimal_ij_subalgebra": h.basis.to_strings(),
            },
            args.out,
        )
    return 0


def cmd_check(args) -> int:
    L, J = _load(args)
    g = symplectic.identity_metric(L.dim)
    results = {
        "compatible": symplectic.is_compatible(L, g, J),
        "symplectic": symplectic.is_symplectic(L, g, J),
    }
    if L.dim % 2 == 0 and L.dim >= 4:
        results["block_form"] = symplectic.block_form_check(J, L.dim // 2 - 1)
    for k, v in results.items():
        print(f"{k} {str(v).lower()}")
    if args.out:
        _emit(results, args.out)
    return 0 if all(results.values()) else 1


def cmd_verify(args) -> int:
    cfg = harness.SuiteConfig(
        suite=args.suite,
        n=args.n,
        q=args.q,
        p=args.p,
        samples=args.samples,
        seed=args.seed,
        output=args.report,
    )
    report = harness.run_suite(cfg)
    print(report.summary())
    if cfg.output:
        Path(cfg.output).write_text(report.dumps())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holotype",
        description="Holomorphic type of left-invariant almost complex structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="emit an algebra or almost complex structure as JSON")
    b.add_argument("kind", choices=ALGEBRAS + STRUCTURES)
    b.add_argument("--n", type=int, default=1,
                   help="thurston/kim/lemma/compatible: n (dim 2n+2); milnor/pairing/random: half-dimension; abelian: dimension")
    b.add_argument("--q", type=int, default=1)
    b.add_argument("--p", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    t = sub.add_parser("type", help="holomorphic type of J on an algebra")
    t.add_argument("--alg", required=True)
    t.add_argument("--acs", required=True)
    t.add_argument("--out")
    t.set_defaults(func=cmd_type)

    c = sub.add_parser("check", help="compatibility, symplectic and block-form predicates (identity metric)")
    c.add_argument("--alg", required=True)
    c.add_argument("--acs", required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=harness.SUITES)
    v.add_argument("--n", type=int, default=1)
    v.add_argument("--q", type=int, default=1)
    v.add_argument("--p", type=int, default=1)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError, ZeroDivisionError, OSError) as exc:
        print(f"holotype: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
