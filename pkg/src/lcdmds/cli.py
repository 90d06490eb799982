"""Command-line front end: construction, verification, sweeps, reproduction.

Exit codes: 0 success (or reproduce PASS), 1 evaluation failure (budget
exhausted, reproduce FAIL), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, Tuple

from . import codes as codes_mod, sweep as sweep_mod
from ._version import __version__
from .construct import (
    INFINITY,
    ROOTS_OF_UNITY,
    ROOTS_UNION_GAMMA_R_SCALED,
    ROOTS_UNION_GAMMA_SCALED,
    ROOTS_WITH_ZERO,
    RothLempelParams,
    TwistedRSParams,
    grs_generator,
    roth_lempel_generator,
    structured_alpha,
    twisted_rs_generator,
)
from .errors import BudgetExceeded, CodingError
from .gf import FiniteField, make_field, subfield as subfield_view
from .linalg import format_matrix

ALPHA_CLI_KINDS = {
    "roots": ROOTS_OF_UNITY,
    "zero-plus-roots": ROOTS_WITH_ZERO,
    "lemma31": ROOTS_UNION_GAMMA_SCALED,
    "lemma39": ROOTS_UNION_GAMMA_R_SCALED,
}

FAMILY_CLI_NAMES = {
    "twisted-euclidean": sweep_mod.TWISTED_EUCLIDEAN,
    "twisted-hermitian": sweep_mod.TWISTED_HERMITIAN,
    "rl-euclidean": sweep_mod.RL_EUCLIDEAN,
    "rl-hermitian": sweep_mod.RL_HERMITIAN,
}


def _parse_field_flag(text: str) -> Tuple[int, int]:
    parts = text.split("^")
    if len(parts) == 1:
        return int(parts[0]), 1
    if len(parts) != 2:
        raise CodingError(f"--field expects p^m, got {text!r}")
    return int(parts[0]), int(parts[1])


def _load_modulus_file(path: str) -> Tuple[int, int, List[int]]:
    with open(path, "r", encoding="utf-8") as fh:
        d = json.load(fh)
    return int(d["p"]), int(d["m"]), [int(c) for c in d["modulus"]]


def _resolve_field(args) -> FiniteField:
    p, m = _parse_field_flag(args.field)
    modulus = None
    if getattr(args, "modulus_file", None):
        fp, fm, modulus = _load_modulus_file(args.modulus_file)
        if (fp, fm) != (p, m):
            raise CodingError(
                f"--modulus-file is for GF({fp}^{fm}), --field says GF({p}^{m})"
            )
    return make_field(p, m, modulus=modulus)


def _modulus_poly_str(modulus) -> str:
    terms = []
    for i in range(len(modulus) - 1, -1, -1):
        c = modulus[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            x = "x" if i == 1 else f"x^{i}"
            terms.append(x if c == 1 else f"{c}{x}")
    return " + ".join(terms) if terms else "0"


def cmd_field_info(args) -> int:
    field = _resolve_field(args)
    print(f"q = {field.q} = {field.p}^{field.m}")
    print(f"modulus = {list(field.modulus)}  ({_modulus_poly_str(field.modulus)})")
    print(f"gamma index = {field.gamma_index}")
    print("subfields: " + ", ".join(str(s) for s in field.subfield_orders()))
    for s in field.subfield_orders():
        members = subfield_view(field, s)
        print(f"  GF({s}): {len(members.members)} elements")
    return 0


def _parse_index_list(text: str, allow_inf: bool = False):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if allow_inf and tok.lower() in ("inf", "infinity"):
            out.append(INFINITY)
        else:
            out.append(int(tok))
    return out


def _element_flag(field: FiniteField, exp: Optional[int], index: Optional[int], name: str):
    if (exp is None) == (index is None):
        raise CodingError(f"give exactly one of --{name}-exp / --{name}-index")
    if exp is not None:
        return field.gamma_pow(exp)
    return field.element(index)


def _construct_alphas(args, field: FiniteField):
    if args.alpha_indices is not None:
        idx = _parse_index_list(args.alpha_indices, allow_inf=(args.family == "grs"))
        alphas = [a if a is INFINITY else field.element(a) for a in idx]
        return alphas, None
    if args.alpha is None:
        raise CodingError("give --alpha KIND or --alpha-indices LIST")
    kind = ALPHA_CLI_KINDS[args.alpha]
    sa = structured_alpha(kind, field, args.k, subfield_order=args.subfield)
    return list(sa.alphas), sa


def cmd_construct(args) -> int:
    field = _resolve_field(args)
    sidecar = {
        "family": args.family,
        "q": field.q,
        "p": field.p,
        "m": field.m,
        "modulus": list(field.modulus),
        "k": args.k,
    }
    alphas, sa = _construct_alphas(args, field)
    sidecar["alpha_indices"] = ["inf" if a is INFINITY else a.index for a in alphas]
    if sa is not None:
        sidecar["alpha_kind"] = sa.kind
        sidecar["subfield_order"] = sa.subfield_order

    if args.family == "grs":
        if args.v_indices:
            v = [field.element(i) for i in _parse_index_list(args.v_indices)]
        else:
            v = [field.one] * len(alphas)
        sidecar["v_indices"] = [e.index for e in v]
        gen = grs_generator(alphas, v, args.k)
    elif args.family == "twisted":
        if args.t is None or args.h is None:
            raise CodingError("twisted construction needs --t and --h")
        eta = _element_flag(field, args.eta_exp, args.eta_index, "eta")
        sidecar.update(t=args.t, h=args.h, eta_index=eta.index)
        gen = twisted_rs_generator(TwistedRSParams(tuple(alphas), args.k, args.t, args.h, eta))
    else:  # roth-lempel
        delta = _element_flag(field, args.delta_exp, args.delta_index, "delta")
        sidecar["delta_index"] = delta.index
        gen = roth_lempel_generator(RothLempelParams(tuple(alphas), args.k, delta))

    text = format_matrix(gen)
    payload = json.dumps(sidecar, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        with open(args.out + ".params.json", "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        print(f"wrote {gen.rows}x{gen.cols} matrix to {args.out}")
    else:
        # matrix block, blank line, one JSON sidecar block
        print(text)
        print(payload)
    return 0


def cmd_check(args) -> int:
    with open(args.code, "r", encoding="utf-8") as fh:
        desc = json.load(fh)
    field = None
    if args.modulus_file:
        p, m, modulus = _load_modulus_file(args.modulus_file)
        field = make_field(p, m, modulus=modulus)
    code = codes_mod.LinearCode.from_json_dict(desc, field=field)
    props = [p.strip() for p in args.props.split(",") if p.strip()]
    verdict = sweep_mod.evaluate_code(code, props)
    payload = json.dumps(verdict.to_json_dict(), sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    print(payload)
    if verdict.errors:
        for prop, msg in verdict.errors.items():
            print(f"error: {prop}: {msg}", file=sys.stderr)
        return 1
    return 0


def _spec_from_args(args) -> sweep_mod.SweepSpec:
    p, m = _parse_field_flag(args.field)
    modulus = None
    if args.modulus_file:
        fp, fm, modulus = _load_modulus_file(args.modulus_file)
        if (fp, fm) != (p, m):
            raise CodingError("--modulus-file does not match --field")
    kind = ALPHA_CLI_KINDS[args.alpha]
    cand = args.candidates
    explicit: Tuple[int, ...] = ()
    if cand.startswith("explicit:"):
        explicit = tuple(_parse_index_list(cand[len("explicit:"):]))
        cand_kind = sweep_mod.CANDIDATES_EXPLICIT
    else:
        cand_kind = {
            "all-nonzero": sweep_mod.CANDIDATES_ALL_NONZERO,
            "all": sweep_mod.CANDIDATES_ALL,
            "coset": sweep_mod.CANDIDATES_COSET,
        }[cand]
    return sweep_mod.SweepSpec(
        family=FAMILY_CLI_NAMES[args.family],
        p=p, m=m, k=args.k,
        alpha_kind=kind,
        t=args.t, h=args.h,
        modulus=tuple(modulus) if modulus else None,
        subfield_order=args.subfield,
        candidate_kind=cand_kind,
        explicit_candidates=explicit,
        allow_unchecked=args.allow_unchecked,
    )


def _strip_runtimes(report: sweep_mod.SweepReport):
    for row in report.rows:
        row.runtime = 0.0


def cmd_sweep(args) -> int:
    spec = _spec_from_args(args)
    report = sweep_mod.run_sweep(spec)
    if args.deterministic:
        _strip_runtimes(report)
    if args.out:
        sweep_mod.persist_report(report, args.out, fmt=args.format)
    s = report.summary
    print(
        f"rows={s['rows']} lcd_true={s['lcd_true']} mds_true={s['mds_true']} "
        f"non_grs_true={s['non_grs_true']} errors={s['errors']}"
    )
    return 0


def cmd_reproduce(args) -> int:
    modulus = None
    if args.modulus_file:
        _, _, modulus = _load_modulus_file(args.modulus_file)
    result = sweep_mod.reproduce(args.example, modulus=modulus)
    if args.deterministic:
        _strip_runtimes(result.report)
    if args.out:
        sweep_mod.persist_report(result.report, args.out, fmt=args.format)
    print(result.summary_line())
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lcdmds",
        description="Construct and verify LCD / MDS / non-Reed-Solomon codes "
                    "over odd-characteristic finite fields.",
    )
    top.add_argument("--version", action="version", version=f"lcdmds {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def add_field_flags(p):
        p.add_argument("--field", required=True, metavar="P^M",
                       help="field order as p^m, e.g. 3^4")
        p.add_argument("--modulus-file", metavar="PATH",
                       help='JSON {"p","m","modulus"} overriding the default modulus')

    p = sub.add_parser("field-info", help="print field parameters and subfield lattice")
    add_field_flags(p)
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("construct", help="emit a generator matrix plus JSON sidecar")
    add_field_flags(p)
    p.add_argument("--family", required=True, choices=["grs", "twisted", "roth-lempel"])
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--t", type=int, help="twist offset (twisted family)")
    p.add_argument("--h", type=int, help="hook row (twisted family)")
    p.add_argument("--eta-exp", type=int, help="eta = gamma^i")
    p.add_argument("--eta-index", type=int, help="eta by element index")
    p.add_argument("--delta-exp", type=int, help="delta = gamma^i")
    p.add_argument("--delta-index", type=int, help="delta by element index")
    p.add_argument("--alpha", choices=sorted(ALPHA_CLI_KINDS),
                   help="structured evaluation-point vector")
    p.add_argument("--alpha-indices", metavar="LIST",
                   help="explicit comma-separated evaluation point indices "
                        "('inf' allowed for grs)")
    p.add_argument("--subfield", type=int, metavar="S",
                   help="draw the structured vector from the order-S subfield")
    p.add_argument("--v-indices", metavar="LIST", help="grs column multipliers")
    p.add_argument("--out", metavar="FILE",
                   help="write matrix here and params to FILE.params.json "
                        "(default: both blocks to stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="evaluate properties of a code file")
    p.add_argument("--code", required=True, metavar="FILE",
                   help='JSON {"q","k","n","generator"}')
    p.add_argument("--props", required=True,
                   help="comma list from: lcd-e,lcd-h,mds,non-grs,distance")
    p.add_argument("--modulus-file", metavar="PATH")
    p.add_argument("--out", metavar="FILE", help="also write the verdict JSON here")
    p.set_defaults(func=cmd_check)

    def add_sweep_output_flags(p):
        p.add_argument("--out", metavar="FILE", help="write the report here")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--deterministic", action="store_true",
                       help="zero the runtime fields for golden-file comparison")

    p = sub.add_parser("sweep", help="sweep eta/delta candidates for one family")
    add_field_flags(p)
    p.add_argument("--family", required=True, choices=sorted(FAMILY_CLI_NAMES))
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--alpha", required=True, choices=sorted(ALPHA_CLI_KINDS))
    p.add_argument("--subfield", type=int, metavar="S")
    p.add_argument("--candidates", default="all-nonzero",
                   help="all-nonzero | all | coset | explicit:i1,i2,...")
    p.add_argument("--allow-unchecked", action="store_true",
                   help="skip the construction-hypothesis gate (exploratory runs)")
    add_sweep_output_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="run a canned example sweep and judge it")
    p.add_argument("example", choices=list(sweep_mod.EXAMPLE_IDS))
    p.add_argument("--modulus-file", metavar="PATH")
    add_sweep_output_flags(p)
    p.set_defaults(func=cmd_reproduce)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except CodingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
