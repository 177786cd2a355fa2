"""Command-line interface.

Exit codes: 0 success, 1 input error (message names the offending flag),
2 verification FAIL from the ``verify`` subcommand.  Output is deterministic
for identical inputs; no color is ever emitted, so NO_COLOR needs no special
handling.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .parameters import (
    CaseTag,
    InducedRepParams,
    classify,
    derived,
    format_rational,
    parse_rational,
)
from . import ktypes
from .constituents import enumerate_constituents, label_of, region_for
from .structure import (
    diagram_to_dot,
    diagram_to_json,
    module_diagram,
    socle_series,
)
from .unitarity import (
    complementary_series,
    constituent_unitarizable,
    nonunitarity_witness,
)
from .howe import omega_image, possible_embeddings
from . import oracle

__all__ = ["main", "run"]


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's default 2
        raise CLIError(message)


def _add_params_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", required=True, help="rank (integer >= 2)")
    p.add_argument("--alpha", required=True, help="character exponent in {0,1,2,3}")
    p.add_argument("--sigma", required=True, help="rational parameter, e.g. -3/2")


def _add_format_flag(p: argparse.ArgumentParser, dot: bool = False) -> None:
    choices = ["text", "json", "dot"] if dot else ["text", "json"]
    p.add_argument("--format", choices=choices, default="text")


def _params_from(args: argparse.Namespace) -> InducedRepParams:
    try:
        n = int(args.n)
    except ValueError:
        raise CLIError(f"--n: not an integer: {args.n!r}") from None
    try:
        alpha = int(args.alpha)
    except ValueError:
        raise CLIError(f"--alpha: not an integer: {args.alpha!r}") from None
    try:
        sigma = parse_rational(args.sigma)
    except ValueError as e:
        raise CLIError(f"--sigma: {e}") from None
    try:
        return InducedRepParams(n=n, alpha=alpha, sigma=sigma)
    except ValueError as e:
        raise CLIError(str(e)) from None


def _require_reducible(params: InducedRepParams) -> None:
    if classify(params) is CaseTag.IRREDUCIBLE:
        raise CLIError(
            f"--sigma: {params} is irreducible (sigma_tilde="
            f"{format_rational(params.sigma_tilde)} is not an integer); "
            "no constituent structure to report"
        )


def _cmd_classify(args) -> int:
    params = _params_from(args)
    case = classify(params)
    d = derived(params)
    if args.format == "json":
        payload = {
            "case": case.value,
            "sigma_tilde": format_rational(d.sigma_tilde),
            "rho": format_rational(d.rho),
            "n0": d.n0,
            "n1": d.n1,
            "k": d.k if case is not CaseTag.IRREDUCIBLE else None,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{case.value}, sigma_tilde={format_rational(d.sigma_tilde)}")
    return 0


def _cmd_constituents(args) -> int:
    params = _params_from(args)
    _require_reducible(params)
    cs = enumerate_constituents(params)
    if args.format == "json":
        payload = {
            "case": cs.case.value,
            "index_bound": None if cs.index_bound is None else list(cs.index_bound),
            "constituents": [
                {"label": str(lab), "region": region_for(params, lab).to_json()}
                for lab in cs.labels
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        bound = "" if cs.index_bound is None else f", {cs.index_bound[0]}={cs.index_bound[1]}"
        print(f"{params}: {cs.case.value}{bound}, {len(cs.labels)} constituents")
        for lab in cs.labels:
            print(f"  {lab}: {region_for(params, lab).describe()}")
    return 0


def _cmd_diagram(args) -> int:
    params = _params_from(args)
    _require_reducible(params)
    diagram = module_diagram(params)
    socle = socle_series(params)
    if args.format == "dot":
        sys.stdout.write(diagram_to_dot(diagram, socle))
    elif args.format == "json":
        print(diagram_to_json(diagram, socle))
    else:
        print(f"{params}: nodes " + " ".join(str(x) for x in diagram.nodes))
        for u, v in diagram.edges:
            print(f"  {u} -> {v}")
    return 0


def _cmd_socle(args) -> int:
    params = _params_from(args)
    _require_reducible(params)
    socle = socle_series(params)
    if args.format == "json":
        print(json.dumps([[str(x) for x in layer] for layer in socle.layers]))
    else:
        for depth, layer in enumerate(socle.layers, start=1):
            print(f"layer {depth}: " + " ".join(str(x) for x in layer))
    return 0


def _cmd_unitary(args) -> int:
    params = _params_from(args)
    if classify(params) is CaseTag.IRREDUCIBLE:
        ok = complementary_series(params)
        if ok:
            print(f"{params}: irreducible, unitarizable (complementary-series)")
        else:
            witness = nonunitarity_witness(params)
            detail = ""
            if witness is not None:
                lam, j = witness
                detail = f"; witness lambda={ktypes.format_ktype(lam)}, j={j}"
            print(f"{params}: irreducible, not unitarizable{detail}")
        return 0
    cs = enumerate_constituents(params)
    rows = []
    for lab in cs.labels:
        verdict = constituent_unitarizable(params, lab)
        rows.append((lab, verdict))
    if args.format == "json":
        payload = [
            {"label": str(lab), "unitarizable": v.unitarizable, "reason": v.reason}
            for lab, v in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        for lab, v in rows:
            word = "unitarizable" if v.unitarizable else "not unitarizable"
            print(f"{lab}: {word} ({v.reason})")
    return 0


def _int_flag(args, name: str) -> int:
    raw = getattr(args, name)
    try:
        return int(raw)
    except ValueError:
        raise CLIError(f"--{name}: not an integer: {raw!r}") from None


def _cmd_omega(args) -> int:
    p = _int_flag(args, "p")
    q = _int_flag(args, "q")
    n = _int_flag(args, "n")
    if p < 0 or q < 0:
        raise CLIError("--p/--q: signature entries must be >= 0")
    if n < 2:
        raise CLIError("--n: rank below supported range (need n >= 2)")
    image = omega_image(p, q, n)
    region = region_for(image.target, image.generator)
    if args.format == "json":
        payload = {
            "p": p,
            "q": q,
            "target": {
                "n": n,
                "alpha": image.target.alpha,
                "sigma": format_rational(image.target.sigma),
            },
            "shape": image.shape,
            "generator": str(image.generator),
            "members": [str(x) for x in image.members],
            "generator_region": region.to_json(),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    trivial = " (trivial representation)" if region.single_point() == (0,) * n else ""
    if image.shape == "single":
        print(
            f"target {image.target}; Omega = {image.generator};"
            f" K-types: {region.describe()}{trivial}"
        )
    else:
        members = " + ".join(str(x) for x in image.members)
        print(
            f"target {image.target}; Omega = <{image.generator}> = {members};"
            f" generator K-types: {region.describe()}{trivial}"
        )
    return 0


def _cmd_embeddings(args) -> int:
    params = _params_from(args)
    _require_reducible(params)
    pairs = possible_embeddings(params)
    if args.format == "json":
        print(json.dumps([list(pq) for pq in pairs]))
    else:
        if not pairs:
            print("no possible embeddings")
        for p, q in pairs:
            print(f"({p},{q})")
    return 0


def _cmd_ktype(args) -> int:
    params = _params_from(args)
    try:
        lam = ktypes.parse_ktype(getattr(args, "lambda"))
    except ValueError as e:
        raise CLIError(f"--lambda: {e}") from None
    if len(lam) != params.n:
        raise CLIError(f"--lambda: expected {params.n} entries, got {len(lam)}")
    rows = []
    for j in range(1, params.n + 1):
        for direction in ("up", "down"):
            try:
                coeff = ktypes.transition(params, lam, j, direction)
                value = format_rational(coeff) + (" (blocked)" if coeff == 0 else "")
            except ValueError:
                value = "no such K-type"
            rows.append((j, direction, value))
    if args.format == "json":
        payload = {
            "lambda": list(lam),
            "transitions": [
                {"j": j, "direction": d, "coefficient": v} for j, d, v in rows
            ],
        }
        if classify(params) is not CaseTag.IRREDUCIBLE:
            payload["constituent"] = str(label_of(params, lam))
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    print(f"K-type lambda=({ktypes.format_ktype(lam)}) in {params}")
    if classify(params) is not CaseTag.IRREDUCIBLE:
        print(f"constituent: {label_of(params, lam)}")
    for j, direction, value in rows:
        print(f"  {direction:4s} j={j}: {value}")
    return 0


def _parse_range(raw: str, flag: str) -> list[int]:
    try:
        if ":" in raw:
            lo, hi = raw.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(part) for part in raw.split(",")]
    except ValueError:
        raise CLIError(f"--{flag}: expected A:B or a comma list, got {raw!r}") from None


def _cmd_verify(args) -> int:
    if args.n is not None or args.alpha is not None or args.sigma is not None:
        if None in (args.n, args.alpha, args.sigma):
            raise CLIError("--n/--alpha/--sigma must be given together")
        points = [_params_from(args)]
    else:
        points = []
        for n in _parse_range(args.n_range, "n-range"):
            for alpha in _parse_range(args.alpha_set, "alpha-set"):
                for st in _parse_range(args.sigma_tilde_range, "sigma-tilde-range"):
                    sigma = Fraction(st) - Fraction(n + 1 + alpha, 2)
                    points.append(InducedRepParams(n=n, alpha=alpha, sigma=sigma))
    if args.lmax == "auto":
        lmax_of = lambda params: None
    else:
        try:
            fixed = int(args.lmax)
        except ValueError:
            raise CLIError(f"--lmax: expected 'auto' or an integer, got {args.lmax!r}") from None
        lmax_of = lambda params: fixed

    all_ok = True
    for params in points:
        verdict = oracle.compare(params, lmax_of(params))
        all_ok &= verdict.ok
        record = {
            "n": params.n,
            "alpha": params.alpha,
            "sigma": format_rational(params.sigma),
            "sigma_tilde": format_rational(params.sigma_tilde),
            "case": verdict.case,
            "lmax": verdict.lmax,
            "ok": verdict.ok,
            "checks": dict(verdict.checks),
            "witness": verdict.witness,
        }
        print(json.dumps(record, sort_keys=True))
    return 0 if all_ok else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="dpseries", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, needs_params in (
        ("classify", _cmd_classify, True),
        ("constituents", _cmd_constituents, True),
        ("socle", _cmd_socle, True),
        ("unitary", _cmd_unitary, True),
        ("embeddings", _cmd_embeddings, True),
    ):
        p = sub.add_parser(name)
        _add_params_flags(p)
        _add_format_flag(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("diagram")
    _add_params_flags(p)
    _add_format_flag(p, dot=True)
    p.set_defaults(fn=_cmd_diagram)

    p = sub.add_parser("omega")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--n", required=True)
    _add_format_flag(p)
    p.set_defaults(fn=_cmd_omega)

    p = sub.add_parser("ktype")
    _add_params_flags(p)
    p.add_argument("--lambda", required=True, help="comma-separated K-type index, e.g. 1,0,-2")
    _add_format_flag(p)
    p.set_defaults(fn=_cmd_ktype)

    p = sub.add_parser("verify")
    p.add_argument("--n", default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--sigma", default=None)
    p.add_argument("--n-range", dest="n_range", default="2:5")
    p.add_argument("--alpha-set", dest="alpha_set", default="0,1,2,3")
    p.add_argument("--sigma-tilde-range", dest="sigma_tilde_range", default="-6:6")
    p.add_argument("--lmax", default="auto")
    p.set_defaults(fn=_cmd_verify)
    return parser


_VALUE_FLAGS = {"--sigma", "--lambda", "--sigma-tilde-range", "--alpha-set", "--n-range"}


def _normalize_argv(argv: list[str]) -> list[str]:
    # join flag/value pairs whose value starts with "-" (e.g. --sigma -3/2),
    # which argparse would otherwise read as another option
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
        return args.fn(args)
    except CLIError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
