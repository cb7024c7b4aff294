"""Command-line interface.

Exit status: 0 on success, 1 for rejected input (parse errors, wrong
arity, degenerate or non-ruled parametrizations), 2 when an internal
invariant breaks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .curve import CurveParam, curve_implicitize, mu_basis_curve
from .errors import InputError, MuBasisError, ParseError
from .exprio import (
    format_hform,
    format_mpoly,
    matrix_json,
    mpoly_terms_json,
    mu_basis_json,
    parse_poly,
    read_poly_file,
)
from .forms import gcd_many
from .mpoly import MPoly, ST, XYZW
from .rational import to_string
from .ruled import (
    degree_formula,
    mu_basis_surface,
    normalize,
    pluecker_all,
    surface_implicitize,
    verify_implicit,
)

CURVE_COMMANDS = ("mubasis-curve", "implicitize-curve")
SURFACE_COMMANDS = ("pluecker", "mubasis-surface", "implicitize-surface", "degrees")
COMMANDS = CURVE_COMMANDS + SURFACE_COMMANDS + ("verify",)


@dataclass(frozen=True)
class CliConfig:
    command: str
    inputs: tuple[str, ...]
    seed: int = 0
    output: str = "text"
    frame: str = "original"

    def __post_init__(self):
        expected = {c: 3 for c in CURVE_COMMANDS} | {c: 4 for c in SURFACE_COMMANDS}
        if self.command == "verify":
            if len(self.inputs) not in (4, 5):
                raise InputError(
                    f"verify expects an implicit polynomial and 3 or 4 coordinates, got {len(self.inputs)} inputs"
                )
        elif self.command not in expected:
            raise InputError(f"unknown command {self.command!r}")
        elif len(self.inputs) != expected[self.command]:
            raise InputError(
                f"{self.command} expects {expected[self.command]} polynomials, got {len(self.inputs)}"
            )


def _parse_all(texts: Sequence[str], gens) -> list[MPoly]:
    out = []
    for i, text in enumerate(texts):
        try:
            out.append(parse_poly(text, gens))
        except ParseError as exc:
            exc.message = f"input {i + 1}: {exc.message}"
            raise
    return out


def _curve(texts: Sequence[str]) -> CurveParam:
    polys = _parse_all(texts, ("s",))
    return CurveParam.from_affine([p.univariate("s") if p else [] for p in polys])


def _normalization_json(rec) -> dict:
    return {
        "t_swap": rec.t_swap,
        "sbar_division": rec.sbar_division,
        "common_factor": format_hform(rec.common_factor),
        "index_swap": rec.index_swap,
        "alpha_beta_gamma": None
        if rec.generic_combination is None
        else [to_string(c) for c in rec.generic_combination],
        "transform": matrix_json(rec.transform),
        "seed": rec.seed,
    }


def _implicit_json(result, frame: str) -> dict:
    F = result.F if frame == "original" else result.F_normalized
    return {
        "text": format_mpoly(F),
        "terms": mpoly_terms_json(F),
        "frame": frame,
        "k": result.k,
        "degree": result.hypersurface_degree,
        "content": to_string(result.content),
    }


def _surface_setup(cfg: CliConfig):
    raw = _parse_all(cfg.inputs, ST)
    param, rec = normalize(raw, cfg.seed)
    return raw, param, rec


def run(cfg: CliConfig) -> dict:
    """Execute one command and return the report."""
    report: dict = {"command": cfg.command, "seed": cfg.seed}
    cmd = cfg.command
    if cmd in CURVE_COMMANDS:
        curve = _curve(cfg.inputs)
        report["n"] = curve.degree
        report["gcd_degree"] = curve.gcd().degree
        if cmd == "mubasis-curve":
            basis = mu_basis_curve(curve)
            report["mu"] = list(basis.mu)
            report["is_line"] = basis.is_line
            report["mu_basis"] = mu_basis_json([basis.p, basis.q])
        else:
            result = curve_implicitize(curve, cfg.seed)
            report["mu"] = list(result.mu)
            report["implicit"] = _implicit_json(result, "original")
        return report

    if cmd == "verify":
        F = parse_poly(cfg.inputs[0], XYZW)
        if F.is_zero or not F.is_homogeneous():
            raise InputError("the implicit polynomial must be nonzero and homogeneous in x, y, z, w")
        gens = ST if len(cfg.inputs) == 5 else ("s",)
        if len(cfg.inputs) == 4 and F.degree_in("w") > 0:
            raise InputError("a curve equation must not involve w")
        raw = _parse_all(cfg.inputs[1:], gens)
        report["verified"] = verify_implicit(F, raw)
        return report

    raw, param, rec = _surface_setup(cfg)
    plk = pluecker_all(param)
    report["n0"], report["n1"] = param.n0, param.n1
    report["normalization"] = _normalization_json(rec)
    if cmd == "pluecker":
        report["pluecker"] = {k: format_hform(v) for k, v in plk.as_dict().items()}
        report["gcd_degree"] = gcd_many(plk.associated()).degree
    elif cmd == "mubasis-surface":
        basis = mu_basis_surface(param)
        report["mu"] = list(basis.mu)
        report["pluecker"] = {k: format_hform(v) for k, v in plk.as_dict().items()}
        report["mu_basis"] = mu_basis_json([basis.q1, basis.q2])
        report["curve_mu_basis"] = mu_basis_json([basis.curve_p, basis.curve_q])
    elif cmd == "implicitize-surface":
        result = surface_implicitize(param, rec, cfg.seed)
        report["mu"] = list(result.mu)
        report["implicit"] = _implicit_json(result, cfg.frame)
        report["verified"] = verify_implicit(result.F, raw)
    elif cmd == "degrees":
        result = surface_implicitize(param, rec, cfg.seed)
        report["gcd_degree"] = gcd_many(plk.associated()).degree
        report["degree_formula"] = degree_formula(param)
        report["mu"] = list(result.mu)
        report["k"] = result.k
        report["surface_degree"] = result.hypersurface_degree
    return report


def _text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "implicit":
            lines.append(f"implicit ({value['frame']} frame): {value['text']}")
            lines.append(f"k: {value['k']}")
            lines.append(f"degree: {value['degree']}")
            lines.append(f"content: {value['content']}")
        elif key in ("mu_basis", "curve_mu_basis"):
            for i, m in enumerate(value, 1):
                coeffs = " + ".join(f"({c})*{v}" for v, c in m["coeffs"].items() if c != "0")
                lines.append(f"{key}[{i}] (degree {m['degree']}): {coeffs}")
        elif key == "pluecker":
            for name, text in value.items():
                lines.append(f"{name}: {text}")
        elif key == "normalization":
            for name, item in value.items():
                if name == "transform":
                    item = "; ".join(" ".join(row) for row in item)
                lines.append(f"normalization.{name}: {item}")
        elif key == "mu":
            lines.append(f"mu: ({value[0]}, {value[1]})")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _error_json(exc: BaseException, status: int) -> dict:
    err: dict = {"type": type(exc).__name__, "message": str(exc), "exit_status": status}
    if isinstance(exc, MuBasisError):
        err["message"] = exc.message
        err["step"] = exc.step
    if isinstance(exc, ParseError):
        err["offset"] = exc.offset
        err["expected"] = sorted(exc.expected)
    return {"error": err}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mubasis",
        description="mu-bases and implicit equations of rational planar curves and ruled surfaces",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("inputs", nargs="*", help="polynomials in s (curves) or s, t (surfaces)")
    parser.add_argument("-f", "--file", help="read the polynomials from a file, one per line")
    parser.add_argument("--seed", type=int, default=None, help="seed for random choices (default: $MUBASIS_SEED or 0)")
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--json", dest="output", action="store_const", const="json")
    parser.add_argument("--frame", choices=("original", "normalized"), default="original")
    return parser


def _seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("MUBASIS_SEED")
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"MUBASIS_SEED must be an integer, got {env!r}") from None


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = args.output == "json"
    try:
        inputs = list(args.inputs)
        if args.file:
            if inputs:
                raise InputError("give polynomials either as arguments or with --file, not both")
            inputs = read_poly_file(args.file)
        cfg = CliConfig(args.command, tuple(inputs), _seed(args.seed), args.output, args.frame)
        report = run(cfg)
    except MuBasisError as exc:
        return _fail(exc, 1, as_json)
    except Exception as exc:  # noqa: BLE001 - every other failure is a bug
        return _fail(exc, 2, as_json)
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(_text(report))
    return 0


def _fail(exc: BaseException, status: int, as_json: bool) -> int:
    kind = "error" if status == 1 else "internal error"
    print(f"mubasis: {kind}: {exc}", file=sys.stderr)
    if as_json:
        print(json.dumps(_error_json(exc, status), indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
