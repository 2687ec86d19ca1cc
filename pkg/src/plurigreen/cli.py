"""Command line driver: ``plurigreen eval|scan|verify``.

Config files are JSON with the keys ``domain``, ``subspace`` or
``weights``, ``functional``, ``optimizer`` and ``grids`` (see README).
Exit codes: 0 pass, 1 verification failure or infeasible search,
2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import dataclass, fields, replace
from itertools import product
from typing import Callable

import numpy as np

from . import reference as ref
from .domains import AffineBall, Ball, Domain, Polydisc, Product
from .envelope import (EnvelopeQuery, EnvelopeResult, OptimizerConfig, envelope_upper,
                       minorant_lower, poisson_dirichlet)
from .errors import DegenerateError, DomainError, InfeasibleError, NumericError
from .polynomial import Polynomial
from .subspace import (ComplexSubspace, FiniteWeights, SubspaceIndicator,
                       SubspaceMultiplicity, log_max_generators)
from .suites import SUITES, fmt_real, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

CSV_COLUMNS = ["index", "point", "closed_form", "lower", "upper", "width",
               "evaluations", "converged"]

CLOSED_FORMS: dict[str, Callable] = {
    "ball_hyperplane": ref.green_ball_hyperplane,
    "polydisc_hyperplane": ref.green_polydisc_hyperplane,
    "polydisc_point": ref.green_polydisc_point,
}


class ConfigError(ValueError):
    pass


# config ---------------------------------------------------------------------------

def _complex(v) -> complex:
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, str):
        return complex(v.replace(" ", ""))
    raise ConfigError(f"cannot read a complex number from {v!r}")


def parse_domain(spec: dict) -> Domain:
    kind = spec.get("type")
    if kind == "ball":
        return Ball(int(spec["dimension"]))
    if kind == "polydisc":
        return Polydisc(int(spec["dimension"]))
    if kind == "affine_ball":
        return AffineBall(tuple(_complex(c) for c in spec["center"]), float(spec["radius"]))
    if kind == "product":
        return Product(tuple(parse_domain(f) for f in spec["factors"]))
    raise ConfigError(f"unknown domain type {kind!r}")


@dataclass(frozen=True, eq=False)
class Problem:
    domain: Domain
    kind: str
    payload: object
    closed_form: Callable | None
    minorant: Callable | None
    optimizer: OptimizerConfig
    grids: dict
    raw: dict

    @property
    def digest(self) -> str:
        text = json.dumps(self.raw, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def _boundary_function(spec: dict, n: int) -> Callable:
    poly = Polynomial.from_triples(n, spec["polynomial"])
    part = spec.get("part", "re")
    maps = {"re": np.real, "im": np.imag, "abs": np.abs,
            "abs_re": lambda v: np.abs(np.real(v))}
    if part not in maps:
        raise ConfigError(f"unknown boundary part {part!r}")
    fn = maps[part]
    return lambda z: np.asarray(fn(poly(z)), dtype=float)


def parse_config(raw: dict) -> Problem:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    try:
        domain = parse_domain(raw["domain"])
        n = domain.dimension
        kind = raw.get("functional", "lelong")
        if kind not in ("lelong", "riesz", "poisson"):
            raise ConfigError(f"unknown functional {kind!r}")
        payload, minorant = None, None
        if kind == "poisson":
            payload = _boundary_function(raw["boundary"], n)
        elif "subspace" in raw:
            gens = tuple(Polynomial.from_triples(n, g) for g in raw["subspace"]["generators"])
            A = ComplexSubspace(gens)
            weight = raw["subspace"].get("weight", "multiplicity")
            if kind == "riesz":
                payload = A
            elif weight == "multiplicity":
                payload = SubspaceMultiplicity(A)
            elif weight == "indicator":
                payload = SubspaceIndicator(A)
            else:
                raise ConfigError(f"unknown subspace weight {weight!r}")
            if raw.get("minorant") == "log_max_generators":
                minorant = lambda p, A=A: log_max_generators(A, p)  # noqa: E731
        elif "weights" in raw:
            payload = FiniteWeights(tuple(
                ([_complex(c) for c in w["point"]], float(w.get("weight", 1.0)))
                for w in raw["weights"]))
        else:
            raise ConfigError("config needs 'subspace', 'weights' or 'boundary'")
        closed = raw.get("closed_form")
        if closed is not None and closed not in CLOSED_FORMS and closed != "ball_point":
            raise ConfigError(f"unknown closed form {closed!r}")
        if closed == "ball_point":
            pts = payload.points() if isinstance(payload, FiniteWeights) else []
            if len(pts) != 1:
                raise ConfigError("ball_point closed form needs a single weighted point")
            a, w = pts[0]
            closed_fn = lambda x, a=a, w=w: w * ref.green_ball_point(a, x)  # noqa: E731
        else:
            closed_fn = CLOSED_FORMS.get(closed) if closed else None
        if raw.get("minorant") == "closed_form":
            minorant = closed_fn
        opt = raw.get("optimizer", {})
        names = {f.name for f in fields(OptimizerConfig)}
        unknown = set(opt) - names
        if unknown:
            raise ConfigError(f"unknown optimizer fields {sorted(unknown)}")
        cfg = OptimizerConfig(**opt)
    except KeyError as e:
        raise ConfigError(f"missing field {e}") from None
    except (TypeError, DomainError) as e:
        raise ConfigError(str(e)) from None
    return Problem(domain, kind, payload, closed_fn, minorant, cfg, raw.get("grids", {}), raw)


def load_config(path: str) -> Problem:
    with open(path) as fh:
        text = fh.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    return parse_config(raw)


def parse_point(text: str, n: int) -> np.ndarray:
    """``x1r,x1i,x2r,x2i,...`` -> complex point."""
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ConfigError(f"bad point {text!r}") from None
    if len(vals) != 2 * n:
        raise ConfigError(f"point needs {2 * n} numbers for dimension {n}")
    return np.array(vals[0::2]) + 1j * np.array(vals[1::2])


def parse_grid(spec: str, n: int) -> list[np.ndarray]:
    """Grid spec: comma-separated ``re1=lo:hi:count`` or ``im2=value`` items.

    Unlisted components are 0; the grid is the Cartesian product.
    """
    axes = {f"{p}{i + 1}": [0.0] for i in range(n) for p in ("re", "im")}
    if spec.strip():
        for item in spec.split(","):
            if "=" not in item:
                raise ConfigError(f"bad grid item {item!r}")
            key, val = (s.strip() for s in item.split("=", 1))
            if key not in axes:
                raise ConfigError(f"unknown grid component {key!r}")
            parts = val.split(":")
            try:
                if len(parts) == 3:
                    axes[key] = list(np.linspace(float(parts[0]), float(parts[1]), int(parts[2])))
                elif len(parts) == 1:
                    axes[key] = [float(parts[0])]
                else:
                    raise ValueError
            except ValueError:
                raise ConfigError(f"bad grid values {val!r}") from None
    keys = [f"{p}{i + 1}" for i in range(n) for p in ("re", "im")]
    pts = []
    for combo in product(*(axes[k] for k in keys)):
        v = np.array(combo)
        pts.append(v[0::2] + 1j * v[1::2])
    return pts


# evaluation -------------------------------------------------------------------------

def evaluate(problem: Problem, x: np.ndarray, seed: int | None = None) -> tuple[dict, EnvelopeResult]:
    cfg = problem.optimizer if seed is None else replace(problem.optimizer, seed=seed)
    if problem.kind == "poisson":
        result = poisson_dirichlet(problem.domain, problem.payload, x, cfg)
    else:
        result = envelope_upper(EnvelopeQuery(problem.kind, problem.domain, problem.payload, x, cfg))
    closed = problem.closed_form(x) if problem.closed_form else None
    if problem.minorant is not None:
        result = result.with_lower(minorant_lower(problem.minorant, x))
    rec = {
        "point": [[z.real, z.imag] for z in x],
        "closed_form": None if closed is None else fmt_real(closed),
        "lower": None if result.lower is None else fmt_real(result.lower),
        "upper": fmt_real(result.upper),
        "width": None if result.lower is None else fmt_real(result.width),
        "evaluations": result.evaluations,
        "converged": result.converged,
        "poles": [[z.real, z.imag, w] for z, w in result.poles],
        "seed": cfg.seed,
        "config_hash": problem.digest,
    }
    return rec, result


def _point_text(p) -> str:
    return ";".join(f"{z.real:.6g}{z.imag:+.6g}j" for z in p)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for i, r in enumerate(records):
        pt = np.array([complex(a, b) for a, b in r["point"]])
        w.writerow([i, _point_text(pt)] + [_cell(r[k]) for k in CSV_COLUMNS[2:]])
    return buf.getvalue()


def _color(t: float) -> str:
    # blue (low) to yellow (high)
    r = int(255 * t)
    g = int(64 + 191 * t)
    b = int(200 * (1 - t))
    return f"#{r:02x}{g:02x}{b:02x}"


def to_svg(records: list[dict], cell: int = 16) -> str:
    """Heatmap of the upper bounds over the two varying grid coordinates."""
    if not records:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"></svg>\n'
    coords = np.array([[c for pair in r["point"] for c in pair] for r in records])
    varying = [j for j in range(coords.shape[1]) if np.ptp(coords[:, j]) > 0][:2]
    while len(varying) < 2:
        varying.append(varying[0] if varying else 0)
    xs = sorted(set(coords[:, varying[0]]))
    ys = sorted(set(coords[:, varying[1]]))
    vals = [r["upper"] for r in records]
    finite = [v for v in vals if isinstance(v, float)]
    lo, hi = (min(finite), max(finite)) if finite else (0.0, 1.0)
    span = hi - lo or 1.0
    w, h = cell * len(xs), cell * len(ys)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">']
    for r, c, v in zip(records, coords, vals):
        i = xs.index(c[varying[0]])
        j = len(ys) - 1 - ys.index(c[varying[1]])
        fill = "#000000" if v == "-inf" else _color((v - lo) / span)
        out.append(f'<rect x="{i * cell}" y="{j * cell}" width="{cell}" height="{cell}" '
                   f'fill="{fill}"><title>{v}</title></rect>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w") as fh:
        fh.write(text)


# commands -----------------------------------------------------------------------------

def cmd_eval(args) -> int:
    problem = load_config(args.config)
    if args.point is None:
        raise ConfigError("--point is required")
    x = parse_point(args.point, problem.domain.dimension)
    if not problem.domain.contains(x):
        raise ConfigError("point is not interior to the domain")
    rec, _ = evaluate(problem, x, args.seed)
    print(json.dumps(rec, sort_keys=True))
    return EXIT_OK


def cmd_scan(args) -> int:
    problem = load_config(args.config)
    spec = args.grid if args.grid is not None else ""
    spec = problem.grids.get(spec, spec)
    pts = parse_grid(spec, problem.domain.dimension) if spec else []
    pts = [p for p in pts if problem.domain.contains(p)]
    from .suites import pmap

    records = pmap(lambda p: evaluate(problem, p, args.seed)[0], pts)
    records.sort(key=lambda r: tuple(c for pair in r["point"] for c in pair))
    if args.format == "csv":
        text = to_csv(records)
    elif args.format == "json":
        text = json.dumps({"seed": args.seed, "config_hash": problem.digest,
                           "records": records}, sort_keys=True, indent=1) + "\n"
    else:
        text = to_svg(records)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    seed = 7 if args.seed is None else args.seed
    records = run_suite(args.suite, seed)
    report = {"suite": args.suite, "seed": seed,
              "passed": all(r.passed for r in records),
              "cases": [r.as_dict() for r in records]}
    text = json.dumps(report, sort_keys=True, indent=1) + "\n"
    _emit(text, args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plurigreen",
                                description="Pluricomplex Green functions via disc envelopes.")
    sub = p.add_subparsers(dest="command", required=True)
    e = sub.add_parser("eval", help="bracket the Green function at one point")
    e.add_argument("--config", required=True)
    e.add_argument("--point")
    e.add_argument("--seed", type=int)
    s = sub.add_parser("scan", help="evaluate over a grid and write a table or heatmap")
    s.add_argument("--config", required=True)
    s.add_argument("--grid")
    s.add_argument("--out")
    s.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    s.add_argument("--seed", type=int)
    v = sub.add_parser("verify", help="run an oracle suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--seed", type=int)
    v.add_argument("--out")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    handlers = {"eval": cmd_eval, "scan": cmd_scan, "verify": cmd_verify}
    try:
        return handlers[args.command](args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (NumericError, DegenerateError) as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
