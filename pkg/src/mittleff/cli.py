"""Command-line front end.

eval, compose and integrate print a single "value=... est_error=..."
line; pde, dist and figures write CSV or JSON tables.  Every subcommand
declares its parameters once in a table that feeds argparse, the
optional key=value config file and the usage text, so flag names and
config keys cannot drift apart.  Precedence is flags, then config
entries, then table defaults.

Exit codes: 0 success, 2 parameter or domain problem (the message names
the offending flag), 3 refused convergence.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import math
import os
import platform
import sys

import mpmath
import numpy as np
import scipy

from . import __version__
from .errors import ConvergenceError, DomainError
from .fracpde import gaussian_profile, solve_drift_pde, solve_fractional_diffusion
from .fracstats import build_count_distribution, p_m_schrodinger, sample_counts, schrodinger_moments
from .mittag import MLParams, laguerre_exp, ml_e, ml_trig, wright
from .umbral import (
    ml_binomial,
    ml_compose_power,
    ml_gaussian_integral,
    ml_semigroup_sum,
    ml_stretched_integral,
)

_OUT_ENV = "MITTLEFF_OUT_DIR"

# closed forms and terminating sums land within a few ulp of the double
# result; the printed estimate then reflects rounding, not truncation
_ROUNDING_EST = 4e-16


class _UsageError(Exception):
    """Bad flag or config entry; maps to exit code 2."""


class Command(enum.Enum):
    EVAL = "eval"
    COMPOSE = "compose"
    INTEGRATE = "integrate"
    PDE = "pde"
    DIST = "dist"
    FIGURES = "figures"


# ---------------------------------------------------------------------------
# parameter tables


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return v


def _integer(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _finite_list(text: str) -> tuple:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError(f"empty list: {text!r}")
    return tuple(_finite(t) for t in items)


def _integer_list(text: str) -> tuple:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError(f"empty list: {text!r}")
    return tuple(_integer(t) for t in items)


def _truth(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"not a truth value: {text!r}")


_CONVERTERS = {
    "float": _finite,
    "int": _integer,
    "floats": _finite_list,
    "ints": _integer_list,
    "str": str,
    "flag": _truth,
}


@dataclasses.dataclass(frozen=True)
class _Param:
    name: str
    kind: str = "float"
    default: object = None
    required: bool = False
    dest: str = ""
    help: str = ""

    @property
    def flag(self) -> str:
        return self.name.replace("_", "-")

    @property
    def key(self) -> str:
        return self.dest or self.name


_P = _Param

_GRID_WIDE = (
    _P("x_min", default=-10.0, help="left edge of the periodic box"),
    _P("x_max", default=10.0, help="right edge (the wrap-around point)"),
    _P("n", kind="int", default=256, help="grid points"),
)
_GRID_NARROW = (
    _P("x_min", default=-8.0),
    _P("x_max", default=8.0),
    _P("n", kind="int", default=256),
)
_DIST_PARAMS = (
    _P("alpha", required=True),
    _P("x", help="intensity for the squared-amplitude variants"),
    _P("lambda", dest="lam", help="intensity, laskin spelling (same slot as --x)"),
    _P("m_max", kind="int", help="fixed truncation order; omit for the adaptive rule"),
    _P("samples", kind="int", default=0, help="also draw this many seeded counts"),
    _P("seed", kind="int", default=0),
)

_COMMANDS: dict = {
    "eval": {
        "ml": (_P("alpha", required=True), _P("beta", required=True), _P("x", required=True)),
        "wright": (_P("alpha", required=True), _P("mu", required=True), _P("x", required=True)),
        "laguerre": (_P("x", required=True),),
        "trig": (_P("alpha", required=True), _P("x", required=True)),
    },
    "compose": {
        "power": (
            _P("x", required=True),
            _P("y", required=True),
            _P("n", kind="int", required=True),
            _P("alpha", required=True),
            _P("beta", required=True),
        ),
        "semigroup": (
            _P("x", required=True),
            _P("y", required=True),
            _P("alpha", required=True),
            _P("beta", required=True),
            _P("n_max", kind="int", default=60, help="truncation order of the double series"),
        ),
        "binomial": (
            _P("n", kind="int", required=True),
            _P("r", kind="int", required=True),
            _P("alpha", required=True),
            _P("beta", required=True),
        ),
    },
    "integrate": {
        "gaussian": (_P("alpha", required=True), _P("beta", required=True)),
        "stretched": (_P("alpha", required=True), _P("gamma", required=True)),
    },
    "pde": {
        "diffusion": (
            _P("alpha", required=True),
            _P("t", required=True),
            *_GRID_WIDE,
            _P("experimental", kind="flag", default=False, help="allow alpha in (2, 4]"),
        ),
        "drift": (
            _P("a", required=True),
            _P("b", required=True),
            _P("alpha", required=True),
            _P("t", required=True),
            *_GRID_NARROW,
        ),
    },
    "dist": {
        "schrodinger": _DIST_PARAMS,
        "laskin": _DIST_PARAMS,
        "hermitian": _DIST_PARAMS,
    },
    "figures": {
        "fig1": (
            _P("alphas", kind="floats", required=True, help="comma list, e.g. 1.5,3.5"),
            _P("times", kind="floats", required=True, help="comma list, e.g. 0.2,0.6,1"),
            *_GRID_WIDE,
        ),
        "fig2": (
            _P("a", required=True),
            _P("b", required=True),
            _P("alphas", kind="floats", required=True),
            _P("t", required=True),
            *_GRID_NARROW,
        ),
        "fig3": (
            _P("times", kind="floats", required=True),
            _P("omega", default=1.0),
            _P("alpha_min", default=0.55),
            _P("alpha_max", default=1.0),
            _P("alpha_steps", kind="int", default=46),
        ),
        "fig4": (
            _P("ms", kind="ints", required=True, help="comma list of photon numbers"),
            _P("alphas", kind="floats", default=(0.8, 1.0)),
            _P("x_max", default=6.0),
            _P("x_step", default=0.1),
        ),
    },
}

_WRITING = ("pde", "dist", "figures")
_OUT_PARAMS = (
    _P("out", kind="str", help="output path; default name lands in $" + _OUT_ENV),
    _P("format", kind="str", help="csv or json; default csv, json when --out ends in .json"),
)
for _family in _WRITING:
    for _target in _COMMANDS[_family]:
        _COMMANDS[_family][_target] = _COMMANDS[_family][_target] + _OUT_PARAMS


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """One parsed invocation.

    parameters is the merged map (flags over config entries over table
    defaults) keyed by parameter name; out path and format live inside
    it for the file-writing families.  Path writability is established
    when the output file is opened, not here.
    """

    command: Command
    target: str
    parameters: dict
    seed: int | None = None

    def __post_init__(self):
        if not isinstance(self.command, Command):
            raise DomainError(f"command must be a Command, got {self.command!r}")
        targets = _COMMANDS[self.command.value]
        if self.target not in targets:
            raise DomainError(
                f"unknown target {self.target!r} for {self.command.value} "
                f"(choices: {', '.join(targets)})"
            )
        spec = {p.key: p for p in targets[self.target]}
        for key, value in self.parameters.items():
            if key not in spec:
                raise DomainError(
                    f"unknown parameter {key!r} for {self.command.value} {self.target}"
                )
            kind = spec[key].kind
            if kind == "float":
                if isinstance(value, bool) or not isinstance(value, (int, float)) \
                        or not math.isfinite(value):
                    raise DomainError(f"parameter {key!r} must be a finite real, got {value!r}")
            elif kind == "int":
                if isinstance(value, bool) or not isinstance(value, int):
                    raise DomainError(f"parameter {key!r} must be an integer, got {value!r}")
            elif kind == "floats":
                if not all(
                    isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)
                    for v in value
                ):
                    raise DomainError(f"parameter {key!r} must be finite reals, got {value!r}")
            elif kind == "ints":
                if not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
                    raise DomainError(f"parameter {key!r} must be integers, got {value!r}")
        if self.seed is not None and (isinstance(self.seed, bool) or not isinstance(self.seed, int)):
            raise DomainError(f"seed must be an integer, got {self.seed!r}")


# ---------------------------------------------------------------------------
# parsing and merging


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mittleff",
        description="Mittag-Leffler toolkit: evaluation, composition rules, "
        "closed-form integrals, fractional PDE solutions, photon counting tables.",
    )
    families = ap.add_subparsers(dest="family", metavar="command", required=True)
    for family, targets in _COMMANDS.items():
        fp = families.add_parser(family)
        sub = fp.add_subparsers(dest="target", metavar="target", required=True)
        for target, params in targets.items():
            tp = sub.add_parser(target)
            for p in params:
                kwargs = {"dest": p.key, "default": None, "help": p.help or None}
                if p.kind == "flag":
                    tp.add_argument("--" + p.flag, action="store_const", const=True, **kwargs)
                else:
                    tp.add_argument("--" + p.flag, type=_CONVERTERS[p.kind], **kwargs)
            tp.add_argument("--config", default=None, help="key=value file, flags win")
    return ap


def _read_config(path, spec_by_key) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"--config: cannot read {path!r} ({exc})") from None
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise _UsageError(f"--config {path}:{lineno}: expected key=value, got {line!r}")
        key = key.strip().replace("-", "_")
        if key == "lambda":
            key = "lam"
        if key not in spec_by_key:
            raise _UsageError(f"--config {path}:{lineno}: unknown key {key!r}")
        if key in entries:
            raise _UsageError(f"--config {path}:{lineno}: duplicate key {key!r}")
        try:
            entries[key] = _CONVERTERS[spec_by_key[key].kind](value.strip())
        except argparse.ArgumentTypeError as exc:
            raise _UsageError(f"--config {path}:{lineno}: {key}: {exc}") from None
    return entries


def _parse(argv) -> RunConfig:
    ns = _build_parser().parse_args(list(argv))
    spec = _COMMANDS[ns.family][ns.target]
    by_key = {p.key: p for p in spec}
    from_file = _read_config(ns.config, by_key)
    merged = {}
    for p in spec:
        value = getattr(ns, p.key)
        if value is None:
            value = from_file.get(p.key)
        if value is None:
            value = p.default
        if value is None:
            if p.required:
                raise _UsageError(f"missing required --{p.flag} for '{ns.family} {ns.target}'")
            continue
        merged[p.key] = value
    _post_merge(ns.family, merged)
    return RunConfig(
        command=Command(ns.family),
        target=ns.target,
        parameters=merged,
        seed=merged.get("seed"),
    )


def _post_merge(family: str, merged: dict) -> None:
    """Cross-parameter checks that single-flag converters cannot see."""
    if family in _WRITING:
        fmt = merged.get("format")
        if fmt is None:
            fmt = "json" if str(merged.get("out", "")).endswith(".json") else "csv"
        if fmt not in ("csv", "json"):
            raise _UsageError(f"--format must be csv or json, got {fmt!r}")
        merged["format"] = fmt
    if family == "dist":
        if "x" in merged and "lam" in merged:
            raise _UsageError("--x and --lambda name the same intensity, give exactly one")
        if "x" not in merged and "lam" not in merged:
            raise _UsageError("missing required --x (or its laskin spelling --lambda)")


# ---------------------------------------------------------------------------
# output plumbing


def _num(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return "%.17g" % float(v)


def _result_line(value, est_error, tail: str = "") -> None:
    print(f"value={_num(value)} est_error={_num(est_error)}{tail}")


def _csv_text(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(c if isinstance(c, str) else _num(c) for c in row))
    return "\n".join(lines) + "\n"


def _json_text(obj, indent: int = 0) -> str:
    """17-significant-digit JSON with a fixed layout, so identical runs
    produce identical bytes without leaning on library formatting."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(
            f'{pad}  "{k}": {_json_text(v, indent + 1)}' for k, v in obj.items()
        )
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        body = ",\n".join(pad + "  " + _json_text(v, indent + 1) for v in obj)
        return "[\n" + body + "\n" + pad + "]"
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    return _num(obj)


def _versions() -> dict:
    return {
        "mittleff": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "mpmath": mpmath.__version__,
    }


def _table_payload(cfg: RunConfig, header, rows, truncation, array=None) -> dict:
    meta_params = {
        ("lambda" if k == "lam" else k): v
        for k, v in cfg.parameters.items()
        if k not in ("out", "format")
    }
    if cfg.command is Command.DIST:
        meta_params = {"variant": cfg.target, **meta_params}
    doc = {
        "metadata": {
            "parameters": meta_params,
            "versions": _versions(),
            "truncation": truncation,
        }
    }
    if array is not None:
        key, values = array
        doc[key] = list(values)
    else:
        doc["columns"] = list(header)
        doc["rows"] = [list(r) for r in rows]
    return doc


def _write_text(path, text: str) -> None:
    directory = os.path.dirname(str(path))
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _write_output(cfg: RunConfig, default_stem: str, header, rows, truncation,
                  array=None, out_path=None) -> str:
    fmt = cfg.parameters["format"]
    path = out_path if out_path is not None else cfg.parameters.get("out")
    if path is None:
        path = os.path.join(os.environ.get(_OUT_ENV, "."), f"{default_stem}.{fmt}")
    if fmt == "csv":
        text = _csv_text(header, rows)
    else:
        text = _json_text(_table_payload(cfg, header, rows, truncation, array)) + "\n"
    _write_text(path, text)
    return str(path)


# ---------------------------------------------------------------------------
# runners


def _bare_line(value: float) -> None:
    _result_line(value, _ROUNDING_EST * (1.0 + abs(value)))


def _run_single(cfg: RunConfig) -> int:
    p = cfg.parameters
    key = (cfg.command.value, cfg.target)
    if key == ("eval", "ml"):
        r = ml_e(MLParams(alpha=p["alpha"], beta=p["beta"]), p["x"])
    elif key == ("eval", "wright"):
        r = wright(p["alpha"], p["mu"], p["x"])
    elif key == ("eval", "laguerre"):
        r = laguerre_exp(p["x"])
    elif key == ("eval", "trig"):
        c, s = ml_trig(p["alpha"], p["x"])
        _result_line(c, _ROUNDING_EST * (1.0 + abs(c)), " component=cos")
        _result_line(s, _ROUNDING_EST * (1.0 + abs(s)), " component=sin")
        return 0
    elif key == ("compose", "power"):
        _bare_line(ml_compose_power(p["x"], p["y"], p["n"], p["alpha"], p["beta"]))
        return 0
    elif key == ("compose", "semigroup"):
        r = ml_semigroup_sum(p["x"], p["y"], p["alpha"], p["beta"], p["n_max"])
    elif key == ("compose", "binomial"):
        _bare_line(ml_binomial(p["n"], p["r"], p["alpha"], p["beta"]))
        return 0
    elif key == ("integrate", "gaussian"):
        _bare_line(ml_gaussian_integral(p["alpha"], p["beta"]))
        return 0
    else:
        _bare_line(ml_stretched_integral(p["alpha"], p["gamma"]))
        return 0
    _result_line(r.value, r.est_error)
    return 0


def _run_pde(cfg: RunConfig) -> int:
    p = cfg.parameters
    grid = gaussian_profile(p["x_min"], p["x_max"], p["n"])
    tail = ""
    if cfg.target == "diffusion":
        solved = solve_fractional_diffusion(
            grid, p["alpha"], p["t"], experimental=p.get("experimental", False)
        )
        truncation = {"n_points": solved.n_points}
    else:
        sol = solve_drift_pde(p["a"], p["b"], p["alpha"], p["t"], grid)
        solved = sol.grid
        truncation = {"terms_used": sol.terms_used, "est_error": sol.est_error}
        tail = f" est_error={_num(sol.est_error)}"
    rows = list(zip(solved.xs().tolist(), solved.values))
    path = _write_output(cfg, f"pde_{cfg.target}", ("x", "value"), rows, truncation)
    print(f"wrote {path} rows={len(rows)}{tail}")
    return 0


def _run_dist(cfg: RunConfig) -> int:
    p = cfg.parameters
    intensity = p["x"] if "x" in p else p["lam"]
    if p.get("samples", 0) and cfg.target == "hermitian":
        # refuse before writing anything, so a failed run leaves no files
        raise DomainError("--samples requires a normalized variant (schrodinger or laskin)")
    table = build_count_distribution(cfg.target, p["alpha"], intensity, m_max=p.get("m_max"))
    rows = list(enumerate(table.probs))
    truncation = {
        "truncation_m": table.truncation_m,
        "clamped_mass": table.clamped_mass,
        "mass": table.mass(),
    }
    path = _write_output(
        cfg, f"dist_{cfg.target}", ("m", "probability"), rows, truncation,
        array=("probs", table.probs),
    )
    print(f"wrote {path} rows={len(rows)} mass={_num(table.mass())}")
    n_samples = p.get("samples", 0)
    if n_samples:
        draws = sample_counts(table, p.get("seed", 0), n_samples)
        root, ext = os.path.splitext(path)
        sample_path = _write_output(
            cfg, "", ("index", "m"), list(enumerate(draws)), truncation,
            array=("samples", draws), out_path=root + "_samples" + ext,
        )
        print(f"wrote {sample_path} samples={n_samples}")
    return 0


def _need(p: dict, key: str, where: str):
    if key not in p:
        raise DomainError(f"{where}: missing parameter {key!r}")
    return p[key]


def _fig1_rows(p: dict):
    """Diffusion profiles, one curve per (alpha, t) pair."""
    where = "figures fig1"
    profile = gaussian_profile(_need(p, "x_min", where), _need(p, "x_max", where),
                               _need(p, "n", where))
    rows = []
    curve = 0
    for alpha in _need(p, "alphas", where):
        for t in _need(p, "times", where):
            # the family exists to show the alpha > 2 regimes, so it opts
            # into the oscillatory range itself; the pde command keeps the
            # explicit flag
            g = solve_fractional_diffusion(profile, alpha, t, experimental=alpha > 2.0)
            rows.extend(
                (curve, alpha, t, x, v) for x, v in zip(g.xs().tolist(), g.values)
            )
            curve += 1
    return ("curve", "alpha", "t", "x", "value"), rows, {"curves": curve}


def _fig2_rows(p: dict):
    """Drift solutions at one time, one curve per alpha."""
    where = "figures fig2"
    grid = gaussian_profile(_need(p, "x_min", where), _need(p, "x_max", where),
                            _need(p, "n", where))
    a, b, t = _need(p, "a", where), _need(p, "b", where), _need(p, "t", where)
    rows = []
    worst = 0.0
    for curve, alpha in enumerate(_need(p, "alphas", where)):
        sol = solve_drift_pde(a, b, alpha, t, grid)
        worst = max(worst, sol.est_error)
        rows.extend(
            (curve, a, b, alpha, t, x, v)
            for x, v in zip(sol.grid.xs().tolist(), sol.grid.values)
        )
    return (
        ("curve", "a", "b", "alpha", "t", "x", "value"),
        rows,
        {"curves": curve + 1, "est_error_max": worst},
    )


def _fig3_rows(p: dict):
    """Mandel parameter over alpha, one curve per time."""
    where = "figures fig3"
    steps = _need(p, "alpha_steps", where)
    if steps < 2:
        raise DomainError(f"{where}: --alpha-steps must be at least 2, got {steps}")
    alphas = np.linspace(_need(p, "alpha_min", where), _need(p, "alpha_max", where), steps)
    omega = _need(p, "omega", where)
    rows = []
    for curve, t in enumerate(_need(p, "times", where)):
        for alpha in alphas:
            intensity = (omega * t ** float(alpha)) ** 2
            q = schrodinger_moments(float(alpha), intensity).mandel_q
            rows.append((curve, t, float(alpha), intensity, q))
    return ("curve", "t", "alpha", "intensity", "q"), rows, {"curves": curve + 1}


def _fig4_rows(p: dict):
    """Count probability over intensity, one curve per (m, alpha) pair."""
    where = "figures fig4"
    step = _need(p, "x_step", where)
    top = _need(p, "x_max", where)
    if not (step > 0.0 and top > 0.0):
        raise DomainError(f"{where}: --x-step and --x-max must be positive")
    xs = [i * step for i in range(int(round(top / step)) + 1)]
    rows = []
    curve = 0
    for m in _need(p, "ms", where):
        for alpha in _need(p, "alphas", where):
            rows.extend(
                (curve, m, alpha, x, p_m_schrodinger(m, alpha, x)) for x in xs
            )
            curve += 1
    return ("curve", "m", "alpha", "intensity", "probability"), rows, {"curves": curve}


_FIG_BUILDERS = {
    "fig1": _fig1_rows,
    "fig2": _fig2_rows,
    "fig3": _fig3_rows,
    "fig4": _fig4_rows,
}


def emit_figure(family: str, params: RunConfig, out_path) -> str:
    """Tabulate one figure family and write it to out_path.

    Output is tidy long format, one row per curve point, with the curve
    parameters as leading columns.  params.parameters must carry the
    family's full knob set (the command table's merge supplies defaults;
    a missing knob is a DomainError).  Format follows params, else the
    path suffix.
    """
    builder = _FIG_BUILDERS.get(family)
    if builder is None:
        raise DomainError(f"unknown figure family {family!r}")
    header, rows, truncation = builder(params.parameters)
    fmt = params.parameters.get("format")
    if fmt is None:
        fmt = "json" if str(out_path).endswith(".json") else "csv"
    if fmt == "csv":
        text = _csv_text(header, rows)
    else:
        text = _json_text(_table_payload(params, header, rows, truncation)) + "\n"
    _write_text(out_path, text)
    return str(out_path)


def _run_figures(cfg: RunConfig) -> int:
    path = cfg.parameters.get("out")
    if path is None:
        path = os.path.join(
            os.environ.get(_OUT_ENV, "."), f"{cfg.target}.{cfg.parameters['format']}"
        )
    print(f"wrote {emit_figure(cfg.target, cfg, path)}")
    return 0


_RUNNERS = {
    "eval": _run_single,
    "compose": _run_single,
    "integrate": _run_single,
    "pde": _run_pde,
    "dist": _run_dist,
    "figures": _run_figures,
}


# ---------------------------------------------------------------------------
# entry points


def run(argv) -> int:
    """Parse argv, execute, and map failures onto the exit-code contract."""
    try:
        cfg = _parse(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        # argparse prints its own message; --help leaves with 0
        return 0 if exc.code in (0, None) else 2
    try:
        return _RUNNERS[cfg.command.value](cfg)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: --out: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
