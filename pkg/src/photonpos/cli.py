"""Command-line interface: figure data, field grids, verification and Hertz series.

Subcommands ``profiles``, ``field``, ``verify``, ``hertz`` and ``oracle``.
Settings come from three layers, later ones winning: built-in defaults,
a flat ``key = value`` file given with ``--config``, and command-line flags
named after the keys (``mask_band`` becomes ``--mask-band``).

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
import time
import warnings
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from . import eigenfield as ef
from . import hertz as hz
from . import oracle as orc
from .momentum import _transverse_basis, _unit
from .specfun import DomainError, gauss_2f1
from .suites import run_suite, suite_names

__all__ = ["ConfigError", "SCHEMA", "load_config", "main", "format_number"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FIELD_COLUMNS = ("x", "z", "comp_rho", "comp_psi", "comp_z", "mask_flag")
PROFILE_COLUMNS = ("theta", "family", "P_rho", "P_psi_regular", "P_z", "delta_psi_coeff")
FIGURE_CLAMP = 1.5


class ConfigError(ValueError):
    """Invalid configuration file, flag value or grid."""


# ---------------------------------------------------------------------------
# configuration schema
# ---------------------------------------------------------------------------

def _float_list(text: str) -> tuple[float, ...]:
    parts = [p for p in str(text).replace(";", ",").split(",") if p.strip()]
    if not parts:
        raise ValueError("empty list")
    return tuple(float(p) for p in parts)


def _vector3(text: str) -> tuple[float, float, float]:
    v = _float_list(text)
    if len(v) != 3:
        raise ValueError("expected three comma-separated numbers")
    if not any(v):
        raise ValueError("vector must be non-zero")
    return v


def _point3(text: str) -> tuple[float, float, float]:
    v = _float_list(text)
    if len(v) != 3:
        raise ValueError("expected three comma-separated numbers")
    return v


def _family(text: str) -> str:
    key = str(text).strip().upper()
    names = {"LP": "LP", "RS": "RS", "DEBIERRE": "Debierre"}
    if key not in names:
        raise ValueError("family must be LP, RS or Debierre")
    return names[key]


def _sigma(text: str) -> int:
    v = int(float(text))
    if v not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    return v


def _optional_float(text: str) -> float | None:
    if str(text).strip().lower() in ("", "none", "off"):
        return None
    return float(text)


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise ValueError("must be non-negative")
    return v


def _fmt(text: str) -> str:
    v = str(text).strip().lower()
    if v not in ("csv", "json"):
        raise ValueError("format must be csv or json")
    return v


@dataclass(frozen=True)
class Option:
    parse: Callable[[str], Any]
    default: Any
    help: str


_DEFAULT_QUAD = orc.QuadratureConfig()

SCHEMA: dict[str, Option] = {
    "family": Option(_family, "LP", "LP, RS or Debierre (Debierre: field only)"),
    "sigma": Option(_sigma, 1, "helicity, +1 or -1"),
    "axis": Option(_vector3, (0.0, 0.0, 1.0), "frame axis n as nx,ny,nz"),
    "q": Option(_point3, (0.0, 0.0, 0.0), "eigenvalue point q as qx,qy,qz"),
    "theta_min": Option(float, 0.0, "profiles: lower end of the open theta range"),
    "theta_max": Option(float, math.pi, "profiles: upper end of the open theta range"),
    "theta_samples": Option(int, 721, "profiles: number of interior theta samples"),
    "grid": Option(_float_list, (-2.0, 2.0, 201, -2.0, 2.0, 201), "field: xmin,xmax,nx,zmin,zmax,nz"),
    "mask_band": Option(float, 1e-3, "field: mask points with |cos theta| < mask_band"),
    "clamp": Option(_optional_float, None, "field: clip |components| at this value (figure uses 1.5)"),
    "hbar_c": Option(float, 1.0, "multiply outputs by hbar_c^(beta/2)"),
    "beta": Option(_optional_float, None, "oracle: beta override (closed forms fix beta by family)"),
    "format": Option(_fmt, "csv", "csv or json"),
    "out": Option(str, "-", "output path, '-' for standard output"),
    "rho_over_r": Option(float, 0.6, "hertz: rho / r of the evaluation point (r = 1)"),
    "t_over_r": Option(_float_list, (0.0, 0.05, 0.1, 0.2, 0.4), "hertz: ct / r values"),
    "n_max": Option(_positive_int, hz.DEFAULT_N_MAX, "hertz: highest coefficient index"),
    "elliptic_k_max": Option(_positive_int, 4, "hertz: highest index with elliptic-form coefficients"),
    "residual_n_max": Option(_positive_int, 2, "hertz: truncation used for the wave residual column"),
    "point": Option(_vector3, (1.0, 0.4, 0.7), "oracle: Cartesian evaluation point"),
    "tag": Option(str, "standard", "oracle: integrand tag"),
    "epsilon_list": Option(_float_list, _DEFAULT_QUAD.epsilon_list, "oracle: damping rates (units of 1/r)"),
    "richardson_order": Option(int, _DEFAULT_QUAD.richardson_order, "oracle: extrapolation order"),
    "k_max": Option(_optional_float, _DEFAULT_QUAD.k_max, "oracle: truncation in units of 1/r"),
    "panel_phase": Option(float, _DEFAULT_QUAD.panel_phase, "oracle: max phase per Gauss panel"),
    "gl_order": Option(int, _DEFAULT_QUAD.gl_order, "oracle: Gauss-Legendre nodes per panel"),
}


def parse_config_text(text: str, source: str = "<config>") -> dict[str, Any]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key = value")
        key, value = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in SCHEMA:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in out:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            out[key] = SCHEMA[key].parse(value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{source}:{lineno}: bad value for {key}: {exc}") from None
    return out


def load_config(path: str | None, overrides: dict[str, str | None]) -> dict[str, Any]:
    """Defaults, then the config file, then non-None command-line overrides."""
    cfg = {key: opt.default for key, opt in SCHEMA.items()}
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        cfg.update(parse_config_text(text, path))
    for key, value in overrides.items():
        if value is None:
            continue
        try:
            cfg[key] = SCHEMA[key].parse(value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad value for --{key.replace('_', '-')}: {exc}") from None
    _validate(cfg)
    return cfg


def _validate(cfg: dict[str, Any]) -> None:
    if cfg["mask_band"] < 0:
        raise ConfigError("mask_band must be >= 0")
    if cfg["hbar_c"] <= 0:
        raise ConfigError("hbar_c must be positive")
    if cfg["clamp"] is not None and cfg["clamp"] <= 0:
        raise ConfigError("clamp must be positive")
    if cfg["theta_samples"] < 2:
        raise ConfigError("theta_samples must be >= 2")
    if not 0.0 <= cfg["theta_min"] < cfg["theta_max"] <= math.pi:
        raise ConfigError("need 0 <= theta_min < theta_max <= pi")
    grid = cfg["grid"]
    if len(grid) != 6:
        raise ConfigError("grid needs xmin,xmax,nx,zmin,zmax,nz")
    for n in (grid[2], grid[5]):
        if n != int(n) or n < 2:
            raise ConfigError("grid sample counts must be integers >= 2")
    if not (grid[0] < grid[1] and grid[3] < grid[4]):
        raise ConfigError("grid ranges must be increasing")


def quadrature_config(cfg: dict[str, Any]) -> orc.QuadratureConfig:
    try:
        return orc.QuadratureConfig(
            k_max=cfg["k_max"],
            epsilon_list=tuple(cfg["epsilon_list"]),
            richardson_order=cfg["richardson_order"],
            panel_phase=cfg["panel_phase"],
            gl_order=cfg["gl_order"],
        )
    except ValueError as exc:
        raise ConfigError(f"quadrature settings: {exc}") from None


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def format_number(v: Any) -> str:
    """17 significant digits for floats; integers and strings verbatim."""
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".17g")
    if v is None:
        return ""
    return str(v)


def _json_value(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if not math.isfinite(v):
            return "null"
        return format(v, ".17g")
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return json.dumps(str(v), ensure_ascii=False)


def render_csv(columns, rows, metadata=()) -> str:
    """Header plus data rows; metadata rows follow as '#'-prefixed lines."""
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(format_number(row.get(c)) for c in columns) + "\n")
    for meta in metadata:
        buf.write("# " + ",".join(f"{k}={format_number(v)}" for k, v in meta.items()) + "\n")
    return buf.getvalue()


def render_json(rows, metadata=()) -> str:
    """A JSON array of row objects; metadata rows carry ``"row_type"``."""
    items = list(rows) + list(metadata)
    lines = ["{" + ", ".join(f"{json.dumps(k)}: {_json_value(v)}" for k, v in item.items()) + "}"
             for item in items]
    return "[\n  " + ",\n  ".join(lines) + "\n]\n" if lines else "[]\n"


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc}") from None


def _write_table(cfg, columns, rows, metadata=()) -> None:
    if cfg["format"] == "json":
        text = render_json(rows, metadata)
    else:
        text = render_csv(columns, rows, metadata)
    _emit(text, cfg["out"])


def _unit_scale(cfg, beta: float) -> float:
    return cfg["hbar_c"] ** (0.5 * beta)


def _warn_beta(cfg, command: str) -> None:
    if cfg["beta"] is not None:
        print(f"note: beta override ignored by '{command}' (beta is fixed by the family)", file=sys.stderr)


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

def theta_grid(cfg) -> np.ndarray:
    """Interior points of (theta_min, theta_max); ends are excluded."""
    n = cfg["theta_samples"]
    a, b = cfg["theta_min"], cfg["theta_max"]
    return a + (b - a) * np.arange(1, n + 1) / (n + 1)


def cmd_profiles(cfg) -> int:
    family = cfg["family"]
    if family not in ("LP", "RS"):
        raise ConfigError("profiles supports the LP and RS families")
    _warn_beta(cfg, "profiles")
    beta = ef.FAMILY_BETA[family]
    scale = _unit_scale(cfg, beta)
    thetas = theta_grid(cfg)
    # exact pi/2 comes back as NaN (the regular part is undefined there)
    prof = ef.profile(family, thetas)
    rows = []
    for i, th in enumerate(thetas):
        rows.append({
            "theta": float(th),
            "family": family,
            "P_rho": float(prof.P_rho[i]) * scale,
            "P_psi_regular": float(prof.P_psi_regular[i]) * scale,
            "P_z": float(prof.P_z[i]) * scale,
            "delta_psi_coeff": prof.delta_psi_coeff * scale,
        })
    meta = [{
        "row_type": "delta",
        "family": family,
        "theta": 0.5 * math.pi,
        "component": "psi",
        "coefficient": prof.delta_psi_coeff * scale,
        "support": "delta(theta - pi/2)",
    }]
    _write_table(cfg, PROFILE_COLUMNS, rows, meta)
    return EXIT_OK


# ---------------------------------------------------------------------------
# field
# ---------------------------------------------------------------------------

def field_points(cfg) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Grid coordinates (x, z) and the points x u + z n + q (u transverse to n)."""
    xmin, xmax, nx, zmin, zmax, nz = cfg["grid"]
    xs = np.linspace(xmin, xmax, int(nx))
    zs = np.linspace(zmin, zmax, int(nz))
    n = _unit(cfg["axis"])
    u, _ = _transverse_basis(n)
    zz, xx = np.meshgrid(zs, xs, indexing="ij")
    xg, zg = xx.ravel(), zz.ravel()
    pts = xg[:, None] * u[None, :] + zg[:, None] * n[None, :] + np.asarray(cfg["q"])[None, :]
    return xg, zg, pts


def _clip(v: np.ndarray, clamp: float | None) -> np.ndarray:
    if clamp is None:
        return v
    return np.where(np.isnan(v), v, np.clip(v, -clamp, clamp))


def cmd_field(cfg) -> int:
    family = cfg["family"]
    sigma = cfg["sigma"]
    _warn_beta(cfg, "field")
    xg, zg, pts = field_points(cfg)
    n = _unit(cfg["axis"])
    q = np.asarray(cfg["q"], dtype=float)
    d = pts - q[None, :]
    r = np.linalg.norm(d, axis=1)
    at_q = r == 0.0
    cos_t = np.where(at_q, 0.0, (d @ n) / np.where(at_q, 1.0, r))
    band = at_q | (np.abs(cos_t) < cfg["mask_band"]) | (d @ n == 0.0)
    beta = 0.0 if family == "Debierre" else ef.FAMILY_BETA[family]
    scale = _unit_scale(cfg, beta)

    comps = np.full((len(pts), 3), np.nan, dtype=complex if family == "Debierre" else float)
    good = ~band
    if family == "Debierre":
        for i in np.flatnonzero(good):
            try:
                comps[i] = ef.debierre_lp(pts[i], sigma, axis=n, q=q).regular
            except ValueError:
                band[i] = True
    elif np.any(good):
        vals, _ = ef.eigenfunction_grid(pts[good], q=q, axis=n, sigma=sigma, family=family, mask_band=0.0)
        comps[good] = vals
    comps = comps * scale

    rows = []
    for i in range(len(pts)):
        row = {"x": float(xg[i]), "z": float(zg[i])}
        c = comps[i]
        re = _clip(np.real(c), cfg["clamp"])
        row.update(comp_rho=float(re[0]), comp_psi=float(re[1]), comp_z=float(re[2]))
        row["mask_flag"] = int(bool(band[i]))
        if family == "Debierre":
            im = _clip(np.imag(c), cfg["clamp"])
            row.update(comp_rho_im=float(im[0]), comp_psi_im=float(im[1]), comp_z_im=float(im[2]))
        rows.append(row)
    columns = FIELD_COLUMNS + (("comp_rho_im", "comp_psi_im", "comp_z_im") if family == "Debierre" else ())

    meta = [{"row_type": "info", "family": family, "sigma": sigma,
             "clamp": cfg["clamp"] if cfg["clamp"] is not None else "none",
             "figure_clamp": FIGURE_CLAMP, "mask_band": cfg["mask_band"]}]
    meta.extend(_field_delta_rows(cfg, family, sigma, n, q, scale))
    _write_table(cfg, columns, rows, meta)
    return EXIT_OK


def _field_delta_rows(cfg, family, sigma, n, q, scale):
    """delta(x3) coefficients along the plane's intersection with the grid (z = 0)."""
    if family == "RS":
        return []
    xmin, xmax, nx, *_ = cfg["grid"]
    u, _ = _transverse_basis(n)
    out = []
    for x in np.linspace(xmin, xmax, int(nx)):
        if x == 0.0:
            continue
        p = x * u + q
        if family == "LP":
            sing = ef.eigenfunction_value(p, q=q, axis=n, sigma=sigma, family="LP").singular
            coeff = {"delta_rho": 0.0, "delta_psi": float(sing[1])}
            comp = {"delta_rho_im": 0.0, "delta_psi_im": 0.0}
        else:
            sing = ef.debierre_lp(p, sigma, axis=n, q=q).singular
            coeff = {"delta_rho": float(sing[0].real), "delta_psi": float(sing[1].real)}
            comp = {"delta_rho_im": float(sing[0].imag), "delta_psi_im": float(sing[1].imag)}
        row = {"row_type": "delta", "x": float(x), "z": 0.0}
        row.update({k: v * scale for k, v in coeff.items()})
        row.update({k: v * scale for k, v in comp.items()})
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

REPORT_FIELDS = ("check_name", "max_rel_err", "max_abs_err", "tolerance", "passed", "samples", "note")


def cmd_verify(cfg, suite: str, timings: bool = False) -> int:
    if suite not in suite_names():
        raise ConfigError(f"unknown suite {suite!r}; choose from {', '.join(suite_names())}")
    qcfg = quadrature_config(cfg)
    start = time.perf_counter()
    reports = run_suite(suite, qcfg)
    elapsed = time.perf_counter() - start
    for rep in reports:
        mark = "PASS" if rep.passed else "FAIL"
        print(f"{mark} {rep.check_name} max_rel_err={rep.max_rel_err:.3e} tol={rep.tolerance:.1e} "
              f"({rep.elapsed:.1f}s)", file=sys.stderr)
    n_fail = sum(not r.passed for r in reports)
    print(f"{len(reports) - n_fail}/{len(reports)} checks passed in {elapsed:.1f}s", file=sys.stderr)
    # timings are opt-in so that by default identical settings give identical reports
    fields = REPORT_FIELDS + (("elapsed",) if timings else ())
    rows = [{k: rep.to_dict()[k] for k in fields} for rep in reports]
    _emit(render_json(rows), cfg["out"])
    return EXIT_OK if n_fail == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# hertz
# ---------------------------------------------------------------------------

HERTZ_COLUMNS = ("row_type", "k", "a_k", "b_k", "F_even_2f1", "F_even_elliptic", "F_even_diff",
                 "F_odd_2f1", "F_odd_elliptic", "F_odd_diff", "t_over_r", "zeta_re", "zeta_im",
                 "zeta_t0", "residual", "residual_ratio_half")


def cmd_hertz(cfg) -> int:
    _warn_beta(cfg, "hertz")
    st = cfg["rho_over_r"]
    if not 0.0 <= st < 1.0:
        raise ConfigError("rho_over_r must lie in [0, 1)")
    s = math.sqrt((1.0 - st) * (1.0 + st))
    x = np.array([st, 0.0, s])
    n_max = cfg["n_max"]
    series = hz.hertz_series(st, n_max)
    rows = []
    for k in range(n_max + 1):
        row = {"row_type": "coefficient", "k": k, "a_k": float(series.real_coeffs[k]),
               "b_k": float(series.imag_coeffs[k])}
        f_even = gauss_2f1(k + 0.75, 0.5, 1.0, st * st, one_minus_z=s * s)
        f_odd = gauss_2f1(k + 1.25, 0.5, 1.0, st * st, one_minus_z=s * s)
        row.update(F_even_2f1=f_even, F_odd_2f1=f_odd)
        if k <= cfg["elliptic_k_max"] and 0.0 < s < 1.0:
            e_even, e_odd = hz.elliptic_coefficient_forms(k, s)
            row.update(F_even_elliptic=e_even, F_even_diff=e_even - f_even,
                       F_odd_elliptic=e_odd, F_odd_diff=e_odd - f_odd)
        rows.append(row)
    z0 = hz.zeta_t0(x)
    for tau in cfg["t_over_r"]:
        if abs(tau) >= s:
            raise ConfigError(f"|t/r| = {abs(tau):g} is outside the convergence radius {s:.6g}")
        zeta = hz.zeta_eval(x, tau, n_max)
        row = {"row_type": "zeta", "t_over_r": tau, "zeta_re": zeta.real, "zeta_im": zeta.imag}
        if tau == 0.0:
            row["zeta_t0"] = z0
        else:
            m = cfg["residual_n_max"]
            res = hz.wave_residual(x, tau, n_max=m)
            res_half = hz.wave_residual(x, 0.5 * tau, n_max=m)
            row["residual"] = res
            row["residual_ratio_half"] = res / res_half if res_half > 0 else math.nan
        rows.append(row)
    meta = [{"row_type": "info", "rho_over_r": st, "n_max": n_max, "residual_n_max": cfg["residual_n_max"],
             "expected_residual_ratio": 2.0 ** (2 * cfg["residual_n_max"])}]
    _write_table(cfg, HERTZ_COLUMNS, rows, meta)
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def cmd_oracle(cfg) -> int:
    tag = cfg["tag"]
    if tag not in orc.ORACLE_TAGS:
        raise ConfigError(f"unknown tag {tag!r}; choose from {', '.join(orc.ORACLE_TAGS)}")
    family = cfg["family"]
    beta = cfg["beta"] if cfg["beta"] is not None else ef.FAMILY_BETA.get(family, 0.0)
    res = orc.damped_fourier_oracle(np.asarray(cfg["point"]), tag, beta, quadrature_config(cfg))
    value = np.atleast_1d(res.value) * _unit_scale(cfg, beta)
    rows = [{"index": i, "re": float(v.real), "im": float(v.imag)} for i, v in enumerate(value)]
    meta = [{"row_type": "info", "tag": tag, "beta": beta, "stable": bool(res.stable),
             "extrapolant_spread": float(np.max(np.abs(np.asarray(res.extrapolants[-1])
                                                       - np.asarray(res.extrapolants[-2]))))}]
    _write_table(cfg, ("index", "re", "im"), rows, meta)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value settings file")
    for key, opt in SCHEMA.items():
        flag = "--" + key.replace("_", "-")
        common.add_argument(flag, dest=key, default=None, metavar=key.upper(),
                            help=f"{opt.help} (default {format_number(opt.default) if not isinstance(opt.default, tuple) else ','.join(format_number(v) for v in opt.default)})")
    parser = _Parser(prog="photonpos", description="Photon position eigenfunctions: data and checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("profiles", parents=[common], help="angular profiles P(theta)")
    sub.add_parser("field", parents=[common], help="field components on a plane containing the axis")
    p = sub.add_parser("verify", parents=[common], help="run verification suites, JSON report")
    p.add_argument("suite", nargs="?", default="all", help=", ".join(suite_names()))
    p.add_argument("--timings", action="store_true", help="include per-check run times in the report")
    sub.add_parser("hertz", parents=[common], help="Hertz series coefficients and values")
    sub.add_parser("oracle", parents=[common], help="damped Fourier oracle at one point")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    overrides = {key: getattr(args, key) for key in SCHEMA}
    try:
        cfg = load_config(args.config, overrides)
        with warnings.catch_warnings():
            warnings.simplefilter("always", hz.HertzTruncationWarning)
            warnings.showwarning = _show_warning
            if args.command == "profiles":
                return cmd_profiles(cfg)
            if args.command == "field":
                return cmd_field(cfg)
            if args.command == "verify":
                return cmd_verify(cfg, args.suite, args.timings)
            if args.command == "hertz":
                return cmd_hertz(cfg)
            return cmd_oracle(cfg)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
