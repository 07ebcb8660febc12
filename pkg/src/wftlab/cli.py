"""Command-line entry point: ``wft-lab <subcommand> [options]``.

Exit codes: 0 success, 2 invalid arguments, 3 domain or singularity error,
4 resource error. JSON floats are written with 17 significant digits; CSV and
JSON outputs open with the schema version and the resolved constants.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from wftlab import compton, deflection, gravity, involute, kinematics, lattice, waves
from wftlab.core import (
    CONSTANTS_ENV,
    PARTICLE_MASSES,
    Constants,
    DomainError,
    ResourceError,
    load_constants,
    mass_from_wavelength,
    rest_wavelength,
)

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 2, 3, 4


class UsageError(Exception):
    pass


# -- serialization -------------------------------------------------------

def fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = f"{x:.17g}"
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _plain(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: _plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def to_json(obj, indent: int = 0) -> str:
    """JSON with every float at 17 significant digits, keys in insertion order."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, bool) or obj is None:
        return {True: "true", False: "false", None: "null"}[obj]
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{to_json(str(k))}: {to_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + to_json(v, indent + 1) for v in obj) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(v) -> str:
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    return str(v)


def csv_text(header: list[str], rows, const: Constants) -> str:
    lines = [f"# schema_version={SCHEMA_VERSION}"]
    lines += [f"# {k} = {v:.17g}" for k, v in const.as_dict().items()]
    lines.append(",".join(header))
    lines += [",".join(_csv_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def json_text(command: str, inputs: dict, result, const: Constants) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "constants": const.as_dict(),
        "inputs": _plain(inputs),
        "result": _plain(result),
    }
    return to_json(doc) + "\n"


# -- argument helpers ----------------------------------------------------

def _particle_wavelength(args, const, *, mass_attr="mass", lam_attr="lambda0", required=True):
    particle = getattr(args, "particle", None)
    mass = getattr(args, mass_attr, None)
    lam = getattr(args, lam_attr, None)
    given = [v is not None for v in (particle, mass, lam)]
    if sum(given) > 1:
        raise UsageError("give only one of --particle, --mass, --lambda0")
    if particle is not None:
        return rest_wavelength(PARTICLE_MASSES[particle], const)
    if mass is not None:
        return rest_wavelength(mass, const)
    if lam is not None:
        return lam
    if required:
        raise UsageError("one of --particle, --mass, --lambda0 is required")
    return None


def _add_particle(p):
    g = p.add_argument_group("particle (one of)")
    g.add_argument("--particle", choices=sorted(PARTICLE_MASSES))
    g.add_argument("--mass", type=float, help="rest mass in kg")
    g.add_argument("--lambda0", type=float, help="rest wavelength in m")


def _format(args, allowed, default):
    fmt = args.format or default
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} not supported here (choose from {', '.join(allowed)})")
    return fmt


# -- subcommands ---------------------------------------------------------

def cmd_lattice(args, const):
    fmt = _format(args, ("csv", "json"), "csv")
    vecs = lattice.enumerate_vectors(args.t_max)
    if fmt == "csv":
        rows = [(*v, lattice.perturbation_speed(v)) for v in vecs]
        return csv_text(["t", "x", "y", "z", "beta"], rows, const)
    result = {
        "count": len(vecs),
        "vectors": [{"t": v.t, "x": v.x, "y": v.y, "z": v.z, "beta": lattice.perturbation_speed(v)} for v in vecs],
    }
    return json_text("lattice", {"t_max": args.t_max}, result, const)


def cmd_doppler(args, const):
    fmt = _format(args, ("csv", "json"), "csv")
    if args.phi_steps < 1:
        raise UsageError("--phi-steps must be >= 1")
    phis = np.linspace(0.0, math.pi, args.phi_steps) if args.phi_steps > 1 else np.array([0.0])
    rows = []
    for b in args.beta:
        for ph in phis:
            rows.append((b, float(ph), kinematics.doppler_wavelength(args.lambda_emit, b, float(ph))))
    if fmt == "csv":
        return csv_text(["beta", "phi", "lambda_obs"], rows, const)
    inputs = {"lambda_emit": args.lambda_emit, "beta": args.beta, "phi_steps": args.phi_steps}
    return json_text("doppler", inputs, [dict(zip(("beta", "phi", "lambda_obs"), r)) for r in rows], const)


def cmd_momentum(args, const):
    _format(args, ("json",), "json")
    lam0 = _particle_wavelength(args, const)
    m0 = mass_from_wavelength(lam0, const)
    p = kinematics.wave_momentum(m0, args.beta, const)
    lb = kinematics.de_broglie_wavelength(lam0, args.beta)
    result = {
        "m0": m0,
        "lambda0": lam0,
        "beta": args.beta,
        "p": p,
        "lambda_B": lb,
        "lambda_B_times_p_over_h": lb * p / const.h if math.isfinite(lb) else math.nan,
        "push_velocity": kinematics.rsp_push_velocity(args.lambda_i, lam0) if args.lambda_i else None,
    }
    return json_text("momentum", vars_of(args), result, const)


def cmd_energy(args, const):
    fmt = _format(args, ("csv", "json"), "csv")
    lam0 = _particle_wavelength(args, const)
    rows = []
    for b in args.beta:
        e = kinematics.energy_pair(lam0, b, const)
        rows.append((b, e.E1, e.E2, e.dE, e.Em))
    if fmt == "csv":
        return csv_text(["beta", "E1", "E2", "dE", "Em"], rows, const)
    return json_text("energy", vars_of(args), [dict(zip(("beta", "E1", "E2", "dE", "Em"), r)) for r in rows], const)


def cmd_waves_residual(args, const):
    fmt = _format(args, ("csv", "json"), "json")
    lam0 = _particle_wavelength(args, const)
    field = waves.WaveField.create(lam0, args.beta, const)
    h = lam0 / args.h_divisor
    grid = waves.wavelength_grid(field, h, args.wavelengths)
    if fmt == "csv":
        x, t, _ = grid.axes(field.c)
        x, t = x[:: args.stride], t[:: args.stride]
        X, T = np.meshgrid(x, t, indexing="ij")
        amp = waves.boosted_field(field, X, T)
        rows = zip(X.ravel().tolist(), T.ravel().tolist(), amp.ravel().tolist())
        return csv_text(["x", "t", "amplitude"], rows, const)
    hj_h = waves.hamilton_jacobi_residual(field, grid)
    hj_h2 = waves.hamilton_jacobi_residual(field, dataclasses.replace(grid, h=h / 2))
    kg = waves.klein_gordon_residual(field, grid)
    kg_neg = waves.klein_gordon_residual(field, grid, branch=-1)
    k02 = field.k0**2
    result = {
        "lambda0": lam0,
        "beta": args.beta,
        "h": h,
        "k0_squared": k02,
        "hamilton_jacobi": {
            "residual_h": hj_h,
            "residual_h2": hj_h2,
            "order": waves.empirical_order(hj_h, hj_h2),
            "relative_h": hj_h / k02,
        },
        "klein_gordon": {**_plain(kg), "relative_h": kg.residual_h / k02},
        "klein_gordon_negative_branch": _plain(kg_neg),
    }
    return json_text("waves-residual", vars_of(args), result, const)


def cmd_deflect(args, const):
    fmt = _format(args, ("csv", "json"), "json")
    if (args.mass is None) == (args.lambda_mass is None):
        raise UsageError("give exactly one of --mass or --lambda-mass")
    lam_mass = args.lambda_mass if args.lambda_mass is not None else rest_wavelength(args.mass, const)
    m = args.mass if args.mass is not None else mass_from_wavelength(lam_mass, const)
    lam_is = args.lambda_i or [0.0]
    rows = []
    for li in lam_is:
        e = deflection.extended_deflection(lam_mass, li, args.r, const)
        rows.append((lam_mass, li, args.r, e.term1, e.term2, e.total))
    if fmt == "csv":
        return csv_text(["lambda_mass", "lambda_i", "r", "term1", "term2", "total"], rows, const)
    result = {
        "gr_deflection": deflection.gr_deflection(m, args.r, const),
        "wave_deflection": deflection.wave_deflection(lam_mass, args.r, const),
        "crossover_product": deflection.crossover_product(const),
        "extended": [dict(zip(("lambda_mass", "lambda_i", "r", "term1", "term2", "total"), r)) for r in rows],
    }
    return json_text("deflect", vars_of(args), result, const)


TRACE_FIELDS = [f.name for f in dataclasses.fields(compton.ComptonTrace)]


def cmd_compton(args, const):
    fmt = _format(args, ("csv", "json"), "json")
    lam0 = _particle_wavelength(args, const)
    traces = [compton.run_pipeline(li, lam0, args.alpha) for li in args.lambda_i]
    if fmt == "csv":
        rows = [[getattr(t, k) for k in TRACE_FIELDS] for t in traces]
        return csv_text(TRACE_FIELDS, rows, const)
    if len(traces) == 1:
        return json_text("compton", vars_of(args), traces[0], const)
    return json_text("compton", vars_of(args), traces, const)


def _involute_spec(args, const) -> involute.InvoluteSpec:
    if args.r0 is not None:
        if any(getattr(args, k) is not None for k in ("particle", "mass", "lambda0")):
            raise UsageError("give either --r0 or a particle/wavelength, not both")
        r0 = args.r0
    else:
        lam0 = _particle_wavelength(args, const, required=False)
        if lam0 is None:
            lam0 = rest_wavelength(PARTICLE_MASSES["electron"], const)
        r0 = involute.resonance_radius(lam0, args.n)
    if args.turns < 1:
        raise UsageError("--turns must be >= 1")
    return involute.InvoluteSpec(
        r0=r0,
        omega_max=args.omega_max if args.omega_max is not None else 2 * math.pi,
        k_max=args.turns - 1,
        mu=args.mu,
        chirality=args.chirality,
        beta=args.beta,
        phi_motion=args.phi_motion,
        samples_per_turn=args.samples,
        mu_steps=args.mu_steps,
    )


def cmd_involute(args, const):
    what = args.what
    if what == "mesh":
        _format(args, ("obj",), "obj")
        return involute.build_mesh(_involute_spec(args, const)).to_obj()
    if what == "curve":
        fmt = _format(args, ("csv",), "csv")
        spec = _involute_spec(args, const)
        if args.helicoid:
            line = involute.helicoid(spec, args.helicoid)
            rows = [(w, *p) for w, p in zip(line.omega.tolist(), line.points.tolist())]
            return csv_text(["omega", "x", "y", "z"], rows, const)
        line = involute.doppler_deformed_involute(spec)
        rows = [(w, *p) for w, p in zip(line.omega.tolist(), line.points.tolist())]
        return csv_text(["omega", "x", "y"], rows, const)
    if what == "pair":
        _format(args, ("json",), "json")
        lam0 = _particle_wavelength(args, const, required=False)
        if lam0 is None:
            lam0 = rest_wavelength(PARTICLE_MASSES["electron"], const)
        lam_i = args.lambda_i if args.lambda_i is not None else lam0 / 2
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            a, b = involute.pair_create(lam_i, lam0, samples_per_turn=args.samples, mu_steps=args.mu_steps,
                                        k_max=args.turns - 1, mu=args.mu)
        result = {
            "pair": [a, b],
            "condition_met": involute.creation_condition_met(lam_i, lam0),
            "warnings": [str(w.message) for w in caught],
        }
        return json_text("involute pair", vars_of(args), result, const)
    if what == "eccentricity":
        _format(args, ("json",), "json")
        spec = _involute_spec(args, const)
        start = args.window_start
        if args.omega_max is None:
            spec = dataclasses.replace(spec, omega_max=start + 2 * math.pi)
        off = involute.eccentricity(spec, start)
        result = {"r0": spec.r0, "omega_window_start": start, "offset": off, "offset_over_r0": off / spec.r0}
        return json_text("involute eccentricity", vars_of(args), result, const)
    raise UsageError(f"unknown involute action {what!r}")


def cmd_gravity(args, const):
    _format(args, ("json",), "json")
    pair = gravity.MassPair.from_masses(args.ma, args.mb, args.r, const)
    f = gravity.wave_gravity_force(pair, const)
    result = {
        "lambda_a": pair.lambda_a,
        "lambda_b": pair.lambda_b,
        **_plain(f),
        "first_impulse_a": gravity.first_impulse(f.force, f.t_g_b),
        "first_impulse_b": gravity.first_impulse(f.force, f.t_g_a),
        "effective_G": gravity.effective_G(const),
    }
    return json_text("gravity", vars_of(args), result, const)


def cmd_terminal(args, const):
    _format(args, ("json",), "json")
    lam0 = _particle_wavelength(args, const)
    return json_text("terminal", vars_of(args), gravity.terminal_report(lam0, const), const)


def cmd_fifth(args, const):
    _format(args, ("json",), "json")
    if args.ma is not None or args.mb is not None:
        if args.ma is None or args.mb is None or args.lambda_a is not None or args.lambda_b is not None:
            raise UsageError("give --ma and --mb, or --lambda-a and --lambda-b")
        la, lb = rest_wavelength(args.ma, const), rest_wavelength(args.mb, const)
    else:
        if args.lambda_a is None or args.lambda_b is None:
            raise UsageError("give --ma and --mb, or --lambda-a and --lambda-b")
        la, lb = args.lambda_a, args.lambda_b
    res = gravity.fifth_interaction_force(la, lb, args.r, args.phi, const)
    result = {"lambda_a": la, "lambda_b": lb, "N": const.N, **_plain(res)}
    return json_text("fifth", vars_of(args), result, const)


def cmd_maximass(args, const):
    _format(args, ("json",), "json")
    m = gravity.maximass(const)
    return json_text("maximass", {}, {"maximass": m, "rest_wavelength": rest_wavelength(m, const)}, const)


def cmd_decompose_n(args, const):
    _format(args, ("json",), "json")
    return json_text("decompose-n", {}, gravity.decompose_N(const), const)


def vars_of(args) -> dict:
    skip = {"func", "format", "output", "constants", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


# -- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wft-lab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--constants", help=f"constants file (default: ${CONSTANTS_ENV} or built-in values)")
    common.add_argument("--format", choices=("json", "csv", "obj"))
    common.add_argument("--output", "-o", help="output path (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    p = add("lattice", cmd_lattice, help="enumerate primitive integral lattice vectors")
    p.add_argument("--t-max", type=int, required=True)

    p = add("doppler", cmd_doppler, help="observed-wavelength sweep over phi in [0, pi]")
    p.add_argument("--lambda-emit", type=float, required=True)
    p.add_argument("--beta", type=float, nargs="+", required=True)
    p.add_argument("--phi-steps", type=int, default=13)

    p = add("momentum", cmd_momentum, help="wave momentum and De Broglie wavelength")
    _add_particle(p)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--lambda-i", type=float, help="also report the push velocity for this photon")

    p = add("energy", cmd_energy, help="forward/backward wave energies")
    _add_particle(p)
    p.add_argument("--beta", type=float, nargs="+", required=True)

    p = add("waves-residual", cmd_waves_residual, help="Hamilton-Jacobi and Klein-Gordon residuals")
    _add_particle(p)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--h-divisor", type=float, default=200.0, help="grid step h = lambda0 / divisor")
    p.add_argument("--wavelengths", type=float, default=3.0)
    p.add_argument("--stride", type=int, default=10, help="subsampling for CSV field samples")

    p = add("deflect", cmd_deflect, help="light deflection angles")
    p.add_argument("--mass", type=float)
    p.add_argument("--lambda-mass", type=float)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--lambda-i", type=float, nargs="+")

    p = add("compton", cmd_compton, help="two-push Compton pipeline")
    _add_particle(p)
    p.add_argument("--lambda-i", type=float, nargs="+", required=True)
    p.add_argument("--alpha", type=float, default=math.pi / 2)

    p = add("involute", cmd_involute, help="involute curves, meshes, pairs, eccentricity")
    p.add_argument("what", choices=("curve", "mesh", "pair", "eccentricity"))
    _add_particle(p)  # electron when none is given
    p.add_argument("--r0", type=float)
    p.add_argument("--n", type=int, default=1, help="resonance order")
    p.add_argument("--turns", type=int, default=1)
    p.add_argument("--samples", type=int, default=64, help="samples per turn")
    p.add_argument("--mu-steps", type=int, default=3)
    p.add_argument("--mu", type=float, default=math.pi / 4)
    p.add_argument("--chirality", type=int, choices=(1, -1), default=1)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--phi-motion", type=float, default=0.0)
    p.add_argument("--omega-max", type=float)
    p.add_argument("--helicoid", type=int, choices=(1, -1), help="emit the helicoid with this z sign")
    p.add_argument("--lambda-i", type=float, help="incident wavelength for 'pair'")
    p.add_argument("--window-start", type=float, default=0.0)

    p = add("gravity", cmd_gravity, help="wave-gravity force vs Newton")
    p.add_argument("--ma", type=float, required=True)
    p.add_argument("--mb", type=float, required=True)
    p.add_argument("--r", type=float, required=True)

    p = add("terminal", cmd_terminal, help="terminal velocity deficit")
    _add_particle(p)

    p = add("fifth", cmd_fifth, help="fifth-interaction force")
    p.add_argument("--ma", type=float)
    p.add_argument("--mb", type=float)
    p.add_argument("--lambda-a", type=float)
    p.add_argument("--lambda-b", type=float)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)

    add("maximass", cmd_maximass, help="mass whose rest wavelength is L")
    add("decompose-n", cmd_decompose_n, help="factor the N coefficient")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        const = load_constants(args.constants)
    except (DomainError, OSError) as exc:
        print(f"wft-lab: error: bad constants: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = args.func(args, const)
    except UsageError as exc:
        print(f"wft-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"wft-lab: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"wft-lab: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"wft-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
