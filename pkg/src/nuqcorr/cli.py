"""Command-line front end: baseline scans, identity checks, coherence ceiling.

Exit codes are a stable contract: 0 success, 1 usage or config problem,
2 verification failure.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import measures, oscillation, scan

VERIFY_TOLS = {
    "pure-state hs budget = 1/2": 1e-12,
    "entropic budget residual = 0": 1e-10,
    "population discord = mutual info + conditional entropy": 1e-10,
    "steered coherence = 2 + population entropy (pure, real coherence)": 1e-9,
    "steered coherence - discord = 2 (pure, real coherence)": 1e-9,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="nuqcorr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="run a baseline scan and write a CSV")
    src = p_scan.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help=f"one of {sorted(scan.PRESETS)}")
    src.add_argument("--config", help="path to a scan config file")
    p_scan.add_argument("--picture", choices=scan.PICTURES, default="wave-packet")
    p_scan.add_argument("-o", "--output", required=True,
                        help="CSV output path, or '-' for stdout")
    p_scan.add_argument("--tail", action="store_true",
                        help="extend the grid past the nominal baseline")
    p_scan.add_argument("--tail-factor", type=float, default=scan.DEFAULT_TAIL_FACTOR)
    p_scan.add_argument("--grid-points", type=int, default=None,
                        help="override the preset/config grid resolution")
    p_scan.add_argument("--no-comments", action="store_true",
                        help="omit the '#' metadata lines from the CSV")

    p_verify = sub.add_parser("verify", help="randomized identity checks")
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=7)

    sub.add_parser("presets", help="print the built-in experiment presets")

    p_bound = sub.add_parser("bound", help="single-qubit coherence ceiling")
    p_bound.add_argument("--resolution", type=int, default=96)
    p_bound.add_argument("--incoherent-only", action="store_true",
                         help="restrict to states with no coherence in any "
                              "Pauli basis (the maximally mixed state)")
    return parser


def cmd_scan(args) -> int:
    if args.preset is not None:
        if args.preset not in scan.PRESETS:
            print(f"error: unknown preset {args.preset!r}; "
                  f"valid presets: {', '.join(sorted(scan.PRESETS))}", file=sys.stderr)
            return 1
        params = scan.PRESETS[args.preset]
    else:
        params = scan.load_config(args.config)
    if args.grid_points is not None:
        params = scan.with_grid_points(params, args.grid_points)
    table = scan.run_scan(params, picture=args.picture, tail=args.tail,
                          tail_factor=args.tail_factor)
    comments = not args.no_comments
    if args.output == "-":
        scan.write_csv(table, sys.stdout, comments=comments)
    else:
        scan.write_csv(table, args.output, comments=comments)
        print(f"wrote {len(table.rows)} rows to {args.output}")
    survivals = [rep.survival_prob for _, rep in table.rows]
    print(f"min survival probability: {min(survivals):.6f}")
    print(f"mutual information at max x: {table.rows[-1][1].mutual_info:.6f} bits")
    return 0


def _random_kernel(rng) -> oscillation.FlavorKernel:
    """Random valid flavor kernel: random populations and allowed coherence."""
    fee = rng.uniform(0.0, 1.0)
    mag = rng.uniform(0.0, 1.0) * math.sqrt(max(fee * (1.0 - fee), 0.0))
    off = mag * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
    m = np.array([[fee, off], [np.conj(off), 1.0 - fee]])
    return oscillation.FlavorKernel(m, "e")


def _pure_real_kernel(rng) -> oscillation.FlavorKernel:
    """Pure-state kernel with real coherence: the steered-coherence identities
    hold exactly on this family."""
    fee = rng.uniform(0.0, 1.0)
    off = math.sqrt(max(fee * (1.0 - fee), 0.0))
    return oscillation.FlavorKernel(np.array([[fee, off], [off, 1.0 - fee]]), "e")


def verify_identities(trials: int, seed: int):
    """Max residual of each identity over seeded random states.

    Returns a list of (name, max_residual, tolerance, worst_case_description).
    """
    rng = np.random.default_rng(seed)
    results = []

    worst, desc = 0.0, ""
    for _ in range(trials):
        mix = oscillation.MixingSpec(rng.uniform(0.0, math.pi / 2), 1.0)
        phase = rng.uniform(0.0, 2.0 * math.pi)
        rho = oscillation.pure_state_density_matrix(
            oscillation.plane_wave_state(phase, mix))
        r = abs(measures.ccr_pure_hs(rho) - 0.5)
        if r > worst:
            worst, desc = r, f"theta={mix.theta:.6f}, phase={phase:.6f}"
    results.append(("pure-state hs budget = 1/2", worst, desc))

    worst, desc = 0.0, ""
    for _ in range(trials):
        kernel = _random_kernel(rng)
        rho = oscillation.flavor_density_matrix(kernel)
        r = abs(measures.ccr_mixed_residual(rho))
        if r > worst:
            worst, desc = r, f"kernel={kernel.matrix.tolist()}"
    results.append(("entropic budget residual = 0", worst, desc))

    worst, desc = 0.0, ""
    for _ in range(trials):
        kernel = _random_kernel(rng)
        rho = oscillation.flavor_density_matrix(kernel)
        lhs = measures.quantum_discord_closed(kernel)
        rhs = measures.mutual_information(rho) + measures.conditional_entropy(rho)
        r = abs(lhs - rhs)
        if r > worst:
            worst, desc = r, f"kernel={kernel.matrix.tolist()}"
    results.append(("population discord = mutual info + conditional entropy",
                    worst, desc))

    worst_n, desc_n = 0.0, ""
    worst_o, desc_o = 0.0, ""
    for _ in range(trials):
        kernel = _pure_real_kernel(rng)
        rho = oscillation.flavor_density_matrix(kernel)
        n = measures.naqc_measured(rho)
        qd = measures.quantum_discord_closed(kernel)
        r = abs(n - (2.0 + qd))
        if r > worst_n:
            worst_n, desc_n = r, f"kernel={kernel.matrix.tolist()}"
        r = abs((n - qd) - 2.0)
        if r > worst_o:
            worst_o, desc_o = r, f"kernel={kernel.matrix.tolist()}"
    results.append(("steered coherence = 2 + population entropy (pure, real coherence)",
                    worst_n, desc_n))
    results.append(("steered coherence - discord = 2 (pure, real coherence)",
                    worst_o, desc_o))
    return results


def cmd_verify(args) -> int:
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return 1
    results = verify_identities(args.trials, args.seed)
    failed = None
    for name, residual, desc in results:
        tol = VERIFY_TOLS[name]
        status = "ok" if residual < tol else "FAIL"
        print(f"{status:4s} {name}: max residual {residual:.3e} (tolerance {tol:.0e})")
        if failed is None and residual >= tol:
            failed = (name, residual, desc)
    if failed is not None:
        name, residual, desc = failed
        print(f"verification failed: {name} residual {residual:.3e} at {desc}",
              file=sys.stderr)
        return 2
    print(f"all identities within tolerance over {args.trials} trials (seed {args.seed})")
    return 0


def cmd_presets(_args) -> int:
    for name in sorted(scan.PRESETS):
        p = scan.PRESETS[name]
        print(f"{name}:")
        print(f"  initial_flavor: {p.initial_flavor}")
        print(f"  dm2_ev2: {p.mixing.dm2_ev2:g}")
        print(f"  theta_rad: {p.mixing.theta:.6f} (sin2_2theta = {p.mixing.sin2_2theta:.6f})")
        print(f"  energy_mev: {p.energy_mev:g}")
        print(f"  sigma_x_m: {p.sigma_x_m:g}")
        print(f"  baseline_km: [{p.baseline_km[0]:g}, {p.baseline_km[1]:g}]")
        print(f"  grid_points: {p.grid_points}")
        for note in scan.PRESET_NOTES.get(name, ()):
            print(f"  note: {note}")
    return 0


def cmd_bound(args) -> int:
    if args.incoherent_only:
        print("coherence ceiling (incoherent states only): 0.000000")
        return 0
    coarse = measures.naqc_local_bound(resolution=args.resolution)
    fine = measures.naqc_local_bound(resolution=2 * args.resolution)
    converged = abs(fine - coarse) < 1e-4
    print(f"coherence ceiling at resolution {args.resolution}: {coarse:.6f}")
    print(f"coherence ceiling at resolution {2 * args.resolution}: {fine:.6f}")
    print(f"converged: {converged}")
    return 0 if converged else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "scan":
            return cmd_scan(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "presets":
            return cmd_presets(args)
        return cmd_bound(args)
    except (scan.ConfigError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
