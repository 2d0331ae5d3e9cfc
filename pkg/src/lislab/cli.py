"""Command line entry point: ``lislab <subcommand> ...``.

Estimators print JSON to stdout. ``simulate`` and ``tw-table`` write files.
"""

import argparse
import json
import math
import sys

from .campaign import ExperimentConfig, read_campaign_csv, run_campaign
from .errors import InvalidArgument
from .estimators import estimate_chi, estimate_xi, lattice_distance, probability_A, tw_comparison
from .lemmas import check_cell_tail, check_lemma_2_3, check_lemma_3_2
from .tracy_widom import solve_hastings_mcleod, write_tw_table


def _floats(text):
    return [float(v) for v in text.split(",") if v.strip()]


def _dump(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_simulate(args):
    cfg = ExperimentConfig(
        N_values=_floats(args.n_values),
        trials_per_N=args.trials,
        gamma_values=_floats(args.gammas),
        master_seed=args.seed,
        intensity=args.intensity,
        output_path=args.out,
    )

    def progress(done, total):
        if not args.quiet and (done == total or done % max(1, total // 20) == 0):
            print(f"{done}/{total} trials", file=sys.stderr)

    records = run_campaign(cfg, workers=args.workers, progress=progress)
    _dump({"records": len(records), "csv": args.out})


def cmd_estimate(fn):
    def run(args):
        records, _ = read_campaign_csv(args.csv)
        _dump(fn(records).as_dict())

    return run


def cmd_prob_a(args):
    records, _ = read_campaign_csv(args.csv)
    est = probability_A(records, args.gamma, args.n)
    _dump({"gamma": args.gamma, "N": args.n, "p": est.p, "ci95": [est.ci_low, est.ci_high], "successes": est.successes, "trials": est.trials})


def cmd_tw_compare(args):
    records, _ = read_campaign_csv(args.csv)
    sol = solve_hastings_mcleod(step=args.step)
    ks = tw_comparison(records, sol, args.n, min_trials=args.min_trials)
    ds = [r.d for r in records if math.isclose(r.N, args.n, rel_tol=1e-12)]
    _dump({"N": args.n, "trials": len(ds), "ks": ks, "lattice_ks": lattice_distance(ds, args.n**2, sol)})


def cmd_tw_table(args):
    sol = solve_hastings_mcleod(args.x_left, args.x_right, args.tol, args.step)
    write_tw_table(sol, args.out)
    _dump({"out": args.out, "rows": int(sol.t_table.size), "err_estimate": sol.err_estimate})


def cmd_check_lemmas(args):
    out = {"N": args.n, "gamma": args.gamma, "b": args.b}
    try:
        out["shifted_cylinder_gap"] = check_lemma_2_3(args.n, args.gamma, args.b)
    except InvalidArgument as exc:
        out["shifted_cylinder_gap"] = f"not applicable: {exc}"
    try:
        out["detour_gap"] = check_lemma_3_2(args.n, args.gamma)
    except InvalidArgument as exc:
        out["detour_gap"] = f"not applicable: {exc}"
    if args.trials:
        out["cell_tail_ok"] = check_cell_tail(args.tail_n, args.gamma, args.trials, args.seed)
    _dump(out)


def build_parser():
    p = argparse.ArgumentParser(prog="lislab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("simulate", help="run a Monte Carlo campaign")
    s.add_argument("--n-values", required=True, help="comma separated, ascending")
    s.add_argument("--trials", type=int, required=True, help="trials per N")
    s.add_argument("--gammas", default="", help="comma separated cylinder exponents in (0, 1)")
    s.add_argument("--seed", type=int, default=0, help="master seed")
    s.add_argument("--intensity", type=float, default=1.0)
    s.add_argument("--out", required=True, help="CSV path; the manifest goes next to it")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--quiet", action="store_true")
    s.set_defaults(func=cmd_simulate)

    for name, fn in (("estimate-chi", estimate_chi), ("estimate-xi", estimate_xi)):
        e = sub.add_parser(name, help=f"fit the exponent from a campaign CSV ({fn.__name__})")
        e.add_argument("csv")
        e.set_defaults(func=cmd_estimate(fn))

    a = sub.add_parser("prob-a", help="empirical probability of the cylinder event")
    a.add_argument("csv")
    a.add_argument("--gamma", type=float, required=True)
    a.add_argument("--n", type=float, required=True)
    a.set_defaults(func=cmd_prob_a)

    c = sub.add_parser("tw-compare", help="KS distance of scaled lengths to Tracy-Widom")
    c.add_argument("csv")
    c.add_argument("--n", type=float, required=True)
    c.add_argument("--step", type=float, default=0.005)
    c.add_argument("--min-trials", type=int, default=500)
    c.set_defaults(func=cmd_tw_compare)

    t = sub.add_parser("tw-table", help="tabulate F(t) as CSV")
    t.add_argument("--out", required=True)
    t.add_argument("--x-left", type=float, default=-10.0)
    t.add_argument("--x-right", type=float, default=10.0)
    t.add_argument("--tol", type=float, default=1e-10)
    t.add_argument("--step", type=float, default=0.005)
    t.set_defaults(func=cmd_tw_table)

    g = sub.add_parser("check-lemmas", help="deterministic inequality checks and the cell-tail bound")
    g.add_argument("--n", type=float, required=True)
    g.add_argument("--gamma", type=float, required=True)
    g.add_argument("--b", type=float, required=True)
    g.add_argument("--trials", type=int, default=0, help="Monte Carlo trials for the cell-tail check (0 skips it)")
    g.add_argument("--tail-n", type=float, default=100.0, help="N used for the cell-tail check")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_check_lemmas)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
