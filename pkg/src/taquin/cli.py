"""Command line front end.

Subcommands: sample, evolve, atlas (build/query), experiment (evacuation,
lazy), verify (identities/lemma).  Exit codes: 0 success, 1 failure or
runtime error, 2 usage.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .dynamics import jdt_slide
from .experiments import (
    ATLAS_DOMAIN,
    ExperimentConfig,
    emit_reports,
    run_evacuation_experiment,
    run_lazy_path_experiment,
)
from .geography import build_atlas, latitude, load_atlas, longitude, meridian_point, save_atlas
from .rng import RngSpec
from .tableaux import StandardTableau, YoungDiagram, validate


def _parse_shape(text: str) -> YoungDiagram:
    parts = text.replace(",", " ").split()
    try:
        rows = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad shape {text!r}: expected integers") from None
    return YoungDiagram(rows)


def _cmd_sample(args) -> int:
    from .sampling import sample_uniform_pieri, sample_uniform_syt

    shape = _parse_shape(args.shape)
    blocks = []
    for i in range(args.count):
        spec = RngSpec(args.seed, i)
        if args.pieri is not None:
            t = sample_uniform_pieri(shape, args.pieri, spec)
        else:
            t = sample_uniform_syt(shape, spec)
        blocks.append(t.to_text())
    out = "\n".join(blocks)
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def _cmd_evolve(args) -> int:
    t = StandardTableau.from_text(Path(args.input_path).read_text())
    problem = validate(t)
    if problem is not None:
        raise ValueError(f"input tableau is not standard: {problem}")
    if not 0 <= args.steps <= t.size - 1:
        raise ValueError(
            f"steps must lie in 0..{t.size - 1} for a tableau with {t.size} boxes"
        )
    maxv = t.max_entry
    track = [t.position_of(maxv)]
    cur = t
    for _ in range(args.steps):
        cur = jdt_slide(cur).after
        track.append(cur.position_of(maxv))
    if args.record_path:
        print("step,x,y")
        for i, p in enumerate(track):
            print(f"{i},{p.x},{p.y}")
    if args.out:
        Path(args.out).write_text(cur.to_text())
    elif not args.record_path:
        sys.stdout.write(cur.to_text())
    return 0


def _cmd_atlas_build(args) -> int:
    rng = RngSpec(args.seed, ATLAS_DOMAIN << 48)
    atlas = build_atlas(
        args.n, args.samples, rng, grid_size=args.grid, workers=args.workers
    )
    save_atlas(atlas, args.out)
    print(
        f"atlas side={atlas.side} samples={atlas.samples} grid={atlas.grid_size} "
        f"raw_violations={atlas.raw_violation_fraction:.4f} -> {args.out}"
    )
    return 0


def _cmd_atlas_query(args) -> int:
    atlas = load_atlas(args.atlas)
    if args.point is not None:
        x, y = args.point
        print(f"latitude {latitude(atlas, (x, y))!r}")
        print(f"longitude {longitude(atlas, (x, y))!r}")
    else:
        a, p = args.meridian
        x, y = meridian_point(atlas, a, p)
        print(f"x {x!r}")
        print(f"y {y!r}")
    return 0


def _cmd_experiment(args) -> int:
    if args.atlas == "build":
        rng = RngSpec(args.atlas_seed, ATLAS_DOMAIN << 48)
        atlas = build_atlas(
            args.n, args.atlas_samples, rng, grid_size=args.atlas_grid,
            workers=args.workers,
        )
    else:
        atlas = load_atlas(args.atlas)
    cfg = ExperimentConfig(
        side=args.n, trials=args.trials, master_seed=args.seed, t0=args.t0
    )
    run = run_evacuation_experiment if args.kind == "evacuation" else run_lazy_path_experiment
    summary, reports = run(cfg, atlas, workers=args.workers)
    csv_path, summary_path = emit_reports(reports, summary, args.out)
    print(f"wrote {csv_path}")
    print(f"wrote {summary_path}")
    print(f"ks_statistic {summary.ks_statistic!r}")
    for name, q in (
        ("latitude_sup", summary.latitude_sup_quantiles),
        ("longitude_sup", summary.longitude_sup_quantiles),
        ("point_sup", summary.point_sup_quantiles),
    ):
        if q:
            print(f"{name} median {q['0.5']!r} q90 {q['0.9']!r}")
    return 0


def _identity_sweeps(trials: int, master: int, max_n: int):
    """Yields (name, cases, failures) per identity family."""
    from . import dynamics
    from .rsk import check_shift_identity, greene_shape, path_equivalence_check, rsk, standardize
    from .sampling import (
        random_coupling,
        random_subdiagram,
        sample_permutation,
        sample_uniform_syt,
    )

    side_cap = max(2, math.isqrt(max_n))
    perm_cap = max(2, min(max_n, 40))
    greene_cap = max(2, min(max_n, 20))

    fails = 0
    for trial in range(trials):
        stream = RngSpec(master, (10 << 48) | trial).stream()
        t = sample_uniform_syt(random_subdiagram(side_cap, stream), stream)
        if not dynamics.happy_box_all(t):
            fails += 1
    yield "happy-box", trials, fails

    fails = 0
    for trial in range(trials):
        stream = RngSpec(master, (11 << 48) | trial).stream()
        n = 2 + stream.below(perm_cap - 1)
        if not check_shift_identity(sample_permutation(n, stream)):
            fails += 1
    yield "shift", trials, fails

    fails = 0
    for trial in range(trials):
        stream = RngSpec(master, (12 << 48) | trial).stream()
        n = 2 + stream.below(perm_cap - 1)
        if not path_equivalence_check(sample_permutation(n, stream)):
            fails += 1
    yield "path-equivalence", trials, fails

    cases = fails = 0
    for trial in range(trials):
        stream = RngSpec(master, (13 << 48) | trial).stream()
        n = 2 + stream.below(greene_cap - 1)
        perm = sample_permutation(n, stream)
        for p in range(1, n + 1):
            cases += 1
            insertion = rsk(standardize(perm[:p]))[0].shape
            if greene_shape(perm, p) != insertion:
                fails += 1
    yield "greene-vs-insertion", cases, fails

    fails = 0
    for trial in range(trials):
        stream = RngSpec(master, (14 << 48) | trial).stream()
        side = 2 + stream.below(min(side_cap, 5) - 1)
        t = sample_uniform_syt(YoungDiagram((side,) * side), stream)
        k = 1 + stream.below(3)  # k + 1 <= 4 <= side^2, so the guard holds
        # equality, not implication: the slide preserves Pieri status exactly
        if dynamics.is_pieri(t, k) != dynamics.is_pieri(jdt_slide(t).after, k):
            fails += 1
    yield "pieri-preservation", trials, fails

    fails = 0
    for trial in range(trials):
        stream = RngSpec(master, (15 << 48) | trial).stream()
        k = 1 + stream.below(3)
        c = random_coupling(2 + stream.below(4), k, stream)
        seq = dynamics.psi_tilde_sequence(c)
        if any(b > a for a, b in zip(seq, seq[1:])):
            fails += 1
    yield "psi-monotone", trials, fails


def _cmd_verify_identities(args) -> int:
    bad = 0
    print(f"{'identity':<22} {'cases':>6} {'failures':>9}  status")
    for name, cases, fails in _identity_sweeps(args.trials, args.seed, args.max_n):
        status = "ok" if fails == 0 else "FAIL"
        if fails:
            bad += 1
        print(f"{name:<22} {cases:>6} {fails:>9}  {status}")
    return 1 if bad else 0


def _cmd_verify_lemma(args) -> int:
    from .spectral import lemma_expvalue_check

    shape = _parse_shape(args.shape)
    lhs, rhs, equal = lemma_expvalue_check(shape, args.a, args.b, args.poly)
    print(f"lhs {lhs}")
    print(f"rhs {rhs}")
    print(f"equal {equal}")
    return 0 if equal else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taquin")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw uniform standard tableaux")
    p.add_argument("--shape", required=True, help="row lengths, e.g. '5 4 3 1'")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--pieri", type=int, default=None, metavar="K",
                   help="condition on the K largest entries having increasing u")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("evolve", help="apply slides to a tableau file")
    p.add_argument("--in", dest="input_path", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--record-path", action="store_true",
                   help="print CSV step,x,y of the maximal entry's position")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_evolve)

    p = sub.add_parser("atlas", help="geography atlas")
    asub = p.add_subparsers(dest="atlas_command", required=True)
    b = asub.add_parser("build")
    b.add_argument("--n", type=int, required=True, help="square side")
    b.add_argument("--samples", type=int, required=True)
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--grid", type=int, default=64)
    b.add_argument("--workers", type=int, default=None)
    b.set_defaults(fn=_cmd_atlas_build)
    q = asub.add_parser("query")
    q.add_argument("--atlas", required=True)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--point", type=float, nargs=2, metavar=("X", "Y"))
    g.add_argument("--meridian", type=float, nargs=2, metavar=("LAT", "LON"))
    q.set_defaults(fn=_cmd_atlas_query)

    p = sub.add_parser("experiment", help="trajectory experiments")
    p.add_argument("kind", choices=["evacuation", "lazy"])
    p.add_argument("--n", type=int, required=True, help="square side")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--atlas", required=True,
                   help="atlas file path, or 'build' to estimate one now")
    p.add_argument("--atlas-samples", type=int, default=2000)
    p.add_argument("--atlas-seed", type=int, default=3)
    p.add_argument("--atlas-grid", type=int, default=64)
    p.add_argument("--t0", type=float, default=0.5)
    p.add_argument("--out", required=True, help="report directory")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(fn=_cmd_experiment)

    p = sub.add_parser("verify", help="identity sweeps and exact checks")
    vsub = p.add_subparsers(dest="verify_command", required=True)
    vi = vsub.add_parser("identities")
    vi.add_argument("--trials", type=int, default=50)
    vi.add_argument("--seed", type=int, default=0)
    vi.add_argument("--max-n", type=int, default=36)
    vi.set_defaults(fn=_cmd_verify_identities)
    vl = vsub.add_parser("lemma")
    vl.add_argument("--shape", required=True)
    vl.add_argument("--a", type=int, required=True)
    vl.add_argument("--b", type=int, required=True)
    vl.add_argument("--poly", required=True, help="e.g. 'p1', 'p2', 'p1^2', 'e2'")
    vl.set_defaults(fn=_cmd_verify_lemma)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
