"""Command-line front door: generate, simulate, analyze, sweep."""

from __future__ import annotations

import argparse
import sys
from dataclasses import fields, replace

import numpy as np

from .config import ConfigError, SimulationConfig, load_config
from .experiment import classify_mechanism, run_experiment, sweep
from .metrics import MATRIX_ROWS, correlation_report
from .netgen import GenParams, derive_close_ties, generate_ba
from .netio import NetworkFormatError, export_network, import_network

_KEY_HELP = {
    "n": "node count of the generated network",
    "m": "ties per newly attached node",
    "p_close": "probability a friendship tie spawns close-friend tie(s)",
    "p_mutual": "probability a spawned close tie goes both ways",
    "contagion_weight": "attitude share acquired per contagion event (doubled on mutual ties)",
    "homophily_threshold": "attitude at or above which a node counts as strong",
    "confounding_weight": "pull toward the external stimulus per confounding event",
    "mode": "PureContagion | PureHomophily | PureConfounding | Mixed",
    "mix_contagion": "contagion probability per iteration in Mixed mode",
    "mix_homophily": "homophily probability per iteration in Mixed mode",
    "mix_confounding": "confounding probability per iteration in Mixed mode",
    "iterations": "mechanism steps per simulation",
    "snapshot_every": "iterations between correlation snapshots",
    "replications": "independent simulations per experiment",
    "base_seed": "seed of replication 0; replication r uses base_seed + r",
    "output_dir": "directory for tables and figures",
}


def _config_epilog() -> str:
    lines = ["config file keys (one `key = value` per line, # comments):"]
    for f in fields(SimulationConfig):
        lines.append(f"  {f.name:<20} default {f.default!r}: {_KEY_HELP[f.name]}")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="attsim",
        description="Simulate attitude-similarity mechanisms on scale-free social networks.",
        epilog=_config_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a network and export it")
    gen.add_argument("--n", type=int, default=GenParams.n)
    gen.add_argument("--m", type=int, default=GenParams.m)
    gen.add_argument("--p-close", type=float, default=GenParams.p_close)
    gen.add_argument("--p-mutual", type=float, default=GenParams.p_mutual)
    gen.add_argument("--seed", type=int, default=GenParams.seed)
    gen.add_argument("--out", default="network", help="output path prefix")

    sim = sub.add_parser("simulate", help="run a replicated experiment from a config")
    sim.add_argument("--config", help="key = value config file (defaults when omitted)")
    sim.add_argument("--seed", type=int, help="override base_seed")
    sim.add_argument("--output-dir", help="override output_dir")
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--no-figures", action="store_true", help="skip figure rendering")

    ana = sub.add_parser("analyze", help="correlation report for an exported network")
    ana.add_argument("prefix", help="network path prefix (expects .nodes.csv/.ties.csv)")
    ana.add_argument("--out", help="write the report as CSV instead of stdout")

    swp = sub.add_parser("sweep", help="grid over one config parameter")
    swp.add_argument("--config", help="key = value config file (defaults when omitted)")
    swp.add_argument("--param", required=True, help="config key to vary")
    swp.add_argument("--values", required=True, help="comma-separated values")
    swp.add_argument("--seed", type=int, help="override base_seed")
    swp.add_argument("--output-dir", help="override output_dir")
    swp.add_argument("--workers", type=int, default=1)
    swp.add_argument("--no-figures", action="store_true")
    return parser


def _load(args) -> SimulationConfig:
    config = load_config(args.config) if args.config else SimulationConfig()
    if args.seed is not None:
        config = replace(config, base_seed=args.seed)
    if args.output_dir is not None:
        config = replace(config, output_dir=args.output_dir)
    config.validate()
    return config


def _cmd_generate(args) -> int:
    params = GenParams(
        n=args.n, m=args.m, p_close=args.p_close, p_mutual=args.p_mutual, seed=args.seed
    )
    rng = np.random.default_rng(params.seed)
    network = generate_ba(params, rng)
    derive_close_ties(network, params, rng)
    npath, tpath = export_network(network, args.out)
    print(f"wrote {npath} ({len(network)} nodes)")
    print(f"wrote {tpath} ({network.n_base_ties} base, {network.n_close_ties} close ties)")
    return 0


def _cmd_simulate(args) -> int:
    config = _load(args)
    summary = run_experiment(config, workers=args.workers, figures=not args.no_figures)
    print(f"wrote tables to {config.output_dir}")
    print("relation_class mean std n_defined n_undefined")
    for cls in MATRIX_ROWS:
        s = summary.final_stats[cls]
        mean = "undefined" if s.mean is None else f"{s.mean:.4f}"
        std = "" if s.std is None else f"{s.std:.4f}"
        print(f"{cls.value:<12} {mean:>9} {std:>7} {s.n_defined:>4} {s.n_undefined:>4}")
    return 0


def _cmd_analyze(args) -> int:
    network = import_network(args.prefix)
    report = correlation_report(network)
    lines = ["relation_class,correlation,n_effective"]
    for cls in MATRIX_ROWS:
        value = report.correlations[cls]
        text = "" if value is None else repr(value)
        lines.append(f"{cls.value},{text},{report.n_effective[cls]}")
    body = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(body)
    print(f"dominant mechanism signature: {classify_mechanism(report)}")
    return 0


def _parse_values(param: str, raw: str) -> list:
    kinds = {"int": int, "float": float, "str": str}
    field_type = SimulationConfig.__dataclass_fields__[param].type
    kind = kinds.get(field_type, str) if isinstance(field_type, str) else field_type
    return [kind(part.strip()) for part in raw.split(",") if part.strip()]


def _cmd_sweep(args) -> int:
    config = _load(args)
    if args.param not in SimulationConfig.__dataclass_fields__ or args.param == "output_dir":
        raise ConfigError(f"cannot sweep parameter {args.param!r}")
    values = _parse_values(args.param, args.values)
    if not values:
        raise ConfigError("sweep needs at least one value")
    sweep(config, args.param, values, workers=args.workers, figures=not args.no_figures)
    print(f"wrote sweep results to {config.output_dir}")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "simulate": _cmd_simulate,
    "analyze": _cmd_analyze,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, NetworkFormatError, ValueError, OSError) as exc:
        print(f"attsim: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
