"""Command-line front end.

    superfront <subcommand> --config <path> [--out <path>] [--format csv|json] [--seed N] [--count N]

Errors are reported as a single JSON object on stderr with a nonzero exit.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .config import FORMATS, load_config, parse_config, parse_sweep
from .errors import ConfigError, IoError, SuperfrontError
from .report import run_entangle, run_resonances, run_sample, run_spectrum, run_sweep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superfront", description="Photon pairs from a superluminal optical boundary.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        s = sub.add_parser(name, help=help)
        s.add_argument("--config", required=True, help="JSON run configuration")
        s.add_argument("--out", default=None, help="output path (default: config 'out' or stdout)")
        s.add_argument("--format", choices=FORMATS, default=None)
        s.add_argument("--seed", type=int, default=None)
        s.add_argument("--count", type=int, default=None)
        return s

    add("spectrum", "angular emission spectrum over the configured grid")
    add("resonances", "regime and resonant incidence angles")
    ent = add("entangle", "entanglement measures at one z or incidence angle")
    src = ent.add_mutually_exclusive_group()
    src.add_argument("--z", type=float, default=None)
    src.add_argument("--theta-i", type=float, default=None)
    smp = add("sample", "seeded pair-count draws")
    smp.add_argument("--z", type=float, default=None)
    add("sweep", "spectra of every entry in 'configs', with a config_id column")
    return p


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(Path(out), "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {out}: {exc.strerror}") from None


def _fail(exc: Exception) -> int:
    err = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ConfigError):
        err["field"] = exc.field
    if getattr(exc, "between_resonances", False):
        err["between_resonances"] = True
    sys.stderr.write(json.dumps(err) + "\n")
    return 2 if isinstance(exc, ConfigError) else 1


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = load_config(args.config)
        if args.count is not None and args.count < 1:
            raise ConfigError("--count", "must be >= 1")
        if args.cmd == "sweep":
            cfgs = parse_sweep(text)
            if args.seed is not None:
                cfgs = [dataclasses.replace(c, seed=args.seed) for c in cfgs]
            out = args.out or cfgs[0].out
            _write(run_sweep(cfgs, fmt=args.format), out)
            return 0
        cfg = parse_config(text)
        if args.seed is not None:
            cfg = dataclasses.replace(cfg, seed=args.seed)
        fmt = args.format
        if args.cmd == "spectrum":
            result = run_spectrum(cfg, fmt=fmt)
        elif args.cmd == "resonances":
            result = run_resonances(cfg, fmt=fmt)
        elif args.cmd == "entangle":
            result = run_entangle(cfg, z=args.z, theta_i=args.theta_i, fmt=fmt)
        else:
            result = run_sample(cfg, count=args.count, z=args.z, fmt=fmt)
        _write(result, args.out or cfg.out)
    except (SuperfrontError, ValueError) as exc:
        return _fail(exc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
