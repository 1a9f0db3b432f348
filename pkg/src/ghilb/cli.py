"""Command-line front end.

Subcommands: group, quiver, fixed-points, fan, verify.  All outputs are
UTF-8 JSON on stdout (plus optional files), except the quiver DOT source
which can be written separately.  Exit codes: 0 success, 1 verification
failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import ggraph, mckay, toric, verify
from .groups import AbelianGroup, GroupSpec, GroupSpecError


@dataclass
class RunConfig:
    group_text: str
    command: str
    out_path: str | None = None
    oracle_cap: int = 16
    samples: int = 5
    seed: int = 0
    max_pairs: int | None = None
    dot_path: str | None = None

    def __post_init__(self):
        if self.oracle_cap < 1:
            raise ValueError("oracle cap must be at least 1")
        if self.samples < 0:
            raise ValueError("sample count must be nonnegative")


def _group(config: RunConfig) -> AbelianGroup:
    return AbelianGroup(GroupSpec.parse(config.group_text))


def cmd_group(config: RunConfig) -> tuple[int, dict]:
    G = _group(config)
    payload = {
        "order": G.order,
        "exponent": G.R,
        "elements": [list(g) for g in G.elements],
        "characters": [
            {"index": k, "exponent": list(G.char_exponents[k]), "fingerprint": list(chi.fingerprint)}
            for k, chi in enumerate(G.characters)
        ],
        "ages": {str(list(g)): str(G.age(g)) for g in G.elements},
        "junior_elements": [list(g) for g in G.junior_elements()],
    }
    return 0, payload


def cmd_quiver(config: RunConfig) -> tuple[int, dict]:
    G = _group(config)
    a0, a1, a2, a3 = mckay.mckay_matrices(G)
    dot = mckay.quiver_dot(G)
    if config.dot_path:
        with open(config.dot_path, "w", encoding="utf-8") as handle:
            handle.write(dot + "\n")
    payload = {
        "matrices": {"a0": a0, "a1": a1, "a2": a2, "a3": a3},
        "intersection": mckay.intersection_matrix(G),
        "dot": dot,
    }
    return 0, payload


def cmd_fixed_points(config: RunConfig) -> tuple[int, dict]:
    G = _group(config)
    fps = ggraph.enumerate_fixed_points(G)
    payload = {
        "count": len(fps),
        "fixed_points": [
            {**gg.to_json(), "count_identity": ggraph.verify_count_identity(gg)}
            for gg in fps
        ],
    }
    code = 0
    if G.order <= config.oracle_cap:
        oracle = ggraph.brute_force_fixed_points(G, cap=config.oracle_cap)
        agree = [gg.to_json() for gg in fps] == [gg.to_json() for gg in oracle]
        payload["oracle_agreement"] = agree
        if not agree:
            code = 1
    return code, payload


def cmd_fan(config: RunConfig) -> tuple[int, dict]:
    G = _group(config)
    fps = ggraph.enumerate_fixed_points(G)
    pair = toric.lattices(G)
    cones = []
    flags = []
    code = 0
    for k, gg in enumerate(fps):
        try:
            cone = toric.chart_cone(G, pair, gg, owner=k)
            cones.append(cone)
            flags.append({"fixed_point": k, "smooth": True, "crepant": True})
        except toric.ChartError as exc:
            code = 1
            flags.append({"fixed_point": k, "smooth": False, "error": str(exc)})
    payload: dict = {"charts": flags}
    if code == 0:
        try:
            payload.update(toric.build_fan(G, pair, cones).to_json())
        except toric.FanError as exc:
            code = 1
            payload["fan_error"] = {"message": str(exc), **exc.details}
    return code, payload


def cmd_verify(config: RunConfig) -> tuple[int, dict]:
    G = _group(config)
    report = verify.verification_report(
        G,
        oracle_cap=config.oracle_cap,
        samples=config.samples,
        seed=config.seed,
        max_pairs=config.max_pairs,
    )
    print(verify.render_report(report), file=sys.stderr)
    code = 0 if report["pass"] else 1
    if code:
        failing = verify.first_failure(report)
        print(f"first failing check: {failing}", file=sys.stderr)
    return code, report


COMMANDS = {
    "group": cmd_group,
    "quiver": cmd_quiver,
    "fixed-points": cmd_fixed_points,
    "fan": cmd_fan,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghilb",
        description=(
            "Exact fixed points, McKay quiver, and crepant toric resolution "
            "data for a finite abelian subgroup of SL3 given by diagonal "
            "generators, e.g. '7:1,2,4' or '2:1,1,0;2:1,0,1'."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("group", "elements, characters, ages, junior elements"),
        ("quiver", "tensor matrices and DOT quiver"),
        ("fixed-points", "enumerate and classify the torus-fixed ideals"),
        ("fan", "chart cones and the glued fan with smooth/crepant flags"),
        ("verify", "run the full verification suite"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--group", required=True, help="generator spec r:w1,w2,w3[;...]")
        p.add_argument("--out", default=None, help="write the JSON payload to this path")
        p.add_argument("--oracle-cap", type=int, default=16)
        p.add_argument("--samples", type=int, default=5)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-pairs", type=int, default=None)
        if name == "quiver":
            p.add_argument("--dot", default=None, help="also write the DOT source here")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            group_text=args.group,
            command=args.command,
            out_path=args.out,
            oracle_cap=args.oracle_cap,
            samples=args.samples,
            seed=args.seed,
            max_pairs=args.max_pairs,
            dot_path=getattr(args, "dot", None),
        )
        code, payload = COMMANDS[args.command](config)
    except (GroupSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
