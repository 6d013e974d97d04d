"""Command-line front end.

Subcommands: analyze, construct, verify, oracle, generate.  Graphs and
witnesses travel as JSON on files or stdin/stdout ("-"); --format dot
renders the graph or witness digraph for graphviz instead.  Exit status:
0 success, 2 semantic failure (hypotheses fail, verification fails,
construction impossible, oracle inconclusive), 1 I/O or parse trouble.
One log line per invocation goes to stderr with the version, the parsed
configuration, and a sha256 digest of the input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .builders import (
    BuilderOptions,
    auto_witness,
    chordal_witness,
    theorem1_witness,
    theorem2_witness,
    triangle_free_witness,
)
from .competition import (
    ORACLE_DEFAULT_BUDGET,
    Witness,
    exact_competition_number,
    verify_witness,
)
from .errors import (
    BudgetExceededError,
    CompnumError,
    GenerationError,
    GraphValidationError,
    VertexTypeError,
)
from .generators import default_family_spec, gen_family, gen_flower, gen_triangle_free_random
from .graphs import Graph
from .structure import validate_hypotheses

_METHODS = {
    "auto": auto_witness,
    "theorem1": theorem1_witness,
    "theorem2": theorem2_witness,
    "roberts": triangle_free_witness,
    "chordal": chordal_witness,
}


class _Parser(argparse.ArgumentParser):
    # bad flags are a usage problem, not a semantic one
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _read_graph(path: str) -> tuple[Graph, bytes]:
    data = _read_bytes(path)
    return Graph.from_json(data.decode("utf-8")), data


def _log(args: argparse.Namespace, payload: bytes) -> None:
    skip = {"func", "command"}
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    digest = hashlib.sha256(payload).hexdigest()
    print(
        f"compnum {__version__} command={args.command} "
        f"config={json.dumps(cfg, sort_keys=True, default=str)} sha256={digest}",
        file=sys.stderr,
    )


def _parse_vertex(token: str):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        return token


def _parse_common_prey(text: str):
    """"v1,v2,...[:prey]" -> (members, prey or None)."""
    if ":" in text:
        members_part, prey_part = text.split(":", 1)
        prey = _parse_vertex(prey_part)
    else:
        members_part, prey = text, None
    members = tuple(_parse_vertex(t) for t in members_part.split(",") if t.strip())
    if not members:
        raise GraphValidationError(f"no clique members in {text!r}")
    return members, prey


def _parse_lengths(text: str | None, h: int):
    if text is None:
        return None
    out = tuple(int(t) for t in text.split(",") if t.strip())
    if len(out) == 1 and h > 1:
        return out * h
    return out


def _emit_report(d: dict) -> None:
    print(json.dumps(d, indent=2, sort_keys=True))


def cmd_analyze(args) -> int:
    g, raw = _read_graph(args.input)
    _log(args, raw)
    rep = validate_hypotheses(g)
    _emit_report(rep.to_json_dict())
    return 0 if rep.passes else 2


def cmd_construct(args) -> int:
    g, raw = _read_graph(args.input)
    _log(args, raw)
    opts = BuilderOptions(seed=args.seed)
    w = _METHODS[args.method](g, opts)
    rep = verify_witness(g, w)
    if not rep.passed:
        print(json.dumps(rep.to_json_dict(), sort_keys=True), file=sys.stderr)
        return 2
    if args.format == "dot":
        sys.stdout.write(w.digraph.to_dot())
    else:
        print(w.to_json())
    return 0


def cmd_verify(args) -> int:
    g, raw_g = _read_graph(args.graph)
    raw_w = _read_bytes(args.witness)
    _log(args, raw_g + raw_w)
    w = Witness.from_json(raw_w.decode("utf-8"))
    expected = None
    if args.require_common_prey is not None:
        expected = _parse_common_prey(args.require_common_prey)
    rep = verify_witness(g, w, expected)
    _emit_report(rep.to_json_dict())
    return 0 if rep.passed else 2


def cmd_oracle(args) -> int:
    g, raw = _read_graph(args.input)
    _log(args, raw)
    res = exact_competition_number(g, args.max_k, budget=args.budget)
    out = res.to_json_dict()
    if res.witness is not None:
        out["witness"] = res.witness.to_json_dict()
    _emit_report(out)
    return 0 if res.is_exact else 2


def cmd_generate(args) -> int:
    if args.family == "flower":
        lengths = _parse_lengths(args.lengths, args.h)
        g = gen_flower(args.h, lengths)
    elif args.family == "family":
        lengths = _parse_lengths(args.lengths, args.holes)
        spec = default_family_spec(args.omega, args.holes, lengths, args.seed)
        g = gen_family(spec)
    else:
        g = gen_triangle_free_random(args.n, args.extra, args.seed)
    _log(args, g.to_json().encode("utf-8"))
    if args.format == "dot":
        sys.stdout.write(g.to_dot())
    else:
        print(g.to_json())
    return 0


def _build_parser() -> _Parser:
    p = _Parser(prog="compnum", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("--version", action="version", version=f"compnum {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="hole/clique census and class hypothesis check")
    pa.add_argument("input", help="graph JSON file, or - for stdin")
    pa.set_defaults(func=cmd_analyze)

    pc = sub.add_parser("construct", help="build and self-verify a witness digraph")
    pc.add_argument("input", help="graph JSON file, or - for stdin")
    pc.add_argument("--method", choices=sorted(_METHODS), default="auto")
    pc.add_argument("--seed", type=int, default=0, help="seed for fallback vertex orders")
    pc.add_argument("--format", choices=("json", "dot"), default="json")
    pc.set_defaults(func=cmd_construct)

    pv = sub.add_parser("verify", help="check a witness against a graph")
    pv.add_argument("graph", help="graph JSON file, or - for stdin")
    pv.add_argument("witness", help="witness JSON file")
    pv.add_argument(
        "--require-common-prey",
        metavar="V1,V2,...[:PREY]",
        help="demand an arc from every listed vertex to PREY "
        "(omitted PREY: any added vertex works)",
    )
    pv.set_defaults(func=cmd_verify)

    po = sub.add_parser("oracle", help="exact competition number by exhaustive search")
    po.add_argument("input", help="graph JSON file, or - for stdin")
    po.add_argument("--max-k", type=int, default=None)
    po.add_argument("--budget", type=int, default=ORACLE_DEFAULT_BUDGET)
    po.set_defaults(func=cmd_oracle)

    pg = sub.add_parser("generate", help="emit a graph from one of the builtin families")
    gsub = pg.add_subparsers(dest="family", required=True)

    gf = gsub.add_parser("flower", help="clique of size h+1 with a hole on each spine edge")
    gf.add_argument("--h", type=int, required=True, help="number of holes")
    gf.add_argument("--lengths", help="comma-separated hole lengths (default all 4)")
    gf.add_argument("--format", choices=("json", "dot"), default="json")
    gf.set_defaults(func=cmd_generate)

    gm = gsub.add_parser("family", help="clique with randomly attached holes")
    gm.add_argument("--omega", type=int, required=True, help="clique number")
    gm.add_argument("--holes", type=int, required=True, help="number of holes")
    gm.add_argument("--lengths", help="comma-separated hole lengths (default all 4)")
    gm.add_argument("--seed", type=int, default=0)
    gm.add_argument("--format", choices=("json", "dot"), default="json")
    gm.set_defaults(func=cmd_generate)

    gt = gsub.add_parser("tf-random", help="random tree plus triangle-free extra edges")
    gt.add_argument("--n", type=int, required=True)
    gt.add_argument("--extra", type=int, default=0)
    gt.add_argument("--seed", type=int, default=0)
    gt.add_argument("--format", choices=("json", "dot"), default="json")
    gt.set_defaults(func=cmd_generate)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError, GraphValidationError, VertexTypeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (BudgetExceededError, GenerationError, CompnumError) as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
