"""Command-line front end.

Exit codes: 0 success / all cases pass, 1 a campaign case failed,
2 usage or input error, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import campaigns
from .constructions import random_turan_hypergraph, turan_34_hypergraph, turan_graph
from .core import TermOrder, b_family, c_family
from .dominance import GenericSource, dominates, rank_r, weakly_isomorphic
from .formats import format_family, read_family
from .homology import complex_of, reduced_betti
from .linalg import DEFAULT_PRIME, PrimeModulus
from .shifting import exterior_shift

GENERATORS = {
    "b": lambda n, seed: b_family(n),
    "c": lambda n, seed: c_family(n),
    "turan34": lambda n, seed: turan_34_hypergraph(n),
    "random-turan": lambda n, seed: random_turan_hypergraph(n, seed),
    "turan-graph-complement-cover": lambda n, seed: turan_graph(n),
}


class UsageError(Exception):
    pass


def _source(args) -> GenericSource:
    return GenericSource(PrimeModulus(args.prime), args.seed, args.trials)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_shift(args) -> int:
    f = read_family(args.file)
    order = TermOrder(args.order)
    res = exterior_shift(f, order, _source(args))
    head = (f"# order: {order.value}\n# shifted: {str(res.shifted_flag).lower()}\n"
            f"# unanimous: {str(res.unanimous).lower()} ({res.trials} trials)\n"
            f"# fixed-point: {str(res.family == f).lower()}\n")
    _emit(head + format_family(res.family), args.out)
    return 0


def cmd_dominate(args) -> int:
    v = dominates(read_family(args.file1), read_family(args.file2), _source(args))
    _emit(_dump(v.as_dict()), args.out)
    return 0


def cmd_weakiso(args) -> int:
    fwd, back = weakly_isomorphic(read_family(args.file1), read_family(args.file2), _source(args))
    _emit(_dump({"forward": fwd.as_dict(), "backward": back.as_dict(),
                 "weakly_isomorphic": bool(fwd) and bool(back)}), args.out)
    return 0


def cmd_rankr(args) -> int:
    h = read_family(args.file)
    rep = rank_r(h, args.r, _source(args))
    _emit(_dump({"r": args.r, "rank": rep.rank, "upper_bound": rep.upper_bound,
                 "trials_used": rep.trials_used}), args.out)
    return 0


def cmd_homology(args) -> int:
    b = reduced_betti(complex_of(read_family(args.file)))
    _emit(_dump({"reduced_betti": {str(i): v for i, v in sorted(b.betti.items())}}), args.out)
    return 0


def cmd_gen(args) -> int:
    if args.n is None:
        raise UsageError("gen needs --n")
    _emit(format_family(GENERATORS[args.kind](args.n, args.seed)), args.out)
    return 0


def cmd_verify(args) -> int:
    if bool(args.campaign) == bool(args.all):
        raise UsageError("give exactly one campaign name or --all")
    cfg = campaigns.Config(seed=args.seed, trials=args.trials, prime=args.prime,
                           max_exhaustive_n=args.max_exhaustive_n, n=args.n, samples=args.samples)
    try:
        if args.all:
            reports = campaigns.run_all(cfg, workers=args.workers)
            payload = {"schema": campaigns.SCHEMA, "reports": [r.as_dict() for r in reports],
                       "pass": all(r.passed for r in reports)}
            ok = payload["pass"]
        else:
            report = campaigns.run_campaign(args.campaign, cfg)
            payload, ok = report.as_dict(), report.passed
    except campaigns.CampaignError as e:
        raise UsageError(str(e)) from None
    _emit(_dump(payload), args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="turanshift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shift", parents=[common], help="exterior shifting of a family file")
    p.add_argument("file")
    p.add_argument("--order", choices=[o.value for o in TermOrder], default="lex")
    p.set_defaults(func=cmd_shift)

    for name, func, help_ in (("dominate", cmd_dominate, "does FILE1 dominate FILE2"),
                              ("weakiso", cmd_weakiso, "mutual dominance")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file1")
        p.add_argument("file2")
        p.set_defaults(func=func)

    p = sub.add_parser("rankr", parents=[common], help="rank against the sets meeting [r]")
    p.add_argument("file")
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_rankr)

    p = sub.add_parser("homology", parents=[common], help="reduced Betti numbers of K(H)")
    p.add_argument("file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("gen", parents=[common], help="write a generated family")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="run verification campaigns")
    p.add_argument("campaign", nargs="?", choices=sorted(campaigns.CAMPAIGNS))
    p.add_argument("--all", action="store_true")
    p.add_argument("--n", type=int, default=None, help="override the campaign's top n")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--max-exhaustive-n", type=int, default=6)
    p.add_argument("--workers", type=int, default=1, help="process pool size for --all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args)
    except AssertionError as e:
        print(f"internal assertion: {e}", file=sys.stderr)
        return 3
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
