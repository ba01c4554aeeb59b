"""cordal command line.

    cordal relations    --braid W --strands n [--framing f] [--window X]
    cordal presentation (--torus p,q | --braid W --strands n) [--framing f]
    cordal aug          (--torus p,q | --braid W --strands n | --presentation FILE)
                        --mod d --lambda l --mu m --gamma g
    cordal check        [--suite all|NAME] [--quick]
    cordal oracle-diff  --braid W --strands n [--window X]

Exit codes: 0 ok, 1 usage error, 2 refusal, 3 internal invariant violation.
Errors go to stderr as "E<code>: <Name>: message".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .errors import CordalError, OracleMismatch, UsageError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _torus(text: str) -> tuple[int, int]:
    try:
        p, q = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--torus expects p,q (got {text!r})") from None
    return p, q


def _jobs(value: int | None) -> int:
    if value is not None:
        if value < 1:
            raise UsageError("--jobs must be at least 1")
        return value
    env = os.environ.get("CORDAL_JOBS")
    if env:
        try:
            v = int(env)
        except ValueError:
            raise UsageError(f"CORDAL_JOBS must be an integer (got {env!r})") from None
        if v < 1:
            raise UsageError("CORDAL_JOBS must be at least 1")
        return v
    return os.cpu_count() or 1


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to FILE instead of stdout")
    p.add_argument("--jobs", type=int, default=None)


def _braid_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--braid", required=required, help='word such as "a0 a1^-1 a0"')
    p.add_argument("--strands", type=int, required=False)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cordal", description="Framed cord algebra of braid closures in S1xS2.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("relations", help="windowed defining relations")
    _braid_args(r, True)
    r.add_argument("--framing", type=int, default=0)
    r.add_argument("--window", type=int, default=3)
    r.add_argument("--p", type=int, default=1)
    r.add_argument("--q", type=int, default=1)
    _common(r)

    pr = sub.add_parser("presentation", help="finite presentation for monomial closures")
    pr.add_argument("--torus")
    _braid_args(pr, False)
    pr.add_argument("--framing", type=int, default=0)
    _common(pr)

    a = sub.add_parser("aug", help="count augmentations into Z_d")
    a.add_argument("--torus")
    _braid_args(a, False)
    a.add_argument("--presentation", metavar="FILE")
    a.add_argument("--framing", type=int, default=0)
    a.add_argument("--mod", type=int, required=True)
    a.add_argument("--lambda", dest="lam", type=int, required=True)
    a.add_argument("--mu", type=int, required=True)
    a.add_argument("--gamma", type=int, required=True)
    _common(a)

    c = sub.add_parser("check", help="run property suites")
    c.add_argument("--suite", default="all")
    c.add_argument("--quick", action="store_true", help="smaller random samples")
    _common(c)

    o = sub.add_parser("oracle-diff", help="compare the action with the free-group model")
    _braid_args(o, True)
    o.add_argument("--window", type=int, default=2)
    _common(o)
    return ap


def _braid(args):
    from .braid import parse_braid

    if args.braid is None:
        return None
    if args.strands is not None and args.strands < 1:
        raise UsageError("--strands must be at least 1")
    return parse_braid(args.braid, args.strands)


def _source(args):
    """Exactly one of --torus / --braid / --presentation."""
    given = [k for k in ("torus", "braid", "presentation") if getattr(args, k, None) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --torus, --braid" +
                         (", --presentation" if hasattr(args, "presentation") else ""))
    return given[0]


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _presentation(args):
    from .torus import Presentation, braid_presentation, finite_presentation

    kind = _source(args)
    if kind == "torus":
        p, q = _torus(args.torus)
        return finite_presentation(p, q, args.framing)
    if kind == "braid":
        return braid_presentation(_braid(args), args.framing)
    try:
        with open(args.presentation, encoding="utf-8") as fh:
            data = json.load(fh)
        return Presentation.from_json(data)
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise UsageError(f"cannot read presentation {args.presentation}: {e}") from None


def cmd_relations(args) -> int:
    from .relations import relation_set

    beta = _braid(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rs = relation_set(beta, args.framing, args.window, args.p, args.q, _jobs(args.jobs))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _emit(args, rs.to_json(), rs.to_text())
    return 0


def cmd_presentation(args) -> int:
    pres = _presentation(args)
    _emit(args, pres.to_json(), pres.to_text())
    return 0


def cmd_aug(args) -> int:
    from .augment import AugQuery, count_augmentations

    if args.mod < 2:
        raise UsageError("--mod must be at least 2")
    jobs = _jobs(args.jobs)
    pres = _presentation(args)
    n = count_augmentations(AugQuery(pres, args.mod, args.lam, args.mu, args.gamma), jobs)
    _emit(args, {"count": n, "mod": args.mod, "lambda": args.lam, "mu": args.mu,
                 "gamma": args.gamma, "framing": pres.f}, str(n))
    return 0


def cmd_check(args) -> int:
    from .checks import SUITES, run_suite

    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    results = run_suite(args.suite, quick=args.quick)
    ok = all(r.passed for r in results)
    payload = {"passed": ok, "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                                        for r in results]}
    _emit(args, payload, "\n".join(r.line() for r in results))
    return 0 if ok else 3


def cmd_oracle_diff(args) -> int:
    from .oracle import oracle_diff

    if args.window < 0:
        raise UsageError("--window must be non-negative")
    beta = _braid(args)
    bad = oracle_diff(beta, args.window)
    lines = [f"{m.variant} a[{m.i},{m.j}]^{m.x}: oracle {m.oracle} != action {m.action}" for m in bad]
    _emit(args, {"braid": str(beta), "strands": beta.strands, "window": args.window,
                 "mismatches": [m.to_json() for m in bad]}, "\n".join(lines))
    if bad:
        raise OracleMismatch(f"{len(bad)} generator(s) disagree")
    return 0


COMMANDS = {
    "relations": cmd_relations,
    "presentation": cmd_presentation,
    "aug": cmd_aug,
    "check": cmd_check,
    "oracle-diff": cmd_oracle_diff,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except CordalError as e:
        print(f"E{e.code}: {type(e).__name__}: {e}", file=sys.stderr)
        return e.code
    except BrokenPipeError:
        # reader went away (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
