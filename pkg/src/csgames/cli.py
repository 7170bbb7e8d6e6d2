"""``csg`` command line.

Exit codes: 0 success or a true verdict, 1 a false verdict, 2 a usage or
parse error, 3 budget exhausted (the partial report is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .classification import appendix_suite, conjecture_check, minimal_nonweighted
from .constructions import StarFamily, extend, family_check
from .core import TypeComposition, fmt_vector, parse_vector
from .enumeration import (
    ALL,
    NONWEIGHTED as NONWEIGHTED_FILTER,
    WEIGHTED as WEIGHTED_FILTER,
    Budget,
    BudgetExceeded,
    EnumerationTask,
    count_games,
    filtered_games,
)
from .game import ValidationError, is_winning, maximal_losing, shift_maximal_losing
from .weightedness import (
    COMPONENTWISE,
    SHIFT,
    Certificate,
    WeightedRepresentation,
    check_certificate,
    find_certificate,
    solve_separation,
    verify_representation,
)

OK, FALSE, USAGE, BUDGET = 0, 1, 2, 3
EXTENDED_FROM = 8


class UsageError(Exception):
    pass


def _composition(text: str) -> TypeComposition:
    try:
        return TypeComposition(parse_vector(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"range must look like a..b, got {text!r}") from None
    if a < 1 or b < a:
        raise UsageError(f"empty or non-positive range {text!r}")
    return range(a, b + 1)


def _budget(args) -> Budget | None:
    return Budget(args.budget) if args.budget is not None else None


def _load_game(path: str):
    try:
        return io.game_from_doc(io.read(path))
    except ValidationError as exc:
        raise UsageError(f"{path}: invalid game: {exc}") from None


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(io.dumps(doc))
    else:
        for line in lines:
            print(line)


def _rows_lines(rows) -> list[str]:
    return [fmt_vector(r) for r in rows]


def cmd_validate(args) -> int:
    doc = io.read(args.file)
    try:
        game = io.game_from_doc(doc)
    except ValidationError as exc:
        print(f"invalid: {exc}")
        return FALSE
    print(f"valid: {game}")
    return OK


def cmd_winning(args) -> int:
    game = _load_game(args.file)
    try:
        s = parse_vector(args.vector)
        win = is_winning(game, s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print("winning" if win else "losing")
    return OK if win else FALSE


def cmd_sml(args) -> int:
    game = _load_game(args.file)
    rows = shift_maximal_losing(game)
    _emit(args, {"schema": io.SCHEMA, "kind": "rows", "rows": [list(r) for r in rows]}, _rows_lines(rows))
    return OK


def cmd_maxlosing(args) -> int:
    game = _load_game(args.file)
    rows = maximal_losing(game)
    _emit(args, {"schema": io.SCHEMA, "kind": "rows", "rows": [list(r) for r in rows]}, _rows_lines(rows))
    return OK


def _certificate_lines(cert: Certificate) -> list[str]:
    out = [f"certificate ({cert.mode})"]
    out += [f"  x {c} * {fmt_vector(r)}" for c, r in zip(cert.x, cert.winning_rows)]
    out += [f"  y {c} * {fmt_vector(r)}" for c, r in zip(cert.y, cert.losing_rows)]
    a, b = cert.winning_sum(), cert.losing_sum()
    rel = "<=" if cert.mode == COMPONENTWISE else "shift-below"
    out.append(f"  {fmt_vector(a)} {rel} {fmt_vector(b)}")
    return out


def cmd_weighted(args) -> int:
    game = _load_game(args.file)
    res = solve_separation(game)
    if isinstance(res, WeightedRepresentation):
        rep = res.integral()
        _emit(args, io.representation_to_doc(rep), [f"weighted {rep}"])
        return OK
    cert = res.certificate if args.mode == SHIFT else find_certificate(game)
    _emit(args, io.certificate_to_doc(cert), ["non-weighted", *_certificate_lines(cert)])
    return FALSE


def cmd_certify(args) -> int:
    game = _load_game(args.file)
    doc = io.read(args.certificate)
    kind = doc.get("kind")
    if kind == "representation":
        rep = io.representation_from_doc(doc)
        try:
            ok = verify_representation(game, rep)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(f"representation {rep} " + ("verifies" if ok else "does not verify"))
        return OK if ok else FALSE
    cert = io.certificate_from_doc(doc)
    if args.mode is not None and args.mode != cert.mode:
        cert = Certificate(cert.winning_rows, cert.losing_rows, cert.x, cert.y, args.mode)
    problems = check_certificate(game, cert)
    if problems:
        print("certificate does not verify")
        for p in problems:
            print(f"  {p}")
        return FALSE
    print(f"certificate verifies ({cert.mode}): game is non-weighted")
    return OK


def cmd_extend(args) -> int:
    game = _load_game(args.file)
    target = _composition(args.target)
    try:
        big = extend(game, target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(io.dumps(io.game_to_doc(big)))
    return OK


def cmd_enumerate(args) -> int:
    comp = _composition(args.composition)
    task = EnumerationTask(comp, args.filter, args.budget)
    count = 0
    try:
        for game in filtered_games(task):
            count += 1
            if args.json:
                print(json.dumps([list(r) for r in game.smw], separators=(",", ":")))
            else:
                print(" ".join(fmt_vector(r) for r in game.smw))
    except BudgetExceeded:
        print(f"budget exhausted after {count} games", file=sys.stderr)
        return BUDGET
    print(f"{count} games", file=sys.stderr)
    return OK


def _count_doc(report) -> dict:
    return {
        "schema": io.SCHEMA,
        "kind": "counts",
        "n": report.n,
        "complete": report.complete,
        "weighted": report.weighted,
        "truncated": report.truncated,
        "compositions": {",".join(map(str, c.parts)): list(v) for c, v in report.per_composition.items()},
    }


def cmd_count(args) -> int:
    if args.n < 1:
        raise UsageError("n must be at least 1")
    if args.n >= EXTENDED_FROM and not args.extended:
        raise UsageError(f"counting {args.n} agents takes hours; pass --extended to run it")
    try:
        report = count_games(args.n, _budget(args), args.jobs, args.checkpoint)
    except BudgetExceeded as exc:
        report = exc.partial
        _emit(args, _count_doc(report), [f"partial {report.summary()} ({len(report.per_composition)} compositions)"])
        return BUDGET
    lines = [report.summary()]
    if args.verbose:
        lines = [f"{c} complete={a} weighted={b}" for c, (a, b) in report.per_composition.items()] + lines
    _emit(args, _count_doc(report), lines)
    return OK


def cmd_family(args) -> int:
    try:
        family = StarFamily.parse(args.spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = family_check(family, _range(args.range), _budget(args))
    lines = [f"family {family}: {report.candidates} candidates (printed bound {report.bound})"]
    entries = []
    for e in report.entries:
        lines.append(f"  {e.composition} complete={e.complete} weighted={e.weighted}"
                     f" candidate_misses={e.candidate_misses}")
        entry = {"star": e.star, "complete": e.complete, "weighted": e.weighted,
                 "candidate_misses": e.candidate_misses}
        if e.witness is not None:
            game, cert = e.witness
            entry["witness"] = {"game": io.game_to_doc(game), "certificate": io.certificate_to_doc(cert)}
            lines.append(f"    non-weighted witness {game}")
        entries.append(entry)
    lines.append("all weighted" if report.all_weighted else "not all weighted")
    if report.truncated:
        lines.append("budget exhausted; report is partial")
    doc = {"schema": io.SCHEMA, "kind": "family", "family": str(family), "candidates": report.candidates,
           "bound": report.bound, "entries": entries, "truncated": report.truncated}
    _emit(args, doc, lines)
    if report.truncated:
        return BUDGET
    return OK if report.all_weighted else FALSE


def cmd_classify(args) -> int:
    budget = _budget(args)
    report = conjecture_check(args.nmax, budget)
    lines = []
    for comp, v in report.verdicts.items():
        origin = f" from {v.origin}" if v.origin is not None else ""
        lines.append(f"{comp} {v.status} ({v.basis}{origin})")
    lines += report.lines()
    minimal = None
    if not report.unknown:
        minimal = minimal_nonweighted(args.nmax, budget)
        lines.append("minimal non-weighted: " + " ".join(str(c) for c in minimal))
    doc = {
        "schema": io.SCHEMA,
        "kind": "classification",
        "nmax": args.nmax,
        "verdicts": {",".join(map(str, c.parts)): {"status": v.status, "basis": v.basis}
                     for c, v in report.verdicts.items()},
        "minimal_nonweighted": None if minimal is None else [list(c.parts) for c in minimal],
        "counterexamples": [list(c.parts) for c in report.counterexamples],
        "corollary_mismatches": [list(c.parts) for c in report.corollary_mismatches],
        "consistent": report.consistent,
    }
    _emit(args, doc, lines)
    if report.unknown:
        return BUDGET
    return OK if report.consistent else FALSE


def cmd_appendix_suite(args) -> int:
    report = appendix_suite()
    doc = {"schema": io.SCHEMA, "kind": "suite", "passed": report.passed, "total": report.total,
           "results": [{"composition": list(r.composition), "passed": r.passed, "problems": list(r.problems)}
                       for r in report.results]}
    _emit(args, doc, report.lines())
    return OK if report.passed == report.total else FALSE


def _common_flags(top: bool) -> argparse.ArgumentParser:
    # subcommand copies default to SUPPRESS so they never clobber a flag given before the command
    def default(value):
        return value if top else argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=default(1), help="worker processes for counting")
    common.add_argument("--budget", type=float, default=default(None), metavar="SECONDS",
                        help="wall-clock limit; exit 3 with a partial report when exceeded")
    common.add_argument("--json", action="store_true", default=default(False),
                        help="print a csg/1 JSON document instead of text")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags(top=False)
    p = argparse.ArgumentParser(prog="csg", description="Complete simple games: validation, "
                                "weightedness, enumeration and classification.",
                                parents=[_common_flags(top=True)])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a game document").add_argument("file")
    sp = add("winning", cmd_winning, "is a coalition vector winning")
    sp.add_argument("file")
    sp.add_argument("vector", help="e.g. 1,2,0")
    add("sml", cmd_sml, "shift-maximal losing vectors").add_argument("file")
    add("maxlosing", cmd_maxlosing, "maximal losing vectors by unit increments").add_argument("file")
    sp = add("weighted", cmd_weighted, "representation or certificate")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=[COMPONENTWISE, SHIFT], default=COMPONENTWISE,
                    help="certificate kind for non-weighted games")
    sp = add("certify", cmd_certify, "verify a certificate or representation document")
    sp.add_argument("file")
    sp.add_argument("certificate")
    sp.add_argument("--mode", choices=[COMPONENTWISE, SHIFT], default=None,
                    help="override the certificate's mode")
    sp = add("extend", cmd_extend, "embed a game into a larger composition")
    sp.add_argument("file")
    sp.add_argument("target", help="e.g. 6,6")
    sp = add("enumerate", cmd_enumerate, "list every game of a composition")
    sp.add_argument("composition")
    sp.add_argument("--filter", choices=[ALL, WEIGHTED_FILTER, NONWEIGHTED_FILTER], default=ALL)
    sp = add("count", cmd_count, "count complete and weighted games with n agents")
    sp.add_argument("n", type=int)
    sp.add_argument("--extended", action="store_true", help=f"allow n >= {EXTENDED_FROM}")
    sp.add_argument("--checkpoint", default=None, help="append finished compositions to this file")
    sp.add_argument("-v", "--verbose", action="store_true", help="per-composition counts")
    sp = add("family", cmd_family, "check every member of a star family")
    sp.add_argument("spec", help="e.g. '*,2' or '1,*,1'")
    sp.add_argument("--range", required=True, help="star values a..b")
    sp = add("classify", cmd_classify, "classify all compositions up to a total")
    sp.add_argument("--nmax", type=int, required=True)
    add("appendix-suite", cmd_appendix_suite, "check the printed non-weighted examples")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, io.DocumentError) as exc:
        print(f"csg: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
