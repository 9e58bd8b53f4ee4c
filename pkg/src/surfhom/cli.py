"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 oracle budget exceeded, 3 internal
consistency failure (a formula disagreeing with brute force).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from .chartable import character_table
from .counting import NONORIENTABLE, ORIENTABLE, count_general, count_surface
from .cyclotomic import Cyclotomic
from .errors import BudgetExceeded, InternalError, OracleMismatch, SurfhomError, UsageError
from .groups import DEFAULT_ORDER_CAP, FiniteGroup, parse_group_spec
from .oracle import Budget, oracle_count_with_boundary
from .partitions import Partition, contents, hook_lengths, hook_product
from .symfunc import genfun_coefficients, schur_in_p, word_power_sum_average, word_schur_side
from .verify import SUITES, run_suite
from .words import commutators_word, parse_word, recognize_shape, squares_word

EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction, Cyclotomic, Partition)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class Output:
    def __init__(self, machine: bool, stream):
        self.machine = machine
        self.stream = stream

    def emit(self, command: str, group: str | None, parameters: dict, result, human: str,
             terms: list | None = None):
        if self.machine:
            obj = {"command": command, "group": group, "parameters": _jsonable(parameters),
                   "result": _jsonable(result)}
            if terms is not None:
                obj["terms"] = _jsonable(terms)
            self.stream.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            self.stream.write(human.rstrip("\n") + "\n")


def _load_group(spec: str, order_cap: int) -> FiniteGroup:
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            spec = fh.read()
    return parse_group_spec(spec, order_cap)


_CT_NAME = re.compile(r"^(id|trans|cyc(\d+)|type:([\d.]+))$")


def resolve_class(G: FiniteGroup, name: str) -> int:
    """Class index from ``#i`` or a cycle-type name (``id``, ``trans``, ``cyc3``, ``type:2.2``)."""
    classes = G.classes
    name = name.strip()
    if name.startswith("#"):
        try:
            i = int(name[1:])
        except ValueError:
            raise UsageError(f"bad class index {name!r}") from None
        if not 0 <= i < len(classes):
            raise UsageError(f"class index {i} out of range 0..{len(classes) - 1}")
        return i
    m = _CT_NAME.match(name)
    if not m:
        raise UsageError(f"unrecognised class name {name!r}")
    if m.group(1) == "id":
        wanted: tuple[int, ...] = ()
    elif m.group(1) == "trans":
        wanted = (2,)
    elif m.group(2):
        wanted = (int(m.group(2)),)
    else:
        wanted = tuple(sorted((int(t) for t in m.group(3).split(".") if t), reverse=True))
    matches = [i for i in range(len(classes))
               if tuple(p for p in classes.cycle_type(i) if p > 1) == wanted]
    if not matches:
        raise UsageError(f"no class of cycle type {name!r}")
    if len(matches) > 1:
        raise UsageError(f"class name {name!r} is ambiguous (classes {', '.join(f'#{i}' for i in matches)})")
    return matches[0]


def _boundary(G: FiniteGroup, text: str | None) -> list[int]:
    if not text:
        return []
    return [resolve_class(G, part) for part in text.split(",") if part.strip()]


def _budget(args) -> Budget:
    if args.budget is not None:
        return Budget(max_tuples=args.budget, workers=args.workers)
    return Budget(workers=args.workers)


def _common(p: argparse.ArgumentParser, group: bool = True):
    if group:
        p.add_argument("--group", required=True, help="builtin:<name>:<n>, perms:..., or @file")
        p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    p.add_argument("--machine", action="store_true", help="one JSON object on stdout")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=None, help="max enumerated tuples for the oracle")


def _surface_args(p: argparse.ArgumentParser, required: bool):
    kind = p.add_mutually_exclusive_group(required=required)
    kind.add_argument("--orientable", action="store_true")
    kind.add_argument("--nonorientable", action="store_true")
    p.add_argument("-g", type=int, help="orientable genus")
    p.add_argument("-k", type=int, help="nonorientable genus")
    p.add_argument("--boundary", help="comma separated classes: #i, id, trans, cyc<m>, type:<a.b>")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="surfhom", description="Count homomorphisms from surface groups to finite groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="print conjugacy classes and the character table")
    _common(p)

    p = sub.add_parser("count", help="homomorphism count for a surface")
    _common(p)
    _surface_args(p, required=True)
    p.add_argument("--terms", action="store_true", help="show per-character summands")

    p = sub.add_parser("count-word", help="solutions of w(a) c_1 ... c_n = 1")
    _common(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--boundary")
    p.add_argument("--terms", action="store_true")

    p = sub.add_parser("oracle", help="brute-force count, optionally compared with the formula")
    _common(p)
    _surface_args(p, required=False)
    p.add_argument("--rank", type=int)
    p.add_argument("--word")
    p.add_argument("--compare", action="store_true")

    p = sub.add_parser("verify", help="run a named identity suite")
    _common(p, group=False)
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])

    p = sub.add_parser("symfunc", help="hook products, Schur expansions, generating functions")
    _common(p, group=False)
    ssub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = ssub.add_parser("hook")
    q.add_argument("--partition", required=True)
    q = ssub.add_parser("schur")
    q.add_argument("--partition", required=True)
    q = ssub.add_parser("genfun")
    q.add_argument("--exponent", type=int, required=True)
    q.add_argument("--max-n", type=int, required=True)
    q = ssub.add_parser("average")
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--word", required=True)
    q.add_argument("-n", type=int, required=True)
    for q in ssub.choices.values():
        q.add_argument("--machine", action="store_true", default=argparse.SUPPRESS)
    return parser


def _surface(args) -> tuple[str, int]:
    if args.orientable:
        if args.g is None or args.k is not None:
            raise UsageError("--orientable needs -g (and no -k)")
        return ORIENTABLE, args.g
    if args.k is None or args.g is not None:
        raise UsageError("--nonorientable needs -k (and no -g)")
    return NONORIENTABLE, args.k


def _surface_word(kind: str, genus: int):
    return commutators_word(genus) if kind == ORIENTABLE else squares_word(genus)


def cmd_table(args, out: Output):
    G = _load_group(args.group, args.order_cap)
    T = character_table(G)
    C = G.classes
    classes = [{"index": i, "representative": repr(G.elements[c.representative]), "size": c.size,
                "order": G.element_orders[c.representative]} for i, c in enumerate(C)]
    chars = [{"degree": d, "indicator": nu, "values": row}
             for d, nu, row in zip(T.degrees, T.fs_indicators, T.values)]
    lines = [f"group {args.group}: order {G.order}, exponent {G.exponent}, {len(C)} classes",
             "z<e> denotes exp(2*pi*i/e)"]
    lines += [f"  #{c['index']}: rep {c['representative']}, size {c['size']}, element order {c['order']}"
              for c in classes]
    for i, ch in enumerate(chars):
        nu = f"{ch['indicator']:+d}" if ch["indicator"] else "0"
        lines.append(f"chi{i}: degree {ch['degree']}, indicator {nu}")
        lines.append("    " + " | ".join(str(v) for v in ch["values"]))
    out.emit("table", args.group, {}, {"order": G.order, "exponent": G.exponent,
                                       "classes": classes, "characters": chars}, "\n".join(lines))
    return 0


def cmd_count(args, out: Output):
    G = _load_group(args.group, args.order_cap)
    kind, genus = _surface(args)
    boundary = _boundary(G, args.boundary)
    result = count_surface(character_table(G), kind, genus, boundary)
    human = str(result.value)
    if args.terms:
        human += "\n" + "\n".join(f"  chi{i}: {t}" for i, t in enumerate(result.terms))
    params = {"kind": kind, "genus": genus, "boundary": boundary}
    out.emit("count", args.group, params, result.value, human,
             list(result.terms) if args.terms else None)
    return 0


def cmd_count_word(args, out: Output):
    G = _load_group(args.group, args.order_cap)
    w = parse_word(args.word, args.rank)
    boundary = _boundary(G, args.boundary)
    result = count_general(w, character_table(G), boundary, _budget(args))
    shape = recognize_shape(w)
    human = str(result.value)
    if args.terms:
        human += f"\n  shape: {shape}\n" + "\n".join(f"  chi{i}: {t}" for i, t in enumerate(result.terms))
    params = {"rank": args.rank, "word": str(w), "boundary": boundary, "shape": repr(shape)}
    out.emit("count-word", args.group, params, result.value, human,
             list(result.terms) if args.terms else None)
    return 0


def cmd_oracle(args, out: Output):
    G = _load_group(args.group, args.order_cap)
    boundary = _boundary(G, args.boundary)
    budget = _budget(args)
    if args.word is not None:
        if args.rank is None:
            raise UsageError("--word needs --rank")
        if args.orientable or args.nonorientable:
            raise UsageError("give either a surface or a word, not both")
        w = parse_word(args.word, args.rank)
        params = {"rank": args.rank, "word": str(w), "boundary": boundary}
        formula = (lambda: count_general(w, character_table(G), boundary, budget).value)
    else:
        if not (args.orientable or args.nonorientable):
            raise UsageError("oracle needs --orientable/--nonorientable or --word")
        kind, genus = _surface(args)
        w = _surface_word(kind, genus)
        params = {"kind": kind, "genus": genus, "boundary": boundary}
        formula = (lambda: count_surface(character_table(G), kind, genus, boundary).value)
    brute = oracle_count_with_boundary(w, G, boundary, budget)
    result = {"oracle": brute}
    human = f"oracle: {brute}"
    if args.compare:
        value = formula()
        result.update(formula=value, agree=value == brute)
        human += f"\nformula: {value}\n" + ("agree" if value == brute else "MISMATCH")
    out.emit("oracle", args.group, params, result, human)
    if args.compare and not result["agree"]:
        raise OracleMismatch(f"formula {result['formula']} != oracle {brute}")
    return 0


def cmd_verify(args, out: Output):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    budget = _budget(args)
    results = {name: run_suite(name, budget) for name in names}
    failed = [(name, r) for name, recs in results.items() for r in recs if not r["ok"]]
    lines = []
    for name, recs in results.items():
        good = sum(r["ok"] for r in recs)
        lines.append(f"{name}: {good}/{len(recs)} checks passed")
    for name, r in failed:
        lines.append(f"  FAILED {name}: " + ", ".join(f"{k}={v}" for k, v in r.items() if k != "ok"))
    out.emit("verify", None, {"suite": args.suite}, results, "\n".join(lines))
    if failed:
        raise InternalError(f"{len(failed)} identity checks failed")
    return 0


def _parse_partition(text: str) -> Partition:
    try:
        return Partition(int(t) for t in re.split(r"[\s,]+", text.strip()) if t)
    except ValueError:
        raise UsageError(f"bad partition {text!r}") from None


def cmd_symfunc(args, out: Output):
    if args.action == "hook":
        lam = _parse_partition(args.partition)
        result = {"hook_product": hook_product(lam), "hooks": hook_lengths(lam), "contents": contents(lam)}
        human = (f"H{lam} = {result['hook_product']}\nhooks: {result['hooks']}\n"
                 f"contents: {result['contents']}")
        out.emit("symfunc hook", None, {"partition": lam}, result, human)
    elif args.action == "schur":
        lam = _parse_partition(args.partition)
        vec = schur_in_p(lam)
        coeffs = {repr(mu): c for mu, c in sorted(vec.coeffs.items(), reverse=True)}
        human = f"s{lam} = " + " + ".join(f"{c}*p{mu}" for mu, c in coeffs.items())
        out.emit("symfunc schur", None, {"partition": lam}, coeffs, human)
    elif args.action == "genfun":
        coeffs = genfun_coefficients(args.exponent, args.max_n)
        out.emit("symfunc genfun", None, {"exponent": args.exponent, "max_n": args.max_n}, coeffs,
                 " ".join(str(c) for c in coeffs))
    else:
        w = parse_word(args.word, args.rank)
        lhs = word_power_sum_average(w, args.n, _budget(args))
        rhs = word_schur_side(w, args.n, _budget(args))
        result = {"average": {repr(mu): c for mu, c in sorted(lhs.coeffs.items(), reverse=True)},
                  "schur_side": {repr(mu): c for mu, c in sorted(rhs.coeffs.items(), reverse=True)},
                  "agree": lhs == rhs}
        human = (f"average:    {lhs}\nschur side: {rhs}\n" + ("agree" if lhs == rhs else "MISMATCH"))
        out.emit("symfunc average", None, {"rank": args.rank, "word": str(w), "n": args.n}, result, human)
        if lhs != rhs:
            raise OracleMismatch("power-sum average differs from the Schur expansion")
    return 0


COMMANDS = {"table": cmd_table, "count": cmd_count, "count-word": cmd_count_word,
            "oracle": cmd_oracle, "verify": cmd_verify, "symfunc": cmd_symfunc}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        return COMMANDS[args.command](args, Output(args.machine, stdout))
    except BudgetExceeded as exc:
        stderr.write(f"surfhom: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except InternalError as exc:
        stderr.write(f"surfhom: internal check failed: {exc}\n")
        return EXIT_INTERNAL
    except (UsageError, OSError) as exc:
        stderr.write(f"surfhom: {exc}\n")
        return EXIT_USAGE
    except SurfhomError as exc:
        stderr.write(f"surfhom: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
