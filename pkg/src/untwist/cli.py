"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (invalid matrices, illegal
moves), 2 on usage errors.
"""

import argparse
import json
import os
import sys

from . import __version__
from .bounds import bounds_report
from .errors import UntwistError
from .io import (
    catalog_entry,
    dumps,
    load_catalog,
    parse_move_script,
    parse_seifert_file,
    seifert_to_obj,
)
from .kirby import MoveTrace, ohyama_trace, unknotting_trace
from .laurent import QQ, PrimeField
from .seifert import SeifertMatrix, connected_sum, matmul, parity_normalize, symplectic_reduce
from .alexander import alexander_polynomial

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)
PRIMES_ENV = "UNTWIST_DEFAULT_PRIMES"


class UsageError(Exception):
    pass


def _parse_primes(text):
    try:
        primes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse prime list {text!r}") from None
    return primes


def _read(path):
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text, out):
    if path in (None, "-"):
        out.write(text + "\n")
    else:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _matrix_lines(m, indent="  "):
    if not m:
        return [indent + "[]"]
    width = max(len(str(x)) for r in m for x in r)
    return [indent + " ".join(str(x).rjust(width) for x in r) for r in m]


def _load_input(args) -> SeifertMatrix:
    if getattr(args, "catalog", None):
        try:
            return catalog_entry(args.catalog).matrix
        except KeyError:
            raise UsageError(f"no catalog entry named {args.catalog!r}") from None
    path = args.file or args.path
    if not path:
        raise UsageError("give a Seifert matrix file or --catalog NAME")
    return parse_seifert_file(_read(path))


# -- subcommands ---------------------------------------------------------------

def cmd_bounds(args, out):
    v = _load_input(args)
    if args.primes is not None:
        primes = _parse_primes(args.primes)
        use_q = bool(args.rationals)
    else:
        env = os.environ.get(PRIMES_ENV)
        primes = _parse_primes(env) if env else list(DEFAULT_PRIMES)
        use_q = args.rationals is not False
    fields = [PrimeField(p) for p in primes] + ([QQ] if use_q else [])
    rep = bounds_report(v, fields)
    if args.pretty:
        rows = [("genus", str(rep.genus)), ("alexander", str(rep.alexander))]
        rows += [(f"rank over {f.name}", str(r)) for f, r in rep.ranks.items()]
        rows += [("lower bound", str(rep.lower_bound)),
                 ("upper bound", f"{rep.upper_bound} (presented surface)"),
                 ("tight", "yes" if rep.tight else "no")]
        w = max(len(k) for k, _ in rows)
        out.write("\n".join(f"{k.ljust(w)}  {val}" for k, val in rows) + "\n")
    else:
        out.write(dumps(rep.to_json()) + "\n")


def cmd_ohyama(args, out):
    res = ohyama_trace(args.f, args.alpha)
    if args.pretty:
        for name, m in zip(("setup", f"after {args.alpha} slides", "split"), res.checkpoints):
            out.write(name + ":\n" + "\n".join(_matrix_lines(m)) + "\n")
        lk1, lk2 = res.twist_linkings
        out.write(f"linking numbers with K: {lk1}, {lk2}\n")
        return
    obj = {
        "f": args.f,
        "alpha": args.alpha,
        "checkpoints": [[list(r) for r in m] for m in res.checkpoints],
        "twist_linkings": list(res.twist_linkings),
        "trace": res.trace.to_json(),
    }
    out.write(dumps(obj) + "\n")


def cmd_replay(args, out):
    initial, moves = parse_move_script(_read(args.script))
    trace = MoveTrace(initial)
    for mv in moves:
        p = trace.apply(mv)
        out.write(json.dumps({"move": mv.to_json(), "matrix": [list(r) for r in p.matrix],
                              "n": p.n, "k": p.k}) + "\n")


def cmd_unknot(args, out):
    v = _load_input(args)
    tr = unknotting_trace(v)
    if args.pretty:
        out.write(f"genus {v.genus}: {tr.twist_count} null-homologous twist curves, {len(tr)} moves\n")
        out.write("final Seifert matrix:\n" + "\n".join(_matrix_lines(tr.current.seifert)) + "\n")
        return
    out.write(dumps(tr.to_json()) + "\n")


def cmd_sum(args, out):
    vs = [parse_seifert_file(_read(p)) for p in args.files]
    total = vs[0]
    for v in vs[1:]:
        total = connected_sum(total, v)
    _write(args.output, dumps(seifert_to_obj(total)), out)


def cmd_normalize(args, out):
    v = _load_input(args)
    vs, u1 = symplectic_reduce(v)
    vn, u2 = parity_normalize(vs)
    obj = seifert_to_obj(vn)
    obj["basis_change"] = [list(r) for r in matmul(u1.matrix, u2.matrix)]
    _write(args.output, dumps(obj), out)


def cmd_catalog_list(args, out):
    entries = load_catalog()
    if args.pretty:
        w = max(len(e.name) for e in entries)
        for e in entries:
            out.write(f"{e.name.ljust(w)}  g={e.matrix.genus}  Δ={alexander_polynomial(e.matrix)}  {e.notes}\n")
        return
    obj = [{"name": e.name, "genus": e.matrix.genus, "matrix": e.matrix.to_lists(),
            "alexander": alexander_polynomial(e.matrix).to_json(), "notes": e.notes} for e in entries]
    out.write(dumps(obj) + "\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    p = _Parser(prog="untwist", description="Bounds on null-homologous untwisting numbers from Seifert matrices.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def seifert_input(sp):
        sp.add_argument("path", nargs="?", help="Seifert matrix JSON file ('-' for stdin)")
        sp.add_argument("--file", help="Seifert matrix JSON file")
        sp.add_argument("--catalog", help="use a bundled catalog entry by name")

    b = sub.add_parser("bounds", help="lower/upper bounds on the null-homologous untwisting number")
    seifert_input(b)
    b.add_argument("--primes", help="comma-separated primes (default 2,3,5,7,11,13 or $UNTWIST_DEFAULT_PRIMES)")
    b.add_argument("--rationals", dest="rationals", action="store_true", default=None,
                   help="include Q (default when --primes is not given)")
    b.add_argument("--no-rationals", dest="rationals", action="store_false")
    b.add_argument("--pretty", action="store_true")
    b.set_defaults(func=cmd_bounds)

    k = sub.add_parser("kirby", help="framing/linking matrix calculus")
    ksub = k.add_subparsers(dest="kirby_command", parser_class=_Parser, required=True)
    o = ksub.add_parser("ohyama", help="two-twist unknotting of a framed knot")
    o.add_argument("--f", type=int, required=True, help="framing of K")
    o.add_argument("--alpha", type=int, required=True, help="algebraic number of slides of K over S1")
    o.add_argument("--pretty", action="store_true")
    o.set_defaults(func=cmd_ohyama)
    r = ksub.add_parser("replay", help="replay a move script, one JSON line per move")
    r.add_argument("script")
    r.set_defaults(func=cmd_replay)
    u = ksub.add_parser("unknot", help="2g null-homologous twist unknotting trace")
    seifert_input(u)
    u.add_argument("--pretty", action="store_true")
    u.set_defaults(func=cmd_unknot)

    s = sub.add_parser("sum", help="connected sum of Seifert matrices")
    s.add_argument("files", nargs="+")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_sum)

    n = sub.add_parser("normalize", help="symplectic basis with odd a-framings")
    seifert_input(n)
    n.add_argument("-o", "--output")
    n.set_defaults(func=cmd_normalize)

    c = sub.add_parser("catalog", help="bundled knots")
    csub = c.add_subparsers(dest="catalog_command", parser_class=_Parser, required=True)
    cl = csub.add_parser("list")
    cl.add_argument("--pretty", action="store_true")
    cl.set_defaults(func=cmd_catalog_list)
    return p


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except UntwistError as exc:
        msg = str(exc)
        if exc.__cause__ is not None and str(exc.__cause__) not in msg:
            msg += f" ({exc.__cause__})"
        err.write(f"error: {type(exc).__name__}: {msg}\n")
        return 1
    except SystemExit as exc:  # --help / --version
        return exc.code or 0
    return 0


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
