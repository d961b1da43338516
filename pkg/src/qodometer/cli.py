"""Command-line interface.

Exit status: 0 on success, 1 when ``verify`` finds a counterexample,
2 for usage and domain errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .arith import Dyadic, format_rational, parse_dyadic, parse_rational
from .enumeration import enum_dyadic, enum_positive, enum_unit, index_of_unit
from .expansions import (
    BcfExpansion,
    BinaryWord,
    BlockSequence,
    CfExpansion,
    bcf_eval,
    bcf_expand,
    bcf_to_cf,
    binary_expand,
    binary_prefix,
    blocks_decode,
    blocks_encode,
    cf_eval,
    cf_expand,
    cf_to_bcf,
    parse_expansion,
)
from .maps import MapId, OrbitDomainError, orbit
from .qmark import ALGORITHMS, qmark, qmark_inverse
from .verify import SUITES, run_suite

SYSTEMS = ("cf", "bcf", "binary", "blocks")


class UsageError(Exception):
    pass


class Output:
    """Writes records in the selected format to a text stream."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv = None

    def line(self, text: str):
        self.stream.write(text + "\n")

    def record(self, text: str, obj: dict):
        """One result: ``text`` in text mode, ``obj`` as JSON or a CSV row otherwise."""
        if self.fmt == "text":
            self.line(text)
        elif self.fmt == "json":
            self.line(json.dumps(obj, separators=(",", ":")))
        else:
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=list(obj), lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow({k: _csv_cell(v) for k, v in obj.items()})


def _csv_cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return v


def _dyadic_obj(d: Dyadic) -> dict:
    return {"dyadic": str(d), "bits": _dyadic_bits_text(d)}


def _dyadic_bits_text(d: Dyadic) -> str:
    if d.to_rational() == 1:
        return "1.0"
    return str(BinaryWord(d.bits()))


def _expand(x: Fraction, system: str, depth: int):
    """Return (text, json_obj) for the expansion of x in the given system."""
    if system == "cf":
        e = cf_expand(x)
        return str(e), e.to_json()
    if system == "bcf":
        e = bcf_expand(x)
        return str(e), e.to_json()
    if x.denominator & (x.denominator - 1) == 0:
        w = binary_expand(x)
        if system == "binary":
            return str(w), w.to_json()
        s = blocks_encode(w)
        return str(s), s.to_json()
    if system == "blocks":
        raise UsageError(f"{format_rational(x)} is not dyadic; its block code is infinite")
    bits, truncated = binary_prefix(x, depth)
    return "0." + (bits or "0") + ("..." if truncated else ""), {"bits": bits, "truncated": truncated}


def _value_of(e) -> Fraction:
    if isinstance(e, CfExpansion):
        return cf_eval(e)
    if isinstance(e, BcfExpansion):
        return bcf_eval(e)
    if isinstance(e, BinaryWord):
        return e.to_dyadic().to_rational()
    if isinstance(e, BlockSequence):
        return blocks_decode(e).to_dyadic().to_rational()
    raise TypeError(e)


def _convert(e, target: str):
    if target == "rational":
        return _value_of(e)
    if isinstance(e, CfExpansion) and target == "bcf":
        return cf_to_bcf(e)
    if isinstance(e, BcfExpansion) and target == "cf":
        return bcf_to_cf(e)
    if isinstance(e, BinaryWord) and target == "blocks":
        return blocks_encode(e)
    if isinstance(e, BlockSequence) and target == "binary":
        return blocks_decode(e)
    x = _value_of(e)
    if target == "cf":
        return cf_expand(x)
    if target == "bcf":
        return bcf_expand(x)
    if x.denominator & (x.denominator - 1):
        raise UsageError(f"{format_rational(x)} is not dyadic")
    w = binary_expand(x)
    return w if target == "binary" else blocks_encode(w)


def cmd_expand(args, out: Output):
    x = parse_rational(args.x)
    text, obj = _expand(x, args.system, args.depth)
    out.record(text, {"x": format_rational(x), "system": args.system, **obj})


def cmd_convert(args, out: Output):
    e = parse_expansion(args.expansion)
    result = _convert(e, args.to)
    if isinstance(result, Fraction):
        out.record(format_rational(result), {"value": format_rational(result)})
    else:
        out.record(str(result), result.to_json())


def cmd_eval(args, out: Output):
    e = parse_expansion(args.expansion)
    x = _value_of(e)
    out.record(format_rational(x), {"expansion": str(e), "value": format_rational(x)})


def cmd_orbit(args, out: Output):
    m = MapId.parse(args.map)
    x = parse_rational(args.x)
    try:
        points = orbit(m, x, args.n)
    except OrbitDomainError as exc:
        raise UsageError(str(exc)) from exc
    for i, p in enumerate(points):
        out.record(format_rational(p), {"step": i, "value": format_rational(p)})


_TARGETS = {
    "unit": lambda n: format_rational(enum_unit(n)),
    "positive": lambda n: format_rational(enum_positive(n)),
    "dyadic": lambda n: str(enum_dyadic(n)),
}


def cmd_enumerate(args, out: Output):
    if args.count < 0 or args.start < 0:
        raise UsageError("--count and --from must be nonnegative")
    value = _TARGETS[args.target]
    for n in range(args.start, args.start + args.count):
        v = value(n)
        out.record(f"{n}\t{v}", {"n": n, "value": v})


def cmd_index_of(args, out: Output):
    x = parse_rational(args.x)
    n = index_of_unit(x)
    out.record(str(n), {"x": format_rational(x), "n": n})


def cmd_qmark(args, out: Output):
    x = parse_rational(args.x)
    d = qmark(x, args.algo)
    out.record(f"{d}\t{_dyadic_bits_text(d)}", {"x": format_rational(x), **_dyadic_obj(d)})


def cmd_qmark_inv(args, out: Output):
    d = parse_dyadic(args.d)
    if d.to_rational() == 1:
        x = Fraction(1)
    else:
        x = qmark_inverse(d)
    out.record(format_rational(x), {**_dyadic_obj(d), "value": format_rational(x)})


def cmd_graph_data(args, out: Output):
    from .plotting import approx_samples, exact_samples, render

    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    m = MapId.parse(args.map)
    if args.approx:
        rows = approx_samples(m, args.samples)
        cells = [(repr(x), repr(y)) for x, y in rows]
    else:
        rows = exact_samples(m, args.samples)
        cells = [(format_rational(x), format_rational(y)) for x, y in rows]
    if out.fmt == "json":
        for x, y in cells:
            out.line(json.dumps({"x": x, "y": y}, separators=(",", ":")))
    else:
        writer = csv.writer(out.stream, lineterminator="\n")
        writer.writerow(["x", f"{m.value}(x)"])
        writer.writerows(cells)
    if args.plot:
        render(m, rows, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)


def cmd_verify(args, out: Output):
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    suites = SUITES if args.suite == "all" else (args.suite,)
    failed = None
    total = 0
    for suite in suites:
        start = time.perf_counter()
        for res in run_suite(suite, args.bound):
            total += res.checked
            status = "ok" if res.ok else "FAILED"
            obj = {"suite": res.suite, "identity": res.name, "checked": res.checked, "ok": res.ok}
            text = f"{res.suite}/{res.name}: checked {res.checked} identities: {status}"
            if not res.ok:
                f = res.failure
                text += f"\n  counterexample: input={_show(f.case)} lhs={_show(f.lhs)} rhs={_show(f.rhs)}"
                obj["counterexample"] = {"input": _show(f.case), "lhs": _show(f.lhs), "rhs": _show(f.rhs)}
                failed = failed or res
            out.record(text, obj)
        # timings go to stderr so that stdout stays byte-identical between runs
        print(f"[{suite}] {time.perf_counter() - start:.2f}s", file=sys.stderr)
    if out.fmt == "text":
        out.line(f"total: checked {total} identities: {'ok' if failed is None else 'FAILED'}")
    return 0 if failed is None else 1


def _show(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(_show(t) for t in v) + ")"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS,
                     help="output format (default text)")

    p = argparse.ArgumentParser(prog="qodometer", parents=[fmt],
                                description="Exact backward continued fractions, the dyadic odometer and Minkowski's ? function.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("expand", parents=[fmt], help="expand a rational in [0,1)")
    s.add_argument("x")
    s.add_argument("--system", choices=SYSTEMS, default="bcf")
    s.add_argument("--depth", type=int, default=64, help="digits to print for non-dyadic binary expansions")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("convert", parents=[fmt], help="convert an expansion to another system")
    s.add_argument("expansion")
    s.add_argument("--to", choices=SYSTEMS + ("rational",), required=True)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("eval", parents=[fmt], help="evaluate an expansion")
    s.add_argument("expansion")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("orbit", parents=[fmt], help="iterate a map exactly")
    s.add_argument("map", help="one of " + ", ".join(m.value for m in MapId))
    s.add_argument("x")
    s.add_argument("-n", type=int, default=10)
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("enumerate", parents=[fmt], help="stream the counting bijections")
    s.add_argument("--target", choices=tuple(_TARGETS), default="unit")
    s.add_argument("--count", type=int, default=16)
    s.add_argument("--from", dest="start", type=int, default=0)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("index-of", parents=[fmt], help="position of a rational in the orbit of 0 under T")
    s.add_argument("x")
    s.set_defaults(func=cmd_index_of)

    s = sub.add_parser("qmark", parents=[fmt], help="Minkowski's question-mark function")
    s.add_argument("x")
    s.add_argument("--algo", choices=tuple(ALGORITHMS), default="bcf")
    s.set_defaults(func=cmd_qmark)

    s = sub.add_parser("qmark-inv", parents=[fmt], help="inverse of ? on a dyadic")
    s.add_argument("d", help="j/2^k, 0.bits or p/q with q a power of 2")
    s.set_defaults(func=cmd_qmark_inv)

    s = sub.add_parser("graph-data", parents=[fmt], help="sample a map on a grid (CSV), optionally plotting it")
    s.add_argument("map")
    s.add_argument("--samples", type=int, default=256)
    s.add_argument("--approx", action="store_true", help="floating-point sampling for dense plots")
    s.add_argument("--plot", metavar="FILE", help="also render the samples to an image file")
    s.set_defaults(func=cmd_graph_data)

    s = sub.add_parser("verify", parents=[fmt], help="check the identities exhaustively")
    s.add_argument("suite", choices=SUITES + ("all",))
    s.add_argument("--bound", type=int, default=100, help="denominator / level bound")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(getattr(args, "format", "text"))
    try:
        status = args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"qodometer {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
