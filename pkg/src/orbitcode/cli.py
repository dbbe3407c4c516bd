"""Command-line interface.

Exit status: 0 success, 1 usage or parse error, 2 uncorrectable word,
3 internal assertion.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import __version__
from .code import CodeSpec
from .exceptions import DecodeFailure, InternalInconsistency, OrbitCodeError
from .formats import HEADER, CodeSpecFile, format_matrix, format_symbols, format_word, parse_word
from .galois import FieldParams, build_tower
from .gilbert import brute_force_min_weights, compute_D, search_good_g, weight_enumerator
from .orbits import check_orbit_count_bounds, count_orbits_closed_form, enumerate_orbits
from .simulate import simulate

EXIT_OK, EXIT_USAGE, EXIT_UNCORRECTABLE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _field_args(p):
    p.add_argument("-p", type=int, required=True, help="characteristic")
    p.add_argument("-k", type=int, default=1, help="q = p^k")
    p.add_argument("-m", type=int, required=True, help="extension degree")


def _load_code(path):
    return CodeSpecFile.parse(_read(path)).estimator().fit()


def cmd_params(args):
    field = build_tower(FieldParams(args.p, args.k, args.m))
    locations = enumerate_orbits(field)
    closed = count_orbits_closed_form(field.q, field.m)
    bounds = check_orbit_count_bounds(field.q, field.m, len(locations))
    lines = [
        HEADER,
        f"p={field.p} k={field.k} q={field.q} m={field.m}",
        f"units={field.order}",
        "fieldpoly=" + ",".join(map(str, field.defining_poly)),
        f"orbits_enumerated={len(locations)}",
        f"orbits_closed_form={closed}",
        f"lower_bound={bounds.lower} {'holds' if bounds.lower_holds else 'FAILS'}",
        f"upper_bound {'holds' if bounds.upper_holds else 'FAILS'}",
    ]
    return "\n".join(lines) + "\n"


def cmd_orbits(args):
    field = build_tower(FieldParams(args.p, args.k, args.m))
    lines = [HEADER]
    for orbit in enumerate_orbits(field):
        lines.append(f"{orbit.rep} {orbit.size} " + " ".join(map(str, orbit.members)))
    return "\n".join(lines) + "\n"


def cmd_init_spec(args):
    return CodeSpecFile.for_params(args.p, args.k, args.m, args.t, args.rho,
                                   check_rho=not args.allow_vanishing_rho).to_text()


def cmd_matrix(args):
    code = CodeSpecFile.parse(_read(args.spec)).estimator().set_params(method=args.method).fit()
    return format_matrix(code.check_matrix_)


def cmd_encode(args):
    code = _load_code(args.spec)
    msg = parse_word(_read(args.message), code.q_, code.dimension_)
    return format_word(code.transform(msg[None, :])[0])


def cmd_decode(args):
    code = _load_code(args.spec)
    word = parse_word(_read(args.word), code.q_, code.n_locations_)
    try:
        res = code.decode(word)
    except DecodeFailure as exc:
        text = f"{HEADER}\nstatus=uncorrectable\nstage={exc.stage}\ndetail={exc.detail}\n"
        raise _Uncorrectable(text) from exc
    lines = [
        HEADER,
        "status=ok",
        "support=" + ",".join(str(r) for r in res.error.reps),
        "values=" + ",".join(str(res.error.values[r]) for r in res.error.reps),
        "corrected=" + format_symbols(res.codeword),
    ]
    return "\n".join(lines) + "\n"


class _Uncorrectable(Exception):
    def __init__(self, text):
        super().__init__(text)
        self.text = text


def cmd_simulate(args):
    code = _load_code(args.spec)
    summary = simulate(code, args.trials, args.error_degree, args.seed, stress=args.stress)
    return HEADER + "\n" + summary.to_text()


def cmd_search_g(args):
    field = build_tower(FieldParams(args.p, args.k, args.m))
    if args.t < 2 or math.gcd(args.t, field.m) != 1:
        raise UsageError(f"t={args.t} must exceed 1 and be prime to m={field.m}")
    locations = enumerate_orbits(field)
    counts = weight_enumerator(locations, field.q)
    D = compute_D(counts, field.q, args.t, field.m) if args.D is None else args.D
    report = search_good_g(field, locations, args.t, D, exhaustive=args.exhaustive,
                           audit=not args.no_audit, jobs=args.jobs)
    return report.to_text()


def cmd_audit(args):
    code = _load_code(args.spec)
    spec: CodeSpec = code.spec_
    t, m = spec.t, spec.field.m
    n_loc = code.n_locations_
    min_deg, min_ham = brute_force_min_weights(spec, code.check_matrix_)
    ham_bound = math.ceil((t + 1) / m)

    def fmt(x):
        return "inf" if x == math.inf else str(x)

    lines = [
        HEADER,
        f"locations={n_loc}",
        f"rank={code.rank_}",
        f"dimension={code.dimension_}",
        f"dimension_bound={n_loc - t} {'holds' if code.dimension_ >= n_loc - t else 'FAILS'}",
        f"min_degree={fmt(min_deg)}",
        f"degree_bound={t + 1} {'holds' if min_deg >= t + 1 else 'FAILS'}",
        f"min_hamming={fmt(min_ham)}",
        f"hamming_bound={ham_bound} {'holds' if min_ham >= ham_bound else 'FAILS'}",
    ]
    return "\n".join(lines) + "\n"


def build_parser():
    parser = _Parser(prog="orbitcode", description="Orbit-indexed Reed-Solomon-type codes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("params", help="field and location-set summary")
    _field_args(p)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("orbits", help="list the location set")
    _field_args(p)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("init-spec", help="write a code-spec file")
    _field_args(p)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--rho", default="1", help="F-symbols low-to-high, comma separated")
    p.add_argument("--allow-vanishing-rho", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_init_spec)

    p = sub.add_parser("matrix", help="dump the check matrix")
    p.add_argument("--spec", required=True)
    p.add_argument("--method", choices=("direct", "lfsr"), default="direct")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("encode", help="encode a message file")
    p.add_argument("--spec", required=True)
    p.add_argument("--message", required=True, help="word file with dimension symbols, or -")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received word file")
    p.add_argument("--spec", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="seeded encode/corrupt/decode trials")
    p.add_argument("--spec", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--error-degree", type=int, required=True,
                   help="maximum degree-weight of planted errors")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stress", action="store_true", help="allow errors beyond t//2")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("search-g", help="search for a good irreducible g")
    _field_args(p)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-D", type=int, default=None, help="override the computed D")
    p.add_argument("--exhaustive", action="store_true", help="classify every candidate")
    p.add_argument("--no-audit", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_search_g)

    p = sub.add_parser("audit", help="brute-force rank and distance audit")
    p.add_argument("--spec", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = getattr(args, "out", None)
    try:
        text = args.func(args)
    except _Uncorrectable as exc:
        _emit(exc.text, out)
        return EXIT_UNCORRECTABLE
    except InternalInconsistency as exc:
        print(f"orbitcode: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OrbitCodeError, UsageError, OSError, ValueError) as exc:
        print(f"orbitcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
