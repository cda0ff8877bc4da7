"""Command-line interface: ``superdirac <command> [flags]``.

Exit codes: 0 success, 1 an identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .cache import DEFAULT_DIR, Cache
from .errors import SuperDiracError
from .rootdata import Kind, Weight, positive_roots, rho, simple_roots

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_ORDER = 12
CHARACTER_RANK_CEILING = 4
SYMBOLIC_RANK_CEILING = 2


class UsageError(Exception):
    def __init__(self, message, hint=None):
        super().__init__(message)
        self.hint = hint


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, f"run '{self.prog} --help' for usage")


# -- formatting ----------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _emit(args, payload, table):
    if args.json:
        print(_dump(payload))
    else:
        print(table(payload) if callable(table) else table)


def _terms_table(terms):
    return "\n".join(f"  {'2exp=' + ','.join(map(str, t['2exp'])):<24} {t['coef']:>8}" for t in terms)


# -- argument helpers ----------------------------------------------------------


def _weight(text, flag):
    try:
        return Weight.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag} {text!r} is not a comma-separated list of rationals ({exc})") from None


def _rank(args, weight=None, ceiling=None):
    n = args.n
    if weight is not None:
        if n is not None and n != len(weight):
            raise UsageError(f"--n {n} does not match the {len(weight)} coordinates given")
        n = len(weight)
    if n is None:
        raise UsageError("the rank is missing", "pass --n or a weight with n coordinates")
    if n < 1:
        raise UsageError(f"--n must be positive, got {n}")
    if ceiling is not None and n > ceiling:
        raise UsageError(f"--n {n} exceeds the limit {ceiling} for this command")
    return n


def _require(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this command")
    return value


def _cache(args) -> Cache:
    return Cache(args.cache_dir, enabled=not args.no_cache)


# -- commands ------------------------------------------------------------------


def cmd_roots(args):
    n = _rank(args, ceiling=8)
    kind = Kind.parse(args.type)
    data = positive_roots(kind, n)
    payload = {
        "type": kind.value,
        "n": n,
        "even_positive_roots": [r.to_json() for r in data.even_positive_roots],
        "odd_positive_roots": [r.to_json() for r in data.odd_positive_roots],
        "simple_roots": [r.to_json() for r in simple_roots(kind, n)],
        "rho": rho(kind, n).to_json(),
    }

    def table(p):
        lines = [f"type {p['type']}, rank {n}"]
        lines.append("even positive roots: " + "  ".join(str(r) for r in data.even_positive_roots))
        if data.odd_positive_roots:
            lines.append("odd positive roots:  " + "  ".join(str(r) for r in data.odd_positive_roots))
        lines.append("simple roots:        " + "  ".join(str(r) for r in simple_roots(kind, n)))
        lines.append(f"rho:                 {rho(kind, n)}")
        return "\n".join(lines)

    _emit(args, payload, table)
    return EXIT_OK


def _character_record(args, kind):
    from .weylchar import character_B, character_osp

    hw = _weight(_require(args, "hw"), "--hw")
    n = _rank(args, hw, CHARACTER_RANK_CEILING)
    key = {"kind": "character", "type": kind.value, "n": n, "2lambda": list(hw)}
    fn = character_B if kind is Kind.B else character_osp
    return _cache(args).fetch(key, lambda: fn(hw).to_json())


def cmd_character(args):
    kind = Kind.parse(args.type)
    if kind is Kind.C:
        raise UsageError("--type must be B or osp for characters")
    rec = _character_record(args, kind)

    def table(p):
        head = f"{p['kind']} highest weight {Weight(p['highest_weight']['2lambda'])}: dimension {p['dimension']}"
        return head + "\n" + _terms_table(p["terms"])

    _emit(args, rec, table)
    return EXIT_OK


def cmd_mult(args):
    from .weylchar import freudenthal_multiplicities

    hw = _weight(_require(args, "hw"), "--hw")
    _rank(args, hw, CHARACTER_RANK_CEILING)
    mult = freudenthal_multiplicities(hw)
    rows = [{"2mu": list(mu), "mult": m} for mu, m in sorted(mult.items(), reverse=True)]
    payload = {"highest_weight": hw.to_json(), "multiplicities": rows}
    _emit(args, payload, lambda p: "\n".join(f"  {str(Weight(r['2mu'])):<20} {r['mult']}" for r in rows))
    return EXIT_OK


def cmd_dim(args):
    from .weylchar import weyl_dimension

    hw = _weight(_require(args, "hw"), "--hw")
    n = _rank(args, hw)
    kind = Kind.parse(args.type)
    if kind is Kind.C:
        raise UsageError("--type must be B or osp for dimensions")
    d = weyl_dimension(hw, kind)
    payload = {"type": kind.value, "n": n, "highest_weight": hw.to_json(), "dimension": str(d)}
    _emit(args, payload, str(d))
    return EXIT_OK


def cmd_transfer_factor(args):
    from .oscillator import PHI_CONVENTION, transfer_factor, transfer_factor_identity, transfer_factor_sign

    n = _rank(args, ceiling=CHARACTER_RANK_CEILING)
    order = args.order
    ok = transfer_factor_identity(n, order)
    phi = transfer_factor(n, order)
    payload = {
        "identity": "transfer_factor",
        "n": n,
        "order": order,
        "series": phi.to_json(),
        "sign": transfer_factor_sign(n, order),
        "convention": dict(PHI_CONVENTION),
        "pass": ok,
    }
    _emit(args, payload, lambda p: f"{phi!r}\nidentity holds: {ok}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dirac_index(args):
    from .oscillator import dirac_index_character, dirac_index_trivial

    if args.hw is None:
        n = _rank(args, ceiling=CHARACTER_RANK_CEILING)
        payload = _cache(args).fetch(
            {"kind": "dirac_index", "n": n, "2lambda": None, "order": args.order},
            lambda: dirac_index_trivial(n, args.order).to_json(),
        )
    else:
        hw = _weight(args.hw, "--hw")
        n = _rank(args, hw, CHARACTER_RANK_CEILING)
        payload = _cache(args).fetch(
            {"kind": "dirac_index", "n": n, "2lambda": list(hw), "order": args.order},
            lambda: dirac_index_character(hw, args.order).to_json(),
        )
    _emit(args, payload, lambda p: f"Dirac index identity at order {p['order']}: {'pass' if p['pass'] else 'FAIL'}")
    return EXIT_OK if payload["pass"] else EXIT_FAIL


def cmd_lift(args):
    from .lifting import VirtualCharacter, lift_gamma

    lam = _weight(_require(args, "param"), "--param")
    _rank(args, lam)
    theta = VirtualCharacter.stable(lam)
    out = lift_gamma(theta, args.direction)
    payload = {"input": theta.to_json(), "output": out.to_json(), "direction": args.direction}
    _emit(args, payload, f"{theta.lam_dom.weight} -> {out.lam_dom.weight} ({len(out.coeffs)} Weyl coefficients)")
    return EXIT_OK


def cmd_lift_ds(args):
    from .lifting import lift_ds_parameter, unlift_ds_parameter

    lam = _weight(_require(args, "param"), "--param")
    _rank(args, lam)
    out = unlift_ds_parameter(lam) if args.inverse else lift_ds_parameter(lam)
    key = "lambda" if args.inverse else "lambda_prime"
    payload = {key: str(out.weight)}
    _emit(args, payload, str(out.weight))
    return EXIT_OK


def cmd_dirac_square(args):
    from .superalg import verify_dirac_square

    n = _rank(args, ceiling=SYMBOLIC_RANK_CEILING)
    cert = verify_dirac_square(n)
    payload = cert.to_json()
    _emit(args, payload, f"D^2 identity at n={n}: {'pass' if cert.passed else 'FAIL'} (C = {cert.constant})")
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_dirac_cohomology(args):
    from .superalg import build_module, dirac_cohomology

    hw = _weight(_require(args, "hw"), "--hw")
    _rank(args, hw, ceiling=1)
    if not hw.is_integral() or hw[0] < 0:
        raise UsageError(f"--hw must be a nonnegative integer for osp(1|2), got {hw}")
    mod = build_module(hw[0] // 2)
    res = dirac_cohomology(mod, args.order)
    payload = res.to_json()

    def table(p):
        lines = [f"H_D of the module with highest weight {hw} (order {p['order']})"]
        for label in ("hplus", "hminus"):
            lines.append(f"  {label}: " + ", ".join(f"{Weight(r['2mu'])}" for r in p[label]))
        lines.append(f"  Omega scalar on Ker D: {p['omega_scalar']}; {'pass' if p['pass'] else 'FAIL'}")
        return "\n".join(lines)

    _emit(args, payload, table)
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_verify(args):
    from .verify import SUITES, run_suites

    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}", f"choose from all, {', '.join(SUITES)}")
    if args.n_max < 1:
        raise UsageError("--n-max must be positive")
    report = run_suites(args.suite, n_max=args.n_max, order=args.order, jobs=args.jobs)

    def table(r):
        lines = []
        for name, s in r["suites"].items():
            bad = [e for e in s["entries"] if not e["pass"]]
            lines.append(f"{name:<14} {'pass' if s['pass'] else 'FAIL'}  ({len(s['entries'])} checks)")
            for e in bad:
                lines.append(f"    failed: {e['identity']} {json.dumps(e['params'], sort_keys=True)}")
                if "certificate" in e:
                    lines.append(f"    certificate: {json.dumps(e['certificate'], sort_keys=True)}")
        return "\n".join(lines)

    _emit(args, report, table)
    return EXIT_OK if report["pass"] else EXIT_FAIL


COMMANDS = {
    "roots": (cmd_roots, "positive and simple roots and rho"),
    "character": (cmd_character, "irreducible character record"),
    "mult": (cmd_mult, "weight multiplicities by Freudenthal's recursion"),
    "dim": (cmd_dim, "Weyl dimension"),
    "transfer-factor": (cmd_transfer_factor, "the series ch M+ - ch M- and its identities"),
    "dirac-index": (cmd_dirac_index, "Dirac index identity for a highest weight (or the trivial module)"),
    "lift": (cmd_lift, "lift a stable virtual character between Sp(2n,R) and Mp(2n,R)"),
    "lift-ds": (cmd_lift_ds, "lift a discrete series parameter"),
    "dirac-square": (cmd_dirac_square, "verify the formula for D^2 symbolically"),
    "dirac-cohomology": (cmd_dirac_cohomology, "Dirac cohomology of an osp(1|2)-module"),
    "verify": (cmd_verify, "run verification suites"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--n", type=int, help="rank n")
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help=f"truncation order (default {DEFAULT_ORDER})")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the result cache")
    common.add_argument("--cache-dir", default=DEFAULT_DIR, help=f"cache directory (default {DEFAULT_DIR})")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = _Parser(prog="superdirac", description="Characters and Dirac operators for osp(1|2n).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    for name, (_, text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        if name in ("roots", "character", "dim"):
            p.add_argument("--type", default="B" if name != "character" else "osp", help="B, C or osp")
        if name in ("character", "mult", "dim", "dirac-index", "dirac-cohomology"):
            p.add_argument("--hw", help="highest weight, e.g. 2,1 or 3/2,1/2")
        if name in ("lift", "lift-ds"):
            p.add_argument("--param", help="Harish-Chandra parameter, e.g. 2,1")
        if name == "lift":
            p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
        if name == "lift-ds":
            p.add_argument("--inverse", action="store_true", help="map a genuine parameter back")
        if name == "verify":
            p.add_argument("--suite", default="all", help="suite name or 'all'")
            p.add_argument("--n-max", type=int, default=2, help="largest rank to verify (default 2)")
            p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
        p.set_defaults(func=COMMANDS[name][0])
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("no command given", "run 'superdirac --help' for the command list")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
        if args.order < 1:
            raise UsageError(f"--order must be at least 1, got {args.order}")
        return args.func(args)
    except UsageError as exc:
        print(f"superdirac: error: {exc}", file=sys.stderr)
        print(f"hint: {exc.hint or 'run superdirac <command> --help for the accepted flags'}", file=sys.stderr)
        return EXIT_USAGE
    except (SuperDiracError, ValueError) as exc:
        print(f"superdirac: error: {exc}", file=sys.stderr)
        print("hint: check the weight or parameter against the command's --help", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
