"""Command-line interface.

Sequence tables are emitted as CSV, verification reports as JSON; both
payloads are deterministic for a given invocation.  Exit status: 0 all
computations/verifications succeeded, 1 a verification or cross-check failed,
2 usage error (including violated parameter hypotheses).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .divisors import (
    apostol_convolution_check,
    divisor_sum,
    kim_identity_check,
    recursive_divisor_sums,
)
from .errors import OracleBoundError, ParameterError
from .figurate import ModularParams, figurate_enumerate
from .identities import (
    battery,
    verify_berger,
    verify_boundary_half,
    verify_hermite,
    verify_specialized,
    verify_sylvester,
    verify_triple_product,
)
from .partitions import (
    CountMode,
    SequenceTable,
    bounded_mult_shift_identity,
    gf_count,
    oracle_bound,
    oracle_table,
    partition_shift_identities,
    recursive_count_bounded_jbar,
    recursive_count_distinct_j,
    recursive_count_j,
    recursive_count_jbar,
)
from .partsets import PartSet, parse_part_set
from .theta import ThetaPoint, quasi_periodicity_residual, theta_class

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------------
# figurate
# --------------------------------------------------------------------------


def _cmd_figurate(args) -> int:
    params = ModularParams(args.k, args.ell)
    rows = figurate_enumerate(params, args.bound)
    if args.format == "json":
        payload = {"schema": 1, "rows": [{"j": j, "value": v} for j, v in rows]}
        _emit(_json_text(payload), args.output)
    else:
        _emit(_csv_text(["j", "value"], [[j, v] for j, v in rows]), args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# partitions
# --------------------------------------------------------------------------


def _mode_from_args(args) -> CountMode:
    signed = args.gamma == -1
    if args.mode == "unrestricted":
        return CountMode(None, signed)
    if args.mode == "distinct":
        return CountMode(1, signed)
    if args.d is None:
        raise ParameterError("--mode at-most needs --d")
    return CountMode(args.d, signed)


def _recursion_table(part_set: PartSet, mode: CountMode, order: int) -> SequenceTable:
    if part_set.scale != 1:
        raise ParameterError("no recursion is wired for scaled part sets")
    params = part_set.params
    if part_set.kind == "Jbar":
        if mode.max_multiplicity is None and not mode.length_signed:
            return recursive_count_jbar(params, order)
        if mode.max_multiplicity is not None and not mode.length_signed:
            return recursive_count_bounded_jbar(params, mode.max_multiplicity, order)
        raise ParameterError(
            "recursions on Jbar cover unrestricted and at-most-d plain counts"
        )
    if part_set.kind == "J":
        if mode.max_multiplicity is None:
            return recursive_count_j(params, mode.gamma, order)
        if mode.max_multiplicity == 1:
            return recursive_count_distinct_j(params, mode.gamma, order)
        raise ParameterError(
            "recursions on J cover unrestricted and distinct counts (either sign)"
        )
    raise ParameterError(
        f"no recursion is wired for part sets of kind {part_set.kind!r}"
    )


def _cmd_partitions(args) -> int:
    part_set = parse_part_set(args.set)
    mode = _mode_from_args(args)
    order = args.n
    if args.check:
        tables = {"gf": gf_count(part_set, mode, order).values}
        if order <= oracle_bound():
            tables["oracle"] = oracle_table(part_set, mode, order).values
        try:
            tables["recursion"] = _recursion_table(part_set, mode, order).values
        except ParameterError:
            pass
        methods = sorted(tables)
        rows = []
        agree = True
        for n in range(order + 1):
            vals = [tables[m][n] for m in methods]
            ok = len(set(vals)) == 1
            agree = agree and ok
            rows.append([n, *vals, "yes" if ok else "NO"])
        if args.format == "json":
            payload = {
                "schema": 1,
                "methods": methods,
                "rows": [
                    {"n": n, **{m: str(tables[m][n]) for m in methods}}
                    for n in range(order + 1)
                ],
                "agree": agree,
            }
            _emit(_json_text(payload), args.output)
        else:
            _emit(_csv_text(["n", *methods, "agree"], rows), args.output)
        return EXIT_OK if agree else EXIT_FAIL

    if args.method == "oracle":
        table = oracle_table(part_set, mode, order)
    elif args.method == "gf":
        table = gf_count(part_set, mode, order)
    else:
        table = _recursion_table(part_set, mode, order)
    if args.format == "json":
        payload = {
            "schema": 1,
            "provenance": table.provenance,
            "values": [str(v) for v in table.values],
        }
        _emit(_json_text(payload), args.output)
    else:
        _emit(
            _csv_text(["n", "value"], [[n, v] for n, v in enumerate(table.values)]),
            args.output,
        )
    return EXIT_OK


# --------------------------------------------------------------------------
# divisors
# --------------------------------------------------------------------------


def _divisor_values(params: ModularParams, order: int, method: str) -> list[int]:
    jbar = PartSet.with_multiples(params.k, params.ell)
    if method == "scan":
        return [divisor_sum(jbar, n) for n in range(1, order + 1)]
    if method == "recursion":
        return list(recursive_divisor_sums(params, order).values[1:])
    # figurate-shift formula unwound from the generating-function relation
    p = gf_count(jbar, CountMode(), order).values
    out = []
    for n in range(1, order + 1):
        total = 0
        for j, v in figurate_enumerate(params, n):
            if j != 0:
                total += (v if j % 2 else -v) * p[n - v]
        out.append(total)
    return out


def _cmd_divisors(args) -> int:
    params = ModularParams(args.k, args.ell)
    order = args.n
    if args.check:
        methods = ["kim", "recursion", "scan"]
        tables = {m: _divisor_values(params, order, m) for m in methods}
        agree = True
        rows = []
        for i in range(order):
            vals = [tables[m][i] for m in methods]
            ok = len(set(vals)) == 1
            agree = agree and ok
            rows.append([i + 1, *vals, "yes" if ok else "NO"])
        _emit(_csv_text(["n", *methods, "agree"], rows), args.output)
        return EXIT_OK if agree else EXIT_FAIL
    values = _divisor_values(params, order, args.method)
    if args.format == "json":
        payload = {"schema": 1, "values": [str(v) for v in values]}
        _emit(_json_text(payload), args.output)
    else:
        _emit(
            _csv_text(["n", "value"], [[n + 1, v] for n, v in enumerate(values)]),
            args.output,
        )
    return EXIT_OK


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------


def _parse_grid(text: str) -> tuple[int, int]:
    head, sep, tail = text.partition("=")
    if head != "k" or not sep:
        raise ParameterError(f"grid must look like k=3..8, got {text!r}")
    lo, sep, hi = tail.partition("..")
    if not sep:
        raise ParameterError(f"grid must look like k=3..8, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise ParameterError(f"grid must look like k=3..8, got {text!r}") from None


def _single_verification(args):
    name = args.identity
    if name == "triple_product":
        return verify_triple_product(args.order, args.zwindow)
    if name == "berger":
        return verify_berger(args.k, args.order)
    if name == "hermite":
        return verify_hermite(args.s)
    if name == "boundary_half":
        return verify_boundary_half(args.k, args.order)
    params = ModularParams(args.k, args.ell)
    if name == "specialized":
        return verify_specialized(params, args.sign, args.order)
    if name == "sylvester":
        return verify_sylvester(params, args.order)
    if name == "partition_shift":
        return partition_shift_identities(params, args.gamma, args.order)
    if name == "bounded_mult_shift":
        return bounded_mult_shift_identity(params, args.d or 1, args.order)
    if name == "apostol":
        return apostol_convolution_check(params, args.order)
    if name == "kim":
        return kim_identity_check(params, args.order)
    raise ParameterError(f"unknown identity {name!r}")


def _cmd_verify(args) -> int:
    if args.all:
        lo, hi = _parse_grid(args.grid)
        results = battery(
            lo, hi, args.order, z_window=args.zwindow, jobs=args.jobs
        )
    else:
        if args.identity is None:
            raise ParameterError("verify needs --identity NAME or --all")
        results = [_single_verification(args)]
    payload = [r.to_json_dict() for r in results]
    _emit(_json_text(payload), args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# --------------------------------------------------------------------------
# theta
# --------------------------------------------------------------------------


def _parse_complex(text: str) -> complex:
    re_part, _, im_part = text.partition(",")
    try:
        return complex(float(re_part), float(im_part) if im_part else 0.0)
    except ValueError:
        raise ParameterError(f"expected RE,IM or RE, got {text!r}") from None


def _cmd_theta(args) -> int:
    point = ThetaPoint.from_qz(_parse_complex(args.q), _parse_complex(args.z))
    value = theta_class(args.k, args.ell, args.variant, point, args.tol)
    q_sub = point.q**args.k
    z_sub = (point.q**args.ell) * point.z
    if q_sub == 0 or z_sub == 0:
        residual = None
    else:
        residual = quasi_periodicity_residual(
            ThetaPoint.from_qz(q_sub, z_sub), args.tol
        )
    payload = {
        "schema": 1,
        "variant": args.variant,
        "k": args.k,
        "ell": args.ell,
        "value": {"re": value.real, "im": value.imag},
        "quasi_periodicity_residual": list(residual) if residual else None,
    }
    _emit(_json_text(payload), args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _add_io_flags(sub, default_format: str) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default=default_format)
    sub.add_argument("--output", default=None, help="write to a file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpl",
        description="Exact tables and identity verification for modular partitions.",
    )
    subs = parser.add_subparsers(dest="command")

    fig = subs.add_parser("figurate", help="enumerate modular figurate numbers")
    fig.add_argument("--k", type=int, required=True)
    fig.add_argument("--ell", type=int, required=True)
    fig.add_argument("--bound", type=int, required=True)
    _add_io_flags(fig, "csv")
    fig.set_defaults(func=_cmd_figurate)

    parts = subs.add_parser("partitions", help="partition count tables")
    parts.add_argument("--set", required=True, help="I:k,l J:k,l Jbar:k,l Js:k,l,s mult:k set:1,3,7")
    parts.add_argument(
        "--mode", choices=("unrestricted", "distinct", "at-most"), default="unrestricted"
    )
    parts.add_argument("--gamma", type=int, choices=(1, -1), default=1)
    parts.add_argument("--d", type=int, default=None, help="multiplicity cap for at-most")
    parts.add_argument("--n", type=int, required=True)
    parts.add_argument(
        "--method", choices=("oracle", "gf", "recursion"), default="gf"
    )
    parts.add_argument(
        "--check", action="store_true", help="run all applicable methods and compare"
    )
    _add_io_flags(parts, "csv")
    parts.set_defaults(func=_cmd_partitions)

    div = subs.add_parser("divisors", help="restricted divisor-sum tables")
    div.add_argument("--k", type=int, required=True)
    div.add_argument("--ell", type=int, required=True)
    div.add_argument("--n", type=int, required=True)
    div.add_argument("--method", choices=("scan", "recursion", "kim"), default="scan")
    div.add_argument("--check", action="store_true")
    _add_io_flags(div, "csv")
    div.set_defaults(func=_cmd_divisors)

    ver = subs.add_parser("verify", help="verify identities, single or grid")
    ver.add_argument("--identity", default=None)
    ver.add_argument("--all", action="store_true")
    ver.add_argument("--grid", default="k=3..8")
    ver.add_argument("--order", type=int, default=120)
    ver.add_argument("--zwindow", type=int, default=8)
    ver.add_argument("--k", type=int, default=3)
    ver.add_argument("--ell", type=int, default=1)
    ver.add_argument("--sign", type=int, choices=(1, -1), default=1)
    ver.add_argument("--gamma", type=int, choices=(1, -1), default=1)
    ver.add_argument("--s", type=int, default=3)
    ver.add_argument("--d", type=int, default=None)
    ver.add_argument("--jobs", type=int, default=1)
    _add_io_flags(ver, "json")
    ver.set_defaults(func=_cmd_verify)

    the = subs.add_parser("theta", help="evaluate theta variants numerically")
    the.add_argument("--variant", choices=("a", "b", "c", "d"), default="a")
    the.add_argument("--k", type=int, default=1)
    the.add_argument("--ell", type=int, default=0)
    the.add_argument("--q", required=True, help="RE,IM")
    the.add_argument("--z", required=True, help="RE,IM")
    the.add_argument("--tol", type=float, default=1e-12)
    _add_io_flags(the, "json")
    the.set_defaults(func=_cmd_theta)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParameterError, OracleBoundError, ValueError) as exc:
        print(f"qpl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
