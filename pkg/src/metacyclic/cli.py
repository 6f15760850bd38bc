"""Command-line interface: decompose, verify, counts, sweep.

Exit codes (stable contract for scripting):
  0  success / verified
  1  usage error
  2  validation error (bad presentation parameters)
  3  verification mismatch
  4  size bound exceeded
  5  internal inconsistency (an identity that must hold failed)

Results go to stdout, diagnostics to stderr. Text output for `decompose`
is a single line in the grammar

    Q | Q(z<q>) | M<size>(Q(z<q>))     joined by " + ",

with a "<mult>*" prefix when a component occurs more than once, e.g.
"Q + 4*Q(z3) + 12*Q(z9) + 3*M3(Q(z9)) + M9(Q(z9))". JSON output is a flat
document with keys p, n, m, r, s, k, order, canonical_r,
components:[{q, lambda, mult}], complex_counts, rational_counts, provenance.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random

from .arith import phi_pk
from .errors import (
    InternalInconsistencyError,
    SizeBoundError,
    ValidationError,
)
from .formulas import (
    complex_counts_closed_form,
    rational_counts_closed_form,
    wedderburn_closed_form,
)
from .group import ORACLE_ORDER_BOUND, GroupParams, from_s, validate
from .rational import SimpleComponent, WedderburnDecomposition
from .verify import (
    DeepChecker,
    cross_validate,
    valid_parameter_sets,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
EXIT_SIZE_BOUND = 4
EXIT_INTERNAL = 5


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def format_decomposition(dec: WedderburnDecomposition) -> str:
    """Render the canonical component list in the compact text grammar."""
    parts = []
    for c in dec.components:
        center = "Q" if c.center_level == 0 else f"Q(z{dec.p ** c.center_level})"
        core = center if c.matrix_size == 1 else f"M{c.matrix_size}({center})"
        prefix = f"{c.multiplicity}*" if c.multiplicity > 1 else ""
        parts.append(prefix + core)
    return " + ".join(parts)


_TERM_RE = re.compile(
    r"^(?:(?P<mult>\d+)\*)?(?:M(?P<size>\d+)\()?Q(?:\(z(?P<zq>\d+)\))?(?P<close>\))?$"
)


def parse_decomposition(line: str, p: int) -> WedderburnDecomposition:
    """Inverse of `format_decomposition` (used by round-trip tests)."""
    from .rational import assemble_components

    items = []
    for term in line.strip().split(" + "):
        match = _TERM_RE.match(term)
        if not match:
            raise ValidationError(f"unparseable term {term!r}")
        if bool(match.group("size")) != bool(match.group("close")):
            raise ValidationError(f"unbalanced parentheses in {term!r}")
        mult = int(match.group("mult") or 1)
        size = int(match.group("size") or 1)
        zq = match.group("zq")
        lam = 0
        if zq is not None:
            value = int(zq)
            while value > 1:
                if value % p:
                    raise ValidationError(f"{zq} is not a power of {p}")
                value //= p
                lam += 1
        items.append((size, lam, mult))
    return assemble_components(p, items)


@dataclass
class DecompositionReport:
    """Params echo + component list + per-degree counts, serializable."""

    p: int
    n: int
    m: int
    r: int
    s: int
    k: int
    order: int
    canonical_r: int
    components: tuple[SimpleComponent, ...]
    complex_counts: dict[int, int]
    rational_counts: dict[int, int]
    provenance: str

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "s": self.s,
            "k": self.k,
            "order": self.order,
            "canonical_r": self.canonical_r,
            "components": [
                {"q": c.matrix_size, "lambda": c.center_level, "mult": c.multiplicity}
                for c in self.components
            ],
            "complex_counts": {str(d): c for d, c in sorted(self.complex_counts.items())},
            "rational_counts": {str(d): c for d, c in sorted(self.rational_counts.items())},
            "provenance": self.provenance,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "DecompositionReport":
        return cls(
            p=doc["p"], n=doc["n"], m=doc["m"], r=doc["r"], s=doc["s"], k=doc["k"],
            order=doc["order"], canonical_r=doc["canonical_r"],
            components=tuple(
                SimpleComponent(c["q"], c["lambda"], c["mult"])
                for c in doc["components"]
            ),
            complex_counts={int(d): c for d, c in doc["complex_counts"].items()},
            rational_counts={int(d): c for d, c in doc["rational_counts"].items()},
            provenance=doc["provenance"],
        )


def build_report(
    params: GroupParams, dec: WedderburnDecomposition, provenance: str
) -> DecompositionReport:
    if params.abelian:
        complex_counts = {1: params.order}
        rational_counts: dict[int, int] = {}
        for c in dec.components:
            degree = phi_pk(params.p, c.center_level)
            rational_counts[degree] = rational_counts.get(degree, 0) + c.multiplicity
    else:
        complex_counts = complex_counts_closed_form(params)
        rational_counts = rational_counts_closed_form(params).by_degree
    return DecompositionReport(
        p=params.p, n=params.n, m=params.m, r=params.r, s=params.s, k=params.k,
        order=params.order, canonical_r=params.canonical_r,
        components=dec.components,
        complex_counts=complex_counts,
        rational_counts=rational_counts,
        provenance=provenance,
    )


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(prog="metacyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(sp, with_abelian=True):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--n", type=int, required=True, help="exponent of |a| = p^n")
        sp.add_argument("--m", type=int, required=True, help="exponent of |b| = p^m")
        group = sp.add_mutually_exclusive_group()
        group.add_argument("--r", type=int, help="twist: b a b^-1 = a^r")
        group.add_argument("--s", type=int, help="order exponent of r mod p^n "
                           "(canonical r = 1 + p^(n-s) is used)")
        if with_abelian:
            sp.add_argument("--abelian", action="store_true",
                            help="the commuting case r = 1 (s = 0)")

    dec = sub.add_parser("decompose", help="closed-form decomposition of QG")
    add_params(dec)
    dec.add_argument("--format", choices=("text", "json"), default="text")

    ver = sub.add_parser("verify", help="closed form vs character-theoretic oracle")
    ver.add_argument("--p", type=int, required=True)
    ver.add_argument("--n", type=int)
    ver.add_argument("--m", type=int)
    group = ver.add_mutually_exclusive_group()
    group.add_argument("--r", type=int)
    group.add_argument("--s", type=int)
    ver.add_argument("--abelian", action="store_true")
    ver.add_argument("--all", action="store_true",
                     help="sweep every valid (n, m, s) up to --max-order")
    ver.add_argument("--max-order", type=int, default=None)
    ver.add_argument("--deep", action="store_true",
                     help="also run orthogonality/class-function/matrix suites")
    ver.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--corrupt-hook", action="store_true", help=argparse.SUPPRESS)

    cnt = sub.add_parser("counts", help="per-degree representation counts")
    add_params(cnt, with_abelian=False)
    cnt.add_argument("--kind", choices=("complex", "rational"), required=True)
    cnt.add_argument("--oracle", action="store_true",
                     help="add a brute-force cross-check column")
    cnt.add_argument("--format", choices=("text", "json"), default="text")

    swp = sub.add_parser("sweep", help="one row per valid (n, m, s)")
    swp.add_argument("--p", type=int, required=True)
    swp.add_argument("--max-order", type=int, required=True)
    swp.add_argument("--oracle", action="store_true",
                     help="cross-validate each row against the oracle")
    swp.add_argument("--threads", type=int, default=1,
                     help="parallel workers (output order is unchanged)")
    swp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _params_from_args(args) -> GroupParams:
    if getattr(args, "abelian", False):
        if args.s not in (None, 0):
            raise ValidationError("--abelian contradicts --s > 0")
        r = 1 if args.r is None else args.r
        return validate(args.p, args.n, args.m, r, abelian=True)
    if args.s is not None:
        return from_s(args.p, args.n, args.m, args.s)
    if args.r is None:
        raise _UsageError("one of --r / --s / --abelian is required")
    return validate(args.p, args.n, args.m, args.r)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_decompose(args) -> int:
    params = _params_from_args(args)
    dec = wedderburn_closed_form(params)
    report = build_report(params, dec, "closed_form")
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(format_decomposition(dec))
        print(
            f"p={params.p} n={params.n} m={params.m} r={params.r} "
            f"s={params.s} k={params.k} |G|={params.order} "
            f"canonical_r={params.canonical_r}",
            file=sys.stderr,
        )
    return EXIT_OK


def _corrupted(dec: WedderburnDecomposition) -> WedderburnDecomposition:
    first = dec.components[0]
    bumped = SimpleComponent(
        first.matrix_size, first.center_level, first.multiplicity + 1
    )
    return WedderburnDecomposition(dec.p, (bumped,) + dec.components[1:])


def _verify_one(params: GroupParams, args) -> int:
    result = cross_validate(params)
    closed = result.closed
    if args.corrupt_hook:
        closed = _corrupted(closed)
        diff = tuple(
            line for line in _diff(closed, result.oracle)
        )
        result = result.__class__(params, closed, result.oracle, not diff, diff)
    tag = f"p={params.p} n={params.n} m={params.m} s={params.s} r={params.r}"
    if not result.match:
        print(f"MISMATCH {tag}")
        for line in result.diff:
            print(f"  {line}")
        return EXIT_MISMATCH
    if args.deep and not params.abelian:
        checker = DeepChecker(params, rng=Random(args.seed))
        failures = []
        for check in checker.run_all():
            status = "OK" if check.ok else "FAIL"
            print(f"deep {tag} {check.name}: {status} {check.detail}".rstrip(),
                  file=sys.stderr)
            if not check.ok:
                failures.append(check)
        if failures:
            print(f"MISMATCH {tag} deep checks failed: "
                  + ", ".join(c.name for c in failures))
            return EXIT_MISMATCH
    if args.format == "json":
        report = build_report(params, result.closed, "both (verified)")
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"VERIFIED {tag} |G|={params.order}: {format_decomposition(result.closed)}")
    return EXIT_OK


def _diff(a, b):
    from .verify import diff_components

    return diff_components(a, b)


def _cmd_verify(args) -> int:
    if args.all:
        if args.max_order is None:
            raise _UsageError("--all requires --max-order")
        worst = EXIT_OK
        for params in valid_parameter_sets(args.p, args.max_order):
            code = _verify_one(params, args)
            worst = max(worst, code)
        return worst
    if args.n is None or args.m is None:
        raise _UsageError("verify needs --n and --m (or --all with --max-order)")
    params = _params_from_args(args)
    if params.abelian:
        # closed form vs grid-orbit oracle
        result = cross_validate(params)
        if args.corrupt_hook:
            closed = _corrupted(result.closed)
            diff = tuple(_diff(closed, result.oracle))
            result = result.__class__(params, closed, result.oracle, not diff, diff)
        if not result.match:
            print(f"MISMATCH abelian p={params.p} n={params.n} m={params.m}")
            for line in result.diff:
                print(f"  {line}")
            return EXIT_MISMATCH
        print(f"VERIFIED abelian p={params.p} n={params.n} m={params.m}: "
              f"{format_decomposition(result.closed)}")
        return EXIT_OK
    return _verify_one(params, args)


def _cmd_counts(args) -> int:
    params = _params_from_args(args)
    if args.oracle and params.order > ORACLE_ORDER_BOUND:
        raise SizeBoundError(
            f"|G| = {params.order} exceeds the oracle bound {ORACLE_ORDER_BOUND}"
        )
    if args.kind == "complex":
        formula = complex_counts_closed_form(params)
        rows = [{"degree": d, "count": c} for d, c in sorted(formula.items())]
        if args.oracle:
            from .complex_reps import enumerate_irreducibles

            oracle: dict[int, int] = {}
            for ch in enumerate_irreducibles(params):
                oracle[ch.degree] = oracle.get(ch.degree, 0) + 1
            for row in rows:
                row["oracle"] = oracle.get(row["degree"], 0)
                if row["oracle"] != row["count"]:
                    raise InternalInconsistencyError(
                        f"complex count mismatch at degree {row['degree']}"
                    )
    else:
        counts = rational_counts_closed_form(params)
        rows = [
            {"lambda": lam, "degree": phi_pk(params.p, lam), "count": c}
            for lam, c in counts.by_lambda.items()
        ]
        if args.oracle:
            from .complex_reps import enumerate_irreducibles
            from .rational import galois_classes, rational_counts_from_classes

            classes = galois_classes(enumerate_irreducibles(params), params)
            oracle = rational_counts_from_classes(classes, params)
            for row in rows:
                row["oracle"] = oracle.get(row["degree"], 0)
                if row["oracle"] != row["count"]:
                    raise InternalInconsistencyError(
                        f"rational count mismatch at degree {row['degree']}"
                    )
    doc = {
        "kind": args.kind,
        "p": params.p, "n": params.n, "m": params.m,
        "r": params.r, "s": params.s,
        "rows": rows,
        "total": sum(row["count"] for row in rows),
    }
    if args.format == "json":
        print(json.dumps(doc))
    else:
        headers = list(rows[0].keys())
        widths = {h: max(len(h), *(len(str(r[h])) for r in rows)) for h in headers}
        print("  ".join(h.ljust(widths[h]) for h in headers))
        for row in rows:
            print("  ".join(str(row[h]).ljust(widths[h]) for h in headers))
        print(f"total {doc['total']}")
    return EXIT_OK


def _sweep_row(task: tuple[int, int, int, int, bool]) -> dict:
    p, n, m, s, oracle = task
    params = from_s(p, n, m, s)
    dec = wedderburn_closed_form(params)
    row = {
        "p": p, "n": n, "m": m, "s": s, "r": params.r,
        "order": params.order,
        "components": len(dec.components),
        "dim_ok": dec.dimension() == params.order,
    }
    if oracle:
        row["oracle_match"] = cross_validate(params).match
    return row


def _cmd_sweep(args) -> int:
    tasks = [
        (q.p, q.n, q.m, q.s, args.oracle)
        for q in valid_parameter_sets(args.p, args.max_order)
    ]
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_sweep_row, tasks))
    else:
        rows = [_sweep_row(t) for t in tasks]
    bad = [row for row in rows if not row["dim_ok"]]
    mismatched = [row for row in rows if not row.get("oracle_match", True)]
    for row in rows:
        if args.format == "json":
            print(json.dumps(row))
        else:
            text = " ".join(f"{key}={value}" for key, value in row.items())
            print(text)
    if bad:
        raise InternalInconsistencyError(f"{len(bad)} rows failed the dimension identity")
    if mismatched:
        print(f"{len(mismatched)} rows mismatched the oracle", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


_COMMANDS = {
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "counts": _cmd_counts,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SizeBoundError as exc:
        print(f"size bound: {exc}", file=sys.stderr)
        return EXIT_SIZE_BOUND
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
