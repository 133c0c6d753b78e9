"""Census of covers over a parameter sweep, with a command line front end.

Every proper divisor of x^n - (-1)^eps over Z_p contributes one row.  The
classification side of a row (reflexibility, predicted group orders,
symmetry type, minimality) comes from the polynomial machinery; the
verification side rebuilds the same numbers from explicit permutations on
the cover and records any disagreement instead of asserting, so a finished
census is also a machine-checked certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .cover import CoverGraph, build_cover
from .fpoly import FpPoly, is_odd_prime, modulus_divisors
from .lift import lifted_generators, lifting_report
from .permgrp import (
    DEFAULT_ORACLE_LIMIT,
    OracleLimit,
    PermGroup,
    automorphism_group,
    transitivity_profile,
)
from .reflex import divisor_info

VERIFY_TIERS = ("none", "lifts", "orbits", "aut")


@dataclass(frozen=True)
class CensusRow:
    """One divisor of one code modulus, with predictions and verified values."""

    p: int
    n: int
    eps: int
    g: tuple[int, ...]
    step: int
    fiber_dim: int
    weakly_reflexible: bool
    maximal_weakly_reflexible: bool
    order: int
    symmetry: str
    base_order: int
    lifted_order: int
    minimal: bool
    verified_order: int | None = None
    arc_orbits: int | None = None
    aut_order: int | None = None
    skipped: str | None = None
    mismatch: str | None = None


def _census_row(task) -> CensusRow:
    p, n, eps, g, verify, max_order, aut_limit, time_budget = task
    info = divisor_info(g, n, eps)
    rep = lifting_report(info)
    row = dict(
        p=p,
        n=n,
        eps=eps,
        g=g.coeffs,
        step=info.step,
        fiber_dim=info.fiber_dim,
        weakly_reflexible=info.weakly_reflexible,
        maximal_weakly_reflexible=info.maximal_weakly_reflexible,
        order=n * p**info.fiber_dim,
        symmetry="AT" if rep.arc_transitive else "HT",
        base_order=rep.base_order,
        lifted_order=rep.lifted_order,
        minimal=rep.minimal_cover,
    )
    if verify == "none":
        return CensusRow(**row)
    if row["order"] > max_order:
        row["skipped"] = f"order {row['order']} above the size budget {max_order}"
        return CensusRow(**row)
    cover = build_cover(g, n, eps)
    group = PermGroup(lifted_generators(rep, cover))
    row["verified_order"] = group.order()
    mismatches = []
    if row["verified_order"] != rep.lifted_order:
        mismatches.append(
            f"lifted group order {row['verified_order']} != {rep.lifted_order}"
        )
    if verify in ("orbits", "aut"):
        prof = transitivity_profile(group, cover)
        row["arc_orbits"] = prof["arc_orbits"]
        want_arcs = 1 if rep.arc_transitive else 2
        if not (prof["vertex_transitive"] and prof["edge_transitive"]):
            mismatches.append("lifted group is not vertex- and edge-transitive")
        if prof["arc_orbits"] != want_arcs:
            mismatches.append(f"arc orbits {prof['arc_orbits']} != {want_arcs}")
    if verify == "aut":
        try:
            aut = automorphism_group(cover, limit=aut_limit, time_budget=time_budget)
            row["aut_order"] = aut.order()
            if row["aut_order"] % rep.lifted_order:
                mismatches.append(
                    f"lifts give no subgroup: {rep.lifted_order} does not divide "
                    f"{row['aut_order']}"
                )
        except OracleLimit as err:
            row["skipped"] = str(err)
    if mismatches:
        row["mismatch"] = "; ".join(mismatches)
    return CensusRow(**row)


def census_rows(
    ps,
    ns,
    eps_values=(0, 1),
    verify: str = "lifts",
    max_order: int = 2500,
    aut_limit: int = DEFAULT_ORACLE_LIMIT,
    time_budget: float | None = None,
    jobs: int = 1,
) -> list[CensusRow]:
    """All census rows for the sweep, in a deterministic order.

    Rows are ordered by (n, p, eps) and then by divisor degree and
    coefficients.  Rows whose cover is larger than max_order skip the
    permutation checks but still carry the predicted values.
    """
    if verify not in VERIFY_TIERS:
        raise ValueError(f"verify must be one of {VERIFY_TIERS}")
    for p in ps:
        is_odd_prime(p)
    tasks = []
    for n in sorted(ns):
        for p in sorted(ps):
            for eps in sorted(eps_values):
                for g in modulus_divisors(n, eps, p):
                    tasks.append(
                        (p, n, eps, g, verify, max_order, aut_limit, time_budget)
                    )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_census_row, tasks))
    return [_census_row(t) for t in tasks]


# -- serialization ---------------------------------------------------------------

_COLUMNS = (
    "p",
    "n",
    "eps",
    "g",
    "step",
    "fiber_dim",
    "weakly_reflexible",
    "maximal_weakly_reflexible",
    "order",
    "symmetry",
    "base_order",
    "lifted_order",
    "minimal",
    "verified_order",
    "arc_orbits",
    "aut_order",
    "skipped",
    "mismatch",
)


def _cell(value) -> str:
    if value is None:
        return "-"
    if value is True:
        return "Y"
    if value is False:
        return "N"
    if isinstance(value, tuple):
        return ",".join(str(x) for x in value)
    return str(value)


def write_tsv(rows, stream) -> None:
    stream.write("\t".join(_COLUMNS) + "\n")
    for row in rows:
        data = asdict(row)
        stream.write("\t".join(_cell(data[c]) for c in _COLUMNS) + "\n")


def write_jsonl(rows, stream) -> None:
    for row in rows:
        stream.write(json.dumps(asdict(row), sort_keys=True) + "\n")


def export_graph(cover: CoverGraph, stream, voltages: bool = False) -> None:
    """Edge list of a cover with a header naming its parameters.

    The header records p, n, eps, the fiber dimension and the divisor
    coefficients; with voltages=True the matrix columns follow, one line
    per base edge pair.  Edges are sorted pairs of vertex ids.
    """
    g = "-" if cover.g is None else ",".join(str(c) for c in cover.g.coeffs)
    eps = "-" if cover.eps is None else cover.eps
    stream.write(f"# p={cover.p} n={cover.n} eps={eps} r={cover.r} g={g}\n")
    if voltages:
        for j in range(cover.n):
            col = ",".join(str(c) for c in cover.matrix.column(j))
            stream.write(f"# column {j}: {col}\n")
    for u, v in cover.edges():
        stream.write(f"{u} {v}\n")


# -- command line ----------------------------------------------------------------


def _parse_ints(text: str) -> list[int]:
    """Comma list of integers where each item may be a single value or a..b."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if ".." in item:
            lo, hi = item.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(item))
    return sorted(set(out))


def _parse_eps(text: str) -> tuple[int, ...]:
    if text == "both":
        return (0, 1)
    if text in ("0", "1"):
        return (int(text),)
    raise argparse.ArgumentTypeError("eps must be 0, 1 or both")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dccover",
        description="Covers of doubled cycles from divisors of x^n - (-1)^eps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    census = sub.add_parser("census", help="classify and verify a parameter sweep")
    census.add_argument("--p", type=_parse_ints, required=True, help="primes, e.g. 3,5,7")
    census.add_argument("--n", type=_parse_ints, required=True, help="lengths, e.g. 3..8")
    census.add_argument("--eps", type=_parse_eps, default=(0, 1), help="0, 1 or both")
    census.add_argument("--verify", choices=VERIFY_TIERS, default="lifts")
    census.add_argument("--max-order", type=int, default=2500)
    census.add_argument("--aut-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    census.add_argument("--time-budget", type=float, default=None)
    census.add_argument("--jobs", type=int, default=1)
    census.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    census.add_argument("--out", default=None, help="output path, stdout by default")

    export = sub.add_parser("export", help="write the edge list of one cover")
    export.add_argument("--p", type=int, required=True)
    export.add_argument("--n", type=int, required=True)
    export.add_argument("--eps", type=int, choices=(0, 1), required=True)
    export.add_argument("--g", required=True, help="divisor coefficients, e.g. 5,1")
    export.add_argument("--voltages", action="store_true")
    export.add_argument("--out", default=None, help="output path, stdout by default")
    return parser


def _open_out(path):
    return open(path, "w") if path else sys.stdout


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "census":
        rows = census_rows(
            args.p,
            args.n,
            args.eps,
            verify=args.verify,
            max_order=args.max_order,
            aut_limit=args.aut_limit,
            time_budget=args.time_budget,
            jobs=args.jobs,
        )
        stream = _open_out(args.out)
        try:
            if args.format == "tsv":
                write_tsv(rows, stream)
            else:
                write_jsonl(rows, stream)
        finally:
            if stream is not sys.stdout:
                stream.close()
        return 2 if any(row.mismatch for row in rows) else 0
    coeffs = tuple(int(c) for c in args.g.split(","))
    cover = build_cover(FpPoly(args.p, coeffs), args.n, args.eps)
    stream = _open_out(args.out)
    try:
        export_graph(cover, stream, voltages=args.voltages)
    finally:
        if stream is not sys.stdout:
            stream.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
