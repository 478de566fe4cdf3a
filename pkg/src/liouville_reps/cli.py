"""Command-line front end: compute counts, run verification sweeps, print tables.

Subcommands:

* ``compute``  closed-form values of one counting family over a range of n,
* ``verify``   identity sweeps comparing formulas against enumeration,
* ``table``    per-n summary of counts plus reference arithmetic functions.

Exit codes: 0 success, 1 verification mismatch, 2 usage error. All output
is exact decimal integers. Output is byte-deterministic for a given
argument list (including ``--seed``); wall-clock timings are kept on the
report objects but never serialized for that reason.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import partial
from typing import Callable

from . import formulas, identities, power_sums, rep_sets
from .arith import euler_phi, factorize, sigma_m

__all__ = [
    "Record",
    "VerificationReport",
    "VerifyOptions",
    "IDENTITIES",
    "run_verify",
    "main",
]

IDENTITIES = (
    "eq12",
    "thm11a",
    "thm11b",
    "williams-t11",
    "lemma21a",
    "lemma21b",
    "thm22a",
    "thm22b",
    "thm31",
    "definitional",
)

_DEFAULT_K = {
    "eq12": 8,
    "thm11a": 3,
    "thm11b": 3,
    "williams-t11": 3,
    "lemma21a": 4,
    "lemma21b": 3,
}
_EVEN_ONLY_IDENTITIES = ("thm11b", "lemma21b", "thm22b")
_F_IDENTITIES = ("thm11a", "thm11b", "williams-t11")
_ODD_FAMILIES = ("Jp", "Kp", "Lp")

# Randomized table-valued even functions used by the f-parametric sweeps:
# fixed batch size, applied for n up to this cap.
TABLE_FN_COUNT = 50
TABLE_FN_N_CAP = 60

FORMATS = ("csv", "json", "plain")


@dataclass(frozen=True)
class Record:
    """One verification row. `extra` holds informational values (e.g. the
    published variant next to the corrected one); `ms` is wall time and is
    never serialized, keeping rendered output byte-stable."""

    n: int
    param: str
    lhs: int
    rhs: int
    extra: tuple[tuple[str, int], ...] = ()
    match: bool = False
    ms: float | None = None


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    start: int
    end: int
    k: int | None
    seed: int | None
    oracle_depth: int | None
    records: tuple[Record, ...]

    @property
    def checked(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.match)

    @property
    def failed(self) -> int:
        return self.checked - self.passed

    def without_timing(self) -> "VerificationReport":
        return replace(
            self, records=tuple(replace(r, ms=None) for r in self.records)
        )

    def to_json(self) -> str:
        obj = {
            "identity": self.identity,
            "start": self.start,
            "end": self.end,
            "k": self.k,
            "seed": self.seed,
            "oracle_depth": self.oracle_depth,
            "summary": {
                "checked": self.checked,
                "passed": self.passed,
                "failed": self.failed,
            },
            "records": [
                {
                    "n": r.n,
                    "param": r.param,
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "extra": dict(r.extra),
                    "match": r.match,
                }
                for r in self.records
            ],
        }
        return json.dumps(obj, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        obj = json.loads(text)
        records = tuple(
            Record(
                n=r["n"],
                param=r["param"],
                lhs=r["lhs"],
                rhs=r["rhs"],
                extra=tuple((key, val) for key, val in r["extra"].items()),
                match=r["match"],
            )
            for r in obj["records"]
        )
        report = cls(
            identity=obj["identity"],
            start=obj["start"],
            end=obj["end"],
            k=obj["k"],
            seed=obj["seed"],
            oracle_depth=obj["oracle_depth"],
            records=records,
        )
        summary = obj["summary"]
        if (summary["checked"], summary["passed"], summary["failed"]) != (
            report.checked,
            report.passed,
            report.failed,
        ):
            raise ValueError("summary does not match record tallies")
        return report

    def to_csv(self) -> str:
        lines = ["n,param,lhs,rhs,extra,match"]
        for r in self.records:
            extra = ";".join(f"{key}={val}" for key, val in r.extra)
            lines.append(
                f"{r.n},{r.param},{r.lhs},{r.rhs},{extra},{1 if r.match else 0}"
            )
        return "\n".join(lines)

    def to_plain(self) -> str:
        head = f"verify {self.identity} {self.start}..{self.end}"
        if self.k is not None:
            head += f" k={self.k}"
        if self.seed is not None:
            head += f" seed={self.seed}"
        if self.oracle_depth is not None:
            head += f" oracle-depth={self.oracle_depth}"
        lines = [head]
        for r in self.records:
            bits = [f"n={r.n}"]
            if r.param:
                bits.append(r.param)
            bits.append(f"lhs={r.lhs}")
            bits.append(f"rhs={r.rhs}")
            bits.extend(f"{key}={val}" for key, val in r.extra)
            bits.append("ok" if r.match else "MISMATCH")
            lines.append(" ".join(bits))
        lines.append(
            f"checked={self.checked} passed={self.passed} failed={self.failed}"
        )
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_plain()


@dataclass(frozen=True)
class VerifyOptions:
    identity: str
    k: int | None
    seed: int
    oracle_depth: int


def _timed(build: Callable[[], Record]) -> Record:
    t0 = time.perf_counter()
    record = build()
    return replace(record, ms=(time.perf_counter() - t0) * 1000.0)


def _records_eq12(n: int, opt: VerifyOptions) -> list[Record]:
    records = []
    for k in range(1, opt.k + 1):
        def build(k=k):
            direct = power_sums.coprime_power_sum_direct(n, k).value
            full = power_sums.coprime_power_sum_mobius(n, k, "full").value
            trimmed = power_sums.coprime_power_sum_mobius(n, k, "trimmed").value
            bern = power_sums.coprime_power_sum_bernoulli(n, k).value
            match = direct == full == trimmed == bern
            return Record(
                n,
                f"k={k}",
                direct,
                bern,
                (("mobius_full", full), ("mobius_trimmed", trimmed)),
                match,
            )

        records.append(_timed(build))
    return records


def _even_functions(n: int, opt: VerifyOptions) -> list[identities.EvenFunction]:
    fs = [identities.EvenFunction.monomial(k) for k in range(1, opt.k + 1)]
    if n <= TABLE_FN_N_CAP:
        fs += identities.random_even_tables(n, TABLE_FN_COUNT, opt.seed)
    return fs


def _records_f_identity(n, opt, evaluate) -> list[Record]:
    records = []
    for f in _even_functions(n, opt):
        def build(f=f):
            side = evaluate(n, f)
            return Record(n, side.param, side.lhs, side.rhs, (), side.match)

        records.append(_timed(build))
    return records


def _records_thm11a(n, opt):
    return _records_f_identity(n, opt, identities.theorem_1a)


def _records_thm11b(n, opt):
    return _records_f_identity(n, opt, identities.theorem_1b)


def _records_williams(n, opt):
    return _records_f_identity(n, opt, identities.williams_t11)


def _records_lemma21a(n, opt):
    records = []
    for k in range(1, opt.k + 1):
        def build(k=k):
            side = identities.lemma_21a(n, k)
            return Record(n, side.param, side.lhs, side.rhs, (), side.match)

        records.append(_timed(build))
    return records


def _records_lemma21b(n, opt):
    records = []
    for k in range(1, opt.k + 1):
        def build(k=k):
            chk = identities.lemma_21b(n, k)
            return Record(
                n,
                f"k={k}",
                chk.lhs,
                chk.rhs_corrected,
                (("paper", chk.rhs_paper),),
                chk.matches_corrected,
            )

        records.append(_timed(build))
    return records


def _records_thm22a(n, opt):
    def build():
        closed = formulas.theorem_22a(n).value
        oracle = rep_sets.count_reduced(n, "Gp")
        return Record(n, "", closed, oracle, (), closed == oracle)

    return [_timed(build)]


def _records_thm22b(n, opt):
    def build():
        corrected = formulas.theorem_22b(n, "corrected").value
        published = formulas.theorem_22b(n, "paper").value
        oracle = rep_sets.count_reduced(n, "Jp")
        return Record(
            n,
            "",
            corrected,
            oracle,
            (("paper", published),),
            corrected == oracle,
        )

    return [_timed(build)]


def _records_thm31(n, opt):
    def build():
        closed = formulas.theorem_31(n).value
        conv = identities.convolution_sigma3_sigma(n)
        reduced = rep_sets.count_reduced(n, "G")
        return Record(
            n,
            "",
            closed,
            conv,
            (("reduced", reduced),),
            closed == conv == reduced,
        )

    return [_timed(build)]


def _records_definitional(n, opt):
    records = []
    for family in rep_sets.FAMILIES:
        if family in _ODD_FAMILIES and n % 2:
            continue

        def build(family=family):
            definitional = rep_sets.count_definitional(n, family)
            reduced = rep_sets.count_reduced(n, family)
            variant = "corrected" if family in _ODD_FAMILIES else None
            closed = formulas.closed_form(family, n, variant).value
            return Record(
                n,
                family,
                definitional,
                reduced,
                (("closed", closed),),
                definitional == reduced == closed,
            )

        records.append(_timed(build))
    return records


_RUNNERS = {
    "eq12": _records_eq12,
    "thm11a": _records_thm11a,
    "thm11b": _records_thm11b,
    "williams-t11": _records_williams,
    "lemma21a": _records_lemma21a,
    "lemma21b": _records_lemma21b,
    "thm22a": _records_thm22a,
    "thm22b": _records_thm22b,
    "thm31": _records_thm31,
    "definitional": _records_definitional,
}


def _worker(opt: VerifyOptions, n: int) -> list[Record]:
    return _RUNNERS[opt.identity](n, opt)


def run_verify(
    identity: str,
    start: int,
    end: int,
    *,
    k: int | None = None,
    seed: int = 0,
    oracle_depth: int = 60,
    jobs: int = 1,
) -> VerificationReport:
    """Run one identity sweep over [start, end] and return its report.

    Raises ValueError for a domain the identity cannot run on (odd-only
    ranges for even-n identities, start below the identity's minimum).
    """
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    min_n = 1 if identity == "williams-t11" else 2
    if start < min_n:
        raise ValueError(f"{identity} needs n >= {min_n}, got range start {start}")
    if end < start:
        raise ValueError(f"empty range {start}..{end}")

    effective_end = end
    depth: int | None = None
    if identity == "definitional":
        depth = oracle_depth
        effective_end = min(end, oracle_depth)
        if effective_end < start:
            raise ValueError(
                f"oracle depth {oracle_depth} leaves no n in {start}..{end}"
            )

    ns = list(range(start, effective_end + 1))
    if identity in _EVEN_ONLY_IDENTITIES:
        ns = [n for n in ns if n % 2 == 0]
        if not ns:
            raise ValueError(f"{identity} needs even n; none in {start}..{end}")

    opt = VerifyOptions(
        identity=identity,
        k=_DEFAULT_K.get(identity) if k is None else k,
        seed=seed,
        oracle_depth=oracle_depth,
    )
    if opt.k is not None and opt.k < 1:
        raise ValueError(f"k must be a positive integer, got {opt.k}")

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunksize = max(1, len(ns) // (4 * jobs))
            batches = pool.map(partial(_worker, opt), ns, chunksize=chunksize)
            records = [r for batch in batches for r in batch]
    else:
        records = [r for n in ns for r in _worker(opt, n)]

    return VerificationReport(
        identity=identity,
        start=start,
        end=effective_end,
        k=opt.k,
        seed=seed if identity in _F_IDENTITIES else None,
        oracle_depth=depth,
        records=tuple(records),
    )


# ---------------------------------------------------------------------------
# compute / table


def _compute_rows(family: str, ns: list[int], variant: str) -> tuple[list[str], list[list[int]]]:
    if family in _ODD_FAMILIES:
        if variant == "both":
            header = ["n", f"{family}(paper)", f"{family}(corrected)"]
            rows = [
                [
                    n,
                    formulas.closed_form(family, n, "paper").value,
                    formulas.closed_form(family, n, "corrected").value,
                ]
                for n in ns
            ]
        else:
            header = ["n", f"{family}({variant})"]
            rows = [[n, formulas.closed_form(family, n, variant).value] for n in ns]
    else:
        header = ["n", family]
        rows = [[n, formulas.closed_form(family, n).value] for n in ns]
    return header, rows


def _render_grid(header: list[str], rows: list[list], fmt: str, json_obj) -> str:
    if fmt == "json":
        return json.dumps(json_obj, indent=2)
    cells = [[("" if v is None else str(v)) for v in row] for row in rows]
    if fmt == "csv":
        return "\n".join([",".join(header)] + [",".join(row) for row in cells])
    plain_rows = [[c if c else "-" for c in row] for row in cells]
    return "\n".join([" ".join(header)] + [" ".join(row) for row in plain_rows])


def _cmd_compute(args, parser) -> int:
    start, end = _parse_range(args.range, parser, min_start=2)
    ns = list(range(start, end + 1))
    if args.family in _ODD_FAMILIES:
        ns = [n for n in ns if n % 2 == 0]
        if not ns:
            parser.error(
                f"family {args.family} is defined for even n only; "
                f"no even n in {args.range}"
            )
    header, rows = _compute_rows(args.family, ns, args.variant)
    if args.family in _ODD_FAMILIES and args.variant == "both":
        json_rows = [{"n": r[0], "paper": r[1], "corrected": r[2]} for r in rows]
    elif args.family in _ODD_FAMILIES:
        json_rows = [{"n": r[0], args.variant: r[1]} for r in rows]
    else:
        json_rows = [{"n": r[0], "value": r[1]} for r in rows]
    obj = {
        "command": "compute",
        "family": args.family,
        "variant": args.variant if args.family in _ODD_FAMILIES else None,
        "rows": json_rows,
    }
    print(_render_grid(header, rows, args.format, obj))
    return 0


_TABLE_HEADER = [
    "n",
    "Gp",
    "Jp(corrected)",
    "Jp(paper)",
    "G",
    "phi",
    "sigma1",
    "sigma3",
    "sigma5",
]


def _cmd_table(args, parser) -> int:
    start, end = _parse_range(args.range, parser, min_start=2)
    rows = []
    for n in range(start, end + 1):
        f = factorize(n)
        even = n % 2 == 0
        rows.append(
            [
                n,
                formulas.theorem_22a(n).value,
                formulas.theorem_22b(n, "corrected").value if even else None,
                formulas.theorem_22b(n, "paper").value if even else None,
                formulas.theorem_31(n).value,
                euler_phi(f),
                sigma_m(f, 1),
                sigma_m(f, 3),
                sigma_m(f, 5),
            ]
        )
    json_rows = [
        {
            "n": r[0],
            "Gp": r[1],
            "Jp_corrected": r[2],
            "Jp_paper": r[3],
            "G": r[4],
            "phi": r[5],
            "sigma1": r[6],
            "sigma3": r[7],
            "sigma5": r[8],
        }
        for r in rows
    ]
    obj = {"command": "table", "rows": json_rows}
    print(_render_grid(_TABLE_HEADER, rows, args.format, obj))
    return 0


def _cmd_verify(args, parser) -> int:
    min_n = 1 if args.identity == "williams-t11" else 2
    start, end = _parse_range(args.range, parser, min_start=min_n)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        report = run_verify(
            args.identity,
            start,
            end,
            k=args.k,
            seed=args.seed,
            oracle_depth=args.oracle_depth,
            jobs=args.jobs,
        )
    except ValueError as exc:
        parser.error(str(exc))
    print(report.render(args.format))
    return 0 if report.failed == 0 else 1


def _parse_range(text: str, parser, min_start: int) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not m:
        parser.error(f"bad range {text!r}: expected N or A..B")
    start = int(m.group(1))
    end = int(m.group(2)) if m.group(2) else start
    if end < start:
        parser.error(f"bad range {text!r}: end is below start")
    if start < min_start:
        parser.error(f"range must start at {min_start} or above here, got {start}")
    return start, end


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liouville-reps",
        description=(
            "Exact counting of representations a*x + b*y = n: closed "
            "formulas, enumeration oracles, and identity verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser(
        "compute", help="closed-form values of one counting family"
    )
    c.add_argument("family", choices=rep_sets.FAMILIES)
    c.add_argument("range", help="single n or A..B (n >= 2)")
    c.add_argument(
        "--variant",
        choices=("paper", "corrected", "both"),
        default="both",
        help="which Jp/Kp/Lp closed form to print (ignored elsewhere)",
    )
    c.add_argument("--format", choices=FORMATS, default="plain")

    v = sub.add_parser("verify", help="run an identity verification sweep")
    v.add_argument("identity", choices=IDENTITIES)
    v.add_argument("range", help="single n or A..B")
    v.add_argument(
        "--k",
        type=int,
        default=None,
        help="sweep k = 1..K (power-sum exponent or monomial half-degree)",
    )
    v.add_argument(
        "--seed", type=int, default=0, help="seed for the random table functions"
    )
    v.add_argument(
        "--oracle-depth",
        type=int,
        default=60,
        help="cap on n for the definitional tuple-counting oracle",
    )
    v.add_argument(
        "--jobs", type=int, default=1, help="worker processes for the sweep"
    )
    v.add_argument("--format", choices=FORMATS, default="plain")

    t = sub.add_parser(
        "table", help="per-n table of counts and arithmetic functions"
    )
    t.add_argument("range", help="single n or A..B (n >= 2)")
    t.add_argument("--format", choices=FORMATS, default="plain")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return _cmd_compute(args, parser)
    if args.command == "table":
        return _cmd_table(args, parser)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
