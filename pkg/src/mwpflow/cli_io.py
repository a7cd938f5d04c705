"""Command-line entry point and JSON analysis reports."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .analysis import AnalysisResult, analyze, evaluate
from .choice_algebra import Delta, Monomial, Polynomial
from .delta_graph import ChoiceSet
from .frontend import FrontendError, parse
from .matrix import FlowMatrix
from .relation import Relation
from .semiring import Coefficient

SCHEMA_VERSION = 1
EXPANSION_CAP = 10**6

EXIT_OK, EXIT_INFINITE, EXIT_ERROR = 0, 1, 2


class ReportError(OSError):
    pass


# ------------------------------------------------------------- serialization


def monomial_to_json(m: Monomial) -> dict:
    return {"scalar": m.scalar.symbol, "deltas": [[d.alternative, d.index] for d in m.deltas]}


def monomial_from_json(data: dict) -> Monomial:
    return Monomial(
        Coefficient.from_symbol(data["scalar"]),
        tuple(Delta(alt, idx) for alt, idx in data["deltas"]),
    )


def polynomial_to_json(p: Polynomial) -> list:
    return [monomial_to_json(m) for m in p]


def polynomial_from_json(data: list) -> Polynomial:
    return Polynomial(monomial_from_json(m) for m in data)


def relation_to_json(r: Relation) -> dict:
    return {
        "variables": list(r.variables),
        "matrix": [[polynomial_to_json(p) for p in row] for row in r.matrix.rows],
    }


def relation_from_json(data: dict) -> Relation:
    rows = [[polynomial_from_json(p) for p in row] for row in data["matrix"]]
    return Relation(tuple(data["variables"]), FlowMatrix(rows))


# -------------------------------------------------------------------- report


@dataclass
class FunctionReport:
    name: str
    relation: Relation | None = None
    num_indices: int = 0
    infinite_vars: list[str] = field(default_factory=list)
    choices: ChoiceSet | None = None
    error: str | None = None

    @property
    def variables(self) -> list[str]:
        return list(self.relation.variables) if self.relation else []

    @property
    def verdict(self) -> str | None:
        if self.error is not None:
            return "error"
        if self.choices is None:
            return None
        return "polynomial" if self.choices else "infinite"

    @classmethod
    def from_result(cls, result: AnalysisResult | FrontendError, name: str) -> FunctionReport:
        if isinstance(result, FrontendError):
            return cls(name, error=result.diagnostic())
        return cls(
            name,
            result.relation,
            result.num_indices,
            list(result.infinite_vars),
            result.passing_choices,
        )

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "verdict": self.verdict}
        if self.error is not None:
            out["error"] = self.error
            return out
        out["variables"] = self.variables
        out["num_indices"] = self.num_indices
        out["infinite_vars"] = list(self.infinite_vars)
        out["relation"] = relation_to_json(self.relation)
        if self.choices is None:
            out["choices"] = None
        else:
            out["choices"] = {
                "count": self.choices.count(),
                "fragments": self.choices.to_list(),
            }
        return out

    @classmethod
    def from_json(cls, data: dict) -> FunctionReport:
        if "error" in data:
            return cls(data["name"], error=data["error"])
        choices = data["choices"]
        return cls(
            data["name"],
            relation_from_json(data["relation"]),
            data["num_indices"],
            list(data["infinite_vars"]),
            None if choices is None
            else ChoiceSet.from_list(data["num_indices"], choices["fragments"]),
        )


@dataclass
class Report:
    file: str
    functions: list[FunctionReport]
    tool_version: str = __version__
    wall_time: float | None = None

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "file": self.file,
            "wall_time": self.wall_time,
            "functions": [f.to_json() for f in self.functions],
        }

    @classmethod
    def from_json(cls, data: dict) -> Report:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema_version')!r}")
        return cls(
            data["file"],
            [FunctionReport.from_json(f) for f in data["functions"]],
            data["tool_version"],
            data["wall_time"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def save_report(report: Report, path) -> None:
    try:
        Path(path).write_text(report.dumps(), encoding="utf-8")
    except OSError as exc:
        raise ReportError(f"{path}: cannot write report: {exc.strerror or exc}") from exc


def load_report(path) -> Report:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ReportError(f"{path}: cannot read report: {exc.strerror or exc}") from exc
    return Report.from_json(json.loads(text))


def reevaluate(fr: FunctionReport) -> FunctionReport:
    """Recompute the verdict of a (possibly reloaded) function report."""
    passing, unbounded = evaluate(fr.relation, fr.num_indices)
    return FunctionReport(fr.name, fr.relation, fr.num_indices, unbounded, passing)


def analyze_file(path, run_eval: bool = True) -> Report:
    """Parse and analyze a C file; raises FrontendError on parse failures."""
    path = str(path)
    source = Path(path).read_text(encoding="utf-8")
    program = parse(source, path)
    results = analyze(program, run_eval=run_eval)
    return Report(path, [FunctionReport.from_result(r, n) for n, r in results.items()])


def exit_code(report: Report) -> int:
    if any(f.error for f in report.functions):
        return EXIT_ERROR
    if any(f.verdict == "infinite" for f in report.functions):
        return EXIT_INFINITE
    return EXIT_OK


# ----------------------------------------------------------------------- CLI


def _summary(fr: FunctionReport, args, out) -> None:
    if fr.error:
        print(f"  {fr.name}: error", file=out)
        return
    head = (f"  {fr.name}: {len(fr.variables)} variables, "
            f"{fr.num_indices} derivation points")
    if fr.choices is None:
        print(f"{head}, not evaluated", file=out)
    else:
        total = 3 ** fr.num_indices
        print(f"{head}, {fr.verdict} ({fr.choices.count()}/{total} choices pass)", file=out)
        if fr.infinite_vars:
            print(f"    unbounded: {', '.join(fr.infinite_vars)}", file=out)
    if args.print_matrix:
        for line in str(fr.relation).splitlines():
            print(f"    {line}", file=out)
    if fr.choices is not None and fr.choices:
        if args.fin and fr.choices.count() <= EXPANSION_CAP:
            for choice in fr.choices.expand():
                print("    choice " + " ".join(map(str, choice)), file=out)
        else:
            if args.fin:
                print(f"    more than {EXPANSION_CAP} passing choices; compact form:", file=out)
            for frag in fr.choices.to_list():
                text = ", ".join(f"{k}:{''.join(map(str, alts))}" for k, alts in frag)
                print(f"    fragment {{{text or 'any'}}}", file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mwpflow",
        description="Certify polynomial data-size bounds of C functions.",
    )
    p.add_argument("file", help="C source file")
    p.add_argument("--out", metavar="PATH", help="write the JSON report to PATH")
    p.add_argument("--no-eval", action="store_true", help="compute relations only")
    p.add_argument("--fin", action="store_true", help="list every passing choice")
    p.add_argument("--print-matrix", action="store_true", help="print flow matrices")
    p.add_argument("--time", action="store_true", help="report analysis wall time")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK

    start = time.monotonic()
    try:
        report = analyze_file(args.file, run_eval=not args.no_eval)
    except FrontendError as err:
        print(err.diagnostic(), file=stderr)
        return EXIT_ERROR
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{args.file}: error: cannot read file: {exc}", file=stderr)
        return EXIT_ERROR
    elapsed = time.monotonic() - start
    if args.time:
        report.wall_time = round(elapsed, 6)

    print(report.file, file=stdout)
    for fr in report.functions:
        if fr.error:
            print(fr.error, file=stderr)
        _summary(fr, args, stdout)
    if args.time:
        print(f"analysis time: {elapsed:.3f} s", file=stdout)
    if args.out:
        try:
            save_report(report, args.out)
        except ReportError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_ERROR
    return exit_code(report)


def main() -> None:
    sys.exit(run_cli())
