"""
Saving and reloading reports
============================

Reports store the flow matrices, so a verdict can be recomputed later
without the source.
"""

import tempfile
from pathlib import Path

from mwpflow.cli_io import analyze_file, load_report, reevaluate, run_cli, save_report

corpus = Path(__file__).resolve().parent.parent / "c_files"
report = analyze_file(corpus / "other" / "loop_then_sum.c")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "report.json"
    save_report(report, path)
    print(path.read_text()[:400], "...")

    again = load_report(path)
    print("round trip equal:", again == report)
    for fr in again.functions:
        print(fr.name, "->", reevaluate(fr).verdict)

# the command line does the same in one step; the exit code is the verdict
code = run_cli([str(corpus / "infinite" / "exponent_1.c")])
print("exit code:", code)
