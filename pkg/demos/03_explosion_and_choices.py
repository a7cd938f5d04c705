"""
Many derivations, compactly
===========================

Twenty binary assignments give 3^20 derivations.  The passing set is kept
as a short list of product fragments and never enumerated.
"""

import time

from mwpflow.analysis import analyze
from mwpflow.frontend import parse

lines = ["x = y + z;", "y = x + z;", "z = x + y;"]
body = "\n".join("    " + lines[k % 3] for k in range(20))
source = f"int explode(int x, int y, int z) {{\n{body}\n    return x;\n}}\n"

start = time.perf_counter()
(result,) = analyze(parse(source, "explode.c")).values()
elapsed = time.perf_counter() - start

print(f"{result.num_indices} derivation points analyzed in {elapsed:.2f} s")
print("passing choices:", result.passing_choices.count())
print("fragments:", result.passing_choices.to_list())

# a loop where one alternative pushes the counter to p
source = """
int count(int i, int n) {
    while (i < n) {
        i = i + 1;
    }
    return i;
}
"""
(result,) = analyze(parse(source, "count.c")).values()
print("loop passing choices:", sorted(result.passing_choices))
