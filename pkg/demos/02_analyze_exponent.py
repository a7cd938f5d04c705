"""
Spotting exponential growth
===========================

Doubling a variable inside a loop makes it exponential in the loop count.
The analysis finds that no derivation keeps ``r`` polynomially bounded.
"""

from mwpflow.analysis import analyze
from mwpflow.frontend import parse

source = """
int doubling(int n) {
    int r = 1;
    while (n > 0) {
        r = r + r;
        n = n - 1;
    }
    return r;
}
"""

(result,) = analyze(parse(source, "doubling.c")).values()

# rows are inputs, columns are outputs
print(result.relation)

# no choice survives, and r is named as the culprit
print("passing choices:", result.passing_choices.count())
print("unbounded:", result.infinite_vars)

# counting up by one instead stays polynomial under one choice per point
linear = source.replace("r = r + r;", "r = r + 1;")
(result,) = analyze(parse(linear, "linear.c")).values()
print("with r = r + 1:", sorted(result.passing_choices), "-", result.passing_choices.count(), "of", 3 ** result.num_indices, "choices pass")
