"""Brute-force reference computations, independent of the code under test.

Coefficients are plain ints 0..4 (0, m, w, p, i) and polynomials are read
straight off their monomials' fields, so nothing here goes through the
package's own evaluation or arithmetic.
"""

from itertools import product

from mwpflow.frontend import Assign, BinOp, If, Skip, Var, While

Z, M, W, P, I = range(5)


def s_join(a, b):
    return max(a, b)


def s_times(a, b):
    return 0 if a == 0 or b == 0 else max(a, b)


def assignments(n):
    return list(product(range(3), repeat=n))


def eval_mono(mono, sigma):
    if all(sigma[d.index] == d.alternative for d in mono.deltas):
        return int(mono.scalar)
    return Z


def eval_poly(poly, sigma):
    return max((eval_mono(m, sigma) for m in poly.monomials), default=Z)


def eval_matrix(matrix, sigma):
    return [[eval_poly(p, sigma) for p in row] for row in matrix.rows]


def exhaustive_passing(relation, n):
    return {
        sigma
        for sigma in assignments(n)
        if all(v != I for row in eval_matrix(relation.matrix, sigma) for v in row)
    }


def exhaustive_infinite_vars(relation, n):
    out = []
    for j, name in enumerate(relation.variables):
        if all(
            any(eval_poly(row[j], s) == I for row in relation.matrix.rows)
            for s in assignments(n)
        ):
            out.append(name)
    return out


def forbidden_by_guards(guards, n):
    """Assignments matching at least one guard (a list of (alt, index))."""
    return {
        s for s in assignments(n)
        if any(all(s[idx] == alt for alt, idx in g) for g in guards)
    }


# ---- single-derivation calculus on plain coefficient matrices

_TABLE = {0: (W, W), 1: (M, P), 2: (P, M)}


def _ident(n):
    return [[M if i == j else Z for j in range(n)] for i in range(n)]


def _mul(a, b):
    n = len(a)
    return [
        [max((s_times(a[i][k], b[k][j]) for k in range(n)), default=Z) for j in range(n)]
        for i in range(n)
    ]


def _add(a, b):
    return [[max(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def star(a):
    n = len(a)
    s = _add(_ident(n), a)
    while True:
        nxt = _add(s, _mul(s, a))
        if nxt == s:
            return s
        s = nxt


class _Counter:
    def __init__(self):
        self.k = 0


def _stmts(stmts, variables, sigma, counter):
    n = len(variables)
    pos = {v: i for i, v in enumerate(variables)}
    acc = _ident(n)
    for s in stmts:
        if isinstance(s, Skip):
            continue
        if isinstance(s, Assign):
            step = _ident(n)
            t = pos[s.target]
            col = [Z] * n
            e = s.expr
            if isinstance(e, Var):
                col[pos[e.name]] = M
            elif isinstance(e, BinOp):
                sides = [(k, a) for k, a in enumerate((e.left, e.right)) if isinstance(a, Var)]
                if sides:
                    alt = sigma[counter.k]
                    counter.k += 1
                    for side, a in sides:
                        col[pos[a.name]] = max(col[pos[a.name]], _TABLE[alt][side])
            for i in range(n):
                step[i][t] = col[i]
        elif isinstance(s, If):
            step = _add(
                _stmts(s.then, variables, sigma, counter),
                _stmts(s.orelse, variables, sigma, counter),
            )
        elif isinstance(s, While):
            c = star(_stmts(s.body, variables, sigma, counter))
            bad = [
                i for i in range(n)
                if c[i][i] >= W or any(c[j][i] >= P for j in range(n))
            ]
            for i in bad:
                for j in range(n):
                    c[j][i] = I
            step = c
        acc = _mul(acc, step)
    return acc


def derivation_matrix(function, variables, sigma):
    """Coefficient matrix of ``function`` for the single derivation ``sigma``."""
    return _stmts(function.body, variables, sigma, _Counter())
