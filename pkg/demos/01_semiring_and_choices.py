"""
Coefficients, choices and polynomials
=====================================

A flow coefficient says how a variable's size can influence another one:
``0`` no influence, ``m`` at most linearly, ``w`` weakly polynomially,
``p`` polynomially, ``i`` without a polynomial bound.
"""

from mwpflow.choice_algebra import Delta, Monomial, Polynomial, poly_eval
from mwpflow.semiring import INF, M, P, W, ZERO, join, times

# join takes the worse of two flows, times composes two flows
print("join(m, p) =", join(M, P))
print("times(w, p) =", times(W, P))

# a missing flow stays missing, even when composed with an unbounded one
print("times(0, i) =", times(ZERO, INF))

# Each binary operation offers three derivation alternatives.  A monomial
# records a coefficient together with the choices it depends on.
left = Polynomial([
    Monomial(W, (Delta(0, 0),)),
    Monomial(M, (Delta(1, 0),)),
    Monomial(P, (Delta(2, 0),)),
])
print("y flows into x as", left)

# evaluating under a choice picks the matching monomials
for alt in range(3):
    print(f"  under alternative {alt}: {poly_eval(left, [alt])}")

# products merge the guards; incompatible choices cancel out
right = Polynomial([Monomial(P, (Delta(1, 0),)), Monomial(W, (Delta(0, 1),))])
print("product:", left * right)
