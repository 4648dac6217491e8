"""Polynomials in Q[m, h, n, t] with every variable in degree 2."""

# %%
from fractions import Fraction

from gradedq import catalog
from gradedq.polyring import format_poly, substitute

R = catalog.R
p = R.poly("m^2 + h^2 - n^2 - t^2")
print("relation:", p, "| homogeneous of degree", p.degree())

# %% Arithmetic is exact; coefficients are Fractions.
q = R.poly("3/2*m*h") * R.poly("m - 2/3*h")
print("product:", q)
print("coefficient of m^2*h:", q.coeff((2, 1, 0, 0)), type(q.coeff((2, 1, 0, 0))).__name__)

# %% Greek names are accepted on input and printed in ASCII.
print(R.poly("mu*eta + nu^2") == R.poly("m*h + n^2"))

# %% The sign flip (m, h) -> (-m, -h) fixes m*h and negates m*n.
c = catalog.c_minus_plus()
for text in ["m*h", "m*n", "m^2 + m*t"]:
    print(f"{text:>10} -> {format_poly(substitute(R.poly(text), c))}")
