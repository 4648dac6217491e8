"""The C2 x C2 sign action on R and the fixed points of R/I2."""

# %%
from gradedq import catalog
from gradedq.invariants import fixed_quotient_dims, invariant_monomials, reynolds, verify_fixed_point_lemma
from gradedq.polyring import format_monomial

G = catalog.mapping_class_action()
R = catalog.R
print("group order:", G.order)
print("invariant monomials of degree 4:",
      ", ".join(format_monomial(m, R) for m in invariant_monomials(G, 4)))

# %% Averaging over the group kills anything with an odd number of m/h or n/t factors.
for text in ["m^2", "m*n", "m*h + m*n"]:
    print(f"reynolds({text}) = {reynolds(R.poly(text), G)}")

# %% dim (R/I2)^G, degree by degree.
fixed = fixed_quotient_dims(catalog.ideal_i2(), G, catalog.LEX_MHNT, 24)
print("(R/I2)^G:", fixed)

# %% Taking invariants commutes with the quotient: (R/I)^G has the same dims as R^G / I^G.
rep = verify_fixed_point_lemma(catalog.ideal_i2(), G, catalog.LEX_MHNT, 40)
print("lemma holds through degree 40:", rep.holds)

# %% The subring presentation with a, b, c, d standing for m^2, h^2, n^2, t^2.
from gradedq.hilbert import hilbert_function
print("Q[a,b,c,d]/(ab, cd, a+b-c-d):", hilbert_function(catalog.squares_presentation(), bound=24))
