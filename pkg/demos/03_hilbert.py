"""Hilbert functions of the quotient rings, by counting standard monomials."""

# %%
from gradedq import catalog
from gradedq.groebner import Ideal
from gradedq.hilbert import dims_equal, hilbert_function, rank_oracle

point = hilbert_function(Ideal.from_strings(catalog.RMH, ["m*h"]), bound=12)
disc = hilbert_function(Ideal.from_strings(catalog.RMH, ["m^2+h^2", "m*h"]), bound=12)
main = hilbert_function(catalog.ideal_i2(), catalog.LEX_MHNT, bound=12)
print("Q[m,h]/(m*h)         :", point)
print("Q[m,h]/(m^2+h^2, m*h):", disc)
print("R/I2                 :", main)

# %% The same numbers from plain linear algebra, no Groebner basis involved.
print("rank oracle for R/I2 :", ",".join(str(rank_oracle(catalog.ideal_i2(), d)) for d in range(13)))

# %% I1 and I2 share a leading-term ideal, hence a Hilbert function.
h1 = hilbert_function(catalog.ideal_i1(), catalog.LEX_MHNT, 40)
h2 = hilbert_function(catalog.ideal_i2(), catalog.LEX_MHNT, 40)
print("dims equal through degree 40:", dims_equal(h1, h2))
print(main.table("R/I2"))
