"""Two ideals with the same leading-term ideal under lex m > h > n > t."""

# %%
from gradedq import catalog
from gradedq.groebner import buchberger, buchberger_criterion_holds, format_lt_ideal, leading_term_ideal

order = catalog.LEX_MHNT
for name, ideal in [("I1", catalog.ideal_i1()), ("I2", catalog.ideal_i2())]:
    gb = buchberger(ideal, order)
    print(f"{name}: generators {', '.join(map(str, ideal.generators))}")
    for g in gb.elements:
        print("   ", g)
    print("    LT =", format_lt_ideal(leading_term_ideal(gb), ideal.ring))
    print("    every S-polynomial reduces to 0:", buchberger_criterion_holds(gb))

# %% The one S-pair that matters: S(m*h, m^2+h^2-n^2-t^2) gives h^3 - h*n^2 - h*t^2.
gb = buchberger(catalog.ideal_i2(), order)
print(gb.stats)

# %% Normal forms: m^2 is not zero in R/I2, it rewrites to -h^2 + n^2 + t^2.
print("NF(m^2) =", gb.reduce(catalog.R.poly("m^2")))
