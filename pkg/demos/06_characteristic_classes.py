"""Maps between cohomology rings of classifying spaces."""

# %%
from gradedq.charrings import catalogue, check_well_defined, get_map

for m in catalogue().values():
    ok, _ = check_well_defined(m)
    print(("ok  " if ok else "BAD ") + m.describe())

# %% Pull classes back along BSO(2) x BSO(2) -> BSO(4).
i_star = get_map("i_star")
for text in ["p1", "e", "p1^2 - 2*e^2"]:
    print(f"i*({text}) = {i_star(i_star.source.ring.poly(text))}")

# %% p1^2 restricted to the point stabiliser, reduced modulo m*h.
t = get_map("t_pt_star")
print("T_pt*(p1^2) =", t(t.source.ring.poly("p1^2")))
