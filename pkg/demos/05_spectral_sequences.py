"""The four spectral sequences, page by page."""

# %%
from gradedq import scenarios

for name in scenarios.BUILTIN:
    sc = scenarios.get(name)
    res = sc.run(40)
    print(f"== {sc.title}")
    print(f"   pages computed: E_2 .. E_{res.pages[-1].r}; collapse at E_{res.collapse_page}")
    print(f"   E_inf totals: {res.totals.truncate(12)} ...")

# %% S^3 over BSO(2) x BSO(2): d4 of the fundamental class is e1*e2.
res = scenarios.get("point-over-torus").run(20)
print(res.pages[2].chart(10))
print(res.pages[-1].chart(10))

# %% The disc over BSO(4) has contractible total space: only E_inf^{0,0} survives.
res = scenarios.get("disc-over-bso4").run(20)
print(res.e_infinity.chart(12))

# %% Euler characteristic of the computed box never changes from page to page.
print([p.euler_characteristic() for p in res.pages])
