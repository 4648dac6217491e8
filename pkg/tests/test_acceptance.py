"""Acceptance criteria 1-9, each with its time limit.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` for
one PASS/FAIL line per criterion.
"""

import io
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gradedq import catalog, scenarios  # noqa: E402
from gradedq.cli import main as cli_main  # noqa: E402
from gradedq.groebner import buchberger, leading_term_ideal  # noqa: E402
from gradedq.hilbert import GradedDims, dims_equal, hilbert_function  # noqa: E402
from gradedq.invariants import (  # noqa: E402
    fixed_quotient_dims,
    invariant_monomials,
    verify_fixed_point_lemma,
)
from gradedq.polyring import format_monomial  # noqa: E402
from gradedq.specseq import check_d_squared  # noqa: E402

D = 40
LEX = catalog.LEX_MHNT


def _even_table(bound, f):
    return GradedDims(bound, tuple(f(d) if d % 2 == 0 else 0 for d in range(bound + 1)))


POINT = _even_table(D, lambda d: 1 if d == 0 else 2)
DISC = GradedDims.from_mapping(D, {0: 1, 2: 2, 4: 1})
MAIN = _even_table(D, lambda d: {0: 1, 2: 4, 4: 7}.get(d, 8))
FIXED = GradedDims.from_mapping(D, {d: {0: 1, 4: 3}.get(d, 4) for d in range(0, D + 1, 4)})


def criterion_1():
    dims = hilbert_function(catalog.point_ring().ideal, bound=D)
    return dims == POINT, f"dims {dims}"


def criterion_2():
    dims = hilbert_function(catalog.disc_ring().ideal, bound=D)
    return dims == DISC, f"dims {dims}"


def criterion_3():
    lts = []
    for ideal in (catalog.ideal_i1(), catalog.ideal_i2()):
        gb = buchberger(ideal, LEX)
        lts.append({format_monomial(m, catalog.R) for m in leading_term_ideal(gb)})
    want = {"m*h", "n*t", "m^2", "h^3"}
    return lts[0] == lts[1] == want, f"LT(I1) = {sorted(lts[0])}, LT(I2) = {sorted(lts[1])}"


def criterion_4():
    h2 = hilbert_function(catalog.ideal_i2(), LEX, D)
    h1 = hilbert_function(catalog.ideal_i1(), LEX, D)
    eq, where = dims_equal(h1, h2)
    return h2 == MAIN and eq, f"R/I2 {h2}; I1 vs I2 mismatch at {where}"


def criterion_5():
    res = {k: scenarios.get(k).run(D) for k in ("A", "B", "C", "D")}
    a, b, c, d = (res[k] for k in "ABCD")
    ok_a = a.totals == POINT and all(q == 0 for (_, q) in a.e_infinity_dims())
    ok_b = b.totals == GradedDims.from_mapping(D, {0: 1})
    ok_c = c.totals == DISC and set(c.e_infinity_dims()) == {(0, 0), (2, 0), (4, 0)}
    ok_d = d.collapse_page == 2 and d.totals == MAIN
    return ok_a and ok_b and ok_c and ok_d, f"A {ok_a}, B {ok_b}, C {ok_c}, D {ok_d}"


def criterion_6():
    G = catalog.mapping_class_action()
    inv = {format_monomial(m, catalog.R) for m in invariant_monomials(G, 4)}
    ok_inv = inv == {"m^2", "m*h", "h^2", "n^2", "n*t", "t^2"}
    fixed = fixed_quotient_dims(catalog.ideal_i2(), G, LEX, D)
    rep = verify_fixed_point_lemma(catalog.ideal_i2(), G, LEX, D, strict=False)
    return ok_inv and fixed == FIXED and rep.holds, f"fixed dims {fixed}; lemma holds {rep.holds}"


def criterion_7():
    q = catalog.main_ring()
    m2, h2 = catalog.R.poly("m^2"), catalog.R.poly("h^2")
    ok = not q.is_zero(m2) and not q.is_zero(h2) and q.is_zero(m2 * h2)
    return ok, f"NF(m^2) = {q.reduce(m2)}, NF(h^2) = {q.reduce(h2)}, NF(m^2 h^2) = {q.reduce(m2 * h2)}"


def criterion_8():
    import test_groebner
    import test_hilbert
    import test_invariants

    test_groebner.test_buchberger_criterion()
    test_groebner.test_buchberger_criterion_catalog(catalog.ideal_i1(), catalog.ideal_i2())
    test_groebner.test_normal_form_idempotent()
    test_hilbert.test_oracle_equivalence()
    test_invariants.test_reynolds_projector()
    for name in scenarios.BUILTIN:
        pages = scenarios.get(name).run(D).pages
        for page in pages:
            check_d_squared(page)
        for old, new in zip(pages, pages[1:]):
            assert all(new.dim(*k) <= old.dim(*k) for k in old.entries)
    return True, "all property suites passed"


def criterion_9():
    outs, codes, times = [], [], []
    for _ in range(2):
        buf = io.StringIO()
        t0 = time.perf_counter()
        codes.append(cli_main(["verify", "paper"], buf, io.StringIO()))
        times.append(time.perf_counter() - t0)
        outs.append(buf.getvalue().encode())
    ok = codes == [0, 0] and outs[0] == outs[1] and max(times) < 10
    return ok, f"exit codes {codes}, identical {outs[0] == outs[1]}, runs {times[0]:.2f}s/{times[1]:.2f}s"


CRITERIA = [
    (1, "Hilbert(Q[m,h]/(m*h))", criterion_1, 0.1),
    (2, "Hilbert(Q[m,h]/(m^2+h^2, m*h))", criterion_2, 0.1),
    (3, "LT(I1) = LT(I2)", criterion_3, 0.1),
    (4, "Hilbert(R/I2) and dims_equal(I1, I2)", criterion_4, 0.5),
    (5, "spectral scenarios A-D", criterion_5, 2.0),
    (6, "invariants and the fixed-point lemma", criterion_6, 1.0),
    (7, "zero divisors in R/I2", criterion_7, 0.1),
    (8, "property suites", criterion_8, 30.0),
    (9, "verify paper, two runs of < 10 s each", criterion_9, 20.0),
]


def evaluate(criterion):
    num, title, fn, limit = criterion
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except AssertionError as exc:
        ok, detail = False, f"assertion failed: {exc}"
    elapsed = time.perf_counter() - t0
    passed = ok and elapsed < limit
    line = (f"criterion {num}: {'PASS' if passed else 'FAIL'}  {title}  "
            f"[{elapsed:.3f}s, limit {limit:g}s]  {detail}")
    return passed, line


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    passed, line = evaluate(criterion)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
