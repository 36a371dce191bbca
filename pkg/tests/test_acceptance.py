"""Acceptance suite: every criterion at its stated scale and budget.

Each test prints one pass/fail line (visible with -s or on failure) and
asserts both the check outcome and the runtime ceiling.
"""

from hilbdiag import verify


def _assert_check(result, budget):
    print(result.line())
    assert result.passed, result.details
    assert result.elapsed < budget, "took %.1fs, budget %.0fs" % (
        result.elapsed, budget)


def test_criterion_1_borel_ideal():
    # generator routes, degrees, |U| and shellings for 2 <= d,n <= 5
    _assert_check(verify.check_borel_ideal(), 10)


def test_criterion_2_hilbert_data():
    # Hilbert values of Z up to |u| <= 6 at d,n <= 4, and the specialized
    # K-polynomial identity
    _assert_check(verify.check_hilbert_data(), 30)


def test_criterion_3_squarefree_degenerations():
    # 100 seeded generic trials on the {2,3} grid sizes, plus triangular
    # trials that must reproduce the Borel-fixed ideal
    _assert_check(verify.check_squarefree_degenerations(), 300)


def test_criterion_4_chain_tangent():
    # (d^2-1)(n-1) and the explicit basis at five grid sizes
    _assert_check(verify.check_chain_tangent(), 60)


def test_criterion_5_tree_space():
    # counts 4/32/400/6912, tangent formula vs linear algebra for every
    # tree up to n=5, smoothness, and the 24 swap edges at n=3
    _assert_check(verify.check_tree_space(), 300)


def test_criterion_6_h33_census():
    # 13824 complexes, 16 classes, published class data, series membership
    _assert_check(verify.check_h33_census(), 900)


def test_criterion_7_component_reps():
    # representative ideals of the extra components match the target
    # Hilbert function for all |u| <= 4
    _assert_check(verify.check_component_reps(), 300)


def test_criterion_8_deligne_routes():
    # saturation route equals weight route on seeded diagonal families;
    # d=2 fibers are tree ideals
    _assert_check(verify.check_deligne_routes(), 300)


def test_criterion_9_collineations():
    # Plucker classification counts, rank bounds, and the printed cubic
    # on all 32 tree coefficient vectors
    _assert_check(verify.check_collineations(), 60)
