import itertools

import pytest

from plethtomo.characters import plethysm_schur_table
from plethtomo.coefficients import (
    check_duality,
    dim_plethysm_module,
    general_plethysm,
    jacobi_trudi_coeff,
    kronecker,
    m2_closed_form,
    plethysm_coeff,
    weight_multiplicity,
)
from plethtomo.partitions import partitions_of
from plethtomo.sympoly import decompose_schur, plethysm_poly
from plethtomo.tableaux import dim_weyl


def test_weight_multiplicity_examples():
    assert weight_multiplicity((1,), (3,), (3,), 1) == 1
    assert weight_multiplicity((2,), (2,), (2, 2), 2) == 2
    # frozen from brute enumeration of 2-subsets of cubic monomials in 4 vars
    assert weight_multiplicity((1, 1), (3,), (2, 2, 1, 1), 4) == 5


def test_weight_multiplicity_brute_force_cross_check():
    mons = list(itertools.combinations_with_replacement(range(4), 3))
    for kappa in [(2, 2, 1, 1), (3, 3), (3, 1, 1, 1), (2, 2, 2)]:
        brute = 0
        for a, b in itertools.combinations(mons, 2):
            w = [0] * 4
            for v in a + b:
                w[v] += 1
            if tuple(w) == kappa + (0,) * (4 - len(kappa)):
                brute += 1
        assert weight_multiplicity((1, 1), (3,), kappa, 4) == brute


def test_weight_multiplicity_symmetric_in_kappa():
    assert weight_multiplicity((2,), (2,), (1, 2, 1), 3) == weight_multiplicity((2,), (2,), (2, 1, 1), 3)


def test_weight_multiplicity_extra_variables_do_not_matter():
    # guard for the fixed variable-count choice: appending variables (and
    # zero entries) never changes a weight multiplicity
    assert weight_multiplicity((2,), (3,), (4, 2), 2) == weight_multiplicity((2,), (3,), (4, 2, 0, 0), 7)
    assert weight_multiplicity((1, 1), (3,), (3, 3), 2) == weight_multiplicity((1, 1), (3,), (3, 3), 9)


def test_weight_multiplicity_rejects_bad_sizes():
    with pytest.raises(ValueError):
        weight_multiplicity((2,), (2,), (3,), 1)
    with pytest.raises(ValueError):
        weight_multiplicity((2,), (2,), (2, 1, 1), 2)


JACOBI_TRUDI_EXAMPLES = [
    (((4,), (2,), (2,)), 1),
    (((3, 1), (2,), (2,)), 0),
    (((4, 2), (2,), (3,)), 1),
    (((2, 2), (2,), (2,)), 1),
    (((6,), (2,), (3,)), 1),
    (((5, 1), (2,), (3,)), 0),
]


@pytest.mark.parametrize("args,expected", JACOBI_TRUDI_EXAMPLES)
def test_jacobi_trudi_examples(args, expected):
    assert jacobi_trudi_coeff(*args) == expected


def test_jacobi_trudi_matches_peeling_small():
    for mu in partitions_of(2):
        for nu in partitions_of(3):
            table = dict(decompose_schur(plethysm_poly(mu, nu, 6)))
            for lam in partitions_of(6):
                assert jacobi_trudi_coeff(lam, mu, nu) == table.get(lam, 0)


PLETHYSM_COEFF_EXAMPLES = [
    (((2, 1), 1, 3, "b"), 0),
    (((3,), 1, 3, "b"), 1),
    (((2, 2, 2), 2, 3, "a"), 0),
    (((6,), 2, 3, "a"), 1),
    (((4, 2), 2, 3, "a"), 1),
    (((5, 1), 2, 3, "b"), 1),
    (((3, 3), 2, 3, "b"), 1),
]


@pytest.mark.parametrize("args,expected", PLETHYSM_COEFF_EXAMPLES)
def test_plethysm_coeff_examples(args, expected):
    assert plethysm_coeff(*args).value == expected


def test_plethysm_coeff_wrong_size_is_zero():
    res = plethysm_coeff((3, 1), 2, 3, "a")
    assert res.value == 0
    assert res.method == "degree-mismatch"


GENERAL_PLETHYSM_EXAMPLES = [
    (((4,), (2,), (2,)), 1),
    (((2, 1), (1,), (2, 1)), 1),
    (((3, 1), (1, 1), (2,)), 1),
]


@pytest.mark.parametrize("args,expected", GENERAL_PLETHYSM_EXAMPLES)
def test_general_plethysm_examples(args, expected):
    assert general_plethysm(*args).value == expected


def test_general_plethysm_dispatch_routes():
    tall = (1,) * 12
    res = general_plethysm(tall, (4,), (3,))
    assert res.method == "monomial-peel"
    short = general_plethysm((12,), (4,), (3,))
    assert short.method == "jacobi-trudi"
    assert res.value == plethysm_schur_table((4,), (3,)).get(tall, 0)


def test_m2_closed_form_examples():
    assert m2_closed_form(2, "a") == {(4,), (2, 2)}
    assert m2_closed_form(1, "b") == {(2,)}
    assert m2_closed_form(3, "b") == {(3, 3), (4, 1, 1)}


def test_m2_closed_form_matches_oracle():
    for n in range(1, 5):
        for variant, mu in (("a", (n,)), ("b", (1,) * n)):
            support = m2_closed_form(n, variant)
            for lam in partitions_of(2 * n):
                want = 1 if lam in support else 0
                assert general_plethysm(lam, mu, (2,)).value == want


DUALITY_CASES = [(2, 3), (2, 2), (3, 3), (3, 2)]


@pytest.mark.parametrize("n,m", DUALITY_CASES)
def test_duality(n, m):
    ok, report = check_duality(n, m)
    assert ok, report


def test_dimension_conservation():
    for mu, nu in [((2,), (3,)), ((1, 1), (3,)), ((3,), (2,)), ((2, 1), (2,))]:
        table = plethysm_schur_table(mu, nu)
        for k in (2, 3, 4):
            lhs = sum(mult * dim_weyl(lam, k) for lam, mult in table.items())
            assert lhs == dim_plethysm_module(mu, nu, k)


def test_kronecker_result_wrapper():
    res = kronecker((2, 1), (2, 1), (1, 1, 1))
    assert res.value == 1
    assert res.method == "character-sum"
    assert int(res) == 1
