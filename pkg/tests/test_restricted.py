import itertools

import pytest

from plethtomo.coefficients import general_plethysm
from plethtomo.partitions import add, is_partition, partitions_of
from plethtomo.restricted import (
    _layer_vectors,
    cone_alphabet,
    count_cone_ssyt,
    enumerate_cone_ssyt,
    psi_decompose,
    psi_membership,
    psi_splits,
    pyramid_size,
    tableau_layers_check,
)
from plethtomo.tomography import complete_pyramid, count_pyramids, sum_marginal


def test_pyramid_size():
    assert [pyramid_size(r, "closed") for r in range(-1, 6)] == [0, 1, 2, 4, 7, 11, 16]
    assert [pyramid_size(r, "open") for r in range(-1, 7)] == [0, 0, 0, 0, 1, 2, 4, 7]
    for kind in ("open", "closed"):
        for r in range(8):
            assert pyramid_size(r, kind) == len(complete_pyramid(r, kind))


DECOMPOSE_CASES = [
    # (mu, variant, thresholds, pyramid_parts, layer_parts)
    ((1,), "sym", (1,), (1,), (0,)),
    ((1, 1), "sym", (2,), (2,), (0,)),
    ((1, 1, 1), "sym", (2,), (2,), (1,)),
    ((2, 2), "sym", (2, 2), (2, 2), (0, 0)),
    ((2, 1), "sym", (2, 1), (2, 1), (0, 0)),
    ((1,), "wedge", (4,), (1,), (0,)),
    ((1, 1, 1), "wedge", (5,), (2,), (1,)),
]


@pytest.mark.parametrize("mu,variant,thresholds,pyr,layer", DECOMPOSE_CASES)
def test_psi_decompose(mu, variant, thresholds, pyr, layer):
    d = psi_decompose(mu, variant)
    assert d.thresholds == thresholds
    assert d.pyramid_parts == pyr
    assert d.layer_parts == layer
    # the split reconstructs the shape size
    assert sum(d.pyramid_parts) + sum(d.layer_parts) == sum(mu)
    # minimality: each column fits strictly below its threshold's pyramid
    for n_j, r_j in zip(d.column_heights, d.thresholds):
        assert n_j < pyramid_size(r_j, d.kind)
        assert n_j >= pyramid_size(r_j - 1, d.kind)


def test_psi_membership_phi_case():
    lam = add(sum_marginal(complete_pyramid(1, "closed")), (2, 0, 1))
    assert psi_membership((1, 1, 1), (3,), lam)
    # wrong layer coordinate sum
    assert not psi_membership((1, 1, 1), (3,), add(sum_marginal(complete_pyramid(1, "closed")), (0, 0, 3)))
    # two-column instance, trivially split
    lam2 = add(sum_marginal(complete_pyramid(1, "closed")), sum_marginal(complete_pyramid(1, "closed")))
    assert psi_membership((2, 2), (3,), lam2)


def test_psi_membership_rejects_other_inner_shapes():
    with pytest.raises(ValueError):
        psi_membership((1,), (2,), (2,))


def test_count_cone_ssyt_single_box():
    assert count_cone_ssyt((1,), (3,), "sym") == 1


def test_count_cone_ssyt_rejects_non_members():
    with pytest.raises(ValueError):
        count_cone_ssyt((1,), (0, 0, 3), "sym")


def test_cone_alphabet_orders():
    lex = cone_alphabet("closed", 3, "lex")
    rev = cone_alphabet("closed", 3, "revlex")
    assert set(lex) == set(rev)
    assert lex[0] == (0, 0, 0)
    sums = [p[0] + p[1] + p[2] for p in lex]
    assert sums == sorted(sums)
    with pytest.raises(ValueError):
        cone_alphabet("closed", 3, "weird")


def psi_instances(mu, variant, cap=None):
    """All class members lam buildable from per-column layer vectors."""
    kind = "closed" if variant == "sym" else "open"
    d = psi_decompose(mu, variant)
    base = ()
    for r_j in d.thresholds:
        base = add(base, sum_marginal(complete_pyramid(r_j - 1, kind)))
    options = []
    for r_j, n_hat in zip(d.thresholds, d.layer_parts):
        bound = tuple([3 * n_hat] * (r_j + 1))
        options.append(list(_layer_vectors(3 * n_hat, n_hat * r_j, r_j, bound)))
    seen = set()
    for combo in itertools.product(*options):
        lam = base
        for vec in combo:
            lam = add(lam, vec)
        if lam not in seen and is_partition(lam):
            seen.add(lam)
            yield lam


def test_headline_equality_and_tiebreak_invariance():
    # the tableau count equals the plethysm coefficient on every generated
    # unique-split instance, under both alphabet tiebreaks
    checked = 0
    for variant, sizes in (("sym", (1, 2, 3, 4)), ("wedge", (1, 2, 3, 4))):
        nu = (3,) if variant == "sym" else (1, 1, 1)
        for musize in sizes:
            for mu in partitions_of(musize):
                for lam in psi_instances(mu, variant):
                    if len(psi_splits(mu, nu, lam)) != 1:
                        continue
                    count = count_cone_ssyt(mu, lam, variant)
                    assert count == count_cone_ssyt(mu, lam, variant, tiebreak="revlex")
                    assert count == general_plethysm(lam, mu, nu).value, (variant, mu, lam)
                    checked += 1
    assert checked >= 20


def test_single_column_matches_pyramid_count():
    for n in (1, 2, 3, 4, 5, 6):
        mu = (1,) * n
        for lam in psi_instances(mu, "sym"):
            assert count_cone_ssyt(mu, lam, "sym") == count_pyramids(lam, "closed"), (n, lam)


def test_tableau_layers_structure():
    mu = (1, 1, 1)
    d = psi_decompose(mu, "sym")
    lam = add(sum_marginal(complete_pyramid(1, "closed")), (2, 0, 1))
    tableaux = list(enumerate_cone_ssyt(mu, lam, "sym"))
    assert len(tableaux) == count_cone_ssyt(mu, lam, "sym")
    for t in tableaux:
        assert tableau_layers_check(t, d)
    # a filling that breaks the forced pyramid part fails the check
    bad = (((1, 0, 0),), ((0, 0, 0),), ((2, 0, 0),))
    assert not tableau_layers_check(bad, d)
    # one that puts a wrong-layer point in the free part fails too
    bad2 = (((0, 0, 0),), ((1, 0, 0),), ((1, 1, 1),))
    assert not tableau_layers_check(bad2, d)


def test_enumerated_tableaux_are_semistandard():
    mu = (2, 1)
    lam = add(sum_marginal(complete_pyramid(1, "closed")), sum_marginal(complete_pyramid(0, "closed")))
    order = {p: i for i, p in enumerate(cone_alphabet("closed", len(lam), "lex"))}
    for t in enumerate_cone_ssyt(mu, lam, "sym"):
        for row in t:
            assert all(order[row[i]] <= order[row[i + 1]] for i in range(len(row) - 1))
        for r in range(1, len(t)):
            for c in range(len(t[r])):
                assert order[t[r][c]] > order[t[r - 1][c]]
