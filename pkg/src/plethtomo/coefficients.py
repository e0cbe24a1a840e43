"""Plethysm and Kronecker coefficient queries.

Two independent routes compute every general plethysm coefficient:

* weight multiplicities q_kappa (horizontal-strip DP over the tableau
  alphabet) fed into the Jacobi-Trudi alternating sum over permutations;
* the full monomial expansion (power-sum route for large instances, literal
  substitution for small ones) peeled into Schur terms.

Agreement of the two is one of the repository's standing self-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .characters import kronecker as _kronecker_raw
from .partitions import Composition, Partition, canonical, is_partition, partitions_of, transpose
from .sympoly import decompose_schur, plethysm_poly
from .tableaux import count_weighted_ssyt, dim_weyl, kostka, ssyt_weights

JACOBI_TRUDI_MAX_ROWS = 9

Variant = Literal["a", "b"]


@dataclass(frozen=True)
class CoefficientResult:
    value: int
    method: str

    def __int__(self) -> int:
        return self.value


_q_cache: dict[tuple[Partition, Partition, Partition], int] = {}


def weight_multiplicity(mu: Partition, nu: Partition, kappa: Composition, k: int) -> int:
    """q_kappa(mu,nu): the dimension of the weight-kappa subspace of the
    plethysm of the mu-Schur functor applied to the nu-th one, i.e. the
    h_kappa coordinate of the composed character.

    Counts SSYT of shape mu over the alphabet of nu-tableaux, each letter
    weighted by its tableau weight, with total weight exactly kappa.  The
    value only depends on the multiset of entries of kappa.
    """
    mu, nu = canonical(mu), canonical(nu)
    kappa = canonical(kappa)
    if sum(kappa) != sum(mu) * sum(nu):
        raise ValueError(f"|kappa|={sum(kappa)} != |mu|*|nu|={sum(mu) * sum(nu)}")
    if len(kappa) > k:
        raise ValueError(f"kappa={kappa} needs more than k={k} variables")
    return _weight_multiplicity_sorted(mu, nu, tuple(sorted(kappa, reverse=True)))


def _weight_multiplicity_sorted(mu: Partition, nu: Partition, key: Partition) -> int:
    key = canonical(key)
    memo_key = (mu, nu, key)
    got = _q_cache.get(memo_key)
    if got is not None:
        return got
    if not key:
        val = 1 if sum(mu) == 0 else 0
    elif nu == (1,):
        # the alphabet is the variables themselves, so the composed module
        # is the plain Schur module and its weight dimensions are Kostka
        val = kostka(mu, key)
    elif mu == (1,):
        val = kostka(nu, key)
    else:
        letters = ssyt_weights(nu, len(key), bound=key)
        val = count_weighted_ssyt(mu, letters, key)
    _q_cache[memo_key] = val
    return val


def jacobi_trudi_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """General plethysm coefficient by the Jacobi-Trudi alternating sum
    sum_sigma sign(sigma) q_{lam - (0..l-1) + sigma}, with q evaluated as 0
    on compositions with a negative entry.

    Permutations are enumerated as column assignments row by row, most
    constrained row first, so the terms with a negative entry are never
    visited.  Worst-case cost still grows as len(lam)!, so callers keep
    len(lam) <= JACOBI_TRUDI_MAX_ROWS.
    """
    lam, mu, nu = canonical(lam), canonical(mu), canonical(nu)
    if sum(lam) != sum(mu) * sum(nu):
        raise ValueError("size mismatch: |lam| must equal |mu|*|nu|")
    ell = len(lam)
    if ell == 0:
        return 1 if sum(mu) * sum(nu) == 0 else 0
    lo = [max(0, i - lam[i]) for i in range(ell)]
    order = sorted(range(ell), key=lambda i: lam[i] - i)
    assign = [0] * ell
    used = [False] * ell
    total = 0

    def parity() -> int:
        inv = 0
        for i in range(ell):
            for j in range(i + 1, ell):
                if assign[i] > assign[j]:
                    inv += 1
        return -1 if inv % 2 else 1

    def rec(pos: int) -> None:
        nonlocal total
        if pos == ell:
            values = sorted((lam[i] - i + assign[i] for i in range(ell)), reverse=True)
            total += parity() * _weight_multiplicity_sorted(mu, nu, tuple(values))
            return
        i = order[pos]
        for j in range(lo[i], ell):
            if not used[j]:
                used[j] = True
                assign[i] = j
                rec(pos + 1)
                used[j] = False

    rec(0)
    return total


def general_plethysm(lam: Partition, mu: Partition, nu: Partition) -> CoefficientResult:
    """Multiplicity of the lam-irreducible in the plethysm of the mu-Schur
    functor with the nu one.  Dispatches on height: the Jacobi-Trudi sum up
    to JACOBI_TRUDI_MAX_ROWS rows, leading-monomial peeling above."""
    lam, mu, nu = canonical(lam), canonical(mu), canonical(nu)
    if not (is_partition(lam) and is_partition(mu) and is_partition(nu)):
        raise ValueError("plethysm arguments must be partitions")
    if sum(lam) != sum(mu) * sum(nu):
        return CoefficientResult(0, "degree-mismatch")
    if len(lam) <= JACOBI_TRUDI_MAX_ROWS:
        value = jacobi_trudi_coeff(lam, mu, nu)
        method = "jacobi-trudi"
    else:
        poly = plethysm_poly(mu, nu, len(lam))
        value = dict(decompose_schur(poly)).get(lam, 0)
        method = "monomial-peel"
    if value < 0:
        raise ArithmeticError(f"negative multiplicity {value} at {lam}; inputs were not characters")
    return CoefficientResult(value, method)


def plethysm_coeff(lam: Partition, n: int, m: int, variant: Variant) -> CoefficientResult:
    """a_lam(n,m) (multiplicity in the n-th symmetric power of the m-th) or
    b_lam(n,m) (n-th exterior power of the m-th symmetric power)."""
    if variant == "a":
        mu: Partition = (n,) if n else ()
    elif variant == "b":
        mu = (1,) * n
    else:
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    nu: Partition = (m,) if m else ()
    return general_plethysm(lam, mu, nu)


def full_decomposition(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """All nonzero general plethysm multiplicities p_lam(mu,nu), computed
    through general_plethysm (so through both dispatch routes)."""
    mu, nu = canonical(mu), canonical(nu)
    out: dict[Partition, int] = {}
    for lam in partitions_of(sum(mu) * sum(nu)):
        val = general_plethysm(lam, mu, nu).value
        if val:
            out[lam] = val
    return out


def m2_closed_form(n: int, variant: Variant) -> set[Partition]:
    """Exact multiplicity-free support of the inner-degree-2 plethysms:
    variant 'a' gives the all-even partitions of 2n, variant 'b' the
    partitions of 2n whose diagonal hooks have arm = leg + 1 (row i of
    length >= i+1 satisfies lam_i = lam^t_i + 1, indices from 0)."""
    out: set[Partition] = set()
    for lam in partitions_of(2 * n):
        if variant == "a":
            if all(part % 2 == 0 for part in lam):
                out.add(lam)
        elif variant == "b":
            t = transpose(lam)
            ok = True
            for i, part in enumerate(lam):
                if part >= i + 1 and part != t[i] + 1:
                    ok = False
                    break
            if ok:
                out.add(lam)
        else:
            raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    return out


def check_duality(n: int, m: int) -> tuple[bool, list[str]]:
    """Verify the four exterior/symmetric duality identities relating the
    decompositions of the n-th exterior/symmetric powers of the m-th
    exterior power to a- and b-coefficients of transposed shapes.

    For odd m the exterior-of-exterior multiplicities match a at the
    transpose and symmetric-of-exterior match b; for even m the two swap.
    Returns (ok, mismatch report).
    """
    report: list[str] = []
    wedge_m: Partition = (1,) * m
    wedge_wedge = {lam: general_plethysm(lam, (1,) * n, wedge_m).value for lam in partitions_of(n * m)}
    sym_wedge = {lam: general_plethysm(lam, (n,), wedge_m).value for lam in partitions_of(n * m)}
    for lam in partitions_of(n * m):
        lam_t = transpose(lam)
        a_val = plethysm_coeff(lam_t, n, m, "a").value
        b_val = plethysm_coeff(lam_t, n, m, "b").value
        expect_ww = a_val if m % 2 == 1 else b_val
        expect_sw = b_val if m % 2 == 1 else a_val
        if wedge_wedge[lam] != expect_ww:
            report.append(f"wedge^{n} wedge^{m} at {lam}: got {wedge_wedge[lam]}, duality predicts {expect_ww}")
        if sym_wedge[lam] != expect_sw:
            report.append(f"sym^{n} wedge^{m} at {lam}: got {sym_wedge[lam]}, duality predicts {expect_sw}")
    return (not report, report)


def kronecker(mu: Partition, nu: Partition, rho: Partition) -> CoefficientResult:
    """Kronecker coefficient via the symmetric group character inner product."""
    return CoefficientResult(_kronecker_raw(mu, nu, rho), "character-sum")


def dim_plethysm_module(mu: Partition, nu: Partition, k: int) -> int:
    """Dimension of the plethysm module on a k-dimensional space."""
    return dim_weyl(canonical(mu), dim_weyl(canonical(nu), k))
