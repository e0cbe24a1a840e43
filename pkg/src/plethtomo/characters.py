"""Symmetric group characters and the power-sum route to plethysm.

Characters are computed by the Murnaghan-Nakayama rule on beta-numbers
(first-column hook lengths): removing a border strip of size t from the
shape corresponds to replacing some beta-number b by b - t, with sign given
by the number of beta-numbers jumped over.

The same character tables drive an exact plethysm expansion: s_nu is
expanded in power sums, p_r acts on power sums by stretching indices, and
the resulting p-basis expansion of the composed character is paired back
against Schur functions.  All arithmetic is exact (Fraction intermediates,
integer results).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, canonical, is_partition, partitions_of


@lru_cache(maxsize=None)
def _mn(lam: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1 if not lam else 0
    t = cycles[0]
    rest = cycles[1:]
    ell = len(lam)
    betas = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        jumped = sum(1 for x in betas if nb < x < b)
        new_betas = sorted((x for x in betas if x != b), reverse=True)
        new_betas.append(nb)
        new_betas.sort(reverse=True)
        m = len(new_betas)
        new_lam = canonical(new_betas[i] - (m - 1 - i) for i in range(m))
        total += (-1) ** jumped * _mn(new_lam, rest)
    return total


def sn_character(lam: Partition, cycle_type: Partition) -> int:
    """Irreducible S_n character chi_lam evaluated on the class of cycle_type."""
    lam = canonical(lam)
    tau = canonical(cycle_type)
    if not is_partition(lam) or not is_partition(tau):
        raise ValueError("character arguments must be partitions")
    if sum(lam) != sum(tau):
        raise ValueError(f"size mismatch: |{lam}| != |{tau}|")
    return _mn(lam, tau)


def centralizer_order(tau: Partition) -> int:
    """z_tau = prod_i i^{m_i} m_i! over part multiplicities m_i."""
    z = 1
    mult: dict[int, int] = {}
    for part in tau:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return z


def kronecker(mu: Partition, nu: Partition, rho: Partition) -> int:
    """Kronecker coefficient k(mu,nu,rho) as the S_n character inner product
    (1/n!) sum over classes of |class| * chi_mu chi_nu chi_rho."""
    mu, nu, rho = canonical(mu), canonical(nu), canonical(rho)
    n = sum(mu)
    if sum(nu) != n or sum(rho) != n:
        raise ValueError("kronecker arguments must have equal sizes")
    if n == 0:
        return 1
    nfact = factorial(n)
    total = 0
    for tau in partitions_of(n):
        total += (nfact // centralizer_order(tau)) * _mn(mu, tau) * _mn(nu, tau) * _mn(rho, tau)
    if total % nfact != 0:
        raise ArithmeticError("kronecker inner product is not integral")
    return total // nfact


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def plethysm_power_expansion(mu: Partition, nu: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """Power-sum expansion of the plethysm of the mu-Schur function with the
    nu-Schur function: pairs (omega, coefficient) with omega running over
    partitions of |mu|*|nu|.

    Uses s_f = sum_tau chi_f(tau)/z_tau p_tau together with the rules
    p_r[p_s] = p_{rs} and multiplicativity over the parts of the outer
    cycle type.
    """
    mu, nu = canonical(mu), canonical(nu)
    inner: list[tuple[Partition, Fraction]] = []
    for tau in partitions_of(sum(nu)):
        c = _mn(nu, tau)
        if c:
            inner.append((tau, Fraction(c, centralizer_order(tau))))
    out: dict[Partition, Fraction] = {}
    for sigma in partitions_of(sum(mu)):
        c_sigma = _mn(mu, sigma)
        if not c_sigma:
            continue
        prod: dict[Partition, Fraction] = {(): Fraction(1)}
        for r in sigma:
            nxt: dict[Partition, Fraction] = {}
            for key, val in prod.items():
                for tau, coeff in inner:
                    stretched = tuple(r * t for t in tau)
                    nk = _merge(key, stretched)
                    nxt[nk] = nxt.get(nk, Fraction(0)) + val * coeff
            prod = nxt
        w = Fraction(c_sigma, centralizer_order(sigma))
        for key, val in prod.items():
            out[key] = out.get(key, Fraction(0)) + w * val
    return tuple(sorted((k, v) for k, v in out.items() if v != 0))


def plethysm_schur_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of s_lam in the plethysm of s_mu with s_nu, via the
    power-sum expansion paired against chi_lam."""
    lam = canonical(lam)
    acc = Fraction(0)
    for omega, coeff in plethysm_power_expansion(canonical(mu), canonical(nu)):
        c = _mn(lam, omega)
        if c:
            acc += coeff * c
    if acc.denominator != 1:
        raise ArithmeticError(f"non-integral multiplicity for {lam}")
    return int(acc)


def plethysm_schur_table(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Full Schur expansion of the plethysm of s_mu with s_nu."""
    mu, nu = canonical(mu), canonical(nu)
    n = sum(mu) * sum(nu)
    table: dict[Partition, int] = {}
    for lam in partitions_of(n):
        m = plethysm_schur_multiplicity(lam, mu, nu)
        if m < 0:
            raise ArithmeticError(f"negative multiplicity {m} at {lam}")
        if m:
            table[lam] = m
    return table
