"""Tower analytics: growth sequences, μ/λ/ν fitting, Λ₁-determinants,
finite-level Fitting generators, and the 𝔐_H(G) decision procedure."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicInteger
from .errors import BoundExceededError, DisconnectedError
from .graphs import graph_matrices
from .grouprings import Character, nrd_abelian, regular_det
from .jacobian import level_jacobian
from .linalg import det_in_ring
from .polynomials import (IntPolynomial, LAURENT, LaurentElement,
                          laurent_substitute_gamma)
from .voltage import (QuotientSpec, VoltageAssignment, connectivity_criterion,
                      gamma_exponent, quotient_assignment, voltage_laplacian)


@dataclass(frozen=True)
class TowerReport:
    """Raw per-level data of a tower computation."""

    p: int
    levels: tuple[int, ...]
    e: tuple[int, ...]
    group_orders: tuple[int, ...]
    jacobians: tuple[tuple[int, ...], ...]  # torsion invariant factors


@dataclass(frozen=True)
class IwasawaFit:
    mu: int
    lam: int
    nu: int
    stable: bool
    residuals: tuple[int, ...]  # e_n − (μp^n + λn + ν) on the checked window


@dataclass(frozen=True)
class Lambda1Det:
    """det(D − A_{α'}^t) over Z[γ, γ⁻¹], cleared and written in T = γ − 1."""

    gamma_det: LaurentElement
    cleared_power: int  # the γ^k multiplied in (a unit; μ and λ unaffected)
    f: IntPolynomial  # γ^k · det, evaluated at γ = 1 + T


@dataclass(frozen=True)
class MHGVerdict:
    mu1: int
    lambda1: int
    mu_lower_bound: int
    verdict: str  # "HOLDS" | "INCONCLUSIVE"
    justification: str


def tower_en(alpha: VoltageAssignment, max_level: int) -> TowerReport:
    """e_n = v_p(|J(X_n)|) for n = 0..max_level."""
    if not connectivity_criterion(alpha):
        raise DisconnectedError(
            "voltage does not satisfy the connectivity criterion")
    spec = alpha.spec
    levels, e_values, orders, jacobians = [], [], [], []
    for n in range(max_level + 1):
        structure, e_n = level_jacobian(alpha, n)
        levels.append(n)
        e_values.append(e_n)
        orders.append(spec.order(n))
        jacobians.append(structure.torsion)
    return TowerReport(spec.p, tuple(levels), tuple(e_values),
                       tuple(orders), tuple(jacobians))


def fit_iwasawa(e: tuple[int, ...] | list[int], p: int) -> IwasawaFit:
    """Fit e_n = μp^n + λn + ν on the trailing levels.

    The last three entries determine (μ, λ, ν) by second differences; the
    fit is stable when it reproduces the last min(4, len(e)) entries exactly.
    """
    if len(e) < 3:
        raise ValueError("need at least three levels to fit")
    top = len(e) - 1
    d1 = e[top] - e[top - 1]          # μ p^{top-1}(p−1) + λ
    d0 = e[top - 1] - e[top - 2]      # μ p^{top-2}(p−1) + λ
    mu_scale = p ** (top - 2) * (p - 1) ** 2
    mu_num = d1 - d0
    window = min(4, len(e))
    if mu_num % mu_scale:
        return IwasawaFit(0, 0, 0, False,
                          tuple(e[len(e) - window:]))
    mu = mu_num // mu_scale
    lam = d1 - mu * p ** (top - 1) * (p - 1)
    nu = e[top] - mu * p ** top - lam * top
    residuals = tuple(
        e[n] - (mu * p ** n + lam * n + nu)
        for n in range(len(e) - window, len(e)))
    stable = all(r == 0 for r in residuals)
    return IwasawaFit(mu, lam, nu, stable, residuals)


def lambda1_determinant(alpha_quotient: VoltageAssignment) -> Lambda1Det:
    """Symbolic determinant of D − A_{α'}^t over the rank-1 quotient tower.

    The computation is level-free: γ is a formal unit, and the result is an
    integer Laurent polynomial subsequently written in T = γ − 1.
    """
    spec = alpha_quotient.spec
    if spec.kind != "abelian" or spec.rank != 1:
        raise ValueError("quotient assignment must live on the rank-1 tower")
    base = alpha_quotient.base
    m = base.num_vertices
    index = {v: i for i, v in enumerate(base.vertices)}
    zero = LAURENT.zero()
    a = [[zero for _ in range(m)] for _ in range(m)]
    for e, (v, w) in base.edges:
        b = gamma_exponent(alpha_quotient, e)
        i, j = index[v], index[w]
        if i == j:
            a[i][i] = LAURENT.add(a[i][i], LAURENT.add(
                LaurentElement.gamma_power(b), LaurentElement.gamma_power(-b)))
        else:
            a[i][j] = LAURENT.add(a[i][j], LaurentElement.gamma_power(b))
            a[j][i] = LAURENT.add(a[j][i], LaurentElement.gamma_power(-b))
    degrees = graph_matrices(base).D
    laplacian = [[LAURENT.sub(LaurentElement.constant(degrees[i][j]), a[j][i])
                  for j in range(m)] for i in range(m)]
    det = det_in_ring(laplacian, LAURENT)
    if det.is_zero():
        raise DisconnectedError(
            "Λ₁-determinant vanishes: the Z_p-cover is disconnected")
    k, f = laurent_substitute_gamma(det)
    return Lambda1Det(det, k, f)


def mu_lambda_from_poly(f: IntPolynomial, p: int) -> tuple[int, int]:
    """Weierstrass data of a nonzero polynomial over Z_p.

    μ = min coefficient valuation, λ = first index attaining it.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no Weierstrass data")
    best_v: int | None = None
    best_i = 0
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        v = 0
        c = abs(c)
        while c % p == 0:
            c //= p
            v += 1
        if best_v is None or v < best_v:
            best_v, best_i = v, i
    return best_v, best_i


def mu_lower_bound(alpha: VoltageAssignment, n_probe: int = 1) -> int:
    """k·|V| where p^k divides every entry of D − A_α^t at the probe level.

    Justified by the surjection of Pic onto (Λ/p^k)^{|V|}.
    """
    laplacian = voltage_laplacian(alpha, n_probe, transpose=True)
    k: int | None = None
    for row in laplacian.entries:
        for x in row:
            v = x.content_p_valuation()
            if v is not None:
                k = v if k is None else min(k, v)
                if k == 0:
                    return 0
    return (k or 0) * alpha.base.num_vertices


def mhg_check(alpha: VoltageAssignment, quotient: QuotientSpec) -> MHGVerdict:
    """Decide the 𝔐_H(G)-property from the Λ₁ data and the content bound.

    HOLDS when μ₁ = 0 (control theorem), or when the tower is
    two-dimensional and the content lower bound on μ_Λ meets μ₁ (the two
    bounds pinch, and μ_Λ = μ₁).  Otherwise INCONCLUSIVE; both bounds are
    reported.
    """
    det = lambda1_determinant(quotient_assignment(alpha, quotient))
    mu1, lambda1 = mu_lambda_from_poly(det.f, alpha.spec.p)
    lower = mu_lower_bound(alpha)
    if mu1 == 0:
        return MHGVerdict(mu1, lambda1, lower, "HOLDS",
                          "mu1 = 0: finite generation over the H-subring")
    if alpha.spec.dimension == 2 and lower >= mu1:
        return MHGVerdict(mu1, lambda1, lower, "HOLDS",
                          f"bounds pinch: mu = mu1 = {mu1}")
    return MHGVerdict(mu1, lambda1, lower, "INCONCLUSIVE",
                      f"mu1 = {mu1}, content lower bound = {lower}")


@dataclass(frozen=True)
class FittingGenerators:
    """Level-n generators of the Fitting ideal of the Picard module."""

    level: int
    components: tuple[tuple[Character, CyclotomicInteger], ...] | None
    regular: int | None


def fitting_generators(alpha: VoltageAssignment, n: int) -> FittingGenerators:
    """Reduced-norm generators of the level-n Fitting ideal.

    Per-character components for abelian quotients; the determinant of the
    regular representation whenever it fits in the configured bound.
    """
    laplacian = voltage_laplacian(alpha, n, transpose=True)
    components = None
    if alpha.spec.kind == "abelian":
        components = tuple(nrd_abelian(laplacian))
    try:
        regular = regular_det(laplacian)
    except BoundExceededError:
        regular = None
    return FittingGenerators(n, components, regular)
