"""Ihara zeta functions, Artin-Ihara L-functions, and their identities.

All determinants of polynomial matrices use fraction-free elimination over
the exact coefficient ring, so every identity check below is an equality of
integers — never a float comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicInteger, CyclotomicRing
from .graphs import Multigraph, graph_matrices
from .grouprings import Character, character_evaluate, characters, nrd_abelian
from .groups import GroupElement
from .linalg import ZZ, det_in_ring, det_int_poly_matrix
from .polynomials import IntPolynomial, PolynomialRing
from .voltage import VoltageAssignment, derive, voltage_adjacency, voltage_laplacian


@dataclass(frozen=True)
class ZetaData:
    """ζ_X(u)^{-1} = (1−u²)^{−chi} · det_part(u)."""

    chi: int
    det_part: IntPolynomial


@dataclass(frozen=True)
class ArtinLData:
    """L(χ,u)^{-1} = (1−u²)^{−d·chi} · det_part(u), d = 1 for characters."""

    character: Character
    chi: int  # Euler characteristic of the base graph
    det_part: tuple[CyclotomicInteger, ...]  # ascending coefficients


def ihara_zeta_inverse(graph: Multigraph) -> ZetaData:
    """Exact determinant of I − Au + (D−I)u² and the Euler characteristic."""
    mats = graph_matrices(graph)
    n = graph.num_vertices
    ring = PolynomialRing(ZZ)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            delta = 1 if i == j else 0
            # constant, u, u² coefficients
            row.append((delta, -mats.A[i][j], mats.D[i][j] - delta))
        entries.append([_trim(c) for c in row])
    if n <= 8:
        det = det_in_ring(entries, ring)
    else:
        det = det_int_poly_matrix(entries)
    return ZetaData(mats.chi, IntPolynomial(det))


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def a_sigma_matrices(alpha: VoltageAssignment,
                     n: int) -> dict[GroupElement, list[list[int]]]:
    """The matrices A(σ): edges between (v_i, 1) and (v_j, σ) in X_n.

    Built literally from the derived graph (loops at (v_i,1) count twice in
    A(1)); the identity Σ_σ A(σ)·χ(σ) = χ(A_α) cross-checks this against
    the voltage matrix and is exercised in the tests.
    """
    spec = alpha.spec
    base = alpha.base
    index = {v: i for i, v in enumerate(base.vertices)}
    m = base.num_vertices
    group = spec.enumerate_group(n)
    identity = spec.identity(n)
    out = {sigma: [[0] * m for _ in range(m)] for sigma in group}
    cover = derive(alpha, n)
    for _, ((v, g), (w, h)) in cover.graph.edges:
        i, j = index[v], index[w]
        if (v, g) == (w, h):
            # loop in the derived graph: contributes 2 to A(1)[i][i]
            if g == identity:
                out[identity][i][i] += 2
            continue
        # edge between (v_i, 1) and (v_j, sigma) for both orderings
        if g == identity:
            sigma = h
            out[sigma][i][j] += 1
        if h == identity:
            sigma = g
            out[sigma][j][i] += 1
    return out


def character_twisted_matrices(
        alpha: VoltageAssignment, n: int, chi: Character,
        sigma_matrices: dict[GroupElement, list[list[int]]] | None = None,
) -> tuple[list[list[CyclotomicInteger]], list[list[CyclotomicInteger]]]:
    """(A_χ, D_χ): A_χ = Σ_σ A(σ)·χ(σ); D_χ is the (rational) degree matrix."""
    spec = alpha.spec
    m = alpha.base.num_vertices
    p, k = spec.p, n
    zero = CyclotomicInteger.from_int(p, k, 0)
    a_chi = [[zero for _ in range(m)] for _ in range(m)]
    if sigma_matrices is None:
        sigma_matrices = a_sigma_matrices(alpha, n)
    for sigma, mat in sigma_matrices.items():
        value = chi.value(sigma)
        for i in range(m):
            for j in range(m):
                if mat[i][j]:
                    a_chi[i][j] = a_chi[i][j] + value.scale(mat[i][j])
    degrees = graph_matrices(alpha.base).D
    d_chi = [[CyclotomicInteger.from_int(p, k, degrees[i][j])
              for j in range(m)] for i in range(m)]
    return a_chi, d_chi


def artin_l_inverse(alpha: VoltageAssignment, n: int, chi: Character,
                    sigma_matrices=None) -> ArtinLData:
    """Exact det part of the Artin-Ihara L-function for a character."""
    a_chi, d_chi = character_twisted_matrices(alpha, n, chi, sigma_matrices)
    m = alpha.base.num_vertices
    p, k = alpha.spec.p, n
    base_ring = CyclotomicRing(p, k)
    poly_ring = PolynomialRing(base_ring)
    one = base_ring.one()
    zero = base_ring.zero()
    entries = []
    for i in range(m):
        row = []
        for j in range(m):
            delta = one if i == j else zero
            # I − A_χ u + (D_χ − I) u²
            coeffs = (delta, -a_chi[i][j], d_chi[i][j] - delta)
            while coeffs and coeffs[-1].is_zero():
                coeffs = coeffs[:-1]
            row.append(coeffs)
        entries.append(row)
    det = det_in_ring(entries, poly_ring)
    base_chi = graph_matrices(alpha.base).chi
    return ArtinLData(chi, base_chi, tuple(det))


def h_at_one(alpha: VoltageAssignment, n: int, chi: Character,
             sigma_matrices=None) -> CyclotomicInteger:
    """h(χ, 1) = det(D_χ − A_χ), exact."""
    a_chi, d_chi = character_twisted_matrices(alpha, n, chi, sigma_matrices)
    m = alpha.base.num_vertices
    ring = CyclotomicRing(alpha.spec.p, n)
    matrix = [[d_chi[i][j] - a_chi[i][j] for j in range(m)] for i in range(m)]
    return det_in_ring(matrix, ring)


@dataclass(frozen=True)
class InterpolationReport:
    """Per-character outcome of h(χ,1) = (χ̄-component of Nrd(D − A_α^t))."""

    results: tuple[tuple[Character, bool], ...]

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.results)


def interpolation_check(alpha: VoltageAssignment, n: int) -> InterpolationReport:
    """Check the L-value interpolation identity at every character.

    The transpose in D − A_α^t conjugates characters: the χ-component of the
    reduced norm equals h(χ̄, 1).
    """
    laplacian = voltage_laplacian(alpha, n, transpose=True)
    components = {chi: value for chi, value in nrd_abelian(laplacian)}
    sigma_matrices = a_sigma_matrices(alpha, n)
    results = []
    for chi in characters(alpha.spec, n):
        lhs = h_at_one(alpha, n, chi, sigma_matrices)
        rhs = components[chi.conjugate()]
        results.append((chi, lhs == rhs))
    return InterpolationReport(tuple(results))


@dataclass(frozen=True)
class FactorizationReport:
    polynomial_match: bool
    exponent_match: bool

    @property
    def passed(self) -> bool:
        return self.polynomial_match and self.exponent_match


def factorization_check(alpha: VoltageAssignment, n: int) -> FactorizationReport:
    """∏_χ L(χ)^{-1} = ζ_{X_n}^{-1}, with Euler-characteristic bookkeeping."""
    spec = alpha.spec
    base_ring = CyclotomicRing(spec.p, n)
    poly_ring = PolynomialRing(base_ring)
    product = poly_ring.one()
    total_exponent = 0
    sigma_matrices = a_sigma_matrices(alpha, n)
    for chi in characters(spec, n):
        data = artin_l_inverse(alpha, n, chi, sigma_matrices)
        product = poly_ring.mul(product, data.det_part)
        total_exponent += data.chi
    cover = derive(alpha, n)
    zeta = ihara_zeta_inverse(cover.graph)
    expected = tuple(CyclotomicInteger.from_int(spec.p, n, c)
                     for c in zeta.det_part.coeffs)
    polynomial_match = (len(product) == len(expected) and
                        all((a - b).is_zero()
                            for a, b in zip(product, expected)))
    exponent_match = total_exponent == zeta.chi
    return FactorizationReport(polynomial_match, exponent_match)
