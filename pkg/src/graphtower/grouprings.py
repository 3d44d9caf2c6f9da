"""Exact arithmetic in the integral group rings Z[G^(n)].

Includes characters of abelian quotients, per-character determinants (the
abelian reduced norm) over cyclotomic integers, and the determinant of the
regular representation as the kind-agnostic fallback.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .cyclotomic import CyclotomicInteger, CyclotomicRing
from .errors import BoundExceededError, LevelMismatchError
from .groups import GroupElement, TowerGroupSpec
from .linalg import det_in_ring, det_int

_REGULAR_DET_BOUND = 300  # |G^(n)| · matrix size


@dataclass(frozen=True)
class GroupRingElement:
    """Element of Z[G^(n)] as a pruned support map."""

    spec: TowerGroupSpec
    level: int
    terms: tuple[tuple[GroupElement, int], ...]  # sorted, zero-free

    @staticmethod
    def from_terms(spec: TowerGroupSpec, level: int,
                   terms: Mapping[GroupElement, int]) -> "GroupRingElement":
        pruned = {g: c for g, c in terms.items() if c != 0}
        for g in pruned:
            if g.level != level:
                raise LevelMismatchError(
                    f"term at level {g.level} in element at level {level}")
        ordered = tuple(sorted(pruned.items(), key=lambda item: item[0].data))
        return GroupRingElement(spec, level, ordered)

    @staticmethod
    def zero(spec: TowerGroupSpec, level: int) -> "GroupRingElement":
        return GroupRingElement(spec, level, ())

    @staticmethod
    def one(spec: TowerGroupSpec, level: int) -> "GroupRingElement":
        return GroupRingElement.from_terms(spec, level,
                                           {spec.identity(level): 1})

    @staticmethod
    def of_group_element(spec: TowerGroupSpec,
                         g: GroupElement, coefficient: int = 1) -> "GroupRingElement":
        return GroupRingElement.from_terms(spec, g.level, {g: coefficient})

    @staticmethod
    def constant(spec: TowerGroupSpec, level: int, c: int) -> "GroupRingElement":
        return GroupRingElement.from_terms(spec, level,
                                           {spec.identity(level): c})

    def _check(self, other: "GroupRingElement") -> None:
        if self.level != other.level:
            raise LevelMismatchError(
                f"operands at levels {self.level} and {other.level}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        acc = dict(self.terms)
        for g, c in other.terms:
            acc[g] = acc.get(g, 0) + c
        return GroupRingElement.from_terms(self.spec, self.level, acc)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.spec, self.level,
                                tuple((g, -c) for g, c in self.terms))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        acc: dict[GroupElement, int] = {}
        for g, c in self.terms:
            for h, d in other.terms:
                gh = self.spec.multiply(g, h)
                acc[gh] = acc.get(gh, 0) + c * d
        return GroupRingElement.from_terms(self.spec, self.level, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(c for _, c in self.terms)

    def involution(self) -> "GroupRingElement":
        """The anti-automorphism g ↦ g⁻¹ extended linearly."""
        return GroupRingElement.from_terms(
            self.spec, self.level,
            {self.spec.inverse(g): c for g, c in self.terms})

    def project(self, m: int) -> "GroupRingElement":
        acc: dict[GroupElement, int] = {}
        for g, c in self.terms:
            h = self.spec.project(g, m)
            acc[h] = acc.get(h, 0) + c
        return GroupRingElement.from_terms(self.spec, m, acc)

    def content_p_valuation(self) -> int | None:
        """min_g v_p(coefficient), or None for the zero element."""
        if not self.terms:
            return None
        p = self.spec.p
        best: int | None = None
        for _, c in self.terms:
            v = 0
            c = abs(c)
            while c % p == 0:
                c //= p
                v += 1
            best = v if best is None else min(best, v)
            if best == 0:
                return 0
        return best


@dataclass(frozen=True)
class GroupRingMatrix:
    """Square matrix over Z[G^(n)]."""

    spec: TowerGroupSpec
    level: int
    entries: tuple[tuple[GroupRingElement, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
            for x in row:
                if x.level != self.level:
                    raise LevelMismatchError("entry level differs from matrix level")

    @property
    def size(self) -> int:
        return len(self.entries)

    def augmentation(self) -> list[list[int]]:
        return [[x.augmentation() for x in row] for row in self.entries]

    def project(self, m: int) -> "GroupRingMatrix":
        return GroupRingMatrix(
            self.spec, m,
            tuple(tuple(x.project(m) for x in row) for row in self.entries))


@dataclass(frozen=True)
class Character:
    """Character of an abelian quotient G^(n), valued in μ_{p^n}."""

    spec: TowerGroupSpec
    level: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.spec.kind != "abelian":
            raise ValueError("characters are defined for abelian quotients only")
        if len(self.exponents) != self.spec.rank:
            raise ValueError("exponent vector length differs from rank")

    def is_trivial(self) -> bool:
        mod = self.spec.p ** self.level
        return all(e % mod == 0 for e in self.exponents)

    def conjugate(self) -> "Character":
        mod = self.spec.p ** self.level
        return Character(self.spec, self.level,
                         tuple((-e) % mod for e in self.exponents))

    def value(self, g: GroupElement) -> CyclotomicInteger:
        mod = self.spec.p ** self.level
        exponent = sum(e * x for e, x in zip(self.exponents, g.data)) % mod
        return CyclotomicInteger.root_power(self.spec.p, self.level, exponent)


def characters(spec: TowerGroupSpec, n: int) -> list[Character]:
    """All characters of G^(n), lexicographic by exponent vector."""
    if spec.kind != "abelian":
        raise ValueError("characters are defined for abelian quotients only")
    import itertools
    mod = spec.p ** n
    return [Character(spec, n, exps)
            for exps in itertools.product(range(mod), repeat=spec.rank)]


def character_evaluate(chi: Character,
                       x: GroupRingElement) -> CyclotomicInteger:
    """Linear extension of χ to the group ring."""
    if x.level != chi.level:
        raise LevelMismatchError("character and element live at different levels")
    acc = CyclotomicInteger.from_int(chi.spec.p, chi.level, 0)
    for g, c in x.terms:
        acc = acc + chi.value(g).scale(c)
    return acc


def nrd_abelian(
        matrix: GroupRingMatrix) -> list[tuple[Character, CyclotomicInteger]]:
    """Per-character determinants of a matrix over an abelian quotient.

    For abelian groups the reduced norm is the componentwise determinant
    under the character decomposition of the group algebra.
    """
    spec = matrix.spec
    ring = CyclotomicRing(spec.p, matrix.level)
    out = []
    for chi in characters(spec, matrix.level):
        image = [[character_evaluate(chi, x) for x in row]
                 for row in matrix.entries]
        out.append((chi, det_in_ring(image, ring)))
    return out


def regular_det(matrix: GroupRingMatrix,
                bound: int = _REGULAR_DET_BOUND) -> int:
    """Determinant of left multiplication on the regular representation.

    Works for any group kind; equals the product over characters of the
    per-character determinants when the quotient is abelian.
    """
    spec = matrix.spec
    order = spec.order(matrix.level)
    m = matrix.size
    if order * m > bound:
        raise BoundExceededError(
            f"regular representation size {order * m} exceeds bound {bound}")
    group = spec.enumerate_group(matrix.level)
    index = {g: i for i, g in enumerate(group)}
    size = m * order
    big = [[0] * size for _ in range(size)]
    for bi, row in enumerate(matrix.entries):
        for bj, x in enumerate(row):
            # left multiplication by x: basis g ↦ Σ c·(h g)
            for gj, g in enumerate(group):
                for h, c in x.terms:
                    hi = index[spec.multiply(h, g)]
                    big[bi * order + hi][bj * order + gj] += c
    return det_int(big)
