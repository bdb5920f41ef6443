# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Rational

from sft_sdk.detline.linalg import (
    Vector,
    block_diag,
    columns,
    complement_in,
    complete_basis,
    concat,
    coker_basis,
    coordinates,
    det,
    embed,
    hstack,
    image_basis,
    kernel_basis,
    rank,
    span_basis,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DetLineElement:
    """
    Decomposable element e₁∧…∧eₙ ⊗ f_m*∧…∧f₁* of det M = Λ^top ker M ⊗ Λ^top (coker M)*.

    ``coker_dual_wedge`` lists the cokernel representatives in wedge order,
    that is f_m first; ``coker_vectors`` gives them as f₁, …, f_m.
    """
    kernel_wedge: Tuple[Vector, ...]
    coker_dual_wedge: Tuple[Vector, ...]
    scalar: Rational = Rational(1)

    def __post_init__(self):
        object.__setattr__(self, "kernel_wedge", tuple(ImmutableMatrix(v) for v in self.kernel_wedge))
        object.__setattr__(self, "coker_dual_wedge", tuple(ImmutableMatrix(v) for v in self.coker_dual_wedge))
        object.__setattr__(self, "scalar", Rational(self.scalar))

    @property
    def coker_vectors(self) -> Tuple[Vector, ...]:
        return tuple(reversed(self.coker_dual_wedge))

    def scale(self, factor) -> "DetLineElement":
        return DetLineElement(self.kernel_wedge, self.coker_dual_wedge, self.scalar * Rational(factor))


def operator_index(M) -> int:
    """dim ker − dim coker, which for a finite matrix is cols − rows."""
    return M.cols - M.rows


def canonical_element(M) -> DetLineElement:
    return DetLineElement(tuple(kernel_basis(M)), tuple(reversed(coker_basis(M))), Rational(1))


def validate(M, element: DetLineElement) -> None:
    """Raise ValueError unless ``element`` is a nonzero decomposable element of det M."""
    r = rank(M)
    kernel = element.kernel_wedge
    if len(kernel) != M.cols - r:
        raise ValueError(f"Kernel wedge has {len(kernel)} vectors, ker M has dimension {M.cols - r}")
    for i, v in enumerate(kernel):
        if v.rows != M.cols or any(x != 0 for x in M * v):
            raise ValueError(f"Kernel wedge vector {i} is not in ker M")
    if kernel and rank(columns(kernel, M.cols)) != len(kernel):
        raise ValueError("Kernel wedge vectors are linearly dependent")
    coker = element.coker_vectors
    if len(coker) != M.rows - r:
        raise ValueError(f"Cokernel wedge has {len(coker)} vectors, coker M has dimension {M.rows - r}")
    if coker and rank(columns(list(coker) + image_basis(M), M.rows)) != M.rows:
        raise ValueError("Cokernel representatives do not project to a basis of coker M")


def relation(M, a: DetLineElement, b: DetLineElement) -> Rational:
    """
    The exact r with a = r·b in det M: kernel coordinate determinant over the
    cokernel coordinate determinant, cokernel coordinates taken modulo im M.
    """
    validate(M, a)
    validate(M, b)
    if a.scalar == 0 or b.scalar == 0:
        raise ValueError("Relation to or from the zero element is undefined")
    kernel = det(coordinates(b.kernel_wedge, a.kernel_wedge, M.cols))
    image = image_basis(M)
    full = coordinates(list(b.coker_vectors) + image, a.coker_vectors, M.rows)
    m = len(b.coker_vectors)
    coker = det(full[:m, :]) if m else Rational(1)
    return a.scalar / b.scalar * kernel / coker


def frame_value(M, element: DetLineElement) -> Rational:
    """
    Value of ``element`` in the frame Λ^top V ⊗ Λ^top W*: its vectors x are
    completed to a basis (x, y) of V and its cokernel vectors u to the basis
    (u, M·y) of W, giving scalar · det[x y] / det[u M·y].

    The kernel vectors only need to be independent with M·y complementing u,
    so elements of the identified lines of det_iso_finite evaluate in the same frame.
    """
    x = list(element.kernel_wedge)
    y = complete_basis(x, M.cols)
    top = det(columns(x + y, M.cols))
    if top == 0:
        raise ValueError("Kernel wedge vectors are linearly dependent")
    u = list(element.coker_vectors)
    if len(u) + len(y) != M.rows:
        raise ValueError(
            f"{len(u)} cokernel vectors cannot complement an image of dimension {len(y)} in dimension {M.rows}"
        )
    images = [ImmutableMatrix(M * v) for v in y]
    bottom = det(columns(u + images, M.rows))
    if bottom == 0:
        raise ValueError("Cokernel vectors do not complement the image of the completion")
    return element.scalar * top / bottom


@dataclass(frozen=True)
class Orientation:
    """An orientation of a determinant line, as a sign relative to a reference element."""
    value: int

    def __post_init__(self):
        if self.value not in (1, -1):
            raise ValueError(f"Orientation must be +1 or -1, got {self.value!r}")

    @classmethod
    def from_scalar(cls, r) -> "Orientation":
        if r == 0:
            raise ValueError("The zero element does not define an orientation")
        return cls(1 if r > 0 else -1)

    @classmethod
    def of(cls, M, element: DetLineElement, reference: Optional[DetLineElement] = None) -> "Orientation":
        return cls.from_scalar(relation(M, element, reference if reference is not None else canonical_element(M)))

    def __neg__(self):
        return Orientation(-self.value)

    def __mul__(self, other):
        if isinstance(other, Orientation):
            return Orientation(self.value * other.value)
        if other in (1, -1):
            return Orientation(self.value * other)
        return NotImplemented

    __rmul__ = __mul__

    def __int__(self):
        return self.value


def det_iso_finite(M, F: Sequence[Vector], element: Optional[DetLineElement] = None) -> DetLineElement:
    """
    Identify det M with Λ^top M⁻¹(F) ⊗ Λ^top F* for a subspace F with im M + F = W:

        e₁∧…∧eₙ ⊗ v_ℓ*∧…∧v₁*  ↦  e₁∧…∧eₙ∧h₁∧…∧h_m ⊗ M(h_m)*∧…∧M(h₁)*∧v_ℓ*∧…∧v₁*

    where H = span(h) complements ker M in M⁻¹(F) and (v, M(h)) is a basis of F.
    ``element`` defaults to the canonical element of det M.
    """
    element = canonical_element(M) if element is None else element
    w = M.rows
    f_basis = span_basis([ImmutableMatrix(v) for v in F], w)
    if rank(columns(image_basis(M) + f_basis, w)) != w:
        raise ValueError("im M + span F must be the whole target space")
    pairs = kernel_basis(hstack(M, -columns(f_basis, w)))
    preimage = span_basis([ImmutableMatrix(v[:M.cols, :]) for v in pairs], M.cols) if M.cols else []
    kernel = kernel_basis(M)
    h = complement_in(kernel, preimage, M.cols)
    images = [ImmutableMatrix(M * v) for v in h]
    v = complement_in(images, f_basis, w)
    reference = DetLineElement(tuple(kernel), tuple(reversed(v)), Rational(1))
    r = relation(M, element, reference)
    logger.debug(f"det_iso_finite: dim ker {len(kernel)}, dim H {len(h)}, dim F {len(f_basis)}")
    return DetLineElement(tuple(kernel) + tuple(h), tuple(reversed(images)) + tuple(reversed(v)), r)


class DisjointUnion(NamedTuple):
    sign: int
    operator: ImmutableMatrix
    element: DetLineElement


def disjoint_union_detline(
        L,
        L2,
        a: Optional[DetLineElement] = None,
        b: Optional[DetLineElement] = None
        ) -> DisjointUnion:
    """
    a ⊗ b ↦ (−1)^{ind L2 · dim coker L} e∧e′ ⊗ f′*…∧f*… in det(L ⊔ L2),
    the dual wedge of L2 placed before the one of L.
    """
    a = canonical_element(L) if a is None else a
    b = canonical_element(L2) if b is None else b
    n, w = L.cols + L2.cols, L.rows + L2.rows
    sign = -1 if (operator_index(L2) * len(a.coker_dual_wedge)) % 2 else 1
    kernel = tuple(embed(e, 0, n) for e in a.kernel_wedge) + tuple(embed(e, L.cols, n) for e in b.kernel_wedge)
    dual = tuple(embed(f, L.rows, w) for f in b.coker_dual_wedge) + tuple(embed(f, 0, w) for f in a.coker_dual_wedge)
    return DisjointUnion(sign, block_diag(L, L2), DetLineElement(kernel, dual, sign * a.scalar * b.scalar))


def _swap_blocks(v: Vector, first: int) -> Vector:
    """(z₁, z₂) ↦ (z₂, z₁) where z₁ has length ``first``."""
    return concat(ImmutableMatrix(v[first:, :]), ImmutableMatrix(v[:first, :]))


def swap_relation(L, L2) -> Rational:
    """
    The r with v ⊔ v′ = r · (v′ ⊔ v), the right side carried over to det(L ⊔ L2)
    by exchanging the two blocks of the domain and of the target.
    """
    first = disjoint_union_detline(L, L2)
    second = disjoint_union_detline(L2, L)
    carried = DetLineElement(
        tuple(_swap_blocks(v, L2.cols) for v in second.element.kernel_wedge),
        tuple(_swap_blocks(f, L2.rows) for f in second.element.coker_dual_wedge),
        second.element.scalar,
    )
    return relation(first.operator, first.element, carried)


def swap_disjoint_check(L, L2) -> bool:
    expected = -1 if (operator_index(L) * operator_index(L2)) % 2 else 1
    return swap_relation(L, L2) == expected
