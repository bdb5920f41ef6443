# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import ImmutableMatrix, Rational

from sft_sdk.detline.element import DetLineElement, canonical_element, frame_value, relation
from sft_sdk.detline.linalg import (
    Vector,
    columns,
    complement_in,
    concat,
    det,
    embed,
    hstack,
    kernel_basis,
    particular_solution,
    rank,
    recombine,
    span_basis,
    standard_basis,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StabilizedElement:
    """
    Element k₁∧…∧k_r ⊗ v_N*∧…∧v₁* of det(φ⊕ψ) ⊗ Λ^top V* for a surjective φ⊕ψ.
    ``domain_dual_wedge`` lists v_N first, as vectors of V.
    """
    kernel_wedge: Tuple[Vector, ...]
    domain_dual_wedge: Tuple[Vector, ...]
    scalar: Rational = Rational(1)

    @property
    def domain_vectors(self) -> Tuple[Vector, ...]:
        return tuple(reversed(self.domain_dual_wedge))


def stabilized_value(M, P, element: StabilizedElement) -> Rational:
    """Frame value of the det(φ⊕ψ) factor divided by det[v₁ … v_N]."""
    combined = hstack(M, P)
    top = frame_value(combined, DetLineElement(element.kernel_wedge, (), element.scalar))
    basis = det(columns(list(element.domain_vectors), P.cols))
    if basis == 0:
        raise ValueError("Domain dual wedge is not a basis of V")
    return top / basis


def _split(v: Vector, first: int) -> Tuple[Vector, Vector]:
    return ImmutableMatrix(v[:first, :]), ImmutableMatrix(v[first:, :])


def stabilize_iso(
        M,
        P,
        element: Optional[DetLineElement] = None,
        rng: Optional[random.Random] = None
        ) -> StabilizedElement:
    """
    det φ ≅ det(φ⊕ψ) ⊗ Λ^top V* for φ = M: U → W and ψ = P: V → W with φ⊕ψ surjective.

    With I = im φ ∩ im ψ, a complement H = span(u₁…u_k) of ker φ in φ⁻¹(I),
    V = G ⊕ F ⊕ ker ψ and ψ(v_{m+i}) = φ(u_i), the map is

        ker φ ⊗ ψ(v_m)*∧…∧ψ(v₁)*  ↦  (ker φ, 0) ∧ (u_i, −v_{m+i}) ∧ (0, ker ψ) ⊗ v_N*∧…∧v₁*

    Every basis choice is randomised when ``rng`` is given.
    """
    element = canonical_element(M) if element is None else element
    if P.rows != M.rows:
        raise ValueError(f"ψ maps into dimension {P.rows}, φ into {M.rows}")
    n, p, w = M.cols, P.cols, M.rows
    if rank(hstack(M, P)) != w:
        raise ValueError("φ⊕ψ must be surjective")

    # pairs (x, y) with φx = ψy; their x parts span φ⁻¹(I)
    pairs = kernel_basis(hstack(M, -P))
    left = span_basis([_split(v, n)[0] for v in pairs], n) if n else []

    ker_phi = recombine(kernel_basis(M), n, rng)
    h = recombine(complement_in(ker_phi, left, n), n, rng, extra=ker_phi)
    ker_psi = recombine(kernel_basis(P), p, rng)
    f = []
    for u in h:
        v = particular_solution(P, ImmutableMatrix(M * u))
        if v is None:
            raise ValueError("φ(u) is not in the image of ψ")
        if rng is not None:
            for c in ker_psi:
                v = ImmutableMatrix(v + rng.randint(-2, 2) * c)
        f.append(v)
    preimage = f + ker_psi
    # F and ker ψ span ψ⁻¹(I); G completes them
    g = recombine(complement_in(preimage, standard_basis(p), p), p, rng, extra=preimage)

    reference = DetLineElement(tuple(ker_phi), tuple(reversed([ImmutableMatrix(P * v) for v in g])), Rational(1))
    r = relation(M, element, reference)

    size = n + p
    kernel: List[Vector] = [embed(a, 0, size) for a in ker_phi]
    kernel += [concat(u, ImmutableMatrix(-v)) for u, v in zip(h, f)]
    kernel += [embed(c, n, size) for c in ker_psi]
    domain = g + f + ker_psi
    logger.debug(f"stabilize_iso: dim ker φ {len(ker_phi)}, dim I {len(h)}, dim G {len(g)}, dim ker ψ {len(ker_psi)}")
    return StabilizedElement(tuple(kernel), tuple(reversed(domain)), r)


def stabilize_twice(
        M,
        P1,
        P2,
        element: Optional[DetLineElement] = None,
        rng: Optional[random.Random] = None
        ) -> StabilizedElement:
    """
    Stabilize by ψ₁ and then by ψ₂, landing in det(φ⊕ψ₁⊕ψ₂) ⊗ Λ^top (V₁⊕V₂)*.
    The dual wedges nest as α₂ ∧ α₁, both expressed in V₁⊕V₂.
    """
    first = stabilize_iso(M, P1, element, rng)
    inner = DetLineElement(first.kernel_wedge, (), first.scalar)
    second = stabilize_iso(hstack(M, P1), P2, inner, rng)
    p1, p2 = P1.cols, P2.cols
    dual = tuple(embed(v, p1, p1 + p2) for v in second.domain_dual_wedge)
    dual += tuple(embed(v, 0, p1 + p2) for v in first.domain_dual_wedge)
    return StabilizedElement(second.kernel_wedge, dual, second.scalar)


def swap_stabilized(element: StabilizedElement, n: int, p1: int, p2: int) -> StabilizedElement:
    """Carry an element over U⊕V₁⊕V₂ to U⊕V₂⊕V₁ by exchanging the coordinate blocks."""

    def swap(v: Vector, offset: int) -> Vector:
        head = ImmutableMatrix(v[:offset, :])
        first = ImmutableMatrix(v[offset:offset + p1, :])
        second = ImmutableMatrix(v[offset + p1:, :])
        return concat(concat(head, second), first)

    return StabilizedElement(
        tuple(swap(k, n) for k in element.kernel_wedge),
        tuple(swap(v, 0) for v in element.domain_dual_wedge),
        element.scalar,
    )
