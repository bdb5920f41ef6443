# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from typing import Mapping, Optional

from sft_sdk.weyl.element import MonomialKey, WeylElement, mul


def super_commutator(f: WeylElement, g: WeylElement) -> WeylElement:
    """[f, g] = f·g − (−1)^{|f||g|} g·f for homogeneous f and g."""
    sign = -1 if f.grade() * g.grade() else 1
    return mul(f, g) - mul(g, f).scale(sign)


def differential_D(hamiltonian: WeylElement, f: WeylElement) -> WeylElement:
    """Df = [H, f], extended additively over the homogeneous parts of f."""
    result = WeylElement()
    for part in f.homogeneous_parts().values():
        result = result + super_commutator(hamiltonian, part)
    return result


def capping_change(eps: Mapping[str, int], f: WeylElement) -> WeylElement:
    """
    Rescale p_γ and q_γ by eps[γ.id] (orbits missing from ``eps`` keep +1).
    Since eps² = 1 the commutation relations are preserved.
    """
    for orbit_id, value in eps.items():
        if value not in (1, -1):
            raise ValueError(f"Capping sign for orbit {orbit_id} must be +1 or -1, got {value!r}")

    def rescale(key: MonomialKey, value):
        sign = 1
        for orbit in key.q + key.p:
            sign *= eps.get(orbit.id, 1)
        return sign * value

    return f.map_coefficients(rescale)


def restrict_sector(f: WeylElement, hbar: Optional[int] = None, p_degree: Optional[int] = None) -> WeylElement:
    """Terms with the given ℏ exponent and number of p generators (None matches all)."""
    return f.filter(
        lambda key: (hbar is None or key.hbar == hbar)
        and (p_degree is None or len(key.p) == p_degree)
    )
