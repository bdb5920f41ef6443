# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from typing import Sequence, Union

from sft_sdk.tuples.shapes import CRTupleShape, CurveShape, Side


def ind_pm(shape: CRTupleShape, side: Union[Side, str]) -> int:
    """Parity of the gradings on one side of the tuple."""
    return sum(shape.gradings(side)) % 2


def ind_total(shape: CRTupleShape) -> int:
    """ind(T) = ind⁺(T) + ind⁻(T) mod 2."""
    return (ind_pm(shape, Side.PLUS) + ind_pm(shape, Side.MINUS)) % 2


def _check_lengths(shape: CRTupleShape, mu_pos: Sequence[int], mu_neg: Sequence[int]) -> None:
    if len(mu_pos) != shape.k_plus:
        raise ValueError(f"Expected {shape.k_plus} positive Conley-Zehnder indices, got {len(mu_pos)}")
    if len(mu_neg) != shape.k_minus:
        raise ValueError(f"Expected {shape.k_minus} negative Conley-Zehnder indices, got {len(mu_neg)}")


def fredholm_index(shape: CRTupleShape, mu_pos: Sequence[int], mu_neg: Sequence[int]) -> int:
    """
    Fredholm index of a CR operator of the given shape:

        Σμ⁺ − Σμ⁻ − (n−1)(k₋+k₊) + 2c₁ + n·χ

    where χ = 2 − 2g for a connected surface.
    """
    _check_lengths(shape, mu_pos, mu_neg)
    punctures = shape.k_plus + shape.k_minus
    return (
        sum(mu_pos) - sum(mu_neg)
        - (shape.n - 1) * punctures
        + 2 * shape.c1
        + shape.n * shape.euler_characteristic
    )


def virtual_dimension(curve: CRTupleShape, mu_pos: Sequence[int], mu_neg: Sequence[int]) -> int:
    """Σμ⁺ − Σμ⁻ + 2c₁ + (n−3)(χ − k₋ − k₊), the unquotiented moduli dimension."""
    _check_lengths(curve, mu_pos, mu_neg)
    punctures = curve.k_plus + curve.k_minus
    return (
        sum(mu_pos) - sum(mu_neg)
        + 2 * curve.c1
        + (curve.n - 3) * (curve.euler_characteristic - punctures)
    )


def validate_rigid(curve: CurveShape) -> bool:
    # rigid after quotienting by R, so the unquotiented dimension is 1
    return ind_total(curve) == 1
