# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from typing import Sequence, Tuple, Union

from sympy.combinatorics import Permutation

from sft_sdk.signs.convention import Convention
from sft_sdk.tuples import CRTupleShape, OrbitLabel, Side, grading_of, ind_pm, ind_total


def _power(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _pair_parity(gradings: Sequence[int]) -> int:
    """Σ_{a<b} g_a·g_b mod 2, i.e. the number of odd pairs."""
    odd = sum(1 for g in gradings if g % 2)
    return (odd * (odd - 1) // 2) % 2


def reorder_sign(gradings: Sequence[int], perm: Sequence[int]) -> int:
    """
    Koszul sign of re-listing a graded word.

    ``perm[k]`` is the old position of the symbol placed at new position ``k``.
    The sign is (−1) to the number of inversions between odd symbols.
    """
    size = len(gradings)
    if sorted(perm) != list(range(size)):
        raise ValueError(f"{list(perm)} is not a permutation of {size} positions")
    odd_order = [old for old in perm if gradings[old] % 2]
    if len(odd_order) < 2:
        return 1
    rank = {old: r for r, old in enumerate(sorted(odd_order))}
    return Permutation([rank[old] for old in odd_order]).signature()


def swap_ends_sign(shape: CRTupleShape, i: int, side: Union[Side, str]) -> int:
    """Sign of exchanging ends ``i`` and ``i + 1`` (0-based) on one side."""
    gradings = shape.gradings(side)
    if i < 0 or i + 1 >= len(gradings):
        raise IndexError(f"Cannot swap ends {i} and {i + 1} on side {Side.parse(side)} with {len(gradings)} ends")
    return _power(gradings[i] * gradings[i + 1])


def disjoint_sign(first: CRTupleShape, second: CRTupleShape, convention: Union[Convention, str] = Convention.HT) -> int:
    convention = Convention.parse(convention)
    if convention is Convention.HT:
        return _power(ind_pm(first, Side.MINUS) * ind_total(second))
    return _power(ind_pm(first, Side.MINUS) * ind_pm(second, Side.PLUS))


def disjoint_swap_sign(first: CRTupleShape, second: CRTupleShape) -> int:
    """Koszul sign of listing the ends of second ⊔ first in the order of first ⊔ second."""
    sign = 1
    for side in (Side.PLUS, Side.MINUS):
        word = first.gradings(side) + second.gradings(side)
        k = len(first.ends(side))
        swapped = list(range(k, len(word))) + list(range(k))
        sign *= reorder_sign(word, swapped)
    return sign


def _same_end(a, b) -> bool:
    if isinstance(a, OrbitLabel) and isinstance(b, OrbitLabel):
        return a.id == b.id
    return grading_of(a) == grading_of(b)


def _check_profile(glued_neg: Sequence, glued_pos: Sequence) -> None:
    if len(glued_neg) != len(glued_pos) or not all(_same_end(a, b) for a, b in zip(glued_neg, glued_pos)):
        raise ValueError(
            f"Gluing profile mismatch: negative ends {[str(e) for e in glued_neg]} "
            f"against positive ends {[str(e) for e in glued_pos]}"
        )


def gluing_sign(upper: CRTupleShape, lower: CRTupleShape, convention: Union[Convention, str] = Convention.HT) -> int:
    """Sign of completely gluing all negative ends of ``upper`` to the positive ends of ``lower``."""
    convention = Convention.parse(convention)
    _check_profile(upper.neg, lower.pos)
    if convention is Convention.HT:
        return 1
    return _power(_pair_parity(upper.neg_gradings))


def partial_glue_signs(
        upper: CRTupleShape,
        lower: CRTupleShape,
        tau: int,
        convention: Union[Convention, str] = Convention.HT
        ) -> Tuple[int, int]:
    """
    (gconst, dconst) for gluing the first ``tau`` negative ends of ``upper``
    to the last ``tau`` positive ends of ``lower``.

    For HT the disjoint-union correction sums the gradings of the
    k′₊ − τ positive ends of ``lower`` that stay unglued.
    """
    convention = Convention.parse(convention)
    if tau < 0 or tau > upper.k_minus or tau > lower.k_plus:
        raise ValueError(f"Cannot glue along {tau} ends: upper has {upper.k_minus} negative, lower has {lower.k_plus} positive")
    unglued = lower.k_plus - tau
    _check_profile(upper.neg[:tau], lower.pos[unglued:])

    upper_pos = upper.pos_gradings
    upper_neg = upper.neg_gradings
    lower_pos = lower.pos_gradings
    lower_neg = lower.neg_gradings

    if convention is Convention.HT:
        return 1, _power(sum(lower_pos[:unglued]) * ind_total(upper))

    gconst = _power(_pair_parity(upper_neg[:tau]))
    exponent = (
        _pair_parity(lower_pos[:tau])
        + sum(lower_pos[:tau]) * sum(upper_pos)
        + _pair_parity(upper_neg[tau:])
        + sum(lower_neg) * sum(upper_neg[tau:])
    )
    return gconst, _power(exponent)


def boundary_sign(
        upper: CRTupleShape,
        lower: CRTupleShape,
        tau: int,
        convention: Union[Convention, str] = Convention.HT
        ) -> int:
    """gconst·dconst·(−1)^{ind Tu}: how gluing compares with the boundary orientation."""
    gconst, dconst = partial_glue_signs(upper, lower, tau, convention)
    return gconst * dconst * _power(ind_total(upper))
