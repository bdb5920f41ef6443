# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, Optional

from sft_sdk.tuples import OrbitLabel, validate_rigid
from sft_sdk.weyl.element import WeylElement, mul, normal_order, p, q

if TYPE_CHECKING:
    from sft_sdk.cli.dataset import Dataset

logger = logging.getLogger(__name__)

PREFACTORS = ("none", "inv-mneg")


def _negative_multiplicity(record) -> int:
    product = 1
    for orbit in record.shape.neg:
        product *= orbit.multiplicity
    return product


def build_hamiltonian(ds: "Dataset", prefactor: str = "none") -> WeylElement:
    """
    H = Σ count(u) · q_{γ₋} p_{γ₊†} e^A ℏ^{g−1} over the rigid records.

    ``prefactor="inv-mneg"`` additionally divides each term by m(γ₋).
    """
    if prefactor not in PREFACTORS:
        raise ValueError(f"Unknown Hamiltonian prefactor {prefactor!r}; expected one of: {', '.join(PREFACTORS)}")
    result = WeylElement()
    for record in ds.curves:
        if not record.rigid:
            logger.debug(f"Skipping non-rigid record curves[{record.index}]")
            continue
        if not validate_rigid(record.shape):
            raise ValueError(
                f"curves[{record.index}]: total grading of a rigid record must be odd"
            )
        coeff = Fraction(record.count)
        if prefactor == "inv-mneg":
            coeff /= _negative_multiplicity(record)
        word = [q(o) for o in record.shape.neg] + [p(o) for o in reversed(record.shape.pos)]
        result = result + normal_order(word, coeff, record.shape.genus - 1, record.shape.homology)
    return result


def h_square(ds: "Dataset", prefactor: str = "none") -> WeylElement:
    hamiltonian = build_hamiltonian(ds, prefactor)
    return mul(hamiltonian, hamiltonian)


def contact_d(ds: "Dataset", orbit: OrbitLabel, reverse: bool = False) -> WeylElement:
    """
    Contact-homology differential of one orbit as a q-polynomial:
    Σ count/m(γ₋) · e^A q_{γ₋}, over genus-0 records with the single positive end ``orbit``.
    ``reverse`` writes the negative word backwards.
    """
    result = WeylElement()
    for record in ds.curves:
        shape = record.shape
        if not record.rigid or shape.genus != 0 or len(shape.pos) != 1 or shape.pos[0].id != orbit.id:
            continue
        word = [q(o) for o in shape.neg]
        if reverse:
            word.reverse()
        coeff = Fraction(record.count) / _negative_multiplicity(record)
        result = result + normal_order(word, coeff, 0, shape.homology)
    return result


def contact_d_element(
        ds: "Dataset",
        f: WeylElement,
        reverse: bool = False,
        cache: Optional[Dict[str, WeylElement]] = None
        ) -> WeylElement:
    """
    Extend ∂ to a q-polynomial as an odd derivation:
    ∂(x₁…x_k) = Σ (−1)^{|x₁|+…+|x_{i−1}|} x₁…∂x_i…x_k.
    """
    cache = {} if cache is None else cache
    result = WeylElement()
    for monomial in f:
        if monomial.p_word:
            raise ValueError("The contact differential acts on q-polynomials only")
        factors = [WeylElement.generator(g) for g in monomial.q_word]
        prefix_grading = 0
        for i, gen in enumerate(monomial.q_word):
            if gen.orbit.id not in cache:
                cache[gen.orbit.id] = contact_d(ds, gen.orbit, reverse)
            term = WeylElement.scalar(monomial.coeff * (-1 if prefix_grading else 1), monomial.hbar, monomial.homology)
            for factor in factors[:i]:
                term = mul(term, factor)
            term = mul(term, cache[gen.orbit.id])
            for factor in factors[i + 1:]:
                term = mul(term, factor)
            result = result + term
            prefix_grading = (prefix_grading + gen.grading) % 2
    return result


def contact_d_squared(ds: "Dataset", orbit: OrbitLabel, reverse: bool = False) -> WeylElement:
    cache: Dict[str, WeylElement] = {}
    return contact_d_element(ds, contact_d(ds, orbit, reverse), reverse, cache)
