# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from sft_sdk.signs import reorder_sign
from sft_sdk.tuples import OrbitLabel

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class Kind(Enum):
    Q = "q"
    P = "p"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Generator:
    kind: Kind
    orbit: OrbitLabel

    @property
    def grading(self) -> int:
        return self.orbit.grading

    def __str__(self):
        return f"{self.kind.value}[{self.orbit.id}]"


def q(orbit: OrbitLabel) -> Generator:
    return Generator(Kind.Q, orbit)


def p(orbit: OrbitLabel) -> Generator:
    return Generator(Kind.P, orbit)


class MonomialKey(NamedTuple):
    """
    Normal-form key of a monomial q_{q} p_{p†} ℏ^hbar e^homology.

    Both orbit tuples are sorted ascending by sort_key; the p generators are
    written in the reverse order, so the word of the key is
    q[q0] q[q1] ... p[p_last] ... p[p0].
    """
    q: Tuple[OrbitLabel, ...]
    p: Tuple[OrbitLabel, ...]
    hbar: int
    homology: Tuple[int, ...]

    def word(self) -> Tuple[Generator, ...]:
        return tuple(Generator(Kind.Q, o) for o in self.q) + tuple(Generator(Kind.P, o) for o in reversed(self.p))

    def order(self):
        return (
            tuple(o.sort_key for o in self.q),
            tuple(o.sort_key for o in self.p),
            self.hbar,
            self.homology,
        )


def canonical_homology(vector: Sequence[int]) -> Tuple[int, ...]:
    """Strip trailing zeros so that every representation of a class compares equal."""
    values = [int(a) for a in vector]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def add_homology(first: Sequence[int], second: Sequence[int]) -> Tuple[int, ...]:
    size = max(len(first), len(second))
    padded_first = list(first) + [0] * (size - len(first))
    padded_second = list(second) + [0] * (size - len(second))
    return canonical_homology([a + b for a, b in zip(padded_first, padded_second)])


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"Weyl coefficients must be exact rationals, got {type(value).__name__}")


@dataclass(frozen=True)
class WeylMonomial:
    coeff: Fraction
    key: MonomialKey

    @property
    def q_word(self) -> Tuple[Generator, ...]:
        return tuple(Generator(Kind.Q, o) for o in self.key.q)

    @property
    def p_word(self) -> Tuple[Generator, ...]:
        return tuple(Generator(Kind.P, o) for o in reversed(self.key.p))

    @property
    def hbar(self) -> int:
        return self.key.hbar

    @property
    def homology(self) -> Tuple[int, ...]:
        return self.key.homology


def grade(monomial: Union[WeylMonomial, MonomialKey]) -> int:
    """Total Z2 grading; ℏ and e^A are even."""
    key = monomial.key if isinstance(monomial, WeylMonomial) else monomial
    return (sum(o.grading for o in key.q) + sum(o.grading for o in key.p)) % 2


class WeylElement:
    """
    Finite sum of normal-form monomials with exact rational coefficients.

    Instances are immutable; arithmetic returns new elements. Iteration yields
    WeylMonomial values in key order.
    """
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[MonomialKey, Scalar]] = None):
        cleaned: Dict[MonomialKey, Fraction] = {}
        for key, value in (terms or {}).items():
            value = _coerce(value)
            if value:
                cleaned[key] = value
        self._terms = cleaned

    @classmethod
    def scalar(cls, value: Scalar, hbar: int = 0, homology: Sequence[int] = ()) -> "WeylElement":
        return cls({MonomialKey((), (), hbar, canonical_homology(homology)): value})

    @classmethod
    def one(cls) -> "WeylElement":
        return cls.scalar(1)

    @classmethod
    def generator(cls, gen: Generator, coeff: Scalar = 1, hbar: int = 0) -> "WeylElement":
        return normal_order([gen], coeff, hbar)

    @property
    def terms(self) -> Dict[MonomialKey, Fraction]:
        return dict(self._terms)

    def coefficient(self, key: MonomialKey) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def keys(self) -> List[MonomialKey]:
        return sorted(self._terms, key=MonomialKey.order)

    def __iter__(self) -> Iterator[WeylMonomial]:
        for key in self.keys():
            yield WeylMonomial(self._terms[key], key)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == WeylElement.scalar(other)
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        total = dict(self._terms)
        for key, value in other._terms.items():
            total[key] = total.get(key, Fraction(0)) + value
        return WeylElement(total)

    def __neg__(self) -> "WeylElement":
        return WeylElement({key: -value for key, value in self._terms.items()})

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "WeylElement":
        factor = _coerce(factor)
        return WeylElement({key: factor * value for key, value in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def grades(self) -> set:
        return {grade(key) for key in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def grade(self) -> int:
        """Grade of a homogeneous element; the zero element counts as even."""
        grades = self.grades()
        if len(grades) > 1:
            raise ValueError("Element is not homogeneous in the Z2 grading")
        return grades.pop() if grades else 0

    def homogeneous_parts(self) -> Dict[int, "WeylElement"]:
        parts: Dict[int, Dict[MonomialKey, Fraction]] = {}
        for key, value in self._terms.items():
            parts.setdefault(grade(key), {})[key] = value
        return {g: WeylElement(terms) for g, terms in sorted(parts.items())}

    def filter(self, predicate: Callable[[MonomialKey], bool]) -> "WeylElement":
        return WeylElement({key: value for key, value in self._terms.items() if predicate(key)})

    def map_coefficients(self, function: Callable[[MonomialKey, Fraction], Scalar]) -> "WeylElement":
        return WeylElement({key: function(key, value) for key, value in self._terms.items()})

    def to_records(self, rank: Optional[int] = None) -> List[dict]:
        """JSON-ready terms; ``p`` lists ids in word order, ``A`` is padded to ``rank``."""
        records = []
        for monomial in self:
            homology = list(monomial.homology)
            if rank is not None:
                homology += [0] * (rank - len(homology))
            coeff = monomial.coeff
            records.append({
                "q": [g.orbit.id for g in monomial.q_word],
                "p": [g.orbit.id for g in monomial.p_word],
                "hbar": monomial.hbar,
                "A": homology,
                "coeff": f"{coeff.numerator}/{coeff.denominator}",
            })
        return records

    def format_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial in self:
            coeff = monomial.coeff
            factors = [str(g) for g in monomial.q_word + monomial.p_word]
            if monomial.hbar:
                factors.append(f"hbar^{monomial.hbar}")
            if monomial.homology:
                factors.append(f"e^{list(monomial.homology)}")
            sign = "-" if coeff < 0 else "+"
            parts.append(" ".join([f"{sign}{abs(coeff)}"] + factors))
        return " ".join(parts)

    def __repr__(self):
        return f"WeylElement({self.format_text()})"


def _accumulate(target: Dict, key, value: Fraction) -> None:
    total = target.get(key, Fraction(0)) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _repeats_odd(orbits: Sequence[OrbitLabel]) -> bool:
    return any(a == b and a.odd for a, b in zip(orbits, orbits[1:]))


def _finish(word: Tuple[Generator, ...], hbar: int, homology: Tuple[int, ...]) -> Tuple[Optional[MonomialKey], int]:
    """Sort an inversion-free word (all q before all p) into normal form."""
    split = sum(1 for g in word if g.kind is Kind.Q)
    q_part, p_part = word[:split], word[split:]
    q_order = sorted(range(len(q_part)), key=lambda i: q_part[i].orbit.sort_key)
    p_order = sorted(range(len(p_part)), key=lambda i: -p_part[i].orbit.sort_key)
    q_orbits = tuple(q_part[i].orbit for i in q_order)
    p_orbits = tuple(p_part[i].orbit for i in reversed(p_order))
    if _repeats_odd(q_orbits) or _repeats_odd(p_orbits):
        return None, 0
    perm = q_order + [split + i for i in p_order]
    sign = reorder_sign([g.grading for g in word], perm)
    return MonomialKey(q_orbits, p_orbits, hbar, homology), sign


def normal_order(
        word: Sequence[Generator],
        coeff: Scalar = 1,
        hbar: int = 0,
        homology: Sequence[int] = (),
        choose: Optional[Callable[[List[int]], int]] = None
        ) -> WeylElement:
    """
    Rewrite an interleaved generator word into normal form.

    Distinct-orbit neighbours swap with the Koszul sign (−1)^{|a||b|};
    p_γ q_γ becomes (−1)^{|γ|} q_γ p_γ + ℏ/m(γ). ``choose`` picks which of the
    remaining p-before-q positions is rewritten next (leftmost by default);
    the result does not depend on it.
    """
    homology = canonical_homology(homology)
    pending: Dict[Tuple[Tuple[Generator, ...], int], Fraction] = {(tuple(word), hbar): _coerce(coeff)}
    result: Dict[MonomialKey, Fraction] = {}
    steps = 0
    while pending:
        (current, power), value = pending.popitem()
        positions = [
            i for i in range(len(current) - 1)
            if current[i].kind is Kind.P and current[i + 1].kind is Kind.Q
        ]
        if not positions:
            key, sign = _finish(current, power, homology)
            if sign:
                _accumulate(result, key, sign * value)
            continue
        steps += 1
        i = positions[0] if choose is None else choose(positions)
        left, right = current[i], current[i + 1]
        swapped = current[:i] + (right, left) + current[i + 2:]
        if left.orbit == right.orbit:
            _accumulate(pending, (swapped, power), value * (-1 if left.grading else 1))
            contracted = current[:i] + current[i + 2:]
            _accumulate(pending, (contracted, power + 1), value / left.orbit.multiplicity)
        else:
            _accumulate(pending, (swapped, power), value * (-1 if left.grading * right.grading else 1))
    logger.debug(f"normal_order: {steps} rewrite steps, {len(result)} terms")
    return WeylElement(result)


def mul(f: WeylElement, g: WeylElement) -> WeylElement:
    """Product in the Weyl super-algebra: concatenate words, add ℏ and homology, normal order."""
    total: Dict[MonomialKey, Fraction] = {}
    for left_key in f.keys():
        left_word = left_key.word()
        left_value = f.coefficient(left_key)
        for right_key in g.keys():
            product = normal_order(
                left_word + right_key.word(),
                left_value * g.coefficient(right_key),
                left_key.hbar + right_key.hbar,
                add_homology(left_key.homology, right_key.homology),
            )
            for key, value in product.terms.items():
                _accumulate(total, key, value)
    return WeylElement(total)
