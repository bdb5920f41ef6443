# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import yaml

from sft_sdk.tuples import CurveShape, OrbitLabel, check_grading, validate_rigid

logger = logging.getLogger(__name__)


class DatasetError(ValueError):
    """Schema or invariant violation in a dataset; the message names file and record."""


@dataclass(frozen=True)
class CurveRecord:
    """A signed count of rigid curves with fixed genus, puncture tuples and class."""
    index: int
    shape: CurveShape
    count: Fraction
    rigid: bool = True

    @property
    def genus(self) -> int:
        return self.shape.genus

    @property
    def pos(self) -> Tuple[OrbitLabel, ...]:
        return self.shape.pos

    @property
    def neg(self) -> Tuple[OrbitLabel, ...]:
        return self.shape.neg

    @property
    def homology(self) -> Tuple[int, ...]:
        return self.shape.homology


@dataclass(frozen=True)
class Dataset:
    n: int
    h2_rank: int
    orbits: Tuple[OrbitLabel, ...]
    curves: Tuple[CurveRecord, ...]
    geometry_consistent: bool = False
    source: str = "<memory>"

    def orbit(self, orbit_id: str) -> OrbitLabel:
        for orbit in self.orbits:
            if orbit.id == orbit_id:
                return orbit
        raise KeyError(f"{self.source}: unknown orbit id {orbit_id!r}")

    def relabel(self, orbits: Sequence[OrbitLabel]) -> "Dataset":
        """Replace the orbit table (same ids) and rebuild every record against it."""
        table = {o.id: o for o in orbits}
        if set(table) != {o.id for o in self.orbits}:
            raise DatasetError(f"{self.source}: relabelling must keep the orbit ids")
        curves = tuple(
            replace(
                record,
                shape=replace(
                    record.shape,
                    pos=tuple(table[o.id] for o in record.pos),
                    neg=tuple(table[o.id] for o in record.neg),
                ),
            )
            for record in self.curves
        )
        return replace(self, orbits=tuple(table[o.id] for o in self.orbits), curves=curves)

    def with_gradings(self, gradings: Sequence[int]) -> "Dataset":
        if len(gradings) != len(self.orbits):
            raise DatasetError(f"{self.source}: expected {len(self.orbits)} gradings, got {len(gradings)}")
        return self.relabel([replace(o, grading=int(d)) for o, d in zip(self.orbits, gradings)])

    def with_sort_keys(self, keys: Mapping[str, int]) -> "Dataset":
        return self.relabel([replace(o, sort_key=int(keys[o.id])) for o in self.orbits])


def _fail(source: str, where: str, message: str):
    raise DatasetError(f"{source}: {where}: {message}")


def _as_int(value: Any, source: str, where: str, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(source, where, f"'{name}' must be an integer, got {value!r}")
    return value


def _parse_count(value: Any, source: str, where: str) -> Fraction:
    if isinstance(value, bool):
        _fail(source, where, f"'count' must be an integer, a list of signs or 'num/den', got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, list):
        if any(v not in (1, -1) or isinstance(v, bool) for v in value):
            _fail(source, where, f"'count' sign list may only contain +1 and -1, got {value!r}")
        return Fraction(sum(value))
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            pass
    _fail(source, where, f"'count' must be an integer, a list of signs or 'num/den', got {value!r}")


def _parse_orbits(entries: Any, n: int, gradings: Optional[Sequence[int]], source: str) -> List[OrbitLabel]:
    if not isinstance(entries, list):
        _fail(source, "orbits", "must be a list")
    if gradings is not None and len(gradings) != len(entries):
        _fail(source, "gradings", f"expected {len(entries)} values, got {len(gradings)}")
    orbits: List[OrbitLabel] = []
    seen_keys: Dict[int, str] = {}
    for i, entry in enumerate(entries):
        where = f"orbits[{i}]"
        if not isinstance(entry, dict):
            _fail(source, where, "must be a mapping")
        unknown = set(entry) - {"id", "grading", "mu_cz", "multiplicity", "sort_key"}
        if unknown:
            _fail(source, where, f"unknown keys {sorted(unknown)}")
        orbit_id = entry.get("id")
        if not isinstance(orbit_id, str) or not orbit_id:
            _fail(source, where, "'id' must be a non-empty string")
        if any(o.id == orbit_id for o in orbits):
            _fail(source, where, f"duplicate orbit id {orbit_id!r}")
        mu_cz = entry.get("mu_cz")
        if mu_cz is not None:
            mu_cz = _as_int(mu_cz, source, where, "mu_cz")
        if gradings is not None:
            grading = gradings[i]
        elif "grading" in entry:
            grading = entry["grading"]
        elif mu_cz is not None:
            grading = (mu_cz + n - 1) % 2
        else:
            _fail(source, where, "'grading' is required when 'mu_cz' is absent")
        if grading not in (0, 1) or isinstance(grading, bool):
            _fail(source, where, f"'grading' must be 0 or 1, got {grading!r}")
        multiplicity = _as_int(entry.get("multiplicity", 1), source, where, "multiplicity")
        if multiplicity < 1:
            _fail(source, where, f"'multiplicity' must be >= 1, got {multiplicity}")
        sort_key = _as_int(entry.get("sort_key", i), source, where, "sort_key")
        if sort_key in seen_keys:
            _fail(source, where, f"sort_key {sort_key} already used by orbit {seen_keys[sort_key]!r}")
        seen_keys[sort_key] = orbit_id
        orbit = OrbitLabel(orbit_id, grading, multiplicity, sort_key, mu_cz)
        if not check_grading(orbit, n):
            _fail(source, where, f"grading {grading} disagrees with mu_cz {mu_cz} + n - 1 = {mu_cz + n - 1}")
        orbits.append(orbit)
    return orbits


def _parse_curve(entry: Any, index: int, n: int, h2_rank: int, table: Dict[str, OrbitLabel], source: str) -> CurveRecord:
    where = f"curves[{index}]"
    if not isinstance(entry, dict):
        _fail(source, where, "must be a mapping")
    unknown = set(entry) - {"genus", "pos", "neg", "homology", "count", "c1", "rigid"}
    if unknown:
        _fail(source, where, f"unknown keys {sorted(unknown)}")
    genus = _as_int(entry.get("genus", 0), source, where, "genus")
    if genus < 0:
        _fail(source, where, f"'genus' must be >= 0, got {genus}")
    ends = {}
    for side in ("pos", "neg"):
        ids = entry.get(side, [])
        if not isinstance(ids, list):
            _fail(source, where, f"'{side}' must be a list of orbit ids")
        for orbit_id in ids:
            if orbit_id not in table:
                _fail(source, where, f"unknown orbit id {orbit_id!r} in '{side}'")
        orbits = tuple(table[orbit_id] for orbit_id in ids)
        odd_ids = [o.id for o in orbits if o.odd]
        if len(odd_ids) != len(set(odd_ids)):
            _fail(source, where, f"'{side}' repeats an odd orbit, the monomial vanishes identically")
        ends[side] = orbits
    if not ends["pos"]:
        _fail(source, where, "a curve needs at least one positive puncture")
    homology = entry.get("homology", [0] * h2_rank)
    if not isinstance(homology, list) or len(homology) != h2_rank:
        _fail(source, where, f"'homology' must be a list of {h2_rank} integers, got {homology!r}")
    homology = [_as_int(a, source, where, "homology") for a in homology]
    if "count" not in entry:
        _fail(source, where, "'count' is required")
    count = _parse_count(entry["count"], source, where)
    c1 = _as_int(entry.get("c1", 0), source, where, "c1")
    rigid = entry.get("rigid", True)
    if not isinstance(rigid, bool):
        _fail(source, where, f"'rigid' must be a boolean, got {rigid!r}")
    shape = CurveShape(pos=ends["pos"], neg=ends["neg"], genus=genus, c1=c1, n=n, homology=tuple(homology))
    if rigid and not validate_rigid(shape):
        _fail(source, where, "total grading of a rigid record must be odd")
    return CurveRecord(index=index, shape=shape, count=count, rigid=rigid)


def dataset_from_mapping(data: Any, source: str = "<memory>", gradings: Optional[Sequence[int]] = None) -> Dataset:
    """Validate a parsed dataset document."""
    if not isinstance(data, dict):
        _fail(source, "document", "top level must be a mapping")
    unknown = set(data) - {"n", "h2_rank", "orbits", "curves", "flags"}
    if unknown:
        _fail(source, "document", f"unknown keys {sorted(unknown)}")
    if "n" not in data:
        _fail(source, "document", "'n' is required")
    n = _as_int(data["n"], source, "document", "n")
    if n < 1:
        _fail(source, "document", f"'n' must be >= 1, got {n}")
    h2_rank = _as_int(data.get("h2_rank", 0), source, "document", "h2_rank")
    if h2_rank < 0:
        _fail(source, "document", f"'h2_rank' must be >= 0, got {h2_rank}")
    orbits = _parse_orbits(data.get("orbits", []), n, gradings, source)
    table = {o.id: o for o in orbits}
    entries = data.get("curves", [])
    if not isinstance(entries, list):
        _fail(source, "curves", "must be a list")
    curves = tuple(_parse_curve(entry, i, n, h2_rank, table, source) for i, entry in enumerate(entries))
    flags = data.get("flags", {}) or {}
    if not isinstance(flags, dict):
        _fail(source, "flags", "must be a mapping")
    consistent = flags.get("geometry_consistent", False)
    if not isinstance(consistent, bool):
        _fail(source, "flags", f"'geometry_consistent' must be a boolean, got {consistent!r}")
    logger.debug(f"Loaded {source}: {len(orbits)} orbits, {len(curves)} curves")
    return Dataset(
        n=n,
        h2_rank=h2_rank,
        orbits=tuple(orbits),
        curves=curves,
        geometry_consistent=consistent,
        source=source,
    )


def load_dataset(path: Union[str, Path], gradings: Optional[Sequence[int]] = None) -> Dataset:
    """
    Load a dataset from JSON (or the equivalent YAML) and validate it.
    ``gradings`` overrides the orbit gradings in declaration order.
    """
    path = Path(path)
    if not path.is_file():
        raise DatasetError(f"{path}: file not found")
    with open(path, "r") as file:
        try:
            data = yaml.safe_load(file)
        except yaml.YAMLError as e:
            raise DatasetError(f"{path}: document: cannot parse: {e}")
    return dataset_from_mapping(data, source=str(path), gradings=gradings)


def random_dataset(
        rng: random.Random,
        max_orbits: int = 5,
        max_curves: int = 6,
        max_genus: int = 1,
        h2_rank: int = 1,
        n: int = 2
        ) -> Dataset:
    """Random parity-valid dataset with unit multiplicities, for sweeping identities."""
    size = rng.randint(2, max_orbits)
    gradings = [rng.randint(0, 1) for _ in range(size)]
    if not any(gradings):
        gradings[rng.randrange(size)] = 1
    orbits = [OrbitLabel(f"g{i + 1}", gradings[i], 1, i) for i in range(size)]
    target = rng.randint(1, max_curves)
    curves: List[CurveRecord] = []
    while len(curves) < target:
        pos = tuple(rng.choice(orbits) for _ in range(rng.randint(1, 3)))
        neg = tuple(rng.choice(orbits) for _ in range(rng.randint(0, 3)))
        if any(len([o for o in side if o.odd and o == x]) > 1 for side in (pos, neg) for x in side):
            continue
        shape = CurveShape(
            pos=pos,
            neg=neg,
            genus=rng.randint(0, max_genus),
            n=n,
            homology=tuple(rng.randint(0, 1) for _ in range(h2_rank)),
        )
        if not validate_rigid(shape):
            continue
        curves.append(CurveRecord(index=len(curves), shape=shape, count=Fraction(rng.choice([-2, -1, 1, 2, 3]))))
    return Dataset(n=n, h2_rank=h2_rank, orbits=tuple(orbits), curves=tuple(curves), source="<random>")
