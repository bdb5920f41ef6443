# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import json
import random
from typing import Any, Dict, List, Optional, Sequence, Union

import yaml

from sft_sdk.boundary import claim_check
from sft_sdk.cli.dataset import Dataset, load_dataset, random_dataset
from sft_sdk.components import SftComponent
from sft_sdk.czindex import conley_zehnder, is_admissible, load_loop, solve_symplectic_path, spectral_gap
from sft_sdk.detline import run_selftest
from sft_sdk.registry import register_class
from sft_sdk.signs import Convention
from sft_sdk.tuples import fredholm_index, ind_total, virtual_dimension
from sft_sdk.weyl import (
    WeylElement,
    build_hamiltonian,
    capping_change,
    contact_d,
    contact_d_squared,
    h_square,
    p,
    q,
    restrict_sector,
    super_commutator,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2

OUTPUTS = ("json", "text")


def parse_gradings(value: Union[None, str, Sequence[int]]) -> Optional[List[int]]:
    """``"1,0,1"`` or a list of 0/1 values."""
    if value is None:
        return None
    items = value.split(",") if isinstance(value, str) else list(value)
    try:
        gradings = [int(item) for item in items]
    except (TypeError, ValueError):
        raise ValueError(f"Gradings must be a comma separated list of 0 and 1, got {value!r}")
    if any(d not in (0, 1) for d in gradings):
        raise ValueError(f"Gradings must be 0 or 1, got {value!r}")
    return gradings


def parse_eps(value: Union[None, str, Dict[str, int]]) -> Dict[str, int]:
    """``"g1=-1,g2=1"`` or a mapping of orbit id to ±1."""
    if value is None:
        return {}
    if isinstance(value, dict):
        pairs = list(value.items())
    else:
        pairs = []
        for item in filter(None, (part.strip() for part in value.split(","))):
            if "=" not in item:
                raise ValueError(f"Capping sign {item!r} must look like ID=+1 or ID=-1")
            key, _, sign = item.partition("=")
            pairs.append((key.strip(), sign.strip()))
    result = {}
    for key, sign in pairs:
        try:
            sign = int(sign)
        except (TypeError, ValueError):
            raise ValueError(f"Capping sign for orbit {key} must be +1 or -1, got {sign!r}")
        if sign not in (1, -1):
            raise ValueError(f"Capping sign for orbit {key} must be +1 or -1, got {sign!r}")
        result[key] = sign
    return result


class Command(SftComponent):
    """
    A subcommand: ``prepare`` loads and validates the inputs, ``run`` computes
    the report and the exit code. Options are declared as attributes and filled
    from the definition.
    """

    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.out = "json"
        self._report: Dict[str, Any] = {}
        self._exit_code = EXIT_OK
        super().__init__(name, definition)

    @property
    def report(self) -> Dict[str, Any]:
        return self._report

    @property
    def exit_code(self) -> int:
        return self._exit_code

    def load(self) -> None:
        """Read input files; overridden by commands that have any."""

    def execute(self) -> None:
        raise NotImplementedError(f"{self.__class__.__name__} does not implement execute()")

    def on_prepare(self) -> None:
        if self.out not in OUTPUTS:
            raise ValueError(f"Unknown output format {self.out!r}; expected one of: {', '.join(OUTPUTS)}")
        self.load()

    def on_run(self) -> None:
        self.execute()

    def finish(self, report: Dict[str, Any], failed: bool = False) -> None:
        self._report = report
        self._exit_code = EXIT_FAILURE if failed else EXIT_OK
        if failed:
            self.fault("verification failed")

    def text(self) -> str:
        return yaml.safe_dump(self._report, sort_keys=True, default_flow_style=False).rstrip("\n")

    def render(self) -> str:
        if self.out == "json":
            return json.dumps(self._report, sort_keys=True, indent=2)
        return self.text()


class DatasetCommand(Command):
    """A command reading one dataset, with optional grading overrides."""

    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.dataset: Optional[str] = None
        self.gradings: Union[None, str, List[int]] = None
        self._data: Optional[Dataset] = None
        super().__init__(name, definition)

    @property
    def data(self) -> Dataset:
        if self._data is None:
            raise ValueError(f"{self.name} has not been prepared")
        return self._data

    def load(self) -> None:
        if self.dataset is None:
            raise ValueError(f"{self.name} needs a dataset file")
        self._data = load_dataset(self.dataset, parse_gradings(self.gradings))
        self.logger.debug(f"Loaded {len(self.data.orbits)} orbits and {len(self.data.curves)} curves")


@register_class(name="hamiltonian")
class HamiltonianCommand(DatasetCommand):
    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.h_prefactor = "none"
        self._element = WeylElement()
        super().__init__(name, definition)

    def compute(self) -> WeylElement:
        return build_hamiltonian(self.data, self.h_prefactor)

    def execute(self) -> None:
        self._element = self.compute()
        self.finish({
            "dataset": self.data.source,
            "terms": self._element.to_records(self.data.h2_rank),
            "zero": not self._element,
        })

    def text(self) -> str:
        return self._element.format_text()


@register_class(name="h-square")
class HSquareCommand(HamiltonianCommand):
    """H·H; a nonzero result fails on datasets flagged geometry-consistent."""

    def compute(self) -> WeylElement:
        return h_square(self.data, self.h_prefactor)

    def execute(self) -> None:
        super().execute()
        self._report["geometry_consistent"] = self.data.geometry_consistent
        if self.data.geometry_consistent and self._element:
            self.finish(self._report, failed=True)


@register_class(name="claim-check")
class ClaimCheckCommand(DatasetCommand):
    """Coefficients of H·H against minus the signed boundary counts, on a file or on random datasets."""

    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.convention = "ht"
        self.weighted = False
        self.random = 0
        self.seed = 0
        self.max_orbits = 5
        self.max_curves = 6
        super().__init__(name, definition)

    def load(self) -> None:
        Convention.parse(self.convention)
        if self.random:
            if self.dataset is not None:
                raise ValueError("Use either a dataset file or --random, not both")
            return
        super().load()

    def execute(self) -> None:
        if not self.random:
            report = claim_check(self.data, self.convention, bool(self.weighted))
            self.finish({
                "dataset": self.data.source,
                "convention": str(report.convention),
                "weighted": bool(self.weighted),
                "profiles": len(report.entries),
                "skipped": report.skipped,
                "failures": len(report.failures()),
                "entries": report.to_records(self.data.h2_rank),
            }, failed=not report.passed)
            return
        rng = random.Random(self.seed)
        failures = []
        profiles = 0
        for index in range(self.random):
            ds = random_dataset(rng, self.max_orbits, self.max_curves)
            report = claim_check(ds, self.convention, bool(self.weighted))
            profiles += len(report.entries)
            if not report.passed:
                failures.append({
                    "dataset": index,
                    "entries": [entry.to_record(ds.h2_rank, with_triples=True) for entry in report.failures()],
                })
        self.logger.debug(f"Random claim sweep: {self.random} datasets, {profiles} profiles")
        self.finish({
            "convention": str(Convention.parse(self.convention)),
            "weighted": bool(self.weighted),
            "seed": self.seed,
            "datasets": self.random,
            "profiles": profiles,
            "failures": failures,
        }, failed=bool(failures))


@register_class(name="chom-d")
class ContactDCommand(DatasetCommand):
    """Contact-homology differential of one orbit, or of every orbit."""

    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.orbit: Optional[str] = None
        self.convention = "ht"
        self._elements: Dict[str, WeylElement] = {}
        super().__init__(name, definition)

    @property
    def reverse(self) -> bool:
        return Convention.parse(self.convention) is Convention.BM

    def selected(self):
        return [self.data.orbit(self.orbit)] if self.orbit is not None else list(self.data.orbits)

    def compute(self, orbit) -> WeylElement:
        return contact_d(self.data, orbit, self.reverse)

    def execute(self) -> None:
        self._elements = {orbit.id: self.compute(orbit) for orbit in self.selected()}
        self.finish({
            "dataset": self.data.source,
            "convention": str(Convention.parse(self.convention)),
            "values": {key: element.to_records(self.data.h2_rank) for key, element in self._elements.items()},
        })

    def text(self) -> str:
        return "\n".join(f"{key}: {element.format_text()}" for key, element in self._elements.items())


@register_class(name="chom-d2")
class ContactDSquaredCommand(ContactDCommand):
    """∂² of every selected orbit together with the genus-0, p-linear part of H·H."""

    def compute(self, orbit) -> WeylElement:
        return contact_d_squared(self.data, orbit, self.reverse)

    def execute(self) -> None:
        super().execute()
        sector = restrict_sector(h_square(self.data), hbar=-1, p_degree=1)
        self._report["h_square_sector"] = sector.to_records(self.data.h2_rank)
        self._report["zero"] = not sector and not any(self._elements.values())
        self._report["geometry_consistent"] = self.data.geometry_consistent
        if self.data.geometry_consistent and not self._report["zero"]:
            self.finish(self._report, failed=True)


@register_class(name="index")
class IndexCommand(DatasetCommand):
    """Fredholm index and virtual dimension of every record, where μ_CZ is known."""

    def execute(self) -> None:
        records = []
        failed = False
        for record in self.data.curves:
            shape = record.shape
            entry = {"curve": record.index, "rigid": record.rigid, "ind_parity": ind_total(shape)}
            if all(o.mu_cz is not None for o in shape.pos + shape.neg):
                mu_pos = [o.mu_cz for o in shape.pos]
                mu_neg = [o.mu_cz for o in shape.neg]
                index = fredholm_index(shape, mu_pos, mu_neg)
                virdim = virtual_dimension(shape, mu_pos, mu_neg)
                entry.update({
                    "fredholm_index": index,
                    "virtual_dimension": virdim,
                    "parity_consistent": index % 2 == ind_total(shape) == virdim % 2,
                    "virdim_one": virdim == 1 if record.rigid else None,
                })
                failed = failed or not entry["parity_consistent"]
            else:
                entry.update({"fredholm_index": None, "virtual_dimension": None, "parity_consistent": None, "virdim_one": None})
            records.append(entry)
        self.finish({"dataset": self.data.source, "n": self.data.n, "curves": records}, failed=failed)


@register_class(name="cz")
class ConleyZehnderCommand(Command):
    """Admissibility, μ_CZ, spectral gap and grading of one loop file."""

    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.loop: Optional[str] = None
        self.steps = 256
        self.modes = 128
        self.n: Optional[int] = None
        self._symmetric_loop = None
        super().__init__(name, definition)

    def load(self) -> None:
        if self.loop is None:
            raise ValueError("cz needs a loop file (--loop PATH)")
        self._symmetric_loop = load_loop(self.loop)

    def execute(self) -> None:
        loop = self._symmetric_loop
        path = solve_symplectic_path(loop, self.steps)
        report = {
            "loop": str(self.loop),
            "dim": loop.dim,
            "steps": self.steps,
            "modes": self.modes,
            "symplecticity_defect": path.symplecticity_defect(),
            "admissible": is_admissible(loop, self.steps),
            "mu_cz": None,
            "lambda": None,
            "grading": None,
        }
        if report["admissible"]:
            mu = conley_zehnder(loop, self.steps)
            n = self.n if self.n is not None else loop.half_dimension
            report.update({
                "mu_cz": mu,
                "lambda": spectral_gap(loop, self.modes, self.steps),
                "grading": (mu + n - 1) % 2,
            })
        self.finish(report, failed=not report["admissible"])


@register_class(name="detline-selftest")
class DetlineSelftestCommand(Command):
    """Seeded property sweep of the determinant-line identities."""

    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.seed = 0
        self.count = 200
        self.max_dim = 4
        super().__init__(name, definition)

    def execute(self) -> None:
        report = run_selftest(self.seed, self.count, self.max_dim)
        self.finish(report.to_record(), failed=not report.passed)


@register_class(name="capping-change")
class CappingChangeCommand(DatasetCommand):
    """
    Rescale the generators by capping signs and check that the rescaling
    commutes with the bracket against H for every generator.
    """

    def __init__(self, name: Optional[str] = None, definition: Optional[dict] = None):
        self.eps: Union[None, str, Dict[str, int]] = None
        self.h_prefactor = "none"
        super().__init__(name, definition)

    def execute(self) -> None:
        eps = parse_eps(self.eps)
        for orbit_id in eps:
            self.data.orbit(orbit_id)
        hamiltonian = build_hamiltonian(self.data, self.h_prefactor)
        changed = capping_change(eps, hamiltonian)
        failures = []
        checks = 0
        for orbit in self.data.orbits:
            for generator in (q(orbit), p(orbit)):
                g = WeylElement.generator(generator)
                left = capping_change(eps, super_commutator(hamiltonian, g))
                right = super_commutator(changed, capping_change(eps, g))
                checks += 1
                if left != right:
                    failures.append(str(generator))
        self.finish({
            "dataset": self.data.source,
            "eps": dict(sorted(eps.items())),
            "hamiltonian": changed.to_records(self.data.h2_rank),
            "checks": checks,
            "failures": failures,
        }, failed=bool(failures))
