# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from enum import Enum, auto
from typing import Any, Optional


class SftComponentState(Enum):
    INITIALIZED = auto()
    PREPARING = auto()
    PREPARED = auto()
    RUNNING = auto()
    FINISHED = auto()
    FAULT = auto()

    def __str__(self):
        return self.name

    def __repr__(self):
        return self.name


class SftComponent:
    """
    A named, configurable unit of work with a two-step lifecycle.

    Attributes:
        name (str): Name of this component instance, used in messages.
        definition (Any): Options mapping used to populate the instance.
        state (SftComponentState): Current lifecycle state.

    Subclasses declare their options as attributes before calling
    ``super().__init__``; ``_populate`` then assigns the definition over them and
    refuses keys that were never declared. ``prepare`` runs ``on_prepare`` and
    ``run`` runs ``on_run``; a fault raised during ``on_run`` sticks.
    """
    def __init__(self, name: Optional[str] = None, definition: Optional[Any] = None):
        self.name = name if name is not None else self.__class__.__name__
        self.definition: Any = definition
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}.{self.name}")
        self.state = SftComponentState.INITIALIZED
        self._populate(self.definition)
        self.logger.debug(f"Created {self.__class__.__name__}(name={self.name}, definition={self.definition!r})")

    def on_prepare(self) -> None:
        """Validate options and load inputs."""

    def on_run(self) -> None:
        """Do the work."""

    def prepare(self) -> None:
        self.logger.debug(f"Preparing {self.name}")
        self.state = SftComponentState.PREPARING
        self.on_prepare()
        self.state = SftComponentState.PREPARED

    def run(self) -> None:
        if self.state is not SftComponentState.PREPARED:
            raise RuntimeError(f"{self.name} must be prepared before it runs (state {self.state})")
        self.logger.debug(f"Running {self.name}")
        self.state = SftComponentState.RUNNING
        self.on_run()
        if self.state is not SftComponentState.FAULT:
            self.state = SftComponentState.FINISHED

    def fault(self, message: str) -> None:
        """Mark the component as failed and log why."""
        self.state = SftComponentState.FAULT
        self.logger.error(f"{self.name}: {message}")

    def _populate(self, definition: Optional[dict]):
        """Assign each key of the definition onto an option declared by the subclass."""
        if definition is None:
            return
        if not isinstance(definition, dict):
            raise ValueError(f"Definition of '{self.name}' must be a mapping, got {type(definition).__name__}")
        for key, value in definition.items():
            if key.startswith("_") or not hasattr(self, key):
                raise AttributeError(f"Cannot set undefined attribute '{key}' on '{self.name}'")
            setattr(self, key, value)

    def __repr__(self):
        return f"{self.__class__.__name__}(name='{self.name}', state={self.state.name})"
