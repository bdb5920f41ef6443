# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import logging
from typing import Dict, Optional, Type

logger = logging.getLogger(__name__)

class_registry: Dict[str, Type] = {}


def register_class(cls: Optional[Type] = None, *, name: Optional[str] = None):
    """
    Register a class in the registry.

    The key is ``name`` when given, otherwise the class's ``__name__``.
    Called without ``cls`` it returns a decorator, so both ``@register_class``
    and ``@register_class(name="h-square")`` work.
    :param cls: The class to register.
    :param name: Optional registry key.
    :return: The class itself.
    """
    if cls is None:
        return lambda cls: register_class(cls, name=name)

    class_name = name if name else cls.__name__
    if class_name in class_registry and class_registry[class_name] is not cls:
        logger.debug(f"Replacing registry entry {class_name} with {cls.__qualname__}")
    class_registry[class_name] = cls
    return cls


def create_instance(class_name: str, *args, **kwargs):
    """
    Create an instance of a registered class by its registry key.

    Args:
        class_name (str): Registry key, e.g. a subcommand name.
        *args: Positional arguments forwarded to the constructor.
        **kwargs: Keyword arguments forwarded to the constructor,
                  typically ``name`` and ``definition``.

    Returns:
        object: New instance of the registered class.

    Raises:
        ValueError: If nothing is registered under ``class_name``.
    """
    cls = class_registry.get(class_name)
    if cls is None:
        known = ", ".join(sorted(class_registry))
        raise ValueError(f"Class {class_name} not found in registry (known: {known})")
    return cls(*args, **kwargs)


def get_classes_by_base(base_class_name: str) -> Dict[str, Type]:
    """
    Return all registered classes inheriting (directly or indirectly) from the named base.
    :param base_class_name: The name of the base class to filter by.
    :return: A dict mapping registry keys to classes.
    """
    result = {}
    for key, cls in class_registry.items():
        ancestor_names = [c.__name__ for c in cls.__mro__[1:]]
        if base_class_name in ancestor_names:
            result[key] = cls
    return result

