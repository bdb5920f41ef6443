# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from enum import Enum
from typing import Union


class Convention(Enum):
    """Coherent orientation convention: ``HT`` (the default) or ``BM``."""
    HT = "ht"
    BM = "bm"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, value: Union["Convention", str]) -> "Convention":
        if isinstance(value, Convention):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"Unknown convention {value!r}; expected one of: ht, bm")
