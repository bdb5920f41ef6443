# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from .component import SftComponent, SftComponentState

__all__ = ["SftComponent",
           "SftComponentState"
           ]
