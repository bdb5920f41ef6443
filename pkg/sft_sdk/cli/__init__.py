# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

from sft_sdk.cli.dataset import CurveRecord, Dataset, DatasetError, dataset_from_mapping, load_dataset, random_dataset
from sft_sdk.cli.commands import EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, Command, DatasetCommand
from sft_sdk.cli.main import main, run

__all__ = [
    "CurveRecord",
    "Dataset",
    "DatasetError",
    "dataset_from_mapping",
    "load_dataset",
    "random_dataset",
    "Command",
    "DatasetCommand",
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_INPUT_ERROR",
    "main",
    "run",
]
