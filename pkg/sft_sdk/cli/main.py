# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Hammerheads Engineers Sp. z o.o.
# See the accompanying LICENSE file for terms.

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple

from sft_sdk import __version__
from sft_sdk.cli.commands import EXIT_INPUT_ERROR, Command
from sft_sdk.registry import create_instance, get_classes_by_base
from sft_sdk.weyl.potential import PREFACTORS

logger = logging.getLogger(__name__)


def command_names() -> List[str]:
    return sorted(get_classes_by_base("Command"))


def _error(message: str, out: Any) -> str:
    if out == "text":
        return f"error: {message}"
    return json.dumps({"error": message}, sort_keys=True, indent=2)


def run(command: str, flags: Optional[Dict[str, Any]] = None) -> Tuple[int, str]:
    """
    Instantiate the registered command, prepare it and run it.
    Returns the exit code and the rendered report.
    """
    flags = {key: value for key, value in (flags or {}).items() if value is not None}
    out = flags.get("out", "json")
    try:
        if command not in command_names():
            raise ValueError(f"Unknown command {command!r}; expected one of: {', '.join(command_names())}")
        instance: Command = create_instance(command, name=command, definition=flags)
        instance.prepare()
        instance.run()
    except (ValueError, KeyError, AttributeError, OSError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        logger.error(f"{command}: {message}")
        return EXIT_INPUT_ERROR, _error(message, out)
    return instance.exit_code, instance.render()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sft", description="Coherent orientation and SFT sign toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=command_names())
    parser.add_argument("dataset", nargs="?", help="dataset file (JSON or YAML)")
    parser.add_argument("--convention", choices=["ht", "bm"])
    parser.add_argument("--h-prefactor", dest="h_prefactor", choices=list(PREFACTORS))
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out", choices=["json", "text"])
    parser.add_argument("--gradings", help="comma separated orbit gradings, e.g. 1,0,0,0")
    parser.add_argument("--orbit", help="orbit id for chom-d and chom-d2")
    parser.add_argument("--loop", help="loop file for cz")
    parser.add_argument("--n", type=int, help="ambient half-dimension for cz")
    parser.add_argument("--steps", type=int, help="integration steps for cz")
    parser.add_argument("--modes", type=int, help="Fourier modes for cz")
    parser.add_argument("--eps", help="capping signs, e.g. g1=-1,g3=-1")
    parser.add_argument("--count", type=int, help="instances for detline-selftest")
    parser.add_argument("--max-dim", dest="max_dim", type=int, help="largest dimension for detline-selftest")
    parser.add_argument("--random", type=int, help="claim-check on N seeded random datasets")
    parser.add_argument("--weighted", action="store_true", default=None, help="weight gluings by 1/m")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = vars(build_parser().parse_args(argv))
    logging.basicConfig(
        level=getattr(logging, args.pop("log_level")),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    command = args.pop("command")
    code, text = run(command, args)
    print(text, file=sys.stderr if code == EXIT_INPUT_ERROR else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
