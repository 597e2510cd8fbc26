"""A simple command line interface

Usage: `python -m edgesquare classify input=graphs.g6 oracle=True`

or `python -m edgesquare verify max_n=7 jobs=4`

or `python -m edgesquare run-fs edgesquare-checkpoint-0 edgesquare:VerifyAcceptance jobs=16`
"""

import sys
import traceback

from edgesquare import *
from edgesquare.commands import COMMANDS, EXIT_OK, EXIT_INTERNAL, EXIT_REFUSED, EXIT_COUNTEREXAMPLE
from edgesquare.util import partial_from_args


def parse_args(func, *a):
    kwargs = dict(x.split("=", 1) for x in a)
    return partial_from_args(func, kwargs)


def verdict(report: VerificationReport) -> int:
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def main(cmd: str = '', *args) -> int:
    try:
        if cmd in COMMANDS:
            return parse_args(COMMANDS[cmd], *args)().run()
        elif cmd == "verify":
            return verdict(run(parse_args(Verification, *args)))
        elif cmd == "run":
            return verdict(run(parse_args(*args)))
        elif cmd == "run-fs":
            return verdict(run_fs(args[0], parse_args(*args[1:])))
        raise ValueError(f"Undefined command: {cmd}, expected one of {(*COMMANDS, 'verify', 'run', 'run-fs')}")
    except ValueError as e:
        print(f"edgesquare: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


# spawned worker processes import this module again, so the command must only run in the parent
if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
