import functools
import gc
import os
import tempfile
from os.path import exists

import pandas as pd

from edgesquare.util import partial, save_json, partial_to_dict, dump, load, dump_yaml, log_environment_variables
from edgesquare.verification import Verification, VerificationReport


def iterate_epochs(run_cls: type = Verification, checkpoint_path: str = None):
    """Generator yielding epoch statistics (list of pd.Series) while running and checkpointing; its return value is
    the final `VerificationReport`.
    - run_cls: can by any callable that outputs an appropriate run object (e.g. has a 'run_epoch' method)
    """
    checkpoint_path = checkpoint_path or tempfile.mktemp("_remove_on_exit")
    run_cls = run_cls if isinstance(run_cls, functools.partial) else partial(run_cls)

    try:
        if not exists(checkpoint_path):
            print("=== specification ".ljust(70, "="))
            print(dump_yaml(dict(partial_to_dict(run_cls), environ=log_environment_variables())), end="")
            run_instance = run_cls()
            dump(run_instance, checkpoint_path)
            print("")
        else:
            print("\ncontinuing...\n")

        run_instance = load(checkpoint_path)
        while run_instance.epoch < run_instance.epochs:
            yield run_instance.run_epoch()
            dump(run_instance, checkpoint_path)

            # we delete and reload the run_instance from disk to ensure the exact same code runs regardless of interruptions
            del run_instance
            gc.collect()
            run_instance = load(checkpoint_path)

        report = run_instance.report
        print("=== report ".ljust(70, "="))
        print(dump_yaml(report.to_dict()), end="")
        return report

    finally:
        if checkpoint_path.endswith("_remove_on_exit") and exists(checkpoint_path):
            os.remove(checkpoint_path)


def _exhaust(epochs) -> VerificationReport:
    while True:
        try:
            next(epochs)
        except StopIteration as stop:
            return stop.value


def run(run_cls: type = Verification, checkpoint_path: str = None) -> VerificationReport:
    return _exhaust(iterate_epochs(run_cls, checkpoint_path))


def run_fs(path: str, run_cls: type = Verification) -> VerificationReport:
    """run and save config and stats to `path` (with pickle)"""
    run_cls = run_cls if isinstance(run_cls, functools.partial) else partial(run_cls)
    if not exists(path):
        os.mkdir(path)
    save_json(partial_to_dict(run_cls), path + '/spec.json')
    if not exists(path + '/stats'):
        dump(pd.DataFrame(), path + '/stats')
    epochs = iterate_epochs(run_cls, path + '/state')
    while True:
        try:
            stats = next(epochs)
        except StopIteration as stop:
            return stop.value
        dump(pd.concat([load(path + '/stats'), pd.DataFrame(stats)], ignore_index=True),
             path + '/stats')  # concat with stats from previous epochs


# === specifications ===================================================================================================

VerifyQuick = partial(
    Verification,
    min_n=2,
    max_n=6,
    oracle_max_n=6,
)

# every check over all graphs without isolated vertices up to 8 vertices, then the exceptional graphs
VerifyAcceptance = partial(
    Verification,
    min_n=2,
    max_n=8,
    oracle_max_n=8,
    jobs=8,
)

VerifyBuchsbaum = partial(
    Verification,
    max_n=8,
    which=("buchsbaum_agreement", "gorenstein_agreement"),
    jobs=8,
    gallery=False,
)

# Q9 must be the only graph in the exceptional bucket up to 9 vertices
VerifyMainTheorem = partial(
    Verification,
    min_n=2,
    max_n=9,
    which=("main_theorem",),
    jobs=8,
    timeout_ms=60000,
)
