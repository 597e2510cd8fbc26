import multiprocessing as mp
from dataclasses import dataclass, field
from functools import partial
from typing import Tuple, List, Dict

import pandas as pd
from pandas import DataFrame, Timestamp

from edgesquare.classify import gorenstein_oracle
from edgesquare.complex import independence_complex, is_pseudomanifold
from edgesquare.enumeration import enumerate_graphs, ENUMERATION_MAX_N
from edgesquare.gallery import construct
from edgesquare.graph import parse_graph6, to_graph6
from edgesquare.homology import PrimeField, DEFAULT_FIELDS, reduced_betti_numbers
from edgesquare.lemmas import CHECKS, HOMOLOGICAL, main_theorem_exceptional
from edgesquare.util import pandas_dict, Timeout, GraphTimeout

GALLERY = ("Q9", "P10", "Q12", "P12")


@dataclass
class VerificationReport:
    min_n: int
    max_n: int
    processed: int = 0
    refused: int = 0
    applicable: Dict[str, int] = field(default_factory=dict)
    agreements: Dict[str, int] = field(default_factory=dict)
    counterexamples: List[Tuple[str, str]] = field(default_factory=list)  # (check, graph6)
    gallery_failures: List[Tuple[str, str]] = field(default_factory=list)  # (gallery graph, property)
    exceptional: Dict[str, List[str]] = field(default_factory=dict)  # gallery family -> graph6 strings
    seconds: float = 0.

    def add(self, table: DataFrame, checks, exceptional: bool = True):
        """Accumulates a table of per-graph rows as returned by `check_graph`."""
        ok = table[table.status == "ok"]
        self.processed += len(ok)
        self.refused += len(table) - len(ok)
        for name in checks:
            verdicts = ok[name].dropna().astype(bool) if name in ok else pd.Series(dtype=bool)
            self.applicable[name] = self.applicable.get(name, 0) + len(verdicts)
            self.agreements[name] = self.agreements.get(name, 0) + int(verdicts.sum())
            self.counterexamples += [(name, g) for g in ok.graph6.loc[verdicts.index[~verdicts.values]]]
        if exceptional and "exceptional" in ok:
            for g, family in zip(ok.graph6, ok.exceptional):
                if isinstance(family, str):
                    self.exceptional.setdefault(family, []).append(g)
        assert all(self.applicable[k] - self.agreements[k] == sum(c == k for c, _ in self.counterexamples)
                   for k in self.applicable), "tallies and counterexamples disagree"

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.gallery_failures

    def to_dict(self):
        return dict(self.__dict__, counterexamples=[list(c) for c in self.counterexamples],
                    gallery_failures=[list(c) for c in self.gallery_failures])


def check_graph(graph6: str, *, checks: Tuple[str, ...], p: int, timeout: float) -> dict:
    """Runs the named checks on one graph; a timeout or a refused input marks the row accordingly."""
    t0 = Timestamp.utcnow()
    row = dict(graph6=graph6, status="ok")
    try:
        with Timeout(timeout):
            g, f = parse_graph6(graph6), PrimeField(p)
            row.update({name: CHECKS[name](g, f) for name in checks})
            if "main_theorem" in checks:
                row["exceptional"] = main_theorem_exceptional(g)
    except GraphTimeout as e:
        row = dict(graph6=graph6, status="timeout", error=str(e))
    except ValueError as e:
        row = dict(graph6=graph6, status="refused", error=f"{type(e).__name__}: {e}")
    row["seconds"] = (Timestamp.utcnow() - t0).total_seconds()
    return row


def rows_to_table(rows: List[dict]) -> DataFrame:
    """Per-graph rows sorted by graph6, so the table does not depend on worker scheduling."""
    return DataFrame(sorted(rows, key=lambda r: r["graph6"]), columns=None if rows else ["graph6", "status", "seconds"])


def gallery_properties(name: str) -> dict:
    """Sphere facts of an exceptional graph's independence complex over both default fields."""
    g = construct(name)
    k = independence_complex(g)
    row = dict(pseudomanifold=is_pseudomanifold(k))
    for f in DEFAULT_FIELDS:
        betti = reduced_betti_numbers(k, f).betti
        row[f"sphere_{f.p}"] = betti == (0,) * (len(betti) - 1) + (1,)
        row[f"gorenstein_{f.p}"] = gorenstein_oracle(g, f)
    return row


@dataclass(eq=0)
class Verification:
    min_n: int = 2  # smallest vertex count swept
    max_n: int = 7  # largest vertex count swept, at most 9
    oracle_max_n: int = 8  # homological checks only run up to this many vertices
    char: int = 2  # characteristic of the field for the homological checks
    which: tuple = ()  # names of the checks to run, all if empty
    gallery: bool = True  # finish with an epoch checking Q9, P10, Q12 and P12 individually
    jobs: int = 1  # worker processes, 1 runs in-process
    chunksize: int = 64
    timeout_ms: int = 10000  # per graph, non-positive disables
    tag: str = ''  # for logging, e.g. allows to compare groups of runs

    def __post_init__(self):
        if not 1 <= self.min_n <= self.max_n <= ENUMERATION_MAX_N:
            raise ValueError(f"need 1 <= min_n <= max_n <= {ENUMERATION_MAX_N}, "
                             f"got min_n={self.min_n}, max_n={self.max_n}")
        unknown = set(self.which) - CHECKS.keys()
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}, valid checks are {tuple(CHECKS)}")
        PrimeField(self.char)
        self.epoch = 0
        self.epochs = self.max_n - self.min_n + 1 + self.gallery
        self.checks = tuple(self.which) or tuple(CHECKS)
        self.report = VerificationReport(self.min_n, self.max_n)

    def run_epoch(self) -> List[pd.Series]:
        t0 = Timestamp.utcnow()
        n = self.min_n + self.epoch
        title = f" n = {n} " if n <= self.max_n else " gallery "
        print(f"=== epoch {self.epoch + 1}/{self.epochs} ".ljust(20, '=') + title.ljust(50, '='))
        stats = self.sweep(n) if n <= self.max_n else self.check_gallery()
        stats["epoch_time"] = Timestamp.utcnow() - t0
        self.report.seconds += stats["epoch_time"].total_seconds()
        print(stats.add_prefix("  ").to_string(), '\n')
        self.epoch += 1
        return [stats]

    def sweep(self, n: int) -> pd.Series:
        checks = tuple(c for c in self.checks if n <= self.oracle_max_n or c not in HOMOLOGICAL)
        graphs = [to_graph6(g) for g in enumerate_graphs(n, no_isolated=True)]
        work = partial(check_graph, checks=checks, p=self.char, timeout=self.timeout_ms / 1000)
        if self.jobs > 1:
            with mp.get_context('spawn').Pool(self.jobs) as pool:
                rows = pool.map_async(work, graphs, chunksize=self.chunksize).get()
        else:
            rows = [work(g) for g in graphs]
        table = rows_to_table(rows)
        self.report.add(table, checks)

        ok = table[table.status == "ok"]
        columns = [c for c in checks if c in ok]
        return pandas_dict(
            n=n,
            graphs=len(table),
            refused=len(table) - len(ok),
            **ok[columns].notna().sum().add_prefix("applicable_"),
            **{f"failed_{c}": int((~ok[c].dropna().astype(bool)).sum()) for c in columns},
            exceptional=sorted(f for f in ok.get("exceptional", ()) if isinstance(f, str)),
            graph_time_mean=table.seconds.mean() if len(table) else 0.,
        )

    def check_gallery(self) -> pd.Series:
        """Q9, P10, Q12 and P12 exceed the swept orders; they get every check plus their sphere facts."""
        properties = DataFrame([gallery_properties(name) for name in GALLERY], index=list(GALLERY))
        for name, row in properties.iterrows():
            self.report.gallery_failures += [(name, prop) for prop, holds in row.items() if not holds]

        checks = tuple(c for c in self.checks if c != "graph6_roundtrip")
        rows = [check_graph(to_graph6(construct(name)), checks=checks, p=self.char, timeout=0) for name in GALLERY]
        self.report.add(rows_to_table(rows), checks, exceptional=False)
        return pandas_dict(
            **properties.all(),
            counterexamples=len(self.report.counterexamples),
            gallery_failures=len(self.report.gallery_failures),
        )
