"""The command line commands. Each command is a dataclass configured from `key=value` arguments whose `run` method
writes JSON lines (or a table with `pretty=True`) to stdout and returns the exit code."""
import json
import multiprocessing as mp
import sys
from dataclasses import dataclass
from functools import partial
from typing import List, Tuple, Iterator

from pandas import DataFrame, Timestamp

from edgesquare.classify import classify
from edgesquare.complex import independence_complex, f_vector, reduced_euler_characteristic, is_connected_complex, \
    join_factors, is_pseudomanifold, cone_points
from edgesquare.enumeration import enumerate_graphs
from edgesquare.gallery import construct, gallery, GalleryId, LABELS
from edgesquare.graph import Graph, parse_graph6, parse_edge_list, split_edge_lists, to_graph6
from edgesquare.homology import PrimeField, reduced_betti_numbers, link_profiles, is_cm_complex, \
    is_gorenstein_complex
from edgesquare.util import Timeout, GraphTimeout

EXIT_OK, EXIT_INTERNAL, EXIT_REFUSED, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3
FORMATS = ("graph6", "edgelist")


# === input ============================================================================================================

def read_items(input: str, format: str, graph: str = '') -> List[Tuple[int, str]]:
    """(line number, text) for every graph in the input; `graph` takes precedence over `input`."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    if graph:
        return [(1, graph)]
    if input in ('', '-'):
        lines = sys.stdin.read().splitlines()
    else:
        with open(input, 'r', encoding='utf-8') as f:
            lines = f.read().splitlines()
    if format == "edgelist":
        return split_edge_lists(lines)
    return [(i + 1, line.strip()) for i, line in enumerate(lines) if line.strip()]


def parse_item(text: str, format: str) -> Graph:
    return parse_edge_list(text) if format == "edgelist" else parse_graph6(text)


def refusal(line: int, text: str, error: Exception) -> dict:
    return dict(line=line, input=text, error=f"{type(error).__name__}: {error}")


def emit(rows: Iterator[dict], pretty: bool = False, columns=None):
    rows = list(rows)
    if pretty:
        table = DataFrame(rows)
        print(table[[c for c in columns if c in table]].to_string(index=False) if columns else table.to_string())
    else:
        for row in rows:
            print(json.dumps(row))


# === commands =========================================================================================================

def classify_item(item: Tuple[int, str], *, format: str, oracle: bool, p: int, timeout: float) -> dict:
    line, text = item
    try:
        with Timeout(timeout):
            return dict(line=line, **classify(parse_item(text, format), oracle=oracle, field=PrimeField(p)).to_dict())
    except (ValueError, GraphTimeout) as e:
        return refusal(line, text, e)


@dataclass(eq=0)
class Classify:
    input: str = '-'  # path, or '-' for stdin
    graph: str = ''  # a single graph given inline
    format: str = 'graph6'
    oracle: bool = False  # also decide Buchsbaum and Gorenstein through homology
    char: int = 2
    jobs: int = 1
    timeout_ms: int = 10000
    pretty: bool = False

    def run(self) -> int:
        items = read_items(self.input, self.format, self.graph)
        work = partial(classify_item, format=self.format, oracle=self.oracle, p=self.char,
                       timeout=self.timeout_ms / 1000)
        if self.jobs > 1:
            with mp.get_context('spawn').Pool(self.jobs) as pool:
                rows = pool.map(work, items)
        else:
            rows = [work(item) for item in items]
        rows = sorted(rows, key=lambda r: r["line"])
        for row in rows if self.pretty else ():
            if row.get("gallery_match"):
                row["gallery_match"] = str(GalleryId(row["gallery_match"]["family"], row["gallery_match"]["parameter"]))
        emit(rows, self.pretty, columns=("line", "graph6", "n", "edges", "alpha", "w2", "locally_triangle_free",
                                         "gallery_match", "cm_square", "gcm_square", "buchsbaum_square",
                                         "gorenstein_locally_tf", "oracle_buchsbaum", "oracle_gorenstein", "error"))
        return EXIT_REFUSED if any("error" in r for r in rows) else EXIT_OK


@dataclass(eq=0)
class Gallery:
    name: str = ''  # family, e.g. Q9, CycleComplement, B
    n: int = 0  # parameter of the parametrized families
    all: bool = False  # every construction up to max_n vertices
    max_n: int = 12
    literal: bool = False  # B_n from the edge formula as written, leaving x_1 isolated
    pretty: bool = False

    def run(self) -> int:
        if self.all:
            graphs = gallery(self.max_n, literal=self.literal)
        elif self.name:
            g = construct(self.name, self.n or None, literal=self.literal)
            graphs = {self.name if self.name in LABELS else str(GalleryId(self.name, self.n)): g}
        else:
            raise ValueError("give name=<family> (and n=<parameter>) or all=True")
        emit((dict(name=name, graph6=to_graph6(g), n=g.n, edges=g.edge_count, edge_list=[list(e) for e in g.edges],
                   labels=list(LABELS.get(name, ()))) for name, g in graphs.items()), self.pretty,
             columns=("name", "graph6", "n", "edges"))
        return EXIT_OK


def describe_complex(g: Graph) -> dict:
    k = independence_complex(g)
    return dict(
        graph6=to_graph6(g),
        dimension=k.dimension,
        facets=[sorted(f) for f in k.facets],
        f_vector=list(f_vector(k)),
        reduced_euler_characteristic=reduced_euler_characteristic(k),
        connected=is_connected_complex(k),
        pseudomanifold=is_pseudomanifold(k),
        cone_points=sorted(cone_points(k)),
        join_factors=[sorted(c) for c in join_factors(g)] if g.n else [],
    )


@dataclass(eq=0)
class Complex:
    graph: str = ''
    input: str = '-'
    format: str = 'graph6'
    pretty: bool = False

    def run(self) -> int:
        rows = []
        for line, text in read_items(self.input, self.format, self.graph):
            try:
                rows.append(dict(line=line, **describe_complex(parse_item(text, self.format))))
            except ValueError as e:
                rows.append(refusal(line, text, e))
        emit(rows, self.pretty, columns=("line", "graph6", "dimension", "f_vector", "reduced_euler_characteristic",
                                         "connected", "pseudomanifold", "error"))
        return EXIT_REFUSED if any("error" in r for r in rows) else EXIT_OK


def describe_homology(g: Graph, field: PrimeField, links: bool) -> dict:
    t0 = Timestamp.utcnow()
    k = independence_complex(g)
    row = dict(graph6=to_graph6(g), **reduced_betti_numbers(k, field).to_dict(),
               cm=is_cm_complex(k, field), gorenstein=is_gorenstein_complex(k, field))
    if links:
        row["links"] = [dict(face=sorted(f), betti=list(profile.betti), cm=profile.is_acyclic_below_top(),
                             sphere=profile.is_sphere()) for f, profile in link_profiles(k, field)]
    row["seconds"] = (Timestamp.utcnow() - t0).total_seconds()
    return row


@dataclass(eq=0)
class Homology:
    graph: str = ''
    input: str = '-'
    format: str = 'graph6'
    char: int = 2
    links: bool = True  # include the homology of every face link
    pretty: bool = False

    def run(self) -> int:
        field, rows = PrimeField(self.char), []
        for line, text in read_items(self.input, self.format, self.graph):
            try:
                rows.append(dict(line=line, **describe_homology(parse_item(text, self.format), field, self.links)))
            except ValueError as e:
                rows.append(refusal(line, text, e))
        emit(rows, self.pretty, columns=("line", "graph6", "char", "betti", "cm", "gorenstein", "seconds", "error"))
        return EXIT_REFUSED if any("error" in r for r in rows) else EXIT_OK


@dataclass(eq=0)
class Enumerate:
    n: int = 4
    no_isolated: bool = False
    connected: bool = False
    count: bool = False  # print only the number of classes

    def run(self) -> int:
        graphs = enumerate_graphs(self.n, no_isolated=self.no_isolated, connected=self.connected)
        if self.count:
            print(json.dumps(dict(n=self.n, no_isolated=self.no_isolated, connected=self.connected,
                                  count=sum(1 for _ in graphs))))
        else:
            for g in graphs:  # plain graph6 lines, so the output can be piped into `classify`
                print(to_graph6(g))
        return EXIT_OK


COMMANDS = dict(classify=Classify, gallery=Gallery, complex=Complex, homology=Homology, enumerate=Enumerate)
