"""Reduced simplicial homology over prime fields, and the Reisner (Cohen-Macaulay) and homology-sphere (Gorenstein)
criteria built on it."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, List

import numpy as np
import sympy

from edgesquare.complex import SimplicialComplex, ComplexError, faces, all_faces, link, core, \
    reduced_euler_characteristic
from edgesquare.graph import VertexSet


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2 ** 31 and sympy.isprime(self.p)):
            raise FieldError(f"characteristic must be a prime below 2**31, got {self.p}")

    def __str__(self):
        return f"GF({self.p})"


GF2 = PrimeField(2)
GF32003 = PrimeField(32003)
DEFAULT_FIELDS = (GF2, GF32003)


def boundary_matrix(k: SimplicialComplex, i: int, field: PrimeField) -> np.ndarray:
    """The matrix of the boundary map from i-faces to (i-1)-faces, entries in 0..p-1. Removing the vertex at position
    j of a sorted face carries the sign (-1)**j; the 0-faces map to the empty face."""
    if not 0 <= i <= k.dimension:
        raise ComplexError(f"boundary dimension {i} outside 0..{k.dimension}")
    rows = {f: r for r, f in enumerate(faces(k, i - 1))}
    columns = faces(k, i)
    m = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for c, f in enumerate(columns):
        for j, v in enumerate(sorted(f)):
            m[rows[f - {v}], c] = 1 if j % 2 == 0 else field.p - 1
    return m


def rank_mod_p(m: np.ndarray, p: int) -> int:
    """Rank over GF(p) by Gaussian elimination; entries stay below p < 2**31 so products fit in int64."""
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    for j in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(m[r:, j])
        if not len(nonzero):
            continue
        k = nonzero[0] + r
        m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, j]), p - 2, p) % p
        col = m[:, j].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        r += 1
    return r


@dataclass(frozen=True)
class HomologyProfile:
    p: int
    betti: Tuple[int, ...]  # betti[i + 1] = dim of the reduced homology in degree i, for i = -1..dim

    @property
    def dimension(self) -> int:
        return len(self.betti) - 2

    def is_acyclic_below_top(self) -> bool:
        return not any(self.betti[:-1])

    def is_sphere(self) -> bool:
        return self.is_acyclic_below_top() and self.betti[-1] == 1

    def to_dict(self):
        return dict(char=self.p, betti=list(self.betti))


@lru_cache(maxsize=1 << 14)
def _reduced_betti_numbers(k: SimplicialComplex, field: PrimeField) -> HomologyProfile:
    d = k.dimension
    boundaries = [boundary_matrix(k, i, field) for i in range(d + 1)]
    for lower, upper in zip(boundaries, boundaries[1:]):
        assert not (lower @ upper % field.p).any(), f"boundary of boundary is nonzero over {field}"
    ranks = [rank_mod_p(b, field.p) for b in boundaries] + [0]  # ranks[i] = rank of the map out of degree i
    sizes = [len(faces(k, i)) for i in range(-1, d + 1)]
    betti = tuple(sizes[i + 1] - (ranks[i] if i >= 0 else 0) - ranks[i + 1] for i in range(-1, d + 1))
    profile = HomologyProfile(field.p, betti)
    chi = sum((-1) ** i * b for i, b in zip(range(-1, d + 1), betti))
    assert chi == reduced_euler_characteristic(k), f"Euler-Poincare fails: {chi} != {reduced_euler_characteristic(k)}"
    return profile


def reduced_betti_numbers(k: SimplicialComplex, field: PrimeField = GF2) -> HomologyProfile:
    return _reduced_betti_numbers(k, field)


def link_profiles(k: SimplicialComplex, field: PrimeField = GF2) -> List[Tuple[VertexSet, HomologyProfile]]:
    """The homology of the link of every face, the empty face (whose link is k) first."""
    return [(f, reduced_betti_numbers(link(k, f)[0], field)) for f in all_faces(k)]


def is_cm_complex(k: SimplicialComplex, field: PrimeField = GF2) -> bool:
    """Reisner: every link has vanishing reduced homology below its dimension."""
    return all(profile.is_acyclic_below_top() for _, profile in link_profiles(k, field))


def is_gorenstein_complex(k: SimplicialComplex, field: PrimeField = GF2) -> bool:
    """The core has the homology of a sphere at every link, links of facets being the (-1)-sphere."""
    return all(profile.is_sphere() for _, profile in link_profiles(core(k), field))
