"""Overring lattices materialized as products of per-localization chains.

For an h-local model every overring is an intersection of one overring
choice per localization, so the overring lattice is the product of the
per-class chains (length 3 for K1 and K3, length 2 for K2 and K4).  An
element is a vector of chain levels: level 0 is the localization itself,
the top level is the quotient field, and the order is componentwise.
No attempt is made to name intermediate rings algebraically; the chain
structure is all the counting arguments use.

This module is the brute-force oracle for every counting formula: its
censuses are obtained by enumerating and filtering vectors, never by
evaluating a closed form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from . import dot
from .model import DomainModel, LocalClass

DEFAULT_SIZE_GUARD = 10**6

Vector = tuple[int, ...]


class LatticeTooLargeError(Exception):
    """The requested lattice would exceed the configured element bound."""


@dataclass(frozen=True)
class OverringLattice:
    """Product of chains ordered componentwise; meets and joins are min and max."""

    model: DomainModel
    chains: tuple[int, ...]

    @property
    def size(self) -> int:
        return math.prod(self.chains)

    @property
    def bottom(self) -> Vector:
        return (0,) * len(self.chains)

    @property
    def top(self) -> Vector:
        return tuple(c - 1 for c in self.chains)

    def elements(self) -> Iterator[Vector]:
        """All level vectors in lexicographic order; re-entrant."""
        return itertools.product(*(range(c) for c in self.chains))

    def leq(self, u: Vector, v: Vector) -> bool:
        return all(x <= y for x, y in zip(u, v))

    def meet(self, u: Vector, v: Vector) -> Vector:
        return tuple(map(min, u, v))

    def join(self, u: Vector, v: Vector) -> Vector:
        return tuple(map(max, u, v))

    def is_quasi_local(self, v: Vector) -> bool:
        """A vector is quasi-local iff at most one coordinate sits below its top.

        Such a vector is an overring of the single localization whose
        coordinate is not yet the quotient field.
        """
        below = 0
        for x, c in zip(v, self.chains):
            if x < c - 1:
                below += 1
                if below > 1:
                    return False
        return True


def build(model: DomainModel, max_elements: int = DEFAULT_SIZE_GUARD) -> OverringLattice:
    """Materialize the overring lattice, refusing anything above max_elements."""
    chains = tuple(cls.chain_length for cls in model)
    size = math.prod(chains)
    if size > max_elements:
        raise LatticeTooLargeError(
            f"lattice too large: {size} elements exceed the bound {max_elements}"
        )
    return OverringLattice(model=model, chains=chains)


def quasi_local_elements(lat: OverringLattice) -> set[Vector]:
    """Brute-force census of quasi-local overrings: filter the full product."""
    return {v for v in lat.elements() if lat.is_quasi_local(v)}


def longest_chain_length(lat: OverringLattice) -> int:
    """Number of elements in a maximum chain from bottom to top."""
    return 1 + sum(c - 1 for c in lat.chains)


def closure_of_bottom(lat: OverringLattice) -> Vector:
    """Integral closure of the bottom element.

    Bumps each K1 coordinate to level 1, the DVR in the middle of its
    chain; integrally closed coordinates stay at the localization.
    """
    return tuple(1 if cls is LocalClass.K1 else 0 for cls in lat.model)


def cover_edges(lat: OverringLattice) -> Iterator[tuple[Vector, Vector]]:
    """Cover pairs of the product order: +1 in exactly one coordinate."""
    for v in lat.elements():
        for i, (x, c) in enumerate(zip(v, lat.chains)):
            if x + 1 < c:
                yield v, v[:i] + (x + 1,) + v[i + 1 :]


def vector_label(v: Vector) -> str:
    return ",".join(str(x) for x in v) if v else "()"


def emit_hasse(lat: OverringLattice) -> str:
    """Hasse diagram of the lattice in DOT, nodes in lexicographic order."""
    nodes = (vector_label(v) for v in lat.elements())
    edges = ((vector_label(a), vector_label(b)) for a, b in cover_edges(lat))
    return dot.digraph("overrings", nodes, edges)
