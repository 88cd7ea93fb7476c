"""Model constructors: valuation intersections, the Krull localization
example, and free generation from class multiplicities."""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

from .model import DomainModel, LocalClass


class ValuationSpec(enum.Enum):
    """Value group of one valuation domain in a pairwise independent intersection.

    Only Z, the lexicographic Z x Z, and R are admissible; pairwise
    independence of the inputs is a semantic precondition carried by the
    caller, since the model keeps no element-level data to verify it.
    """

    Z = "Z"
    ZXZ = "ZxZ"
    R = "R"

    @property
    def rank(self) -> int:
        return 2 if self is ValuationSpec.ZXZ else 1

    @property
    def local_class(self) -> LocalClass:
        return _LOCAL_CLASS[self]


_LOCAL_CLASS = {
    ValuationSpec.Z: LocalClass.K4,
    ValuationSpec.ZXZ: LocalClass.K3,
    ValuationSpec.R: LocalClass.K2,
}


def from_valuations(specs: Iterable[ValuationSpec | str]) -> DomainModel:
    """Model of an intersection of pairwise independent valuation domains.

    The i-th maximal ideal is the center of the i-th valuation domain and
    the localization there is that domain itself.  With r, zz, z counting
    the value groups R, ZxZ, Z among the inputs, the result has
    r + 2*zz + z + 1 quasi-local overrings.
    """
    resolved = []
    for spec in specs:
        if isinstance(spec, ValuationSpec):
            resolved.append(spec)
        else:
            try:
                resolved.append(ValuationSpec(spec))
            except ValueError:
                raise ValueError(f"unknown value group: {spec!r}") from None
    return DomainModel(tuple(spec.local_class for spec in resolved))


def krull_example(n: int) -> DomainModel:
    """Model with exactly n quasi-local overrings, from a localized Krull domain.

    Localizing a Krull domain away from n - 1 chosen height-one primes
    leaves an intersection of n - 1 DVRs sharing the quotient field, so
    the model is n - 1 copies of K4; n = 1 gives the empty model (a
    field).  The count n is the argument, not the number of primes, and
    the off-by-one is pinned by tests.
    """
    if n < 1:
        raise ValueError("the quasi-local overring count is at least 1")
    return DomainModel((LocalClass.K4,) * (n - 1))


def from_counts(n1: int, n2: int, n3: int, n4: int) -> DomainModel:
    """Canonical model with the given class multiplicities, in K1..K4 order."""
    quartet = (n1, n2, n3, n4)
    if any(k < 0 for k in quartet):
        raise ValueError("class multiplicities must be non-negative")
    tags: list[LocalClass] = []
    for cls, k in zip(LocalClass, quartet):
        tags.extend([cls] * k)
    return DomainModel(tuple(tags))


def count_tuples(max_total: int) -> Iterator[tuple[int, int, int, int]]:
    """All multiplicity 4-tuples with sum at most max_total, in a fixed order."""
    for total in range(max_total + 1):
        for n1 in range(total + 1):
            for n2 in range(total - n1 + 1):
                for n3 in range(total - n1 - n2 + 1):
                    yield n1, n2, n3, total - n1 - n2 - n3


def all_models(max_maximals: int) -> Iterator[DomainModel]:
    """One canonical model per class multiset with at most max_maximals maximal ideals."""
    for quartet in count_tuples(max_maximals):
        yield from_counts(*quartet)
