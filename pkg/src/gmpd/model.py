"""Symbolic models of GMPD domains with finite maximal spectrum.

A GMPD domain is h-local and every localization at a maximal ideal is an
MPD domain; such localizations fall into four quasi-local classes.  A
domain is modeled here purely by the list of class tags of its
localizations, and every counting or classification question the package
answers is a function of the resulting multiset of tags.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


class LocalClass(enum.Enum):
    """The four classes of quasi-local MPD domains.

    K1  two-generated pseudo-valuation domain that is not a DVR; the one
        class that is not integrally closed, with overring chain
        D < D' < K where D' is a DVR and K the quotient field
    K2  rank-one valuation domain with value group R
    K3  rank-two strongly discrete valuation domain, value group Z x Z
        ordered lexicographically
    K4  DVR (value group Z)
    """

    K1 = "K1"
    K2 = "K2"
    K3 = "K3"
    K4 = "K4"

    @property
    def chain_length(self) -> int:
        """Number of overrings of the localization, itself and the quotient field included."""
        return _CHAIN_LENGTH[self]

    @property
    def dimension(self) -> int:
        """Krull dimension of the localization."""
        return _DIMENSION[self]

    @property
    def is_valuation(self) -> bool:
        return self is not LocalClass.K1

    @property
    def is_noetherian(self) -> bool:
        return self in (LocalClass.K1, LocalClass.K4)

    @property
    def is_integrally_closed(self) -> bool:
        return self is not LocalClass.K1


_CHAIN_LENGTH = {
    LocalClass.K1: 3,
    LocalClass.K2: 2,
    LocalClass.K3: 3,
    LocalClass.K4: 2,
}

_DIMENSION = {
    LocalClass.K1: 1,
    LocalClass.K2: 1,
    LocalClass.K3: 2,
    LocalClass.K4: 1,
}


@dataclass(frozen=True)
class DomainModel:
    """A GMPD domain with finitely many maximal ideals, one class tag each.

    Positions in ``maximal_ideals`` are stable identifiers of the maximal
    ideals; the algebraic semantics only ever depend on the multiset of
    tags, so models that are permutations of each other classify
    identically.  The empty model stands for a field (the quotient field
    itself) and every operation is total on it.
    """

    maximal_ideals: tuple[LocalClass, ...] = ()

    @classmethod
    def from_tags(cls, tags: Iterable[LocalClass | str]) -> "DomainModel":
        """Build a model from class tags given as enum members or strings."""
        resolved = []
        for tag in tags:
            if isinstance(tag, LocalClass):
                resolved.append(tag)
            else:
                try:
                    resolved.append(LocalClass(tag))
                except ValueError:
                    raise ValueError(f"unknown local class tag: {tag!r}") from None
        return cls(tuple(resolved))

    def __iter__(self) -> Iterator[LocalClass]:
        return iter(self.maximal_ideals)

    def __len__(self) -> int:
        return len(self.maximal_ideals)

    @property
    def counts(self) -> tuple[int, int, int, int]:
        """Multiplicities (n1, n2, n3, n4) of the four classes."""
        c = Counter(self.maximal_ideals)
        return (c[LocalClass.K1], c[LocalClass.K2], c[LocalClass.K3], c[LocalClass.K4])

    @property
    def tags(self) -> list[str]:
        return [cls.value for cls in self.maximal_ideals]


def is_prufer(model: DomainModel) -> bool:
    """True when every localization is a valuation domain (no K1 entry)."""
    return all(cls.is_valuation for cls in model)


def is_noetherian(model: DomainModel) -> bool:
    """True when every localization is Noetherian (no K2 or K3 entry).

    Noetherianity globalizes because models are h-local with finite
    maximal spectrum.
    """
    return all(cls.is_noetherian for cls in model)


def is_dedekind(model: DomainModel) -> bool:
    """True when every localization is a DVR; a field counts as Dedekind."""
    return all(cls is LocalClass.K4 for cls in model)


def is_mpd(model: DomainModel) -> bool:
    """True when at most one localization is not a DVR."""
    return sum(1 for cls in model if cls is not LocalClass.K4) <= 1


def integral_closure(model: DomainModel) -> DomainModel:
    """Model of the integral closure.

    Each K1 localization closes to the DVR sitting in the middle of its
    overring chain; every other class is already integrally closed.  The
    result is always a Pruefer model.
    """
    return DomainModel(
        tuple(LocalClass.K4 if cls is LocalClass.K1 else cls for cls in model)
    )
