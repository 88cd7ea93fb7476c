"""Closed-form overring counts and count-based characterizations.

All counts are exact integers.  With n_i the multiplicity of class Ki
and per-class chain lengths (3, 2, 3, 2), a model has
2(n1 + n3) + (n2 + n4) + 1 quasi-local overrings and a total of
prod(chain_length_i) overrings.  The lattice module recomputes both by
brute force, and the test suite holds the two routes equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import DomainModel, is_dedekind, is_mpd, is_noetherian, is_prufer


class InconsistencyError(RuntimeError):
    """A count formula disagreed with the structural predicate it characterizes."""


@dataclass(frozen=True)
class CountReport:
    total_overrings: int
    quasi_local_overrings: int
    max_count: int
    counts: tuple[int, int, int, int]


@dataclass(frozen=True)
class Characterization:
    noetherian: bool
    prufer: bool
    dedekind: bool
    count_noetherian_formula: int
    count_prufer_formula: int
    count_dedekind_formula: int


@dataclass(frozen=True)
class MpdCounts:
    total: int
    quasi_local: int


def quasi_local_count(model: DomainModel) -> int:
    """Number of quasi-local overrings: 2(n1 + n3) + (n2 + n4) + 1.

    Equivalently sum(chain_length_i - 1) + 1: the per-localization
    overring chains share only the quotient field.
    """
    n1, n2, n3, n4 = model.counts
    return 2 * (n1 + n3) + (n2 + n4) + 1


def total_count(model: DomainModel) -> int:
    """Total number of overrings: the product of the per-localization chain lengths."""
    return math.prod(cls.chain_length for cls in model)


def count_report(model: DomainModel) -> CountReport:
    return CountReport(
        total_overrings=total_count(model),
        quasi_local_overrings=quasi_local_count(model),
        max_count=len(model),
        counts=model.counts,
    )


def characterize(model: DomainModel) -> Characterization:
    """Characterize a model by its quasi-local overring count.

    The model is Noetherian, Pruefer, or Dedekind exactly when the
    quasi-local count equals 2*n1 + n4 + 1, 2*n3 + (n2 + n4) + 1, or
    n4 + 1 respectively.  Each verdict is computed both ways, from the
    count and from the structural predicate, and the two must agree; a
    mismatch raises InconsistencyError and cannot occur for well-formed
    models.
    """
    n1, n2, n3, n4 = model.counts
    ql = quasi_local_count(model)
    noetherian_formula = 2 * n1 + n4 + 1
    prufer_formula = 2 * n3 + (n2 + n4) + 1
    dedekind_formula = n4 + 1
    verdicts = (
        ("noetherian", noetherian_formula, is_noetherian(model)),
        ("prufer", prufer_formula, is_prufer(model)),
        ("dedekind", dedekind_formula, is_dedekind(model)),
    )
    for name, formula, structural in verdicts:
        if (ql == formula) != structural:
            raise InconsistencyError(
                f"{name} count formula {formula} vs quasi-local count {ql} "
                f"disagrees with the structural predicate on {model.tags}"
            )
    return Characterization(
        noetherian=is_noetherian(model),
        prufer=is_prufer(model),
        dedekind=is_dedekind(model),
        count_noetherian_formula=noetherian_formula,
        count_prufer_formula=prufer_formula,
        count_dedekind_formula=dedekind_formula,
    )


def mpd_counts(model: DomainModel) -> MpdCounts:
    """Overring counts specialized to MPD models (at most one non-DVR local).

    With n maximal ideals the counts are 2**n and n + 1, except when the
    exceptional local has a three-element overring chain (classes K1 and
    K3): then they are 3 * 2**(n - 1) and n + 2.  A value-group-R local
    (K2) is not a DVR but still has a two-element chain, so it lands in
    the 2**n branch.
    """
    if not is_mpd(model):
        raise ValueError("not an MPD model: more than one localization is not a DVR")
    n = len(model)
    if any(cls.chain_length == 3 for cls in model):
        return MpdCounts(total=3 * 2 ** (n - 1), quasi_local=n + 2)
    return MpdCounts(total=2**n, quasi_local=n + 1)
