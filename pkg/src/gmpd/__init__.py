"""Exact overring counts, overring lattices, and prime-spectrum posets for
GMPD domains with finitely many overrings.

A domain is represented symbolically by the classes of its localizations
at maximal ideals; see ``model.LocalClass``.  The closed-form counts live
in ``counting``, their brute-force oracle in ``lattice``, spectrum posets
and their enumerators in ``spectrum``, and concrete constructions in
``constructors``.  ``cli`` is the command-line front end.
"""

from . import cli, constructors, counting, dot, lattice, spectrum
from .constructors import (
    ValuationSpec,
    all_models,
    count_tuples,
    from_counts,
    from_valuations,
    krull_example,
)
from .counting import (
    Characterization,
    CountReport,
    InconsistencyError,
    MpdCounts,
    characterize,
    count_report,
    mpd_counts,
    quasi_local_count,
    total_count,
)
from .lattice import LatticeTooLargeError, OverringLattice
from .model import (
    DomainModel,
    LocalClass,
    integral_closure,
    is_dedekind,
    is_mpd,
    is_noetherian,
    is_prufer,
)
from .spectrum import (
    EnumerationBoundError,
    SpecPoset,
    SpecShape,
    ValidationResult,
    canonical_label,
    canonical_shape,
    enumerate_bruteforce,
    enumerate_shapes,
    prufer_witness,
    realizing_model,
    spectrum_of,
    validate,
)

__version__ = "0.1.0"
