"""Prime-spectrum posets: construction, validation, enumeration.

The spectrum of a model is a rooted poset of height at most 2: the zero
ideal at the root and one branch per maximal ideal, of length two
exactly for K3 locals (which carry a height-one prime strictly between
the zero ideal and the maximal ideal) and length one otherwise.  Valid
spectra are classified up to order isomorphism by the branch-count pair
(a, b); the closed-form enumerator of admissible shapes has a genuinely
independent brute-force counterpart that searches labeled posets and
classifies them by canonical labeling of the cover tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import dot
from .model import DomainModel, LocalClass

DEFAULT_ENUM_BOUND = 9

ROOT = "(0)"


class EnumerationBoundError(Exception):
    """The brute-force poset search was asked to exceed its configured bound."""


@dataclass(frozen=True)
class SpecPoset:
    """Finite poset with a designated root candidate.

    ``strict`` holds the strict order pairs (x, y) meaning x < y; the
    reflexive pairs are implied.  Instances are immutable values and all
    queries recompute from the relation, which stays cheap at spectrum
    sizes.
    """

    elements: frozenset
    root: object
    strict: frozenset

    @classmethod
    def from_relation(cls, elements, root, pairs) -> "SpecPoset":
        """Build a poset from generating pairs (x <= y), closing transitively.

        Raises ValueError when the closure is not antisymmetric or a pair
        mentions an unknown element.
        """
        els = frozenset(elements)
        if root not in els:
            raise ValueError(f"root {root!r} is not an element")
        above = {x: set() for x in els}
        for x, y in pairs:
            if x not in els or y not in els:
                raise ValueError(f"relation mentions unknown element in ({x!r}, {y!r})")
            if x != y:
                above[x].add(y)
        changed = True
        while changed:
            changed = False
            for x in els:
                extra = set()
                for y in above[x]:
                    extra |= above[y] - above[x]
                if extra:
                    above[x] |= extra
                    changed = True
        for x in els:
            if x in above[x]:
                raise ValueError("relation is not antisymmetric")
        strict = frozenset((x, y) for x in els for y in above[x])
        return cls(elements=els, root=root, strict=strict)

    def leq(self, x, y) -> bool:
        return x == y or (x, y) in self.strict

    def below_sets(self) -> dict:
        """Strict down-set of every element."""
        below = {x: set() for x in self.elements}
        for x, y in self.strict:
            below[y].add(x)
        return below

    def heights(self) -> dict:
        """Length (edge count) of the longest strict chain below each element."""
        below = self.below_sets()
        memo: dict = {}

        def h(x):
            if x not in memo:
                memo[x] = 1 + max((h(y) for y in below[x]), default=-1)
            return memo[x]

        for x in self.elements:
            h(x)
        return memo

    def maximals(self) -> frozenset:
        uppers = {x for x, _ in self.strict}
        return frozenset(self.elements - uppers)

    def covers(self) -> list[tuple]:
        """Cover pairs (x, y): x < y with nothing strictly between, sorted by label."""
        out = [
            (x, y)
            for x, y in self.strict
            if not any(
                (x, z) in self.strict and (z, y) in self.strict for z in self.elements
            )
        ]
        return sorted(out, key=lambda e: (str(e[0]), str(e[1])))

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple[str, ...]


def _is_chain(p: SpecPoset, xs) -> bool:
    return all(p.leq(x, y) or p.leq(y, x) for x, y in itertools.combinations(xs, 2))


def validate(p: SpecPoset) -> ValidationResult:
    """Check the spectrum axioms independently and report every failure.

    Violation labels:
      unique-minimum     the root is not below every element
      height             some element has height above 2
      treed              some strict down-set is not a chain
      y-free             some non-root element lies under more or fewer
                         than one maximal element
      unique-height-one  some height-2 maximal does not have exactly one
                         height-one element below it
    """
    violations = []
    hts = p.heights()
    below = p.below_sets()
    maxima = p.maximals()
    if any(not p.leq(p.root, x) for x in p.elements):
        violations.append("unique-minimum")
    if any(h > 2 for h in hts.values()):
        violations.append("height")
    if any(not _is_chain(p, below[x]) for x in p.elements):
        violations.append("treed")
    for x in p.elements:
        if x != p.root and sum(1 for m in maxima if p.leq(x, m)) != 1:
            violations.append("y-free")
            break
    for m in maxima:
        if hts[m] == 2 and sum(1 for q in below[m] if hts[q] == 1) != 1:
            violations.append("unique-height-one")
            break
    return ValidationResult(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True, order=True)
class SpecShape:
    """Isomorphism class of a valid spectrum: a branches of length two, b of length one."""

    a: int
    b: int

    @property
    def size(self) -> int:
        return 2 * self.a + self.b + 1


def canonical_shape(p: SpecPoset) -> SpecShape:
    """Branch counts (a, b) of a valid poset; rejects invalid ones.

    Two valid posets are order isomorphic exactly when their shapes
    coincide.
    """
    res = validate(p)
    if not res.ok:
        raise ValueError(f"not a valid spectrum poset: {', '.join(res.violations)}")
    hts = p.heights()
    maxima = p.maximals()
    a = sum(1 for m in maxima if hts[m] == 2)
    b = sum(1 for m in maxima if hts[m] == 1)
    return SpecShape(a=a, b=b)


def spectrum_of(model: DomainModel) -> SpecPoset:
    """Spectrum poset of a model: one branch per maximal ideal.

    A K3 local contributes the chain root < Pi < Mi, where Pi is the
    unique height-one prime below the maximal ideal; every other class
    contributes the single maximal ideal Mi at height one.
    """
    elements = [ROOT]
    pairs = []
    for i, cls in enumerate(model, start=1):
        m = f"M{i}"
        if cls is LocalClass.K3:
            q = f"P{i}"
            elements += [q, m]
            pairs += [(ROOT, q), (q, m)]
        else:
            elements.append(m)
            pairs.append((ROOT, m))
    return SpecPoset.from_relation(elements, ROOT, pairs)


def enumerate_shapes(n: int) -> list[SpecShape]:
    """All admissible shapes with n prime ideals: (a, b) with 2a + b = n - 1.

    There are ceil(n / 2) of them, listed with a ascending, and each is
    realized by a model of a K3 entries and b K4 entries.
    """
    if n < 1:
        raise ValueError("a spectrum has at least one prime ideal (the zero ideal)")
    return [SpecShape(a=a, b=n - 1 - 2 * a) for a in range((n - 1) // 2 + 1)]


def realizing_model(shape: SpecShape) -> DomainModel:
    """A model whose spectrum has the given shape."""
    return DomainModel((LocalClass.K3,) * shape.a + (LocalClass.K4,) * shape.b)


def canonical_label(p: SpecPoset):
    """Canonical form of a valid poset, independent of element labels.

    The cover digraph of a valid poset is a tree rooted at the minimum;
    the label encodes every element as the sorted tuple of its children's
    encodings, a complete isomorphism invariant for rooted trees.  The
    shape pair (a, b) plays no part here, which keeps comparisons against
    the closed-form enumerator independent.
    """
    res = validate(p)
    if not res.ok:
        raise ValueError(f"not a valid spectrum poset: {', '.join(res.violations)}")
    return _tree_code(p)


def _tree_code(p: SpecPoset):
    children: dict = {x: [] for x in p.elements}
    for x, y in p.covers():
        children[x].append(y)

    def code(x):
        return tuple(sorted(code(c) for c in children[x]))

    return code(p.root)


def _poset_candidates(n: int) -> Iterator[SpecPoset]:
    """All partial orders on n labeled points with unique minimum 0 and height <= 2.

    Posets with several minimal elements or height above 2 are rejected
    by validate anyway, so restricting the candidates to this family
    leaves the filtered enumeration unchanged while keeping the search
    walkable.  A candidate assigns each point of an "upper" subset a
    nonempty strict down-set of points outside that subset; points in a
    down-set therefore have empty down-sets themselves, which is exactly
    the height bound, and the relation is transitively closed as built.
    """
    points = tuple(range(1, n))
    root_pairs = [(0, x) for x in points]
    for k in range(len(points) + 1):
        for uppers in itertools.combinations(points, k):
            free = [q for q in points if q not in uppers]
            if uppers and not free:
                continue
            lower_choices = [
                comb
                for r in range(1, len(free) + 1)
                for comb in itertools.combinations(free, r)
            ]
            for assignment in itertools.product(lower_choices, repeat=len(uppers)):
                pairs = list(root_pairs)
                for p, lows in zip(uppers, assignment):
                    pairs.extend((q, p) for q in lows)
                yield SpecPoset(
                    elements=frozenset(range(n)), root=0, strict=frozenset(pairs)
                )


def enumerate_bruteforce(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[SpecPoset]:
    """Representatives of all valid spectra on n points, up to isomorphism.

    Generates labeled posets with a unique minimum, filters them through
    validate, and groups them by canonical label; the closed-form shape
    enumerator plays no part, so the two enumerators can check each
    other.  The search is exponential in n, hence the bound.
    """
    if n < 1:
        raise ValueError("a spectrum has at least one prime ideal (the zero ideal)")
    if n > bound:
        raise EnumerationBoundError(
            f"brute-force search over {n} points exceeds the bound {bound}"
        )
    reps: dict = {}
    for cand in _poset_candidates(n):
        if validate(cand).ok:
            reps.setdefault(_tree_code(cand), cand)
    return [reps[key] for key in sorted(reps)]


def prufer_witness(model: DomainModel) -> DomainModel:
    """A Pruefer model whose spectrum is order isomorphic to the given one.

    Swapping each K1 entry for a DVR keeps every branch length (both
    classes are one-dimensional), so the spectrum is unchanged up to
    isomorphism and the result has no non-valuation local.
    """
    return DomainModel(
        tuple(LocalClass.K4 if cls is LocalClass.K1 else cls for cls in model)
    )


def poset_dot(p: SpecPoset) -> str:
    """Hasse diagram of a poset in DOT, edges directed bottom to top."""
    hts = p.heights()
    nodes = sorted(p.elements, key=lambda x: (hts[x], str(x)))
    edges = sorted(p.covers(), key=lambda e: (hts[e[0]], str(e[0]), str(e[1])))
    return dot.digraph(
        "spectrum",
        (str(x) for x in nodes),
        ((str(a), str(b)) for a, b in edges),
    )
