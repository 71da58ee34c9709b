"""Enumerate transitive permutation representations up to conjugacy.

An index-n subgroup of a group G corresponds to the transitive action of G
on its n cosets; two subgroups are conjugate in G exactly when the actions
differ by a relabeling of {1..n}.  So the classes enumerated here are
S_n-conjugation orbits of transitive, relator-satisfying assignments, and
each class is the conjugacy class of the stabilizer of point 1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .perms import (MAX_DEGREE, Assignment, Perm, all_perms,
                    conjugate_assignment, evaluate_word, is_transitive)
from .presentations import Presentation
from .words import Word


@dataclass(frozen=True)
class TransitiveRep:
    """A transitive assignment that satisfies every relator (checked)."""

    presentation: Presentation
    assignment: Assignment

    def __post_init__(self) -> None:
        if self.assignment.names != self.presentation.generator_names:
            raise ValueError("assignment names do not match the presentation")
        bad = [base for base, k in self.presentation.relator_powers
               if k % evaluate_word(base, self.assignment).order() != 0]
        if bad:
            shown = ", ".join(self.presentation.render(w) for w in bad)
            raise ValueError(f"relators violated (base words: {shown})")
        if not is_transitive(self.assignment):
            raise ValueError("assignment is not transitive")

    @property
    def degree(self) -> int:
        return self.assignment.degree


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of index-n subgroups.

    rep is the canonical (lexicographically least) representative of the
    S_n-conjugation orbit; labeled_orbit_size is the orbit's size, i.e. the
    number of labeled transitive homomorphisms in the class.
    """

    rep: TransitiveRep
    index: int
    image_type: str
    labeled_orbit_size: int


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"index must be between 1 and {MAX_DEGREE}, got {n}")


def _relator_ok(base: Word, k: int, images: list[Perm]) -> bool:
    n = images[0].degree
    res = Perm.identity(n)
    for gen, sign in base:
        img = images[gen]
        res = res * (img.inverse() if sign < 0 else img)
    return k % res.order() == 0


def enumerate_candidates(presentation: Presentation, n: int,
                         stage: str = "transitive",
                         nontrivial: bool = False) -> list[Assignment]:
    """Assignments in lexicographic order, filtered up to the given stage.

    stage 'all' is the raw product space (use only for small n), stage
    'relator_filtered' keeps assignments satisfying every relator, stage
    'transitive' additionally requires a single orbit.  With nontrivial the
    assignment sending every generator to the identity is dropped.
    """
    _check_degree(n)
    if stage not in ("all", "relator_filtered", "transitive"):
        raise ValueError(f"unknown stage {stage!r}")
    names = presentation.generator_names
    k = len(names)
    perms = all_perms(n)

    if stage == "all":
        import itertools

        out = []
        for combo in itertools.product(perms, repeat=k):
            if nontrivial and all(p.is_identity() for p in combo):
                continue
            out.append(Assignment(names, combo))
        return out

    # A relator can be tested once the deepest generator it uses is placed.
    schedule: list[list[tuple[Word, int]]] = [[] for _ in range(k)]
    for base, exp in presentation.relator_powers:
        deepest = max(gen for gen, _ in base)
        schedule[deepest].append((base, exp))

    out = []
    images: list[Perm] = []

    def extend(depth: int) -> None:
        if depth == k:
            combo = tuple(images)
            if nontrivial and all(p.is_identity() for p in combo):
                return
            assignment = Assignment(names, combo)
            if stage == "transitive" and not is_transitive(assignment):
                return
            out.append(assignment)
            return
        for p in perms:
            images.append(p)
            if all(_relator_ok(base, exp, images) for base, exp in schedule[depth]):
                extend(depth + 1)
            images.pop()

    extend(0)
    return out


def canonical_form(assignment: Assignment) -> Assignment:
    """Lexicographically least S_n-conjugate (one-line tuples, generator order)."""
    best = None
    best_key = None
    for sigma in all_perms(assignment.degree):
        cand = conjugate_assignment(assignment, sigma)
        key = cand.key()
        if best_key is None or key < best_key:
            best, best_key = cand, key
    return best


def classify_image(assignment: Assignment) -> str:
    """Name the subgroup of S_n generated by the images.

    Degrees up to 4 get the usual names (1, S2, Z3, S3, V, Z4, D4, A4, S4);
    past that the label just records the order.
    """
    n = assignment.degree
    elements = {Perm.identity(n)}
    frontier = [Perm.identity(n)]
    while frontier:
        g = frontier.pop()
        for img in assignment.perms:
            h = g * img
            if h not in elements:
                elements.add(h)
                frontier.append(h)
    size = len(elements)
    if size == 1:
        return "1"
    if n == 2:
        return "S2"
    if n == 3:
        return {3: "Z3", 6: "S3"}.get(size, f"G{size}")
    if n == 4:
        if size == 4:
            has_4cycle = any(g.order() == 4 for g in elements)
            return "Z4" if has_4cycle else "V"
        return {8: "D4", 12: "A4", 24: "S4"}.get(size, f"G{size}")
    return f"G{size}"


def enumerate_classes(presentation: Presentation, n: int) -> list[SubgroupClass]:
    """Conjugacy classes of index-n subgroups, sorted by canonical rep."""
    _check_degree(n)
    if n > 4:
        warnings.warn("oracle cross-checks only run for index <= 4; "
                      f"counts at index {n} are enumerator-only", stacklevel=2)
    candidates = enumerate_candidates(presentation, n, stage="transitive")
    orbits: dict[tuple, int] = {}
    for assignment in candidates:
        key = canonical_form(assignment).key()
        orbits[key] = orbits.get(key, 0) + 1
    classes = []
    for key in sorted(orbits):
        canon = Assignment(presentation.generator_names,
                           tuple(Perm(images) for images in key))
        classes.append(SubgroupClass(rep=TransitiveRep(presentation, canon),
                                     index=n,
                                     image_type=classify_image(canon),
                                     labeled_orbit_size=orbits[key]))
    return classes


def count_distinct_subgroups(presentation: Presentation, n: int) -> int:
    """Index-n subgroups counted plainly, not up to conjugacy.

    Subgroups are stabilizers of point 1, so two assignments give the same
    subgroup exactly when conjugate by a relabeling fixing 1; for each
    conjugacy class that splits its orbit into (n-1)!-fold copies of the
    same subgroup.
    """
    _check_degree(n)
    candidates = enumerate_candidates(presentation, n, stage="transitive")
    fix1 = [s for s in all_perms(n) if s.apply(1) == 1]
    keys = set()
    for assignment in candidates:
        keys.add(min(conjugate_assignment(assignment, s).key() for s in fix1))
    return len(keys)
