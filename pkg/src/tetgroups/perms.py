"""Permutations of {1..n} and assignments of permutations to generators.

Convention: permutations act on the left, (f*g)(x) = f(g(x)), so in a
product the rightmost factor acts first.  A word evaluates to the product
of its generator images in word order; for the word PR the image of R is
applied first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .words import Word

# Enumeration beyond this degree is refused outright: the search space and
# the n! canonicalization sweeps stop being a laptop-scale job.
MAX_DEGREE = 12


@dataclass(frozen=True)
class Perm:
    """Permutation of {1..n}, stored in one-line notation.

    images[i-1] is the image of i.  Instances are immutable and hashable;
    the one-line tuple doubles as the lexicographic sort key.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Perm(tuple(inv))

    def __invert__(self) -> "Perm":
        return self.inverse()

    def is_identity(self) -> bool:
        return all(j == i + 1 for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self.apply(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self.apply(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def cycle_string(self) -> str:
        """Cycle notation; identity prints as (1).

        Points are juxtaposed, (12)(34), while every point is a single
        digit; with points past 9 they are space separated.
        """
        cycs = self.cycles()
        if not cycs:
            return "(1)"
        sep = " " if self.degree > 9 else ""
        return "".join("(" + sep.join(str(p) for p in c) + ")" for c in cycs)

    def __str__(self) -> str:
        return self.cycle_string()


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation, e.g. (12)(34), (1 10 2), (132).  (1) or () is
    the identity.  Without separators each character is one point."""
    text = text.strip()
    mapping = dict()
    depth = 0
    chunks: list[str] = []
    cur = ""
    for ch in text:
        if ch == "(":
            if depth:
                raise ValueError(f"nested parenthesis in {text!r}")
            depth = 1
            cur = ""
        elif ch == ")":
            if not depth:
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            depth = 0
            chunks.append(cur)
        elif depth:
            cur += ch
        elif not ch.isspace():
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    if depth:
        raise ValueError(f"unbalanced parenthesis in {text!r}")
    if not chunks and text:
        raise ValueError(f"no cycles found in {text!r}")
    for chunk in chunks:
        if any(c in chunk for c in " ,"):
            points = [int(tok) for tok in chunk.replace(",", " ").split()]
        else:
            points = [int(c) for c in chunk]
        if not points:
            continue
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range for degree {degree}")
        for a, b in zip(points, points[1:] + points[:1]):
            if a in mapping:
                raise ValueError(f"point {a} repeated in {text!r}")
            mapping[a] = b
    images = tuple(mapping.get(i, i) for i in range(1, degree + 1))
    return Perm(images)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n sorted by one-line notation; the identity comes first."""
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be between 1 and {MAX_DEGREE}")
    return tuple(Perm(p) for p in itertools.permutations(range(1, n + 1)))


@dataclass(frozen=True)
class Assignment:
    """Images of the generators, one permutation per generator name."""

    names: tuple[str, ...]
    perms: tuple[Perm, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.perms):
            raise ValueError("one permutation per generator name required")
        if not self.perms:
            raise ValueError("assignment needs at least one generator")
        if len({p.degree for p in self.perms}) != 1:
            raise ValueError("all images must have the same degree")

    @property
    def degree(self) -> int:
        return self.perms[0].degree

    def image_of(self, name: str) -> Perm:
        try:
            return self.perms[self.names.index(name)]
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.images for p in self.perms)

    def as_dict(self) -> dict[str, str]:
        return {name: p.cycle_string() for name, p in zip(self.names, self.perms)}


def compose(f: Perm, g: Perm) -> Perm:
    """(f*g)(x) = f(g(x)); g acts first."""
    return f * g


def inverse(f: Perm) -> Perm:
    return f.inverse()


def order(f: Perm) -> int:
    return f.order()


def evaluate_word(word: Word, assignment: Assignment) -> Perm:
    """Image of a word: product of generator images in word order.

    The rightmost letter acts first, matching the left-action convention.
    """
    n = assignment.degree
    res = Perm.identity(n)
    for gen, sign in word:
        if gen >= len(assignment.perms):
            raise KeyError(f"word uses generator index {gen}, assignment has "
                           f"{len(assignment.perms)}")
        img = assignment.perms[gen]
        if sign < 0:
            img = img.inverse()
        res = res * img
    return res


def is_transitive(assignment: Assignment) -> bool:
    """True when the generated group has a single orbit on {1..n}.

    Forward closure suffices: the reachable set from 1 is closed under each
    image, and an injective self-map of a finite set closed on it is a
    bijection of it, so it is closed under inverses too.
    """
    n = assignment.degree
    seen = [False] * (n + 1)
    seen[1] = True
    stack = [1]
    count = 1
    while stack:
        x = stack.pop()
        for p in assignment.perms:
            y = p.apply(x)
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def conjugate_assignment(assignment: Assignment, sigma: Perm) -> Assignment:
    """Relabel points by sigma: each image g becomes sigma * g * sigma^-1."""
    inv = sigma.inverse()
    return Assignment(assignment.names,
                      tuple(sigma * p * inv for p in assignment.perms))
