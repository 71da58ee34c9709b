"""Coxeter tetrahedron symbols and the two group presentations per symbol.

A symbol [p,q,r,s,t,u] labels the tetrahedron whose reflection group is

    H = < P,Q,R,S | P^2, Q^2, R^2, S^2,
                    (PQ)^p, (QR)^q, (RS)^r, (PR)^s, (PS)^t, (QS)^u >

and whose orientation-preserving (Kleinian, in the hyperbolic case) group
is generated by a = PQ, b = QR, c = RS with

    K = < a,b,c | a^p, b^q, c^r, (ab)^s, (abc)^t, (bc)^u >

since ab = PR, abc = PS and bc = QS once the reflections square away.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .words import Word


@dataclass(frozen=True)
class CoxeterSymbol:
    """The six edge labels [p,q,r,s,t,u], each an integer >= 2."""

    p: int
    q: int
    r: int
    s: int
    t: int
    u: int

    def __post_init__(self) -> None:
        for value in self.as_tuple():
            if not isinstance(value, int) or value < 2:
                raise ValueError(f"symbol entries must be integers >= 2, got {value}")

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.p, self.q, self.r, self.s, self.t, self.u)

    def as_text(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())

    def __str__(self) -> str:
        return "[" + self.as_text() + "]"


def parse_symbol(text: str) -> CoxeterSymbol:
    """Parse '3,3,6,2,2,2' or '[3,3,6,2,2,2]' (whitespace tolerated)."""
    cleaned = text.strip()
    if cleaned.startswith("[") and cleaned.endswith("]"):
        cleaned = cleaned[1:-1]
    parts = [tok.strip() for tok in cleaned.split(",")]
    if len(parts) != 6:
        raise ValueError(f"symbol needs exactly 6 entries, got {len(parts)}: {text!r}")
    try:
        values = [int(tok) for tok in parts]
    except ValueError:
        raise ValueError(f"symbol entries must be integers: {text!r}") from None
    return CoxeterSymbol(*values)


@dataclass(frozen=True)
class Presentation:
    """Generator names plus relators, with a few derived conveniences."""

    kind: str  # "full" or "kleinian"
    symbol: CoxeterSymbol
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    @cached_property
    def involutions(self) -> frozenset[int]:
        """Generators g with a relator g^2."""
        out = set()
        for rel in self.relators:
            if len(rel) == 2 and rel.letters[0] == rel.letters[1]:
                out.add(rel.letters[0][0])
        return frozenset(out)

    @cached_property
    def relator_powers(self) -> tuple[tuple[Word, int], ...]:
        """Each relator as (primitive base word, exponent).

        A relator (PQ)^3 is stored expanded; here it factors back into the
        base PQ and the exponent 3.  Satisfying the relator is exactly
        requiring the order of the base's image to divide the exponent.
        """
        out = []
        for rel in self.relators:
            letters = rel.letters
            m = len(letters)
            base, k = letters, 1
            for d in range(1, m):
                if m % d == 0 and letters == letters[:d] * (m // d):
                    base, k = letters[:d], m // d
                    break
            out.append((Word(base), k))
        return tuple(out)

    @cached_property
    def element_orders(self) -> dict[Word, int]:
        """Map from primitive relator base to the order it is forced to divide."""
        return {base: k for base, k in self.relator_powers}

    @cached_property
    def pair_bases(self) -> tuple[Word, ...]:
        """Bases of relators of length >= 2 words, in relator order.

        For the full presentation these are PQ, QR, RS, PR, PS, QS.
        """
        return tuple(base for base, _ in self.relator_powers if len(base) >= 2)

    def reduce(self, word: Word) -> Word:
        """Involution-aware free reduction (SS cancels, S^-1 becomes S)."""
        return word.reduce_involutions(self.involutions)

    def render(self, word: Word) -> str:
        return word.render(self.generator_names)

    def parse(self, text: str) -> Word:
        from .words import parse_word

        return parse_word(text, self.generator_names)


def _power(base: Word, k: int) -> Word:
    return Word(base.letters * k)


def full_presentation(symbol: CoxeterSymbol) -> Presentation:
    """Reflection group on P, Q, R, S."""
    P, Q, R, S = (Word.gen(i) for i in range(4))
    p, q, r, s, t, u = symbol.as_tuple()
    relators = (
        _power(P, 2), _power(Q, 2), _power(R, 2), _power(S, 2),
        _power(P * Q, p), _power(Q * R, q), _power(R * S, r),
        _power(P * R, s), _power(P * S, t), _power(Q * S, u),
    )
    return Presentation("full", symbol, ("P", "Q", "R", "S"), relators)


def kleinian_presentation(symbol: CoxeterSymbol) -> Presentation:
    """Rotation subgroup on a = PQ, b = QR, c = RS."""
    a, b, c = (Word.gen(i) for i in range(3))
    p, q, r, s, t, u = symbol.as_tuple()
    relators = (
        _power(a, p), _power(b, q), _power(c, r),
        _power(a * b, s), _power(a * b * c, t), _power(b * c, u),
    )
    return Presentation("kleinian", symbol, ("a", "b", "c"), relators)


def presentation_for(symbol: CoxeterSymbol, group: str) -> Presentation:
    if group == "full":
        return full_presentation(symbol)
    if group == "kleinian":
        return kleinian_presentation(symbol)
    raise ValueError(f"group must be 'full' or 'kleinian', got {group!r}")


@dataclass(frozen=True)
class CatalogEntry:
    """One tetrahedron: stable id, symbol, geometry, ideal vertex count."""

    id: str
    symbol: CoxeterSymbol
    geometry: str  # spherical | euclidean | hyperbolic-compact | hyperbolic-noncompact
    ideal_vertices: int


def _entry(id_: str, entries: tuple[int, ...], geometry: str, ideal: int) -> CatalogEntry:
    return CatalogEntry(id_, CoxeterSymbol(*entries), geometry, ideal)


# The 40 tetrahedra whose symbols have all entries >= 2: five spherical,
# three Euclidean, and the 32 hyperbolic ones (t1-t9 compact, t10-t32 with
# ideal vertices).
CATALOG: tuple[CatalogEntry, ...] = (
    _entry("s1", (3, 3, 3, 2, 2, 2), "spherical", 0),
    _entry("s2", (4, 3, 3, 2, 2, 2), "spherical", 0),
    _entry("s3", (3, 4, 3, 2, 2, 2), "spherical", 0),
    _entry("s4", (5, 3, 3, 2, 2, 2), "spherical", 0),
    _entry("s5", (3, 3, 2, 3, 2, 2), "spherical", 0),
    _entry("e1", (4, 3, 4, 2, 2, 2), "euclidean", 0),
    _entry("e2", (3, 4, 2, 3, 2, 2), "euclidean", 0),
    _entry("e3", (3, 3, 3, 2, 2, 3), "euclidean", 0),
    _entry("t1", (3, 5, 2, 3, 2, 2), "hyperbolic-compact", 0),
    _entry("t2", (5, 3, 5, 2, 2, 2), "hyperbolic-compact", 0),
    _entry("t3", (3, 5, 3, 2, 2, 3), "hyperbolic-compact", 0),
    _entry("t4", (3, 5, 3, 2, 2, 2), "hyperbolic-compact", 0),
    _entry("t5", (3, 4, 3, 2, 2, 3), "hyperbolic-compact", 0),
    _entry("t6", (3, 5, 3, 2, 2, 4), "hyperbolic-compact", 0),
    _entry("t7", (4, 3, 5, 2, 2, 2), "hyperbolic-compact", 0),
    _entry("t8", (4, 3, 4, 2, 2, 3), "hyperbolic-compact", 0),
    _entry("t9", (5, 3, 5, 2, 2, 3), "hyperbolic-compact", 0),
    _entry("t10", (3, 3, 6, 2, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t11", (4, 4, 3, 2, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t12", (3, 3, 3, 3, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t13", (4, 3, 6, 2, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t14", (3, 4, 2, 4, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t15", (3, 6, 3, 2, 2, 2), "hyperbolic-noncompact", 2),
    _entry("t16", (5, 3, 6, 2, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t17", (4, 3, 3, 3, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t18", (3, 6, 2, 3, 2, 2), "hyperbolic-noncompact", 2),
    _entry("t19", (4, 4, 4, 2, 2, 2), "hyperbolic-noncompact", 3),
    _entry("t20", (6, 3, 6, 2, 2, 2), "hyperbolic-noncompact", 2),
    _entry("t21", (3, 4, 4, 2, 2, 3), "hyperbolic-noncompact", 1),
    _entry("t22", (5, 3, 3, 3, 2, 2), "hyperbolic-noncompact", 1),
    _entry("t23", (3, 3, 6, 2, 2, 3), "hyperbolic-noncompact", 2),
    _entry("t24", (3, 3, 3, 3, 2, 3), "hyperbolic-noncompact", 2),
    _entry("t25", (4, 4, 2, 4, 2, 2), "hyperbolic-noncompact", 2),
    _entry("t26", (6, 3, 3, 3, 2, 2), "hyperbolic-noncompact", 3),
    _entry("t27", (4, 3, 6, 2, 2, 3), "hyperbolic-noncompact", 2),
    _entry("t28", (4, 4, 4, 2, 2, 3), "hyperbolic-noncompact", 2),
    _entry("t29", (5, 3, 6, 2, 2, 3), "hyperbolic-noncompact", 2),
    _entry("t30", (6, 3, 6, 2, 2, 3), "hyperbolic-noncompact", 4),
    _entry("t31", (4, 4, 4, 2, 2, 4), "hyperbolic-noncompact", 4),
    _entry("t32", (3, 3, 3, 3, 3, 3), "hyperbolic-noncompact", 4),
)


def catalog() -> tuple[CatalogEntry, ...]:
    return CATALOG


def catalog_by_id(id_: str) -> CatalogEntry:
    for entry in CATALOG:
        if entry.id == id_:
            return entry
    raise ValueError(f"no catalog entry with id {id_!r}")
