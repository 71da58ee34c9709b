"""Words in a finitely generated group.

A word is a sequence of letters ``(generator_index, sign)`` with sign +1 or
-1.  Letters are stored freely reduced: adjacent pairs ``g g^-1`` cancel.
Cancellation of ``g g`` for involutions is not the word's business, that
depends on a presentation; see :meth:`Word.reduce_involutions`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Letter = tuple[int, int]


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Freely reduced word, letters are (generator index, +1 or -1)."""

    letters: tuple[Letter, ...] = ()

    @staticmethod
    def from_letters(letters: Iterable[Letter]) -> "Word":
        return Word(_free_reduce(letters))

    @staticmethod
    def gen(index: int, sign: int = 1) -> "Word":
        return Word(((index, sign),))

    @staticmethod
    def empty() -> "Word":
        return Word(())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def __mul__(self, other: "Word") -> "Word":
        return Word(_free_reduce(self.letters + other.letters))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return (~self) ** (-k)
        out = Word.empty()
        for _ in range(k):
            out = out * self
        return out

    def __invert__(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def inverse(self) -> "Word":
        return ~self

    def reduce_involutions(self, involutions: frozenset[int]) -> "Word":
        """Normalize signs of involution generators to +1, then cancel.

        For a generator g with g^2 = e the letters g and g^-1 denote the
        same element, so signs are flattened and adjacent equal letters
        cancel.  Runs to a fixed point.
        """
        letters = list(self.letters)
        while True:
            out: list[Letter] = []
            for gen, sign in letters:
                if gen in involutions:
                    sign = 1
                if out and out[-1][0] == gen and (
                    out[-1][1] == -sign or (gen in involutions and out[-1][1] == sign)
                ):
                    out.pop()
                else:
                    out.append((gen, sign))
            if out == letters:
                return Word(tuple(out))
            letters = out

    def render(self, names: tuple[str, ...] | list[str]) -> str:
        """Print with exponent folding: ``SRS``, ``a^-1b^2``.  Empty word is ''."""
        parts: list[str] = []
        i = 0
        letters = self.letters
        while i < len(letters):
            gen, sign = letters[i]
            j = i
            while j < len(letters) and letters[j] == (gen, sign):
                j += 1
            exp = sign * (j - i)
            parts.append(names[gen] if exp == 1 else f"{names[gen]}^{exp}")
            i = j
        return "".join(parts)


def parse_word(text: str, names: tuple[str, ...] | list[str]) -> Word:
    """Parse ``SRS`` or ``a^-1b^2`` back into a Word (longest name match wins)."""
    by_length = sorted(range(len(names)), key=lambda i: -len(names[i]))
    text = text.strip()
    letters: list[Letter] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        for i in by_length:
            if text.startswith(names[i], pos):
                pos += len(names[i])
                exp = 1
                if pos < len(text) and text[pos] == "^":
                    pos += 1
                    start = pos
                    if pos < len(text) and text[pos] == "-":
                        pos += 1
                    while pos < len(text) and text[pos].isdigit():
                        pos += 1
                    if pos == start or text[start:pos] == "-":
                        raise ValueError(f"bad exponent in word {text!r}")
                    exp = int(text[start:pos])
                sign = 1 if exp > 0 else -1
                letters.extend([(i, sign)] * abs(exp))
                break
        else:
            raise ValueError(f"unknown generator at {text[pos:]!r} in word {text!r}")
    return Word.from_letters(letters)
