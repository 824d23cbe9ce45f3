"""Braid words, validation, writhe, and Markov-move utilities.

A braid on ``m`` strands is a sequence of nonzero letters ``g`` with
``1 <= |g| <= m - 1``; the sign is the crossing sign.  The engine only
evaluates braids whose closure is a knot (a single cycle), so links are
rejected up front.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence


class BraidError(ValueError):
    """Base class for braid input problems."""


class MalformedTokenError(BraidError):
    """A braid-word token is not a signed integer."""


class ZeroLetterError(BraidError):
    """Braid letters must be nonzero."""


class GeneratorOutOfRangeError(BraidError):
    """A letter references a generator outside 1..strands-1."""


class NotAKnotError(BraidError):
    """The braid closure has more than one component."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 2:
            raise BraidError(f"a braid needs at least 2 strands, got {self.strands}")
        for g in self.letters:
            if g == 0:
                raise ZeroLetterError("braid letter 0 is not a generator")
            if abs(g) >= self.strands:
                raise GeneratorOutOfRangeError(
                    f"generator {g} out of range for {self.strands} strands")

    @property
    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def __str__(self) -> str:
        return render_braid(self)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse a whitespace-separated signed-integer braid word.

    >>> parse_braid("1 -2 1 -2", 3).letters
    (1, -2, 1, -2)
    """
    letters = []
    for token in text.split():
        try:
            letters.append(int(token))
        except ValueError:
            raise MalformedTokenError(f"braid token {token!r} is not an integer") from None
    return BraidWord(strands, tuple(letters))


def render_braid(b: BraidWord) -> str:
    return " ".join(str(g) for g in b.letters)


def closure_permutation(b: BraidWord) -> tuple[int, ...]:
    """Underlying strand permutation: image of strand i at position i (0-indexed)."""
    perm = list(range(b.strands))
    for g in b.letters:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def closure_is_knot(b: BraidWord) -> bool:
    """True iff the closure is a single component, i.e. the permutation is one m-cycle."""
    perm = closure_permutation(b)
    seen = 1
    j = perm[0]
    while j != 0:
        j = perm[j]
        seen += 1
    return seen == b.strands


def conjugate(b: BraidWord, word: Sequence[int]) -> BraidWord:
    """The conjugated braid  word . b . word^-1  on the same strand count."""
    inverse = tuple(-g for g in reversed(word))
    return BraidWord(b.strands, tuple(word) + b.letters + inverse)


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: add a strand and append the new generator once."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


@dataclass(frozen=True)
class MarkovVariants:
    conjugates: tuple[BraidWord, ...]
    stabilized_pos: BraidWord
    stabilized_neg: BraidWord


def markov_variants(b: BraidWord, count: int = 5, seed: int = 0) -> MarkovVariants:
    """Sampled conjugates plus both stabilizations, for invariance testing."""
    rng = random.Random(seed)
    gens = [g for i in range(1, b.strands) for g in (i, -i)]
    conjugates = []
    for _ in range(count):
        word = [rng.choice(gens) for _ in range(rng.randint(1, 2))]
        conjugates.append(conjugate(b, word))
    return MarkovVariants(tuple(conjugates), stabilize(b, 1), stabilize(b, -1))
