"""Deterministic word corpora for verification runs and tests."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .braid import BraidLetter, BraidWord


def all_words(strands: int, max_crossings: int) -> Iterator[BraidWord]:
    """Every word on exactly ``strands`` strands with up to ``max_crossings``."""
    alphabet = [g * s for g in range(1, strands) for s in (1, -1)]
    for length in range(max_crossings + 1):
        if length > 0 and not alphabet:
            return
        for tokens in itertools.product(alphabet, repeat=length):
            yield BraidWord.from_tokens(tokens, strands)


def exhaustive_count(strands: int, max_crossings: int) -> int:
    k = 2 * (strands - 1)
    if k == 0:
        return 1
    return sum(k**length for length in range(max_crossings + 1))


def random_word(rng: random.Random, max_crossings: int, max_strands: int) -> BraidWord:
    strands = rng.randint(1, max_strands)
    if strands == 1:
        return BraidWord((), 1)
    length = rng.randint(0, max_crossings)
    tokens = [
        rng.randint(1, strands - 1) * rng.choice((1, -1)) for _ in range(length)
    ]
    return BraidWord.from_tokens(tokens, strands)


def random_words(
    count: int, *, max_crossings: int, max_strands: int, seed: int
) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_word(rng, max_crossings, max_strands) for _ in range(count)]


def random_alternating_word(
    rng: random.Random,
    strands: int,
    min_per_gap: int = 2,
    max_per_gap: int = 4,
) -> BraidWord:
    """A random reduced alternating braid word with no empty gaps.

    Every gap receives between ``min_per_gap`` and ``max_per_gap`` crossings
    whose sign is determined by the gap parity and a random leading sign; the
    crossings of all gaps are interleaved uniformly at random.
    """
    if strands < 2:
        raise ValueError("alternating words need at least 2 strands")
    leading = rng.choice((1, -1))
    letters: list[BraidLetter] = []
    for gap in range(1, strands):
        sign = leading if gap % 2 == 1 else -leading
        letters.extend(
            BraidLetter(gap, sign) for _ in range(rng.randint(min_per_gap, max_per_gap))
        )
    rng.shuffle(letters)
    return BraidWord(tuple(letters), strands)


def alternating_words(
    count: int, *, min_strands: int = 2, max_strands: int = 5, seed: int = 0
) -> list[BraidWord]:
    rng = random.Random(seed)
    spread = list(range(min_strands, max_strands + 1))
    return [
        random_alternating_word(rng, spread[i % len(spread)]) for i in range(count)
    ]
