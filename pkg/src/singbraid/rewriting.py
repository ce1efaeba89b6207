"""
Relation rewriting for fuzzing and benchmark pair generation.

The rewrite rules are the defining relations of the singular braid monoid
in the presentation over σ_1..σ_{n-1} and τ_1 (free cancellation, braid and
far-commutation moves, the three commutation families involving τ_1), plus
sign-flipped variants that follow from them.  Applying any chain of these
rules to a word produces a word equal to it by construction, which gives
ground-truth EQUAL pairs without trusting the decision procedure.
"""

from __future__ import annotations

import random
from typing import Sequence

from .singular import SingularLetter, SingularWord, sigma_letter, tau_letter

Rule = tuple[tuple[SingularLetter, ...], tuple[SingularLetter, ...]]


def _s(i: int, sign: int = 1) -> SingularLetter:
    return sigma_letter(i, sign)


def _t(i: int) -> SingularLetter:
    return tau_letter(i)


def presentation_rules(n: int) -> list[Rule]:
    """Two-sided rewrite rules valid in the monoid on n strands."""
    rules: list[Rule] = []
    for i in range(1, n):
        rules.append(((_s(i), _s(i, -1)), ()))
        rules.append(((_s(i, -1), _s(i)), ()))
    for i in range(1, n - 1):
        rules.append(((_s(i), _s(i + 1), _s(i)), (_s(i + 1), _s(i), _s(i + 1))))
        rules.append(
            ((_s(i, -1), _s(i + 1, -1), _s(i, -1)), (_s(i + 1, -1), _s(i, -1), _s(i + 1, -1)))
        )
    for i in range(1, n):
        for j in range(i + 2, n):
            for si in (1, -1):
                for sj in (1, -1):
                    rules.append(((_s(i, si), _s(j, sj)), (_s(j, sj), _s(i, si))))
    if n >= 3:
        rules.append(
            ((_s(2), _s(1), _s(1), _s(2), _t(1)), (_t(1), _s(2), _s(1), _s(1), _s(2)))
        )
    for i in range(1, n):
        if i != 2:
            for sign in (1, -1):
                rules.append(((_s(i, sign), _t(1)), (_t(1), _s(i, sign))))
    if n >= 4:
        half = (_s(2), _s(3), _s(1), _s(2))
        rules.append((half + (_t(1),) + half + (_t(1),), (_t(1),) + half + (_t(1),) + half))
    return rules


def _find_matches(letters: Sequence[SingularLetter], pattern: Sequence[SingularLetter]) -> list[int]:
    if not pattern:
        return list(range(len(letters) + 1))
    hits = []
    for start in range(len(letters) - len(pattern) + 1):
        if tuple(letters[start : start + len(pattern)]) == tuple(pattern):
            hits.append(start)
    return hits


def apply_random_rewrite(word: SingularWord, rng: random.Random) -> SingularWord:
    """Apply one randomly chosen relation at a random position.

    Falls back to a free insertion when no rule matches, so a rewrite is
    always performed and the result is always equal to the input.
    """
    rules = presentation_rules(word.strands)
    candidates: list[tuple[int, Rule, bool]] = []
    for rule in rules:
        lhs, rhs = rule
        for pos in _find_matches(word.letters, lhs):
            if lhs:
                candidates.append((pos, rule, False))
        if rhs:
            for pos in _find_matches(word.letters, rhs):
                candidates.append((pos, rule, True))
    insertion_slots = len(word.letters) + 1
    total = len(candidates) + insertion_slots
    choice = rng.randrange(total)
    if choice < len(candidates):
        pos, (lhs, rhs), reverse = candidates[choice]
        src, dst = (rhs, lhs) if reverse else (lhs, rhs)
        letters = word.letters[:pos] + tuple(dst) + word.letters[pos + len(src) :]
        return SingularWord(word.strands, letters)
    slot = choice - len(candidates)
    i = rng.randint(1, word.strands - 1)
    sign = rng.choice((1, -1))
    pair = (_s(i, sign), _s(i, -sign))
    return SingularWord(word.strands, word.letters[:slot] + pair + word.letters[slot:])


def rewrite_chain(word: SingularWord, steps: int, rng: random.Random) -> SingularWord:
    for _ in range(steps):
        word = apply_random_rewrite(word, rng)
    return word


def random_word(
    rng: random.Random, n: int, length: int, singular_degree: int
) -> SingularWord:
    """A random word with the given total length and number of τ_1 letters."""
    if singular_degree > length:
        raise ValueError("degree cannot exceed length")
    letters = [
        _s(rng.randint(1, n - 1), rng.choice((1, -1)))
        for _ in range(length - singular_degree)
    ]
    for _ in range(singular_degree):
        letters.insert(rng.randint(0, len(letters)), _t(1))
    return SingularWord(n, tuple(letters))
