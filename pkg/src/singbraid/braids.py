"""
Braid group arithmetic: words in the Artin generators and the left-greedy
Garside normal form.

A braid word is a sequence of letters σ_i^{±1} over n strands.  Equality of
words in the braid group is decided through the canonical normal form
Δ^k · A_1 ⋯ A_ℓ, where Δ is the positive half twist and each factor A_t is a
permutation braid (a positive braid in which every pair of strands crosses
at most once), stored as its permutation.  Adjacent factors are kept
left-weighted: A_t absorbs every generator that could start A_{t+1}.  The
normalisation works entirely at the permutation level; a generator σ_i may
move from the front of a factor B to the back of a factor A exactly when i
is a starting descent of B but not a finishing descent of A.  Two words are
equal in the braid group if and only if their normal forms coincide
structurally, and the normal-form triple also serves as the canonical
hashable key used by the group-ring layer.

The module also provides the canonical coset representatives used to reduce
a word to the pure subgroup (chains of blocks σ_i σ_{i+1} ⋯ σ_j, one block
per level), and the named pure-braid expansions (band generators, the half
twist, and the generator of the centre).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from . import stats
from .errors import StrandMismatchError
from .permutations import Permutation


class BraidLetter(NamedTuple):
    """One Artin generator σ_index to the power sign (sign is +1 or -1)."""

    index: int
    sign: int


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators σ_1^{±1}, .., σ_{n-1}^{±1} on n strands."""

    strands: int
    letters: tuple[BraidLetter, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        for letter in self.letters:
            if not 1 <= letter.index <= self.strands - 1:
                raise ValueError(
                    f"generator index {letter.index} out of range for {self.strands} strands"
                )
            if letter.sign not in (1, -1):
                raise ValueError(f"letter sign must be ±1, got {letter.sign}")

    @staticmethod
    def identity(n: int) -> BraidWord:
        return BraidWord(n, ())

    @staticmethod
    def from_ints(n: int, signed_indices: Iterable[int]) -> BraidWord:
        """Build a word from signed indices: +i means σ_i, -i means σ_i^{-1}."""
        letters = []
        for v in signed_indices:
            if v == 0:
                raise ValueError("0 is not a valid signed generator index")
            letters.append(BraidLetter(abs(v), 1 if v > 0 else -1))
        return BraidWord(n, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise StrandMismatchError(self.strands, other.strands)
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(
            self.strands,
            tuple(BraidLetter(l.index, -l.sign) for l in reversed(self.letters)),
        )

    def free_reduce(self) -> BraidWord:
        """Cancel adjacent σ_i σ_i^{-1} pairs until none remain."""
        out: list[BraidLetter] = []
        for letter in self.letters:
            if out and out[-1].index == letter.index and out[-1].sign == -letter.sign:
                out.pop()
            else:
                out.append(letter)
        return BraidWord(self.strands, tuple(out))

    def permutation(self) -> Permutation:
        p = list(range(1, self.strands + 1))
        for letter in self.letters:
            i = letter.index
            # positions i, i+1 swap; p maps start position -> current position,
            # so swap the two start positions currently sitting at i, i+1.
            a = p.index(i)
            b = p.index(i + 1)
            p[a], p[b] = p[b], p[a]
        return Permutation(p)

    def is_pure(self) -> bool:
        return self.permutation().is_identity()

    def signed_indices(self) -> list[int]:
        return [l.index * l.sign for l in self.letters]

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {self.signed_indices()!r})"


def free_reduce(word: BraidWord) -> BraidWord:
    return word.free_reduce()


def permutation_of(word: BraidWord) -> Permutation:
    return word.permutation()


def sigma(n: int, i: int, sign: int = 1) -> BraidWord:
    return BraidWord(n, (BraidLetter(i, sign),))


# ---------------------------------------------------------------------------
# Left-greedy normal form
# ---------------------------------------------------------------------------


def _transfer(a: Permutation, b: Permutation) -> tuple[Permutation, Permutation]:
    """Renormalise the factor pair (A, B).

    Moves generators from the front of B to the back of A while some index
    starts B but does not finish A.  Returns the left-weighted pair; the
    first component is the maximal permutation-braid head of the product.
    """
    n = a.size
    while True:
        diff = b.starting_descents() - a.finishing_descents()
        if not diff:
            return a, b
        s = Permutation.transposition(n, min(diff))
        a = a * s
        b = s * b


def _is_left_weighted(factors: Sequence[Permutation]) -> bool:
    for t in range(len(factors) - 1):
        if factors[t + 1].starting_descents() - factors[t].finishing_descents():
            return False
    return True


def _append_factor(out: list[Permutation], y: Permutation) -> None:
    """Append one permutation braid to a left-weighted list, re-combing backwards."""
    if y.is_identity():
        return
    out.append(y)
    j = len(out) - 2
    while j >= 0:
        a, b = _transfer(out[j], out[j + 1])
        if a == out[j]:
            break
        out[j] = a
        if b.is_identity():
            del out[j + 1]
        else:
            out[j + 1] = b
        j -= 1


def _normalize_factors(n: int, factors: Iterable[Permutation]) -> tuple[int, tuple[Permutation, ...]]:
    """Left-weight a factor sequence; returns (extra power of Δ, factors).

    The incremental comb relies on the standard domino property of greedy
    normal forms; a final verification pass falls back to full sweeps if an
    adjacent pair ever comes out unweighted, so the result is always valid.
    """
    out: list[Permutation] = []
    for y in factors:
        _append_factor(out, y)
    while not _is_left_weighted(out):  # pragma: no cover - safety net
        changed = False
        for t in range(len(out) - 1):
            a, b = _transfer(out[t], out[t + 1])
            if a != out[t]:
                out[t], out[t + 1] = a, b
                changed = True
        out = [p for p in out if not p.is_identity()]
        if not changed:
            break
    power = 0
    while out and out[0].is_reversal():
        out.pop(0)
        power += 1
    while out and out[-1].is_identity():
        out.pop()
    return power, tuple(out)


def _nf_from_stream(
    n: int, items: Sequence[tuple[int, Permutation]], trailing_power: int = 0
) -> "BraidNF":
    """Collect a stream of (Δ-power, factor) pairs into a normal form.

    Each item contributes Δ^power · factor; the Δ powers are pushed to the
    front, conjugating the factors they pass (conjugation by Δ acts on a
    permutation braid as conjugation by the reversal).
    """
    exponent = trailing_power
    conjugated: list[Permutation] = []
    for dpow, factor in reversed(items):
        if exponent % 2:
            factor = factor.conjugate_by_reversal()
        conjugated.append(factor)
        exponent += dpow
    conjugated.reverse()
    extra, factors = _normalize_factors(n, conjugated)
    return BraidNF(n, exponent + extra, factors)


@dataclass(frozen=True)
class BraidNF:
    """The left-greedy normal form Δ^power · factors of a braid.

    Factors are permutation braids stored by their permutations, none equal
    to the identity or the reversal, every adjacent pair left-weighted.
    Structural equality of two normal forms is equality in the braid group.
    """

    strands: int
    power: int
    factors: tuple[Permutation, ...]

    @staticmethod
    def identity(n: int) -> BraidNF:
        return BraidNF(n, 0, ())

    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors

    def __mul__(self, other: BraidNF) -> BraidNF:
        if not isinstance(other, BraidNF):
            return NotImplemented
        if other.strands != self.strands:
            raise StrandMismatchError(self.strands, other.strands)
        left = self.factors
        if other.power % 2:
            left = tuple(f.conjugate_by_reversal() for f in left)
        extra, factors = _normalize_factors(self.strands, left + other.factors)
        return BraidNF(self.strands, self.power + other.power + extra, factors)

    def inverse(self) -> BraidNF:
        # (Δ^k A_1 ⋯ A_ℓ)^{-1} = (Δ^{-1} C_ℓ) ⋯ (Δ^{-1} C_1) Δ^{-k} where
        # C_t is the permutation braid with Δ = C_t · A_t.
        n = self.strands
        w0 = Permutation.reversal(n)
        items = [(-1, w0 * f.inverse()) for f in reversed(self.factors)]
        return _nf_from_stream(n, items, trailing_power=-self.power)

    def __pow__(self, exponent: int) -> BraidNF:
        base = self if exponent >= 0 else self.inverse()
        acc = BraidNF.identity(self.strands)
        for _ in range(abs(exponent)):
            acc = acc * base
        return acc

    def to_word(self) -> BraidWord:
        """A braid word representing this normal form."""
        n = self.strands
        half = half_twist(n)
        if self.power >= 0:
            word = [half] * self.power
        else:
            word = [half.inverse()] * (-self.power)
        for factor in self.factors:
            word.append(BraidWord.from_ints(n, lift_word(factor)))
        out = BraidWord.identity(n)
        for piece in word:
            out = out * piece
        return out

    def key(self) -> str:
        """Canonical serialisation "Δ^k | p_1 | p_2 | …" (one-line notation)."""
        parts = [f"Δ^{self.power}"]
        parts.extend(f.one_line() for f in self.factors)
        return " | ".join(parts)

    def __repr__(self) -> str:
        return f"BraidNF({self.strands}, {self.power}, {[list(f.images) for f in self.factors]})"


def lift_word(p: Permutation) -> list[int]:
    """A reduced positive word (list of generator indices) realising p."""
    word: list[int] = []
    n = p.size
    q = p
    while not q.is_identity():
        i = min(q.starting_descents())
        word.append(i)
        q = Permutation.transposition(n, i) * q
    return word


def normal_form(word: BraidWord) -> BraidNF:
    """Compute the left-greedy normal form of a braid word."""
    stats.COUNTS.normal_form_calls += 1
    n = word.strands
    w0 = Permutation.reversal(n)
    items: list[tuple[int, Permutation]] = []
    for letter in word.letters:
        s = Permutation.transposition(n, letter.index)
        if letter.sign > 0:
            items.append((0, s))
        else:
            # σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1}), a permutation braid.
            items.append((-1, w0 * s))
    return _nf_from_stream(n, items)


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    """Equality in the braid group, by structural comparison of normal forms."""
    if u.strands != v.strands:
        raise StrandMismatchError(u.strands, v.strands)
    return normal_form(u) == normal_form(v)


# ---------------------------------------------------------------------------
# Coset representatives and named expansions
# ---------------------------------------------------------------------------


def coset_block(n: int, i: int, j: int) -> BraidWord:
    """The chain block σ_i σ_{i+1} ⋯ σ_j (requires 1 ≤ i ≤ j ≤ n-1)."""
    if not 1 <= i <= j <= n - 1:
        raise ValueError(f"block indices ({i},{j}) out of range for n={n}")
    return BraidWord.from_ints(n, range(i, j + 1))


def transversal_rep(p: Permutation) -> BraidWord:
    """The canonical chain product of blocks realising the permutation p.

    The representative is built by peeling one level at a time: the level-i
    block sends strand i to its final position, so the blocks appear with
    level n-1 leftmost and level 1 rightmost.  The result is the unique
    product of at most one block per level whose permutation equals p, and
    multiplying a word by its inverse reduces the word to the pure subgroup.
    """
    n = p.size
    blocks: list[BraidWord] = []
    q = p
    for level in range(1, n):
        target = q(level)
        if target != level:
            block = coset_block(n, level, target - 1)
            blocks.append(block)
            q = q * block.permutation().inverse()
    word = BraidWord.identity(n)
    for block in reversed(blocks):
        word = word * block
    return word


def pure_generator(n: int, k: int, j: int) -> BraidWord:
    """The pure band generator σ_k σ_{k+1} ⋯ σ_j^2 σ_{j-1}^{-1} ⋯ σ_k^{-1}."""
    if not 1 <= k <= j <= n - 1:
        raise ValueError(f"band indices ({k},{j}) out of range for n={n}")
    ints = list(range(k, j + 1)) + [j] + [-t for t in range(j - 1, k - 1, -1)]
    return BraidWord.from_ints(n, ints)


def half_twist(n: int) -> BraidWord:
    """The positive half twist Δ: (σ_1 ⋯ σ_{n-1})(σ_1 ⋯ σ_{n-2}) ⋯ (σ_1)."""
    ints: list[int] = []
    for top in range(n - 1, 0, -1):
        ints.extend(range(1, top + 1))
    return BraidWord.from_ints(n, ints)


def center_word(n: int) -> BraidWord:
    """The generator of the centre, as the product of descending band blocks."""
    word = BraidWord.identity(n)
    for k in range(1, n):
        for j in range(n - 1, k - 1, -1):
            word = word * pure_generator(n, k, j)
    return word


def generator_expansion(name: str, strands: int):
    """Expand a named generator: a(k,j), X(k,j), M(i,j), Delta or c.

    Returns a BraidWord for the pure names and a singular word for X(k,j).
    """
    from .singular import singular_pure_generator

    name = name.strip()
    if name == "Delta":
        return half_twist(strands)
    if name == "c":
        return center_word(strands)
    m = re.fullmatch(r"([aXM])\((\d+),\s*(\d+)\)", name)
    if m is None:
        raise ValueError(f"unknown generator name: {name!r}")
    kind, first, second = m.group(1), int(m.group(2)), int(m.group(3))
    if kind == "a":
        return pure_generator(strands, first, second)
    if kind == "M":
        return coset_block(strands, first, second)
    return singular_pure_generator(strands, first, second)
