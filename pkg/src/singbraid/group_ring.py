"""
The integral group ring of the braid group, with normal forms as keys.

An element is a finitely supported map from canonical braid normal forms to
nonzero integer coefficients.  Products renormalise keys through the braid
kernel, so two expressions agree as ring elements exactly when they agree
in the group ring.

The desingularization map sends a singular word into this ring: σ_i maps to
itself and a singular crossing τ_i maps to σ_i − σ_i^{-1}.  It is a
homomorphism of monoids and is faithful on words with at most two singular
crossings, which is what makes it usable as an equality oracle for the
low-degree commutation checks of the decision procedure.  There is no image
for τ_i^{-1}; such letters are rejected.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Mapping

from . import stats
from .braids import BraidNF, normal_form, sigma
from .errors import StrandMismatchError, UnsupportedWordError

if TYPE_CHECKING:  # pragma: no cover
    from .singular import SingularWord


class GroupRingElement:
    """A finitely supported integer combination of braid normal forms."""

    __slots__ = ("strands", "terms")

    def __init__(self, strands: int, terms: Mapping[BraidNF, int] = ()):
        self.strands = strands
        self.terms: dict[BraidNF, int] = {
            key: coeff for key, coeff in dict(terms).items() if coeff != 0
        }

    @staticmethod
    def zero(n: int) -> GroupRingElement:
        return GroupRingElement(n)

    @staticmethod
    def one(n: int) -> GroupRingElement:
        return GroupRingElement(n, {BraidNF.identity(n): 1})

    @staticmethod
    def from_nf(nf: BraidNF, coeff: int = 1) -> GroupRingElement:
        return GroupRingElement(nf.strands, {nf: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def add_scaled(self, other: GroupRingElement, scalar: int) -> GroupRingElement:
        """self + scalar·other, with zero coefficients pruned."""
        if other.strands != self.strands:
            raise StrandMismatchError(self.strands, other.strands)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            new = terms.get(key, 0) + scalar * coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return GroupRingElement(self.strands, terms)

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        return self.add_scaled(other, 1)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self.add_scaled(other, -1)

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.strands != self.strands:
            raise StrandMismatchError(self.strands, other.strands)
        terms: dict[BraidNF, int] = {}
        for key1, c1 in self.terms.items():
            for key2, c2 in other.terms.items():
                key = key1 * key2
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    terms.pop(key, None)
        return GroupRingElement(self.strands, terms)

    def __rmul__(self, scalar: int) -> GroupRingElement:
        if not isinstance(scalar, int):
            return NotImplemented
        return GroupRingElement(
            self.strands, {key: scalar * c for key, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElement)
            and self.strands == other.strands
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.strands, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[int, str]]:
        """(coefficient, key) pairs ordered lexicographically by key."""
        return sorted(
            ((coeff, key.key()) for key, coeff in self.terms.items()),
            key=lambda item: item[1],
        )

    def render(self) -> str:
        """Textual rendering "+3·[key] -1·[key] …"; the zero element is "0"."""
        if not self.terms:
            return "0"
        parts = []
        for coeff, key in self.sorted_terms():
            sign = "+" if coeff > 0 else "-"
            parts.append(f"{sign}{abs(coeff)}·[{key}]")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"GroupRingElement({self.strands}, {self.render()})"


def gr_combine(x: GroupRingElement, y: GroupRingElement, scalar: int) -> GroupRingElement:
    return x.add_scaled(y, scalar)


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def gr_equal(x: GroupRingElement, y: GroupRingElement) -> bool:
    if x.strands != y.strands:
        raise StrandMismatchError(x.strands, y.strands)
    return x.terms == y.terms


def desingularize(word: "SingularWord") -> GroupRingElement:
    """Map a singular word into the group ring (σ_i ↦ σ_i, τ_i ↦ σ_i − σ_i^{-1}).

    The number of terms is at most 2^(number of singular crossings).
    Raises UnsupportedWordError on τ^{-1}, which has no image.
    """
    n = word.strands
    acc = GroupRingElement.one(n)
    for letter in word.letters:
        if letter.kind == "s":
            gen = normal_form(sigma(n, letter.index, letter.sign))
            acc = GroupRingElement(
                n, {key * gen: coeff for key, coeff in acc.terms.items()}
            )
        else:
            if letter.sign < 0:
                raise UnsupportedWordError(
                    "a singular crossing with negative exponent has no group-ring image"
                )
            stats.COUNTS.eta_expansions += 1
            pos = normal_form(sigma(n, letter.index, 1))
            neg = normal_form(sigma(n, letter.index, -1))
            binomial = GroupRingElement(n, {pos: 1, neg: -1})
            acc = acc * binomial
    return acc
