"""
Permutations of the positions 1..n, composed in diagram order.

A braid on n strands induces a permutation sending the start position of
each strand to its end position.  Words act left to right, so the
permutation of a concatenation u·v is "first u, then v".  The product
p * q below follows the same convention: (p * q)(x) = q(p(x)).  Every
other module inherits this convention.
"""

from __future__ import annotations

from typing import Iterable, Iterator


# Shared immutable instances; concurrent idempotent insertion is harmless.
_IDENTITIES: dict = {}
_TRANSPOSITIONS: dict = {}
_REVERSALS: dict = {}


class Permutation:
    """A bijection of {1, .., n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images", "_inverse", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {imgs!r}")
        inv = [0] * n
        for pos, img in enumerate(imgs):
            inv[img - 1] = pos + 1
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "_inverse", tuple(inv))
        object.__setattr__(self, "_hash", hash(imgs))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def size(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> Permutation:
        cached = _IDENTITIES.get(n)
        if cached is None:
            cached = _IDENTITIES[n] = Permutation(range(1, n + 1))
        return cached

    @staticmethod
    def transposition(n: int, i: int) -> Permutation:
        """The adjacent transposition swapping positions i and i+1."""
        cached = _TRANSPOSITIONS.get((n, i))
        if cached is None:
            if not 1 <= i <= n - 1:
                raise ValueError(f"transposition index {i} out of range for n={n}")
            imgs = list(range(1, n + 1))
            imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
            cached = _TRANSPOSITIONS[(n, i)] = Permutation(imgs)
        return cached

    @staticmethod
    def reversal(n: int) -> Permutation:
        """The order-reversing permutation (the image of the half twist)."""
        cached = _REVERSALS.get(n)
        if cached is None:
            cached = _REVERSALS[n] = Permutation(range(n, 0, -1))
        return cached

    def __call__(self, position: int) -> int:
        return self.images[position - 1]

    def preimage(self, position: int) -> int:
        return self._inverse[position - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Compose in diagram order: self first, then other."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.size != self.size:
            raise ValueError("size mismatch")
        oth = other.images
        return Permutation(oth[img - 1] for img in self.images)

    def inverse(self) -> Permutation:
        return Permutation(self._inverse)

    def is_identity(self) -> bool:
        return all(img == pos + 1 for pos, img in enumerate(self.images))

    def is_reversal(self) -> bool:
        n = self.size
        return all(img == n - pos for pos, img in enumerate(self.images))

    def starting_descents(self) -> set[int]:
        """Indices i whose strands at start positions i, i+1 must cross.

        For the positive braid determined by this permutation these are
        exactly the generator indices that can begin a reduced word.
        """
        imgs = self.images
        return {i for i in range(1, len(imgs)) if imgs[i - 1] > imgs[i]}

    def finishing_descents(self) -> set[int]:
        """Indices i that can end a reduced word (descents of the inverse)."""
        inv = self._inverse
        return {i for i in range(1, len(inv)) if inv[i - 1] > inv[i]}

    def conjugate_by_reversal(self) -> Permutation:
        """w0 * self * w0, the effect of conjugating a factor by the half twist."""
        n = self.size
        imgs = self.images
        return Permutation(n + 1 - imgs[n - x] for x in range(1, n + 1))

    def inversions(self) -> int:
        imgs = self.images
        n = len(imgs)
        return sum(1 for a in range(n) for b in range(a + 1, n) if imgs[a] > imgs[b])

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"

    def one_line(self) -> str:
        """One-line notation: the images of 1..n separated by spaces."""
        return " ".join(str(img) for img in self.images)
