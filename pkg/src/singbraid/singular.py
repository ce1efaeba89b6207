"""
Singular braid words and their reduction to an alternating form.

A singular word mixes invertible crossings σ_i^{±1} with singular crossings
τ_i (always to positive powers in the decidable fragment).  Words whose
permutation is trivial live in the pure singular group, where every word
can be rewritten as an alternating product

    β_0 · X_{L_1} · β_1 · ⋯ · X_{L_s} · β_s

of pure braid segments β_t and canonical singular letters X_{k,j}.  The
letter X_{k,j} is the pure singular generator in which the strands k and
j+1 cross once; the label (k, j) of a τ letter is read off geometrically
from the strands sitting at the crossing positions.

The conversion telescopes the word into one pure factor per singular
crossing (only free insertions are used, so the identity is exact), and
each factor u·τ_k·v^{-1} is rewritten as π · X_{k,j} · π' by transporting
the crossing along a parallel band: a braid h with σ_k h = h σ_a carries
the singular point onto the canonical letter, and a correction keeps both
outer factors pure.  The transport identity is checked with the braid
kernel and the final factorization is certified through the group-ring
map (both sides carry a single singular crossing, where the map is
faithful), so an incorrect factorization can never be produced silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .braids import (
    BraidLetter,
    BraidWord,
    braid_equal,
    lift_word,
    sigma,
)
from .errors import (
    CertificationError,
    PurityError,
    StrandMismatchError,
    UnsupportedWordError,
)
from .group_ring import desingularize, gr_equal
from .permutations import Permutation


class SingularLetter(NamedTuple):
    """kind "s" for σ_index^sign, kind "t" for τ_index (sign +1 expected)."""

    kind: str
    index: int
    sign: int


def sigma_letter(i: int, sign: int = 1) -> SingularLetter:
    return SingularLetter("s", i, sign)


def tau_letter(i: int, sign: int = 1) -> SingularLetter:
    return SingularLetter("t", i, sign)


@dataclass(frozen=True)
class SingularWord:
    """A word in σ_1^{±1}, .., σ_{n-1}^{±1} and τ_1, .., τ_{n-1}."""

    strands: int
    letters: tuple[SingularLetter, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a singular word needs at least 2 strands")
        for letter in self.letters:
            if letter.kind not in ("s", "t"):
                raise ValueError(f"unknown letter kind {letter.kind!r}")
            if not 1 <= letter.index <= self.strands - 1:
                raise ValueError(
                    f"generator index {letter.index} out of range for {self.strands} strands"
                )
            if letter.sign not in (1, -1):
                raise ValueError("letter sign must be ±1")

    @staticmethod
    def identity(n: int) -> SingularWord:
        return SingularWord(n, ())

    @staticmethod
    def from_braid(word: BraidWord) -> SingularWord:
        return SingularWord(
            word.strands,
            tuple(SingularLetter("s", l.index, l.sign) for l in word.letters),
        )

    def to_braid(self) -> BraidWord:
        if self.singular_degree():
            raise UnsupportedWordError("word contains singular crossings")
        return BraidWord(
            self.strands, tuple(BraidLetter(l.index, l.sign) for l in self.letters)
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: SingularWord) -> SingularWord:
        if not isinstance(other, SingularWord):
            return NotImplemented
        if other.strands != self.strands:
            raise StrandMismatchError(self.strands, other.strands)
        return SingularWord(self.strands, self.letters + other.letters)

    def inverse(self) -> SingularWord:
        if self.singular_degree():
            raise UnsupportedWordError("singular crossings are not invertible")
        return SingularWord(
            self.strands,
            tuple(SingularLetter("s", l.index, -l.sign) for l in reversed(self.letters)),
        )

    def free_reduce(self) -> SingularWord:
        """Cancel adjacent σ_i σ_i^{-1} pairs; singular letters block nothing else."""
        out: list[SingularLetter] = []
        for letter in self.letters:
            if (
                out
                and letter.kind == "s"
                and out[-1].kind == "s"
                and out[-1].index == letter.index
                and out[-1].sign == -letter.sign
            ):
                out.pop()
            else:
                out.append(letter)
        return SingularWord(self.strands, tuple(out))

    def permutation(self) -> Permutation:
        """Image in the symmetric group; σ and τ alike contribute a transposition."""
        p = list(range(1, self.strands + 1))
        for letter in self.letters:
            i = letter.index
            a = p.index(i)
            b = p.index(i + 1)
            p[a], p[b] = p[b], p[a]
        return Permutation(p)

    def is_pure(self) -> bool:
        return self.permutation().is_identity()

    def singular_degree(self) -> int:
        return sum(1 for l in self.letters if l.kind == "t")

    def has_negative_tau(self) -> bool:
        return any(l.kind == "t" and l.sign < 0 for l in self.letters)

    def sigma_exponent_sum(self) -> int:
        return sum(l.sign for l in self.letters if l.kind == "s")

    def __repr__(self) -> str:
        from .notation import format_word

        return f"SingularWord({self.strands}, {format_word(self)!r})"


def perm_image(word: SingularWord) -> Permutation:
    return word.permutation()


class XLabel(NamedTuple):
    """The canonical singular letter X_{k,j}; its crossing joins strands k and j+1."""

    k: int
    j: int

    @property
    def strand_pair(self) -> tuple[int, int]:
        return (self.k, self.j + 1)

    def clashes(self, other: "XLabel") -> bool:
        """Whether the two letters share a strand (such letters never commute)."""
        return bool(set(self.strand_pair) & set(other.strand_pair))


def singular_pure_generator(n: int, k: int, j: int) -> SingularWord:
    """The word σ_j σ_{j-1} ⋯ σ_k τ_k σ_{k+1}^{-1} ⋯ σ_j^{-1} for X_{k,j}."""
    if not 1 <= k <= j <= n - 1:
        raise ValueError(f"label indices ({k},{j}) out of range for n={n}")
    letters = [sigma_letter(t) for t in range(j, k - 1, -1)]
    letters.append(tau_letter(k))
    letters.extend(sigma_letter(t, -1) for t in range(k + 1, j + 1))
    return SingularWord(n, tuple(letters))


def label_of_letter(prefix_perm: Permutation, k: int) -> XLabel:
    """Label of a τ_k letter given the permutation of the word before it.

    The strands sitting at positions k and k+1 when the crossing happens are
    the preimages of those positions; the smaller strand a and larger strand
    b give the label (a, b-1).
    """
    if not 1 <= k <= prefix_perm.size - 1:
        raise ValueError(f"index {k} out of range")
    a = prefix_perm.preimage(k)
    b = prefix_perm.preimage(k + 1)
    lo, hi = min(a, b), max(a, b)
    return XLabel(lo, hi - 1)


@dataclass(frozen=True)
class BrittonForm:
    """Alternating form β_0 X_{L_1} β_1 ⋯ X_{L_s} β_s with pure segments."""

    strands: int
    segments: tuple[BraidWord, ...]
    labels: tuple[XLabel, ...]

    def __post_init__(self):
        if len(self.segments) != len(self.labels) + 1:
            raise ValueError("an alternating form needs one more segment than letters")
        for seg in self.segments:
            if seg.strands != self.strands:
                raise StrandMismatchError(self.strands, seg.strands)

    def degree(self) -> int:
        return len(self.labels)


def degree_vector(form: BrittonForm) -> dict[XLabel, int]:
    """Multiset of letter labels, as a count map (an abelianization invariant)."""
    counts: dict[XLabel, int] = {}
    for label in form.labels:
        counts[label] = counts.get(label, 0) + 1
    return counts


def expand_britton(form: BrittonForm) -> SingularWord:
    """Concatenate segments and canonical-letter expansions back into a word."""
    word = SingularWord.identity(form.strands)
    for t, segment in enumerate(form.segments):
        word = word * SingularWord.from_braid(segment)
        if t < len(form.labels):
            label = form.labels[t]
            word = word * singular_pure_generator(form.strands, label.k, label.j)
    return word.free_reduce()


# ---------------------------------------------------------------------------
# Band transport and factorization
# ---------------------------------------------------------------------------


def _band_transport(n: int, k: int, a: int, rho: Permutation) -> BraidWord:
    """A braid h with permutation rho satisfying σ_k h = h σ_a.

    Requires rho to map {k, k+1} onto {a, a+1}.  The strands entering at
    positions k and k+1 travel through h as a parallel band, so a crossing
    at the top slides down to a crossing at (a, a+1); all other strands are
    routed according to rho.  If rho swaps the two band strands, a trailing
    σ_a supplies the twist without disturbing the sliding.
    """
    if set((rho(k), rho(k + 1))) != {a, a + 1}:
        raise ValueError("permutation does not carry the band to its target")
    # Collapse the band to one strand: fused start position k, end position a.
    def fuse_end(x: int) -> int:
        return x if x <= a else x - 1

    fused_images = []
    for f in range(1, n):
        if f == k:
            fused_images.append(a)
        else:
            unfused = f if f < k else f + 1
            fused_images.append(fuse_end(rho(unfused)))
    fused = Permutation(fused_images)

    ints: list[int] = []
    t = k  # current fused position of the band
    for f in lift_word(fused):
        if f == t:
            ints.extend((t + 1, t))
            t += 1
        elif f + 1 == t:
            ints.extend((t - 1, t))
            t -= 1
        else:
            ints.append(f if f + 1 < t else f + 1)
    if rho(k) == a + 1:
        ints.append(a)
    word = BraidWord.from_ints(n, ints)
    if word.permutation() != rho:  # pragma: no cover - construction invariant
        raise CertificationError("band transport produced the wrong permutation")
    return word


def factor_singular(
    u: BraidWord, k: int, v: BraidWord
) -> tuple[BraidWord, XLabel, BraidWord]:
    """Rewrite the pure element u·τ_k·v^{-1} as π · X_L · π' with π, π' pure.

    The label L is determined by the strands crossing at the singular point.
    The commutation σ_k h = h σ_a of the transport braid is checked with the
    braid kernel, and the factorization is certified by comparing group-ring
    images (one singular crossing per side); failures raise rather than
    return a wrong answer.
    """
    n = u.strands
    if v.strands != n:
        raise StrandMismatchError(n, v.strands)
    q = u.permutation()
    if v.permutation() != q * Permutation.transposition(n, k):
        raise PurityError("u·τ_k·v^{-1} must have identity permutation")
    label = label_of_letter(q, k)
    a, b = label.k, label.j
    # X_{a,b} = R σ_a τ_a R^{-1} with R = σ_b σ_{b-1} ⋯ σ_a.
    r_word = BraidWord.from_ints(n, range(b, a - 1, -1))
    r_sigma_a = r_word * sigma(n, a)
    rho = q.inverse() * r_sigma_a.permutation()
    h = _band_transport(n, k, a, rho)
    if not braid_equal(sigma(n, k) * h, h * sigma(n, a)):  # pragma: no cover
        raise CertificationError("transport braid does not commute the crossing")
    left = (u * h * r_sigma_a.inverse()).free_reduce()
    right = (r_word * h.inverse() * v.inverse()).free_reduce()
    if not (left.is_pure() and right.is_pure()):  # pragma: no cover
        raise CertificationError("factorization produced non-pure outer factors")
    original = (
        SingularWord.from_braid(u)
        * SingularWord(n, (tau_letter(k),))
        * SingularWord.from_braid(v.inverse())
    )
    rebuilt = (
        SingularWord.from_braid(left)
        * singular_pure_generator(n, a, b)
        * SingularWord.from_braid(right)
    )
    if not gr_equal(desingularize(original), desingularize(rebuilt)):
        raise CertificationError("factorization failed its group-ring certificate")
    return left, label, right


def to_britton_form(word: SingularWord) -> BrittonForm:
    """Convert a pure singular word to its alternating form.

    The word is telescoped into one pure factor per singular crossing (the
    prefix before each crossing, with earlier crossings desingularized,
    conjugates the crossing into place; only free insertions are used), each
    factor is rewritten onto a canonical letter, and adjacent pure words are
    merged with free reduction.  Labels come out in the geometric order of
    the crossings.
    """
    n = word.strands
    if word.has_negative_tau():
        raise UnsupportedWordError("negative singular crossings are outside the decidable fragment")
    if not word.is_pure():
        raise PurityError("only words with identity permutation have an alternating form")
    tau_positions = [t for t, l in enumerate(word.letters) if l.kind == "t"]
    desingularized = [
        BraidLetter(l.index, l.sign) if l.kind == "s" else BraidLetter(l.index, 1)
        for l in word.letters
    ]
    if not tau_positions:
        return BrittonForm(n, (word.to_braid().free_reduce(),), ())

    segments: list[BraidWord] = []
    labels: list[XLabel] = []
    pending = BraidWord.identity(n)
    for t in tau_positions:
        prefix = BraidWord(n, tuple(desingularized[:t]))
        k = word.letters[t].index
        left, label, right = factor_singular(prefix, k, prefix * sigma(n, k))
        segments.append((pending * left).free_reduce())
        labels.append(label)
        pending = right
    tail = BraidWord(n, tuple(desingularized))
    segments.append((pending * tail).free_reduce())
    return BrittonForm(n, tuple(segments), tuple(labels))
