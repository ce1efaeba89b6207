"""
The equality decision for singular braid words.

Words are compared in the ambient group: the singular braid monoid embeds
there, so group-level equality answers the monoid question.  The pipeline
filters on invariants (singular degree, permutation image, per-label
degree, partial-commutation class of the label sequence), reduces both
words to the pure subgroup with the canonical coset representative, and
then runs a recursion over alternating forms.

One recursion step eliminates the last letter Y of the first word: it must
match some letter Z_j of the second word that can be commuted to the end.
Whether Z_i commutes past the conjugated letter is decidable because both
sides carry at most two singular crossings, where the group-ring map is
faithful; whether the pure tail commutes with Y reduces, by the
braid/singular commutation transfer, to a plain braid equality.  Letters
whose labels share a strand can never commute, which gives a fast reject
ahead of any group-ring work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, braid_equal, sigma, transversal_rep
from .errors import PurityError, StrandMismatchError, UnsupportedWordError
from .group_ring import desingularize, gr_equal
from .singular import (
    BrittonForm,
    SingularWord,
    XLabel,
    degree_vector,
    singular_pure_generator,
    to_britton_form,
)

EQUAL_NF = "braid-normal-form-match"
UNEQUAL_NF = "braid-normal-form-mismatch"
EQUAL_RECURSION = "recursion-success"
UNEQUAL_PERMUTATION = "permutation-mismatch"
UNEQUAL_DEGREE = "degree-mismatch"
UNEQUAL_TRACE = "trace-mismatch"
UNEQUAL_CLASH = "strand-clash"
UNEQUAL_COND1 = "condition-1-failure"
UNEQUAL_COND2 = "condition-2-failure"
UNEQUAL_COND3 = "condition-3-failure"

CERTIFICATES = (
    EQUAL_NF,
    UNEQUAL_NF,
    EQUAL_RECURSION,
    UNEQUAL_PERMUTATION,
    UNEQUAL_DEGREE,
    UNEQUAL_TRACE,
    UNEQUAL_CLASH,
    UNEQUAL_COND1,
    UNEQUAL_COND2,
    UNEQUAL_COND3,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an equality query, with the reason and the recursion depth used."""

    equal: bool
    certificate: str
    steps: int = 0

    def __post_init__(self):
        if self.certificate not in CERTIFICATES:
            raise ValueError(f"unknown certificate {self.certificate!r}")


# ---------------------------------------------------------------------------
# Commutation tests
# ---------------------------------------------------------------------------


def check_commutation_eta(x: SingularWord, y: SingularWord) -> bool:
    """Decide x·y = y·x through group-ring images.

    Only licensed when the product carries at most two singular crossings,
    where the desingularization map is injective.
    """
    if x.strands != y.strands:
        raise StrandMismatchError(x.strands, y.strands)
    if x.has_negative_tau() or y.has_negative_tau():
        raise UnsupportedWordError("negative singular crossings are not supported")
    if x.singular_degree() + y.singular_degree() > 2:
        raise ValueError(
            "the group-ring oracle only decides products with at most two singular crossings"
        )
    return gr_equal(desingularize(x * y), desingularize(y * x))


def commutes_via_frz(beta: BraidWord, j: int, k: int) -> bool:
    """Decide τ_j β = β τ_k, which holds exactly when σ_j β = β σ_k."""
    n = beta.strands
    return braid_equal(sigma(n, j) * beta, beta * sigma(n, k))


def x_commutes_with_pure(label: XLabel, word: BraidWord) -> bool:
    """Decide whether a pure braid commutes with the canonical letter X_{k,j}.

    With X_{k,j} = A σ_k τ_k A^{-1} for A = σ_j ⋯ σ_{k+1}, the commutation
    holds exactly when σ_k commutes with A^{-1}·word·A in the braid group.
    """
    if not word.is_pure():
        raise PurityError("the commutation test requires a pure braid")
    n = word.strands
    k, j = label.k, label.j
    conjugator = BraidWord.from_ints(n, range(j, k, -1))
    conjugated = conjugator.inverse() * word * conjugator
    return braid_equal(sigma(n, k) * conjugated, conjugated * sigma(n, k))


# ---------------------------------------------------------------------------
# Label sequences as traces
# ---------------------------------------------------------------------------


def _trace_normal(labels: tuple[XLabel, ...]) -> tuple[XLabel, ...]:
    """Lexicographically least word of the partial-commutation class.

    Letters commute exactly when their strand pairs are disjoint; the least
    representative is built by inserting each letter as far left as it can
    travel past larger independent letters.  Two label sequences are equal
    in the trace monoid if and only if their normal forms coincide.
    """
    out: list[XLabel] = []
    for label in labels:
        pos = len(out)
        while pos > 0 and not out[pos - 1].clashes(label) and label < out[pos - 1]:
            pos -= 1
        out.insert(pos, label)
    return tuple(out)


def trace_filter(b1: BrittonForm, b2: BrittonForm) -> bool:
    """True when the label sequences agree up to the allowed commutations.

    A False answer certifies that the underlying group elements differ,
    because the quotient that forgets the pure segments is presented by
    exactly those commutations.
    """
    return _trace_normal(b1.labels) == _trace_normal(b2.labels)


# ---------------------------------------------------------------------------
# The recursion over alternating forms
# ---------------------------------------------------------------------------


def _word_product(n: int, pieces) -> BraidWord:
    word = BraidWord.identity(n)
    for piece in pieces:
        word = word * piece
    return word.free_reduce()


def _replace(form: BrittonForm, segments, labels) -> BrittonForm:
    return BrittonForm(form.strands, tuple(segments), tuple(labels))


def decide_sgp(
    b1: BrittonForm, b2: BrittonForm, *, use_fast_reject: bool = True
) -> Verdict:
    """Equality of two alternating forms in the pure singular group.

    Implements the recursive elimination of the trailing letter: locate its
    last matching occurrence in the second word, verify the two commutation
    conditions that let it travel to the end, then delete it from both sides
    and recurse.  ``use_fast_reject`` controls the shared-strand shortcut in
    the second condition (disabled only for cross-checking; the group-ring
    test must subsume it).
    """
    if b1.strands != b2.strands:
        raise StrandMismatchError(b1.strands, b2.strands)
    n = b1.strands
    steps = 0
    while True:
        m = b1.degree()
        r = b2.degree()
        if m == 0 and r == 0:
            if braid_equal(b1.segments[0], b2.segments[0]):
                return Verdict(True, EQUAL_RECURSION if steps else EQUAL_NF, steps)
            return Verdict(False, UNEQUAL_NF, steps)
        if m == 0 or r == 0:
            return Verdict(False, UNEQUAL_DEGREE, steps)

        # Shape normalisation: move the trailing segment of the first word and
        # the leading segment of the second onto both sides (group-level
        # multiplications, so the verdict is unchanged).
        trailing = b1.segments[-1]
        if trailing.letters:
            b1 = _replace(b1, b1.segments[:-1] + (BraidWord.identity(n),), b1.labels)
            b2 = _replace(
                b2,
                b2.segments[:-1] + ((b2.segments[-1] * trailing.inverse()).free_reduce(),),
                b2.labels,
            )
        leading = b2.segments[0]
        if leading.letters:
            b2 = _replace(b2, (BraidWord.identity(n),) + b2.segments[1:], b2.labels)
            b1 = _replace(
                b1,
                ((leading.inverse() * b1.segments[0]).free_reduce(),) + b1.segments[1:],
                b1.labels,
            )

        y_label = b1.labels[-1]
        betas = b2.segments  # betas[i] follows the i-th letter of b2, betas[0] empty
        # Condition (1): the last occurrence of the trailing letter.
        j = max((i for i in range(1, r + 1) if b2.labels[i - 1] == y_label), default=0)
        if j == 0:
            return Verdict(False, UNEQUAL_COND1, steps)

        # Condition (2): every later letter must commute past the conjugated
        # trailing letter.  Shared-strand labels can never commute.
        if use_fast_reject:
            for i in range(r, j, -1):
                if b2.labels[i - 1].clashes(y_label):
                    return Verdict(False, UNEQUAL_CLASH, steps)
        y_expansion = singular_pure_generator(n, y_label.k, y_label.j)
        suffix = BraidWord.identity(n)
        conjugates: dict[int, SingularWord] = {}
        for i in range(r, j, -1):
            suffix = (betas[i] * suffix).free_reduce()
            conjugates[i] = (
                SingularWord.from_braid(suffix)
                * y_expansion
                * SingularWord.from_braid(suffix.inverse())
            ).free_reduce()
        for i in range(r, j, -1):
            z_expansion = singular_pure_generator(
                n, b2.labels[i - 1].k, b2.labels[i - 1].j
            )
            if not check_commutation_eta(z_expansion, conjugates[i]):
                return Verdict(False, UNEQUAL_COND2, steps)

        # Condition (3): the pure tail after the matched letter commutes with it.
        tail = _word_product(n, (betas[i] for i in range(j, r + 1)))
        if not x_commutes_with_pure(y_label, tail):
            return Verdict(False, UNEQUAL_COND3, steps)

        # Condition (4): delete the letter from both sides and recurse.
        b1 = _replace(b1, b1.segments[:-1], b1.labels[:-1])
        merged = (betas[j - 1] * betas[j]).free_reduce()
        b2 = _replace(
            b2,
            betas[: j - 1] + (merged,) + betas[j + 1 :],
            b2.labels[: j - 1] + b2.labels[j:],
        )
        steps += 1


def decide_equal(
    w1: SingularWord,
    w2: SingularWord,
    *,
    use_filters: bool = True,
) -> Verdict:
    """Decide equality of two singular words (positive singular crossings only).

    Pipeline: degree and permutation filters, reduction to the pure subgroup
    by the canonical coset representative, conversion to alternating forms,
    per-label degree and partial-commutation filters, then the recursion.
    ``use_filters=False`` skips the optional invariant filters so the full
    recursion can be cross-checked against them.
    """
    if w1.strands != w2.strands:
        raise StrandMismatchError(w1.strands, w2.strands)
    if w1.has_negative_tau() or w2.has_negative_tau():
        raise UnsupportedWordError(
            "words with negative singular crossings are outside the decidable fragment"
        )
    if use_filters and w1.singular_degree() != w2.singular_degree():
        return Verdict(False, UNEQUAL_DEGREE)
    p1 = w1.permutation()
    if p1 != w2.permutation():
        return Verdict(False, UNEQUAL_PERMUTATION)
    rep_inverse = SingularWord.from_braid(transversal_rep(p1).inverse())
    b1 = to_britton_form((w1 * rep_inverse).free_reduce())
    b2 = to_britton_form((w2 * rep_inverse).free_reduce())
    if use_filters:
        if degree_vector(b1) != degree_vector(b2):
            return Verdict(False, UNEQUAL_DEGREE)
        if not trace_filter(b1, b2):
            return Verdict(False, UNEQUAL_TRACE)
    return decide_sgp(b1, b2, use_fast_reject=use_filters)
