import itertools
import random

import pytest

from singbraid.braids import BraidWord, half_twist, sigma, transversal_rep
from singbraid.decide import (
    EQUAL_NF,
    UNEQUAL_PERMUTATION,
    Verdict,
    _trace_normal,
    check_commutation_eta,
    commutes_via_frz,
    decide_equal,
    decide_sgp,
    trace_filter,
    x_commutes_with_pure,
)
from singbraid.errors import StrandMismatchError, UnsupportedWordError
from singbraid.group_ring import desingularize, gr_equal
from singbraid.notation import parse_braid_word, parse_word
from singbraid.rewriting import random_word, rewrite_chain
from singbraid.singular import (
    BrittonForm,
    SingularWord,
    XLabel,
    singular_pure_generator,
    to_britton_form,
)


def random_pure_braid(rng, n, max_len=10):
    word = BraidWord.from_ints(
        n, [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len))]
    )
    return (word * transversal_rep(word.permutation()).inverse()).free_reduce()


def random_singular(rng, n, max_len=10, max_degree=2):
    length = rng.randint(0, max_len)
    return random_word(rng, n, length, rng.randint(0, min(max_degree, length)))


# ---------------------------------------------------------------------------
# commutation oracles
# ---------------------------------------------------------------------------


def test_check_commutation_eta_examples():
    assert check_commutation_eta(parse_word("t1", 2), parse_word("s1", 2))
    assert check_commutation_eta(parse_word("t1", 3), parse_word("s2 s1^2 s2", 3))
    assert not check_commutation_eta(parse_word("t1", 3), parse_word("s2^2", 3))


def test_check_commutation_eta_guards():
    with pytest.raises(ValueError):
        check_commutation_eta(parse_word("t1 t1", 2), parse_word("t1", 2))
    with pytest.raises(UnsupportedWordError):
        check_commutation_eta(parse_word("t1^-1", 2), parse_word("s1", 2))
    with pytest.raises(StrandMismatchError):
        check_commutation_eta(parse_word("t1", 2), parse_word("t1", 3))


def test_commutes_via_frz_examples():
    assert commutes_via_frz(parse_braid_word("s1", 2), 1, 1)
    assert commutes_via_frz(half_twist(3) * half_twist(3), 1, 1)
    assert not commutes_via_frz(parse_braid_word("s2^2", 3), 1, 1)


def test_commutes_via_frz_shift():
    # σ_2 (σ_1 σ_2) = (σ_1 σ_2) σ_1, so the crossing indices transfer.
    assert commutes_via_frz(parse_braid_word("s1 s2", 3), 2, 1)
    assert not commutes_via_frz(parse_braid_word("s1 s2", 3), 1, 1)


def test_x_commutes_with_pure_examples():
    assert x_commutes_with_pure(XLabel(1, 1), parse_braid_word("s1^2", 2))
    assert x_commutes_with_pure(XLabel(1, 1), BraidWord.identity(2))
    assert not x_commutes_with_pure(XLabel(1, 1), parse_braid_word("s2^2", 3))


def test_x_commutes_requires_pure():
    with pytest.raises(ValueError):
        x_commutes_with_pure(XLabel(1, 1), parse_braid_word("s2", 3))


def test_frz_eta_agreement_fuzz():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(2, 5)
        word = random_pure_braid(rng, n)
        k = rng.randint(1, n - 1)
        j = rng.randint(k, n - 1)
        label = XLabel(k, j)
        direct = x_commutes_with_pure(label, word)
        via_ring = check_commutation_eta(
            singular_pure_generator(n, k, j), SingularWord.from_braid(word)
        )
        assert direct == via_ring


# ---------------------------------------------------------------------------
# trace filter
# ---------------------------------------------------------------------------


def _labels_form(n, labels):
    segs = tuple(BraidWord.identity(n) for _ in range(len(labels) + 1))
    return BrittonForm(n, segs, tuple(labels))


def test_trace_filter_examples():
    assert trace_filter(
        _labels_form(5, [XLabel(1, 1), XLabel(3, 3)]),
        _labels_form(5, [XLabel(3, 3), XLabel(1, 1)]),
    )
    assert not trace_filter(
        _labels_form(5, [XLabel(1, 1), XLabel(1, 2)]),
        _labels_form(5, [XLabel(1, 2), XLabel(1, 1)]),
    )
    assert trace_filter(_labels_form(3, []), _labels_form(3, []))


def _trace_equal_by_projection(seq1, seq2):
    """Independent oracle: multiset equality plus equality of the projections
    onto every dependent (strand-sharing) pair of letters."""
    if sorted(seq1) != sorted(seq2):
        return False
    alphabet = set(seq1) | set(seq2)
    for a, b in itertools.combinations_with_replacement(sorted(alphabet), 2):
        if not a.clashes(b):
            continue
        proj1 = [x for x in seq1 if x in (a, b)]
        proj2 = [x for x in seq2 if x in (a, b)]
        if proj1 != proj2:
            return False
    return True


def test_trace_normal_matches_projection_oracle():
    rng = random.Random(32)
    n = 5
    labels = [XLabel(k, j) for k in range(1, n) for j in range(k, n)]
    for _ in range(400):
        seq1 = [rng.choice(labels) for _ in range(rng.randint(0, 6))]
        seq2 = list(seq1)
        rng.shuffle(seq2)
        got = _trace_normal(tuple(seq1)) == _trace_normal(tuple(seq2))
        assert got == _trace_equal_by_projection(seq1, seq2), (seq1, seq2)
    # also with genuinely different multisets
    for _ in range(100):
        seq1 = [rng.choice(labels) for _ in range(rng.randint(0, 5))]
        seq2 = [rng.choice(labels) for _ in range(rng.randint(0, 5))]
        got = _trace_normal(tuple(seq1)) == _trace_normal(tuple(seq2))
        assert got == _trace_equal_by_projection(seq1, seq2), (seq1, seq2)


# ---------------------------------------------------------------------------
# the decision procedure
# ---------------------------------------------------------------------------


def test_decide_equal_presentation_relations():
    verdict = decide_equal(parse_word("s2 s1^2 s2 t1", 3), parse_word("t1 s2 s1^2 s2", 3))
    assert verdict.equal

    verdict = decide_equal(
        parse_word("s2 s3 s1 s2 t1 s2 s3 s1 s2 t1", 4),
        parse_word("t1 s2 s3 s1 s2 t1 s2 s3 s1 s2", 4),
    )
    assert verdict.equal

    verdict = decide_equal(parse_word("t1", 3), parse_word("t2", 3))
    assert not verdict.equal
    assert verdict.certificate == UNEQUAL_PERMUTATION


def test_decide_sgp_trivial_and_fixture():
    form = to_britton_form(parse_word("s1 t1 s1 t1 s1^-2", 2))
    assert decide_sgp(form, form).equal

    lhs = parse_word("s2 s1^2 s2 t1", 3)
    rhs = parse_word("t1 s2 s1^2 s2", 3)
    rep = transversal_rep(lhs.permutation()).inverse()
    b1 = to_britton_form(lhs * SingularWord.from_braid(rep))
    b2 = to_britton_form(rhs * SingularWord.from_braid(rep))
    assert decide_sgp(b1, b2).equal

    unequal = decide_equal(parse_word("t1 s2^2 s1", 3), parse_word("s2^2 t1 s1", 3))
    assert not unequal.equal
    assert unequal.certificate in ("condition-2-failure", "condition-3-failure")


def test_decide_equal_errors():
    with pytest.raises(UnsupportedWordError):
        decide_equal(parse_word("t1^-1", 2), parse_word("t1^-1", 2))
    with pytest.raises(StrandMismatchError):
        decide_equal(parse_word("t1", 2), parse_word("t1", 3))


def test_verdict_certificate_validation():
    with pytest.raises(ValueError):
        Verdict(True, "made-up-reason")
    assert Verdict(True, EQUAL_NF).steps == 0


def test_decide_reflexive_and_symmetric():
    rng = random.Random(33)
    for _ in range(80):
        n = rng.randint(2, 5)
        w1, w2 = random_singular(rng, n), random_singular(rng, n)
        assert decide_equal(w1, w1).equal
        assert decide_equal(w1, w2).equal == decide_equal(w2, w1).equal


def test_relation_closure_small():
    rng = random.Random(34)
    for _ in range(80):
        n = rng.randint(2, 5)
        length = rng.randint(0, 12)
        w1 = random_word(rng, n, length, rng.randint(0, min(4, length)))
        w2 = rewrite_chain(w1, rng.randint(0, 20), rng)
        verdict = decide_equal(w1, w2)
        assert verdict.equal, (w1, w2, verdict)
        assert gr_equal(desingularize(w1), desingularize(w2)) or w1.singular_degree() > 2


def test_eta_consistency_when_equal():
    rng = random.Random(35)
    for _ in range(80):
        n = rng.randint(2, 5)
        w1 = random_singular(rng, n)
        w2 = rewrite_chain(w1, rng.randint(0, 10), rng)
        if decide_equal(w1, w2).equal:
            assert gr_equal(desingularize(w1), desingularize(w2))


def test_degree_le_2_oracle_equivalence():
    rng = random.Random(36)
    for _ in range(150):
        n = rng.randint(2, 5)
        if rng.random() < 0.5:
            w1 = random_singular(rng, n)
            w2 = rewrite_chain(w1, rng.randint(0, 12), rng)
        else:
            w1, w2 = random_singular(rng, n), random_singular(rng, n)
        assert decide_equal(w1, w2).equal == gr_equal(desingularize(w1), desingularize(w2))


def test_filters_never_flip_verdicts():
    rng = random.Random(37)
    for _ in range(60):
        n = rng.randint(2, 5)
        roll = rng.random()
        if roll < 0.4:
            w1 = random_singular(rng, n)
            w2 = rewrite_chain(w1, rng.randint(0, 10), rng)
        elif roll < 0.8:
            w1 = random_singular(rng, n)
            w2 = rewrite_chain(w1, rng.randint(0, 10), rng)
            i = rng.randint(1, n - 1)
            extra = SingularWord.from_braid(sigma(n, i) * sigma(n, i))
            w2 = w2 * extra
        else:
            w1, w2 = random_singular(rng, n), random_singular(rng, n)
        fast = decide_equal(w1, w2, use_filters=True)
        slow = decide_equal(w1, w2, use_filters=False)
        assert fast.equal == slow.equal, (w1, w2, fast, slow)


def test_concurrent_queries_match_serial_results():
    from concurrent.futures import ThreadPoolExecutor

    rng = random.Random(39)
    pairs = []
    for _ in range(24):
        n = rng.randint(2, 5)
        w1 = random_singular(rng, n)
        w2 = rewrite_chain(w1, rng.randint(0, 8), rng) if rng.random() < 0.5 else random_singular(rng, n)
        pairs.append((w1, w2))
    serial = [decide_equal(w1, w2) for w1, w2 in pairs]
    with ThreadPoolExecutor(max_workers=8) as pool:
        concurrent = list(pool.map(lambda p: decide_equal(*p), pairs))
    assert serial == concurrent


def test_right_multiplication_invariance():
    rng = random.Random(38)
    for _ in range(60):
        n = rng.randint(2, 5)
        w1, w2 = random_singular(rng, n), random_singular(rng, n)
        s = SingularWord.from_braid(
            BraidWord.from_ints(
                n, [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))]
            )
        )
        assert decide_equal(w1, w2).equal == decide_equal(w1 * s, w2 * s).equal
