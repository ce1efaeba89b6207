"""Cross-check braid word equality against the Burau matrix representation.

An independent route to (in)equality: each generator maps to an n×n matrix
over Laurent polynomials in t.  Matrices are tracked as an integer
polynomial matrix together with a power of t cleared from the denominator,
so comparisons are exact.  The representation is faithful for n ≤ 3, giving
a full equivalence check there; for larger n distinct matrices still
certify distinct braids.
"""

import itertools
import random

from singbraid.braids import BraidWord, braid_equal, half_twist, normal_form

# Polynomials in t as {exponent: coefficient} maps.


def _poly(c=0, e=0):
    return {e: c} if c else {}


def _padd(p, q):
    out = dict(p)
    for e, c in q.items():
        new = out.get(e, 0) + c
        if new:
            out[e] = new
        else:
            out.pop(e, None)
    return out


def _pmul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            new = out.get(e, 0) + c1 * c2
            if new:
                out[e] = new
            else:
                out.pop(e, None)
    return out


def _mat_mul(a, b):
    n = len(a)
    return [[_sum_products(a, b, i, j) for j in range(n)] for i in range(n)]


def _sum_products(a, b, i, j):
    acc = {}
    for k in range(len(a)):
        acc = _padd(acc, _pmul(a[i][k], b[k][j]))
    return acc


def _identity(n):
    return [[_poly(1) if i == j else {} for j in range(n)] for i in range(n)]


def _gen_matrix(n, i, sign):
    """Burau image of σ_i^sign, returned as (matrix, cleared power of t)."""
    m = _identity(n)
    if sign > 0:
        # rows/cols i, i+1 block: [[1-t, t], [1, 0]]
        m[i - 1][i - 1] = _padd(_poly(1), _poly(-1, 1))
        m[i - 1][i] = _poly(1, 1)
        m[i][i - 1] = _poly(1)
        m[i][i] = {}
        return m, 0
    # inverse block times t: [[0, t], [1, t-1]]
    for row in range(n):
        for col in range(n):
            if row == col and row not in (i - 1, i):
                m[row][col] = _poly(1, 1)  # clear t from the whole matrix
    m[i - 1][i - 1] = {}
    m[i - 1][i] = _poly(1, 1)
    m[i][i - 1] = _poly(1)
    m[i][i] = _padd(_poly(1, 1), _poly(-1))
    return m, 1


def burau(word: BraidWord):
    """(integer polynomial matrix, power d) with image = t^-d · matrix."""
    n = word.strands
    acc, power = _identity(n), 0
    for letter in word.letters:
        m, d = _gen_matrix(n, letter.index, letter.sign)
        acc = _mat_mul(acc, m)
        power += d
    return acc, power


def _scale(matrix, d):
    t_power = _poly(1, d)
    return [[_pmul(entry, t_power) for entry in row] for row in matrix]


def burau_equal(u: BraidWord, v: BraidWord) -> bool:
    mu, du = burau(u)
    mv, dv = burau(v)
    return _scale(mu, dv) == _scale(mv, du)


def _random_word(rng, n, max_len):
    return BraidWord.from_ints(
        n, [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len))]
    )


def test_burau_is_a_representation():
    rng = random.Random(61)
    for _ in range(50):
        n = rng.randint(2, 5)
        u, v = _random_word(rng, n, 8), _random_word(rng, n, 8)
        mu, du = burau(u * v)
        prod = _mat_mul(burau(u)[0], burau(v)[0])
        assert mu == prod and du == burau(u)[1] + burau(v)[1]
        assert burau_equal(u * u.inverse(), BraidWord.identity(n))


def test_burau_matches_braid_equal_where_faithful():
    # n = 2 and n = 3: matrix equality is braid equality.
    rng = random.Random(62)
    for _ in range(250):
        n = rng.randint(2, 3)
        u, v = _random_word(rng, n, 12), _random_word(rng, n, 12)
        assert braid_equal(u, v) == burau_equal(u, v), (u, v)
    # directed pairs that are equal by construction
    for _ in range(100):
        n = rng.randint(2, 3)
        u = _random_word(rng, n, 12)
        v = normal_form(u).to_word()
        assert burau_equal(u, v)


def test_burau_never_contradicts_braid_equal():
    # For every n: braid equality must imply matrix equality, and matrix
    # inequality must imply braid inequality.
    rng = random.Random(63)
    for _ in range(200):
        n = rng.randint(2, 6)
        u, v = _random_word(rng, n, 10), _random_word(rng, n, 10)
        if braid_equal(u, v):
            assert burau_equal(u, v)
        if not burau_equal(u, v):
            assert not braid_equal(u, v)
    for n in range(2, 6):
        delta = half_twist(n)
        unreduced = delta * delta.inverse() * delta * delta
        assert burau_equal(delta * delta, unreduced)


def test_burau_exhaustive_short_words_n3():
    # Every pair of words of length ≤ 3 on 3 strands: full agreement.
    letters = [1, -1, 2, -2]
    words = [
        BraidWord.from_ints(3, combo)
        for length in range(0, 4)
        for combo in itertools.product(letters, repeat=length)
    ]
    for u in words:
        for v in words[:40]:
            assert braid_equal(u, v) == burau_equal(u, v)
