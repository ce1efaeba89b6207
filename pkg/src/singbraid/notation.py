"""
Token syntax for braid and singular words.

    word := term*          separators: whitespace or '.'
    term := ('s'|'t') index ('^' integer)?

's' letters are invertible crossings, 't' letters singular ones.  An
exponent repeats the letter, so "s1^-2" is two inverse letters; "t1^-1"
parses (the letter is stored with a negative sign) but every consumer of
singular words outside plain permutation queries rejects it.  A reader for
the σ/τ notation normalises the Unicode spellings to ASCII first.
"""

from __future__ import annotations

from .braids import BraidNF, BraidWord
from .errors import NotationError
from .group_ring import GroupRingElement
from .permutations import Permutation
from .singular import BrittonForm, SingularLetter, SingularWord

_UNICODE_MAP = {
    "σ": " s",
    "τ": " t",
    "·": " ",
    "−": "-",  # minus sign
    # negative superscripts first, then bare ones
    "⁻¹": "^-1",
    "⁻²": "^-2",
    "⁻³": "^-3",
    "¹": "^1",
    "²": "^2",
    "³": "^3",
}


def normalize_unicode(text: str) -> str:
    for src, dst in _UNICODE_MAP.items():
        text = text.replace(src, dst)
    return text


def parse_word(text: str, strands: int) -> SingularWord:
    """Parse a singular word; raises NotationError with the failing position."""
    if strands < 2:
        raise NotationError(f"strand count must be at least 2, got {strands}")
    text = normalize_unicode(text)
    letters: list[SingularLetter] = []
    i = 0
    length = len(text)
    while i < length:
        c = text[i]
        if c.isspace() or c == ".":
            i += 1
            continue
        if c not in ("s", "t"):
            raise NotationError(f"expected 's' or 't', found {c!r}", position=i)
        start = i
        i += 1
        digits = ""
        while i < length and text[i].isdigit():
            digits += text[i]
            i += 1
        if not digits:
            raise NotationError("generator letter needs an index", position=start)
        index = int(digits)
        if not 1 <= index <= strands - 1:
            raise NotationError(
                f"index {index} out of range [1, {strands - 1}]", position=start
            )
        exponent = 1
        if i < length and text[i] == "^":
            i += 1
            exp_start = i
            if i < length and text[i] in "+-":
                i += 1
            while i < length and text[i].isdigit():
                i += 1
            try:
                exponent = int(text[exp_start:i])
            except ValueError:
                raise NotationError("malformed exponent", position=exp_start) from None
        sign = 1 if exponent >= 0 else -1
        letters.extend(SingularLetter(c, index, sign) for _ in range(abs(exponent)))
    return SingularWord(strands, tuple(letters))


def parse_braid_word(text: str, strands: int) -> BraidWord:
    word = parse_word(text, strands)
    if word.singular_degree():
        raise NotationError("singular letters are not allowed here")
    return word.to_braid()


def format_word(word: SingularWord | BraidWord) -> str:
    """Canonical token form: one token per letter, '^-1' marking inverses."""
    if isinstance(word, BraidWord):
        word = SingularWord.from_braid(word)
    tokens = []
    for letter in word.letters:
        suffix = "^-1" if letter.sign < 0 else ""
        tokens.append(f"{letter.kind}{letter.index}{suffix}")
    return " ".join(tokens)


def format_permutation(p: Permutation) -> str:
    return " ".join(f"{pos}↦{p(pos)}" for pos in range(1, p.size + 1))


def format_nf(nf: BraidNF) -> str:
    return nf.key()


def format_group_ring(element: GroupRingElement) -> str:
    return element.render()


def format_britton(form: BrittonForm) -> str:
    """Serialisation "β0 ; X[k,j] ; β1 ; …" with empty segments left blank."""
    parts = []
    for t, segment in enumerate(form.segments):
        parts.append(format_word(segment))
        if t < len(form.labels):
            label = form.labels[t]
            parts.append(f"X[{label.k},{label.j}]")
    return " ; ".join(parts)
