"""Equality decision for words in the singular braid monoid.

The package is organised as a small tower: a Garside braid kernel
(`braids`), the integral group ring with the desingularization map
(`group_ring`), singular words and their alternating forms (`singular`),
the decision procedure (`decide`), word notation (`notation`), and a
FastAPI service (`service`, `app`) with a thin command-line client (`cli`).
"""

from .braids import (
    BraidLetter,
    BraidNF,
    BraidWord,
    braid_equal,
    center_word,
    coset_block,
    free_reduce,
    generator_expansion,
    half_twist,
    normal_form,
    permutation_of,
    pure_generator,
    sigma,
    transversal_rep,
)
from .decide import (
    Verdict,
    check_commutation_eta,
    commutes_via_frz,
    decide_equal,
    decide_sgp,
    trace_filter,
    x_commutes_with_pure,
)
from .errors import (
    CertificationError,
    NotationError,
    PurityError,
    StrandMismatchError,
    UnsupportedWordError,
)
from .group_ring import GroupRingElement, desingularize, gr_combine, gr_equal, gr_mul
from .notation import format_britton, format_permutation, format_word, parse_braid_word, parse_word
from .permutations import Permutation
from .singular import (
    BrittonForm,
    SingularLetter,
    SingularWord,
    XLabel,
    degree_vector,
    expand_britton,
    factor_singular,
    label_of_letter,
    perm_image,
    sigma_letter,
    singular_pure_generator,
    tau_letter,
    to_britton_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
