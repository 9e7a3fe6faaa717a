"""Double-shuffle algebra and exact reduction tables for alternating Euler sums."""

from .identities import (
    block_identity_residual,
    block_word,
    check_key_identity,
    check_shuffle_identity,
    check_stuffle_identity,
    distribution_residual,
    partial_sum_sequences,
)
from .lincomb import LinComb, TPoly, star_concat, star_power_cd
from .numeval import EvalResult, PrecisionContext, eval_index, eval_lincomb, eval_word, oracle_eval
from .products import cut, delta, shuffle, sign_toggle, stuffle
from .regularize import SHUFFLE, STUFFLE, decompose, reg_at_zero
from .relations import ReducedTable, Relation, gen_eds, gen_fds, rank_profile, reduce_weight, solve
from .words import (
    CompositeWord,
    SignedIndex,
    Word,
    enumerate_admissible,
    flatten,
    index_to_word,
    is_admissible,
    to_composite,
    weight,
    word_to_index,
)

__version__ = "0.1.0"
