"""Shuffle and stuffle products, and the alternating cut operators.

The shuffle product interleaves letter words; the stuffle product acts on
composite words and mirrors multiplication of the underlying nested series,
with the sign-toggle operator tracking how alternating signs propagate and a
merge bracket fusing two composite letters into one.

Cuts split a symbolic sequence over {b, c, d} (d = a(b+c), kept atomic until
reassembly) into a prefix and a suffix; even-length prefixes are reversed.
Both parts are star-reassembled and multiplied with either product; ``delta``
is the shuffle-minus-stuffle difference of a cut.
"""

from __future__ import annotations

import itertools

from .lincomb import LinComb, bilinear, star_assemble
from .words import BETA, GAMMA, CompositeLetter, CompositeWord

_shuffle_cache: dict[tuple[str, str], dict[str, int]] = {}
_stuffle_cache: dict[tuple[CompositeWord, CompositeWord], dict[CompositeWord, int]] = {}


def clear_caches():
    _shuffle_cache.clear()
    _stuffle_cache.clear()


def shuffle_words(u: str, v: str) -> dict[str, int]:
    """All order-preserving interleavings of u and v with multiplicity.

    The result satisfies the one-letter-peeling recursion
    (xw1) sh (yw2) = x(w1 sh yw2) + y(xw1 sh w2) and has total mass
    C(|u|+|v|, |u|).  Cached per unordered word pair.
    """
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    if v < u:
        u, v = v, u
    key = (u, v)
    hit = _shuffle_cache.get(key)
    if hit is not None:
        return hit
    n = len(u) + len(v)
    out: dict[str, int] = {}
    slots = [""] * n
    for positions in itertools.combinations(range(n), len(u)):
        taken = set(positions)
        for ch, p in zip(u, positions):
            slots[p] = ch
        it = iter(v)
        for p in range(n):
            if p not in taken:
                slots[p] = next(it)
        w = "".join(slots)
        out[w] = out.get(w, 0) + 1
    _shuffle_cache[key] = out
    return out


def shuffle(x, y) -> LinComb:
    """Shuffle product of letter words or letter LinCombs."""
    if isinstance(x, str):
        x = LinComb.word(x)
    if isinstance(y, str):
        y = LinComb.word(y)
    return bilinear(shuffle_words, x, y)


def sign_toggle(trigger: CompositeLetter, w: CompositeWord) -> CompositeWord:
    """Toggle every b/g kind of w when the acting letter is of g kind.

    An involution: applying the same g-kind trigger twice is the identity;
    b-kind triggers leave w untouched.
    """
    if trigger[0] == BETA:
        return w
    return tuple((GAMMA if kind == BETA else BETA, n) for kind, n in w)


def merge(x: CompositeLetter, y: CompositeLetter) -> CompositeLetter:
    """Fuse two composite letters: magnitudes add, kinds multiply like signs."""
    return (BETA if x[0] == y[0] else GAMMA, x[1] + y[1])


def stuffle_words(u: CompositeWord, v: CompositeWord) -> dict[CompositeWord, int]:
    """Stuffle product of two composite words.

    Letter-recursive: the head of the result is the head of u, the head of v,
    or their merge, with sign toggles applied to the tails on both sides of
    the recursive product.  Cached per unordered pair (the product is
    commutative).
    """
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    if v < u:
        u, v = v, u
    key = (u, v)
    hit = _stuffle_cache.get(key)
    if hit is not None:
        return hit
    x, w1 = u[0], u[1:]
    y, w2 = v[0], v[1:]
    out: dict[CompositeWord, int] = {}
    for t, c in stuffle_words(sign_toggle(x, w1), v).items():
        w = (x,) + sign_toggle(x, t)
        out[w] = out.get(w, 0) + c
    for t, c in stuffle_words(u, sign_toggle(y, w2)).items():
        w = (y,) + sign_toggle(y, t)
        out[w] = out.get(w, 0) + c
    xy = merge(x, y)
    for t, c in stuffle_words(sign_toggle(x, w1), sign_toggle(y, w2)).items():
        w = (xy,) + sign_toggle(xy, t)
        out[w] = out.get(w, 0) + c
    _stuffle_cache[key] = out
    return out


def stuffle(x, y) -> LinComb:
    """Stuffle product of composite words or composite LinCombs."""
    if isinstance(x, tuple):
        x = LinComb.word(x)
    if isinstance(y, tuple):
        y = LinComb.word(y)
    return bilinear(stuffle_words, x, y)


def stuffle_letters(x: LinComb, y: LinComb) -> LinComb:
    """Stuffle of letter LinCombs via the composite representation."""
    return stuffle(x.to_composite(), y.to_composite()).to_letters()


def cut(i: int, seq) -> tuple[LinComb, LinComb]:
    """The i-th cut of a symbolic sequence over {b, c, d}.

    Returns the pair of star-reassembled letter LinCombs: the first i symbols
    (reversed when i is even) and the remaining ones.  Either side may be the
    empty-word LinComb.
    """
    seq = tuple(seq)
    if not 0 <= i <= len(seq):
        raise ValueError(f"cut position {i} out of range 0..{len(seq)}")
    prefix = seq[:i] if i % 2 else seq[:i][::-1]
    return star_assemble(prefix), star_assemble(seq[i:])


def shuffle_cut(i: int, seq) -> LinComb:
    left, right = cut(i, seq)
    return shuffle(left, right)


def stuffle_cut(i: int, seq) -> LinComb:
    left, right = cut(i, seq)
    return stuffle_letters(left, right)


def delta(i: int, seq) -> LinComb:
    """Difference of the shuffled and stuffled i-th cut, in letter form."""
    left, right = cut(i, seq)
    return shuffle(left, right) - stuffle_letters(left, right)
