"""Words over {a, b, c}, composite letters, signed indices, and conversions.

The three letters encode the integrand forms dt/t, dt/(1-t) and -dt/(1+t).
A word is a plain string over "abc"; the empty string is the empty word and
acts as the multiplicative identity everywhere.  A composite letter bundles a
run of a's with its terminating b or c: ``("b", n)`` stands for a^(n-1)b and
``("g", n)`` for a^(n-1)c.  A signed index is a tuple of nonzero integers
whose negative entries carry the alternating sign (written "-2,1" on the
command line).

All values here are immutable; functions never mutate their arguments.
"""

from __future__ import annotations

import itertools

Word = str
CompositeLetter = tuple[str, int]
CompositeWord = tuple[CompositeLetter, ...]
SignedIndex = tuple[int, ...]

ALPHABET = "abc"
BETA = "b"
GAMMA = "g"


class ParseError(ValueError):
    """Malformed textual input; carries the 0-based offending position."""

    def __init__(self, text: str, pos: int, reason: str):
        self.text = text
        self.pos = pos
        self.reason = reason
        super().__init__(f"{reason} (position {pos} in {text!r})")


def is_admissible(w: Word) -> bool:
    """A word converges as an iterated integral iff it neither starts with b nor ends with a."""
    return not w or (w[0] != "b" and w[-1] != "a")


def in_depth_algebra(w: Word) -> bool:
    """Words not ending in a; exactly those with a composite form."""
    return not w.endswith("a")


def to_composite(w: Word) -> CompositeWord:
    """Greedy left-to-right parse of a word into composite letters.

    Rejects the empty word and words ending in a, which have no composite
    form.
    """
    if not w:
        raise ValueError("empty word has no composite form")
    if w.endswith("a"):
        raise ValueError(f"word {w!r} ends in 'a' and has no composite form")
    out = []
    run = 0
    for ch in w:
        if ch == "a":
            run += 1
        elif ch == "b":
            out.append((BETA, run + 1))
            run = 0
        elif ch == "c":
            out.append((GAMMA, run + 1))
            run = 0
        else:
            raise ValueError(f"letter {ch!r} not in alphabet 'abc'")
    return tuple(out)


def flatten(cw: CompositeWord) -> Word:
    return "".join("a" * (n - 1) + ("b" if kind == BETA else "c") for kind, n in cw)


def index_to_word(index: SignedIndex) -> CompositeWord:
    """Convert a signed index to its composite word.

    Every barred (negative) entry toggles the running b/g state, which starts
    at "b"; each output letter takes the current state and the entry's
    magnitude.  Reference vector: (-1,2,2,-4,3,-5,-6) maps to
    g1 g2 g2 b4 b3 g5 b6, i.e. the word cacaca^3ba^2ba^4ca^5b.
    """
    if not index:
        raise ValueError("empty index has no word form")
    out = []
    barred = False
    for s in index:
        if s == 0:
            raise ValueError("index entries must be nonzero integers")
        if s < 0:
            barred = not barred
        out.append((GAMMA if barred else BETA, abs(s)))
    return tuple(out)


def word_to_index(cw: CompositeWord) -> SignedIndex:
    """Exact inverse of :func:`index_to_word`."""
    out = []
    prev = BETA
    for kind, n in cw:
        if n < 1:
            raise ValueError("composite magnitudes must be positive")
        out.append(-n if kind != prev else n)
        prev = kind
    return tuple(out)


def is_convergent(index: SignedIndex) -> bool:
    """A signed index sums to a finite value iff it is empty or does not start with an unbarred 1."""
    return not index or index[0] != 1


def weight(x) -> int:
    """Letter count of a word / total magnitude of a composite word or index."""
    if isinstance(x, str):
        return len(x)
    if x and isinstance(x[0], tuple):
        return sum(n for _, n in x)
    return sum(abs(s) for s in x)


def depth(x) -> int:
    """Number of index entries (= composite letters)."""
    if isinstance(x, str):
        return depth(to_composite(x)) if x else 0
    return len(x)


def enumerate_admissible(n: int) -> list[Word]:
    """All weight-n admissible words in lexicographic order (a < b < c).

    Brute-force filter of the 3^n candidates; counts are 1 for n=1 and
    4*3^(n-2) for n >= 2.
    """
    if n < 1:
        raise ValueError("weight must be >= 1")
    return ["".join(t) for t in itertools.product(ALPHABET, repeat=n)
            if t[0] != "b" and t[-1] != "a"]


def sort_key(w):
    """Canonical term order: weight first, then lexicographic on the flat word."""
    if isinstance(w, str):
        return (len(w), w)
    flat = flatten(w)
    return (len(flat), flat)


# -- textual forms ----------------------------------------------------------

def parse_word(text: str) -> Word:
    for i, ch in enumerate(text):
        if ch not in ALPHABET:
            raise ParseError(text, i, f"letter {ch!r} not in alphabet 'abc'")
    return text


def parse_composite(text: str) -> CompositeWord:
    """Parse "g2g1b3"-style composite words (kind letter, then magnitude)."""
    if not text:
        raise ParseError(text, 0, "empty composite word")
    out = []
    i = 0
    while i < len(text):
        kind = text[i]
        if kind not in (BETA, GAMMA):
            raise ParseError(text, i, f"expected kind letter 'b' or 'g', got {kind!r}")
        j = i + 1
        while j < len(text) and text[j].isdigit():
            j += 1
        if j == i + 1:
            raise ParseError(text, i + 1, "expected a magnitude after the kind letter")
        n = int(text[i + 1:j])
        if n < 1:
            raise ParseError(text, i + 1, "magnitude must be >= 1")
        out.append((kind, n))
        i = j
    return tuple(out)


def format_composite(cw: CompositeWord) -> str:
    return "".join(f"{kind}{n}" for kind, n in cw)


def parse_index(text: str) -> SignedIndex:
    """Parse "-2,1"-style signed indices (negative = barred)."""
    if not text.strip():
        raise ParseError(text, 0, "empty index")
    out = []
    pos = 0
    for piece in text.split(","):
        stripped = piece.strip()
        try:
            s = int(stripped)
        except ValueError:
            raise ParseError(text, pos, f"entry {stripped!r} is not an integer") from None
        if s == 0:
            raise ParseError(text, pos, "index entries must be nonzero")
        out.append(s)
        pos += len(piece) + 1
    return tuple(out)


def format_index(index: SignedIndex) -> str:
    return ",".join(str(s) for s in index)
