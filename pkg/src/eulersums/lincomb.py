"""Exact rational linear combinations of words, and polynomials over them.

A :class:`LinComb` is a finite formal sum of words with ``fractions.Fraction``
coefficients.  It comes in two representations -- letter words (strings) and
composite words (tuples) -- with explicit lossless converters; mixing the two
in one arithmetic operation is an error rather than a silent coercion.

The star-concatenation is ordinary concatenation except for the junctions
b|b -> bc and c|c -> cb; the flip acts only at the junction and never
cascades.  All other junctions, including those the reduction identities
never produce, concatenate plainly.
"""

from __future__ import annotations

from fractions import Fraction

from . import words as W

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LinComb:
    """Immutable-by-convention formal sum ``{word: coefficient}``.

    Zero coefficients are never stored.  Words are either all strings or all
    composite tuples; ``rep`` reports which.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    clean[w] = c
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def word(cls, w, coeff=1) -> "LinComb":
        return cls({w: Fraction(coeff)})

    @classmethod
    def one(cls) -> "LinComb":
        """The empty word in letter representation."""
        return cls({"": _ONE})

    # -- ring-module structure ------------------------------------------

    def _check_compatible(self, other: "LinComb"):
        if self.terms and other.terms:
            if isinstance(next(iter(self.terms)), str) != isinstance(next(iter(other.terms)), str):
                raise TypeError("cannot mix letter and composite representations")

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check_compatible(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, _ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        res = LinComb.__new__(LinComb)
        res.terms = out
        return res

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        res = LinComb.__new__(LinComb)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __mul__(self, scalar) -> "LinComb":
        c = Fraction(scalar)
        if not c:
            return LinComb()
        res = LinComb.__new__(LinComb)
        res.terms = {w: v * c for w, v in self.terms.items()}
        return res

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "LinComb":
        return self * (Fraction(1) / Fraction(scalar))

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __repr__(self) -> str:
        return f"LinComb({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.sorted_terms():
            name = w if isinstance(w, str) else W.format_composite(w)
            name = name or "1"
            if c == 1:
                bits.append(name)
            elif c == -1:
                bits.append(f"-{name}")
            else:
                bits.append(f"{c}*{name}")
        return " + ".join(bits).replace("+ -", "- ")

    # -- queries ---------------------------------------------------------

    @property
    def rep(self) -> str:
        if not self.terms:
            return "empty"
        return "letters" if isinstance(next(iter(self.terms)), str) else "composite"

    def coeff(self, w) -> Fraction:
        return self.terms.get(w, _ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: W.sort_key(kv[0]))

    def is_homogeneous(self) -> bool:
        weights = {W.weight(w) for w in self.terms}
        return len(weights) <= 1

    def total_weight(self) -> int | None:
        """The common weight of all terms, or None for 0 / mixed sums."""
        weights = {W.weight(w) for w in self.terms}
        return weights.pop() if len(weights) == 1 else None

    def mass(self) -> Fraction:
        return sum(self.terms.values(), _ZERO)

    # -- word-wise maps ---------------------------------------------------

    def map_words(self, fn) -> "LinComb":
        out = {}
        for w, c in self.terms.items():
            v = fn(w)
            out[v] = out.get(v, _ZERO) + c
        return LinComb(out)

    def to_composite(self) -> "LinComb":
        if self.rep == "composite":
            return self
        # the empty word is the identity in both representations
        return self.map_words(lambda w: W.to_composite(w) if w else ())

    def to_letters(self) -> "LinComb":
        if self.rep in ("letters", "empty"):
            return self
        return self.map_words(W.flatten)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        out = []
        for w, c in self.sorted_terms():
            name = w if isinstance(w, str) else W.format_composite(w)
            out.append({"word": name, "coeff": f"{c.numerator}/{c.denominator}"})
        return {"terms": out}

    @classmethod
    def from_json(cls, data: dict, composite: bool = False) -> "LinComb":
        terms = {}
        for item in data["terms"]:
            w = W.parse_composite(item["word"]) if composite else W.parse_word(item["word"])
            terms[w] = parse_fraction(item["coeff"])
        return cls(terms)


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def bilinear(fn, x: LinComb, y: LinComb) -> LinComb:
    """Extend a word-pair map ``fn(u, v) -> LinComb | dict`` bilinearly."""
    acc: dict = {}
    for u, cu in x.terms.items():
        for v, cv in y.terms.items():
            c = cu * cv
            prod = fn(u, v)
            items = prod.terms.items() if isinstance(prod, LinComb) else prod.items()
            for w, k in items:
                s = acc.get(w, _ZERO) + c * k
                if s:
                    acc[w] = s
                else:
                    del acc[w]
    res = LinComb.__new__(LinComb)
    res.terms = acc
    return res


def concat(x: LinComb, y: LinComb) -> LinComb:
    """Plain concatenation product, extended bilinearly."""
    return bilinear(lambda u, v: {u + v: 1}, x, y)


_FLIP = {"b": "c", "c": "b"}


def star_words(u: str, v: str) -> str:
    """Star-concatenate two letter words: flip v's head at a bb or cc junction."""
    if u and v and u[-1] == v[0] and v[0] in _FLIP:
        return u + _FLIP[v[0]] + v[1:]
    return u + v


def star_concat(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear star-concatenation; y must contain no empty word."""
    if "" in y.terms:
        raise ValueError("right factor of a star-concatenation must have nonempty words")
    return bilinear(lambda u, v: {star_words(u, v): 1}, x, y)


# d = a(b+c) is treated as a single symbol until concatenation time.
_SYMBOLS = {
    "b": LinComb({"b": _ONE}),
    "c": LinComb({"c": _ONE}),
    "d": LinComb({"ab": _ONE, "ac": _ONE}),
}


def star_assemble(seq) -> LinComb:
    """Star-concatenate a sequence of symbols from {b, c, d} left to right."""
    out = LinComb.one()
    for sym in seq:
        out = star_concat(out, _SYMBOLS[sym])
    return out


def star_power_cd(n: int) -> LinComb:
    """Expansion of the n-fold star power of the block cd, d = a(b+c).

    2^n words of weight 3n whose signed indices are exactly
    (-1, t1, -1, t2, ..., -1, tn) with each t_i in {2, -2}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return star_assemble(("c", "d") * n)


class TPoly:
    """Polynomial in the regularization variable T with LinComb coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    clean[int(k)] = v
        self.coeffs = clean

    @classmethod
    def constant(cls, x: LinComb) -> "TPoly":
        return cls({0: x})

    def __add__(self, other: "TPoly") -> "TPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = TPoly.__new__(TPoly)
        res.coeffs = out
        return res

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + other.scale(-1)

    def scale(self, scalar) -> "TPoly":
        c = Fraction(scalar)
        if not c:
            return TPoly()
        res = TPoly.__new__(TPoly)
        res.coeffs = {k: v * c for k, v in self.coeffs.items()}
        return res

    def shift(self, by: int = 1) -> "TPoly":
        """Multiply by T^by."""
        res = TPoly.__new__(TPoly)
        res.coeffs = {k + by: v for k, v in self.coeffs.items()}
        return res

    def mul(self, other: "TPoly", coeff_product) -> "TPoly":
        """Polynomial product, combining coefficients with the given LinComb product."""
        acc: dict[int, LinComb] = {}
        for i, x in self.coeffs.items():
            for j, y in other.coeffs.items():
                p = coeff_product(x, y)
                if not p:
                    continue
                k = i + j
                acc[k] = acc[k] + p if k in acc else p
        return TPoly(acc)

    def constant_term(self) -> LinComb:
        return self.coeffs.get(0, LinComb())

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "TPoly(0)"
        bits = [f"({v})*T^{k}" if k else f"({v})" for k, v in sorted(self.coeffs.items())]
        return "TPoly(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        return {f"degree_{k}": v.to_json() for k, v in sorted(self.coeffs.items())}
