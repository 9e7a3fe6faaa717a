"""Double-shuffle relation systems and their exact reduction at fixed weight.

Two relation families are generated over the admissible words of a given
weight:

* finite double shuffle: u sh v - u st v for every unordered pair of
  admissible words whose weights add up to the target;
* regularized double shuffle: the T = 0 constant terms of the
  shuffle-regularized stuffle products b^m st w (b^m the plain word) and of
  the stuffle-regularized shuffle products B_m sh w, where B_m is the m-th
  stuffle power of b.  Using the stuffle power on the second family is what
  keeps every emitted combination in the kernel of the evaluation map; the
  plain word b^m there would not be (its stuffle regularization has a
  nonzero admissible constant term once m >= 2).

Solving eliminates all non-basis atoms by fraction-free (Bareiss) elimination
over the integers, with a fixed pivot order, and back-substitutes into exact
rational rows over the chosen basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import products as P
from . import regularize as R
from . import words as W
from .lincomb import LinComb


@dataclass(frozen=True)
class Relation:
    """A weight-homogeneous combination of admissible words whose value is 0."""

    combo: LinComb
    provenance: str

    def weight(self) -> int:
        return self.combo.total_weight()


@dataclass
class ReducedTable:
    """Every weight-n atom expressed exactly over the chosen basis."""

    weight: int
    basis: tuple[str, ...]          # admissible words, fixed order
    rows: dict[str, tuple[Fraction, ...]]

    def row_for_index(self, index: W.SignedIndex) -> tuple[Fraction, ...]:
        return self.rows[W.flatten(W.index_to_word(index))]

    def basis_indices(self) -> list[W.SignedIndex]:
        return [W.word_to_index(W.to_composite(w)) for w in self.basis]

    def to_json(self) -> dict:
        def fmt(vec):
            return [f"{c.numerator}/{c.denominator}" for c in vec]

        ordered = sorted(self.rows, key=lambda w: (W.depth(w), w))
        return {
            "weight": self.weight,
            "basis": [W.format_index(W.word_to_index(W.to_composite(b))) for b in self.basis],
            "rows": {W.format_index(W.word_to_index(W.to_composite(w))): fmt(self.rows[w])
                     for w in ordered},
        }

    def non_integer_entries(self) -> list[tuple[str, str, Fraction]]:
        out = []
        basis_idx = [W.format_index(W.word_to_index(W.to_composite(b))) for b in self.basis]
        for w in sorted(self.rows, key=lambda w: (W.depth(w), w)):
            for j, c in enumerate(self.rows[w]):
                if c.denominator != 1:
                    out.append((W.format_index(W.word_to_index(W.to_composite(w))), basis_idx[j], c))
        return out


class SolveError(RuntimeError):
    pass


class InsufficientRelations(SolveError):
    def __init__(self, unresolved: list[str]):
        self.unresolved = unresolved
        super().__init__(f"relations do not determine atoms: {', '.join(unresolved)}")


class DependentBasis(SolveError):
    def __init__(self, combo):
        self.combo = combo
        super().__init__(f"relation found among basis atoms: {combo}")


# -- relation generation ------------------------------------------------------


def gen_fds(n: int) -> list[Relation]:
    """Shuffle-minus-stuffle relations for all admissible pairs of total weight n."""
    if n < 2:
        raise ValueError("weight must be >= 2")
    out = []
    for p in range(1, n // 2 + 1):
        q = n - p
        left = W.enumerate_admissible(p)
        right = W.enumerate_admissible(q)
        for i, u in enumerate(left):
            vs = right[i:] if p == q else right
            for v in vs:
                combo = P.shuffle(u, v) - P.stuffle_letters(LinComb.word(u), LinComb.word(v))
                out.append(Relation(combo, f"fds({u},{v})"))
    return out


@lru_cache(maxsize=None)
def _b_stuffle_power(m: int) -> LinComb:
    """m-th stuffle power of the letter b, as a composite LinComb."""
    b = LinComb.word(((W.BETA, 1),))
    out = b
    for _ in range(m - 1):
        out = P.stuffle(out, b)
    return out


def gen_eds(n: int, max_m: int | None = None) -> list[Relation]:
    """Regularized relations at weight n for leading-b exponents 1..max_m."""
    if n < 2:
        raise ValueError("weight must be >= 2")
    if max_m is None:
        max_m = n - 1
    if not 1 <= max_m <= n - 1:
        raise ValueError("max_m must be in 1..n-1")
    out = []
    for m in range(1, max_m + 1):
        b_word = LinComb.word(W.to_composite("b" * m))
        b_power = _b_stuffle_power(m)
        for w in W.enumerate_admissible(n - m):
            cw = LinComb.word(W.to_composite(w))
            combo = R.reg_at_zero(R.SHUFFLE, P.stuffle(b_word, cw)).to_letters()
            out.append(Relation(combo, f"eds_sh(m={m},{w})"))
            sh = P.shuffle(b_power.to_letters(), LinComb.word(w))
            combo2 = R.reg_at_zero(R.STUFFLE, sh.to_composite()).to_letters()
            out.append(Relation(combo2, f"eds_st(m={m},{w})"))
    return out


def gen_all(n: int, max_m: int | None = None) -> list[Relation]:
    return gen_fds(n) + gen_eds(n, max_m)


def _primitive_vector(combo: LinComb, atoms: list[str]) -> tuple[int, ...]:
    """Integer row for a relation, scaled primitive with positive leading entry."""
    vec = [combo.coeff(a) for a in atoms]
    den = 1
    for c in vec:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-x for x in ints]
            break
    return tuple(ints)


def dedupe(relations: list[Relation], atoms: list[str]) -> list[tuple[int, ...]]:
    """Canonical integer rows, proportional duplicates removed, sorted."""
    seen = {}
    for rel in relations:
        if not rel.combo:
            continue
        row = _primitive_vector(rel.combo, atoms)
        seen.setdefault(row, rel.provenance)
    return sorted(seen)


def _row_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], dict[int, int]]:
    """Fraction-free Bareiss elimination with left-to-right column pivoting.

    Returns the echelon rows and a map pivot column -> row index.
    """
    rows = [list(r) for r in rows]
    pivots: dict[int, int] = {}
    rank = 0
    prev = 1
    for col in range(ncols):
        sel = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        piv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if not any(rows[i][col:]):
                continue
            ri = rows[i]
            rik = ri[col]
            for j in range(col, ncols):
                ri[j] = (piv * ri[j] - rik * rows[rank][j]) // prev
        pivots[col] = rank
        rank += 1
        prev = piv
    return rows[:rank], pivots


def solve(relations: list[Relation], basis: list[str]) -> ReducedTable:
    """Express every weight-n atom exactly over the given basis words.

    Raises :class:`InsufficientRelations` if some non-basis atom is not
    determined, and :class:`DependentBasis` if the relations force a linear
    relation among the basis atoms themselves.
    """
    weights = {r.weight() for r in relations if r.combo}
    if len(weights) != 1:
        raise ValueError(f"relations must be homogeneous of one weight, got {weights}")
    n = weights.pop()
    atoms = W.enumerate_admissible(n)
    if set(basis) - set(atoms):
        raise ValueError("basis atoms must be admissible words of the target weight")
    non_basis = [a for a in atoms if a not in basis]
    # pivot order: non-basis atoms by (depth, lex), then the basis columns
    non_basis.sort(key=lambda w: (W.depth(w), w))
    columns = non_basis + list(basis)
    col_of = {a: j for j, a in enumerate(columns)}

    rows = [list(r) for r in dedupe(relations, columns)]
    ech, pivots = _row_echelon(rows, len(columns))

    k = len(non_basis)
    for col, ri in pivots.items():
        if col >= k:
            combo = LinComb({columns[j]: ech[ri][j] for j in range(k, len(columns))})
            raise DependentBasis(combo)
    missing = [a for j, a in enumerate(non_basis) if j not in pivots]
    if missing:
        raise InsufficientRelations(
            [W.format_index(W.word_to_index(W.to_composite(a))) for a in missing])

    # back-substitution: solved[atom] = exact rational vector over the basis
    solved: dict[str, list[Fraction]] = {b: [Fraction(int(i == j)) for i in range(len(basis))]
                                         for j, b in enumerate(basis)}
    for col in sorted(pivots, reverse=True):
        row = ech[pivots[col]]
        piv = row[col]
        vec = [Fraction(0)] * len(basis)
        for j in range(col + 1, len(columns)):
            if row[j]:
                tail = solved[columns[j]]
                for t in range(len(basis)):
                    vec[t] -= Fraction(row[j], piv) * tail[t]
        solved[columns[col]] = vec

    return ReducedTable(weight=n, basis=tuple(basis),
                        rows={a: tuple(solved[a]) for a in atoms})


def rank_of(relations: list[Relation], n: int) -> int:
    atoms = W.enumerate_admissible(n)
    rows = [list(r) for r in dedupe(relations, atoms)]
    _, pivots = _row_echelon(rows, len(atoms))
    return len(pivots)


def rank_profile(n: int, max_m: int | None = None) -> tuple[int, int]:
    """Coranks of the atom space modulo the FDS span and the FDS+EDS span."""
    atoms = len(W.enumerate_admissible(n))
    fds = gen_fds(n)
    corank_fds = atoms - rank_of(fds, n)
    corank_all = atoms - rank_of(fds + gen_eds(n, max_m), n)
    return corank_fds, corank_all


def integrality_report(table: ReducedTable) -> list[tuple[str, str, Fraction]]:
    """Non-integer coefficients in the table; empty means an integral table."""
    return table.non_integer_entries()


# -- bases ---------------------------------------------------------------------


def zlobin_basis(n: int) -> list[str]:
    """Barred-first compositions of n into parts 1 and 2, as words.

    The order follows increasing depth, then the word order; at each weight
    up to 4 this is also the hardcoded table basis.
    """

    def compositions(total):
        if total == 0:
            yield ()
        for part in (1, 2):
            if part <= total:
                for rest in compositions(total - part):
                    yield (part,) + rest

    out = []
    for comp in compositions(n):
        index = (-comp[0],) + comp[1:]
        out.append(W.flatten(W.index_to_word(index)))
    out.sort(key=lambda w: (W.depth(w), w))
    return out


_TABLE_BASIS_INDICES = {
    2: [(-2,), (-1, 1)],
    3: [(-2, 1), (-1, 1, 1), (-1, 2)],
    4: [(-2, 1, 1), (-2, 2), (-1, 2, 1), (-1, 1, 2), (-1, 1, 1, 1)],
    5: [(-1, -1, -1, 2), (-2, 1, -1, -1), (-1, 1, -1, -2), (-2, 1, 1, 1),
        (-1, -1, -1, 1, 1), (2, 2, -1), (-1, 1, -1, 1, -1), (-1, -1, -1, -1, -1)],
}


def table_basis(n: int) -> list[str]:
    """The integral bases of the weight 2..5 tables, in table order."""
    if n not in _TABLE_BASIS_INDICES:
        raise ValueError(f"no fixed table basis for weight {n}")
    return [W.flatten(W.index_to_word(i)) for i in _TABLE_BASIS_INDICES[n]]


def select_basis(n: int, name: str) -> tuple[list[str], str]:
    """Resolve a basis request; returns (words, note)."""
    if name == "paper":
        return table_basis(n), "table basis"
    if name == "zlobin":
        return zlobin_basis(n), "barred 1-2 composition basis"
    if name == "auto":
        if n in _TABLE_BASIS_INDICES:
            return table_basis(n), "table basis (auto)"
        return zlobin_basis(n), "barred 1-2 composition basis (auto fallback)"
    raise ValueError(f"unknown basis {name!r}")


def reduce_weight(n: int, basis_name: str = "paper", max_m: int | None = None) -> ReducedTable:
    basis, _ = select_basis(n, basis_name)
    return solve(gen_all(n, max_m), basis)
