"""The normally ordered monomial algebra of a single raise/lower operator pair.

Basis elements are pairs ``(r, s)`` standing for the operator that applies
``s`` lowering steps followed by ``r`` raising steps (all raising factors
written to the left of all lowering factors).  The product of two basis
elements expands as a finite sum with positive integer coefficients:

    (r, s) * (k, l)  =  sum over i in 0..min(k, s) of
                        i! * C(s, i) * C(k, i) * (r + k - i, s + l - i)

which is the closed form of repeatedly commuting a lowering operator past a
raising one with commutator equal to the identity.  Polynomials are finitely
supported sums of basis elements with :class:`GaussianRational` coefficients;
all arithmetic is exact.

Free (unordered) words in the two generators are normalized by two
independent strategies, a rewrite engine and a fold over basis products,
which are cross-checked against each other in :func:`normal_order_word`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache, reduce
from math import comb, factorial
from typing import Iterable, Iterator, Mapping

from .scalars import GaussianRational, ScalarLike

MonomialLike = "NormalMonomial | tuple[int, int]"


@dataclass(frozen=True, slots=True)
class NormalMonomial:
    """Basis element with ``r`` raising and ``s`` lowering factors."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if not (isinstance(self.r, int) and isinstance(self.s, int)):
            raise TypeError("monomial exponents must be integers")
        if self.r < 0 or self.s < 0:
            raise ValueError(f"monomial exponents must be nonnegative, got {(self.r, self.s)}")

    @property
    def degree(self) -> int:
        return self.r + self.s

    def is_identity(self) -> bool:
        return self.r == 0 and self.s == 0


IDENTITY = NormalMonomial(0, 0)
LOWER = NormalMonomial(0, 1)
RAISE = NormalMonomial(1, 0)


def _as_monomial(m: "MonomialLike") -> NormalMonomial:
    if isinstance(m, NormalMonomial):
        return m
    return NormalMonomial(*m)


def _term_sort_key(m: NormalMonomial) -> tuple[int, int]:
    # Graded order: descending total degree, then descending r.
    return (-m.degree, -m.r)


class NormalPolynomial:
    """Finitely supported sum of :class:`NormalMonomial` with exact coefficients.

    Immutable.  Zero coefficients are pruned on construction, so two equal
    polynomials always have identical term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[MonomialLike, ScalarLike] | Iterable[tuple[MonomialLike, ScalarLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[NormalMonomial, GaussianRational] = {}
        for mono, coeff in items:
            mono = _as_monomial(mono)
            c = acc.get(mono, GaussianRational.zero()) + GaussianRational.coerce(coeff)
            if c.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = c
        self._terms = acc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "NormalPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NormalPolynomial":
        return cls.monomial(IDENTITY)

    @classmethod
    def monomial(cls, m: MonomialLike, coeff: ScalarLike = 1) -> "NormalPolynomial":
        return cls([(m, coeff)])

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, m: MonomialLike) -> GaussianRational:
        return self._terms.get(_as_monomial(m), GaussianRational.zero())

    def terms(self) -> Iterator[tuple[NormalMonomial, GaussianRational]]:
        """Iterate terms in canonical order: descending degree, then descending r."""
        for mono in sorted(self._terms, key=_term_sort_key):
            yield mono, self._terms[mono]

    def monomials(self) -> list[NormalMonomial]:
        return [m for m, _ in self.terms()]

    # -- vector-space and algebra operations --------------------------------

    def __add__(self, other: "NormalPolynomial") -> "NormalPolynomial":
        if not isinstance(other, NormalPolynomial):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = acc.get(mono, GaussianRational.zero()) + coeff
            if c.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = c
        return _raw(acc)

    def __neg__(self) -> "NormalPolynomial":
        return _raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "NormalPolynomial") -> "NormalPolynomial":
        if not isinstance(other, NormalPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c: ScalarLike) -> "NormalPolynomial":
        c = GaussianRational.coerce(c)
        if c.is_zero():
            return NormalPolynomial.zero()
        return _raw({m: coeff * c for m, coeff in self._terms.items()})

    def __mul__(self, other: "NormalPolynomial") -> "NormalPolynomial":
        """Bilinear extension of the basis product; noncommutative."""
        if not isinstance(other, NormalPolynomial):
            return NotImplemented
        acc: dict[NormalMonomial, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c12 = c1 * c2
                for mono, weight in _basis_product(m1.r, m1.s, m2.r, m2.s):
                    c = acc.get(mono, GaussianRational.zero()) + c12 * weight
                    if c.is_zero():
                        acc.pop(mono, None)
                    else:
                        acc[mono] = c
        return _raw(acc)

    def __pow__(self, n: int) -> "NormalPolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = NormalPolynomial.one()
        for _ in range(n):
            result = result * self
        return result

    # -- equality and display ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "NormalPolynomial(0)"
        parts = ", ".join(f"({m.r},{m.s}): {c}" for m, c in self.terms())
        return f"NormalPolynomial({parts})"

    # -- serialization --------------------------------------------------------

    def to_json(self) -> list[dict]:
        """Canonically ordered list of term records with string-valued fractions."""
        return [
            {"r": m.r, "s": m.s, "coeff": c.to_json()}
            for m, c in self.terms()
        ]

    @classmethod
    def from_json(cls, obj: list[dict]) -> "NormalPolynomial":
        return cls(
            [(NormalMonomial(int(t["r"]), int(t["s"])), GaussianRational.from_json(t["coeff"]))
             for t in obj]
        )


def _raw(terms: dict[NormalMonomial, GaussianRational]) -> NormalPolynomial:
    """Wrap an already-pruned term dict without re-normalizing."""
    p = NormalPolynomial.__new__(NormalPolynomial)
    p._terms = terms
    return p


@cache
def _basis_product(r: int, s: int, k: int, l: int) -> tuple[tuple[NormalMonomial, int], ...]:
    return tuple(
        (NormalMonomial(r + k - i, s + l - i), factorial(i) * comb(s, i) * comb(k, i))
        for i in range(min(k, s) + 1)
    )


def add(p: NormalPolynomial, q: NormalPolynomial) -> NormalPolynomial:
    return p + q


def scale(c: ScalarLike, p: NormalPolynomial) -> NormalPolynomial:
    return p.scale(c)


def multiply(p: NormalPolynomial, q: NormalPolynomial) -> NormalPolynomial:
    return p * q


def multiply_monomials(m1: MonomialLike, m2: MonomialLike) -> NormalPolynomial:
    """Closed-form product of two basis elements.

    For ``m1 = (r, s)`` and ``m2 = (k, l)`` the result has exactly
    ``min(k, s) + 1`` terms with positive integer coefficients
    ``i! * C(s, i) * C(k, i)``; the ``i = 0`` term always has coefficient 1.
    """
    m1, m2 = _as_monomial(m1), _as_monomial(m2)
    return NormalPolynomial(_basis_product(m1.r, m1.s, m2.r, m2.s))


def commutator_powers(s: int, k: int) -> NormalPolynomial:
    """Normal form of (lowering^s)(raising^k) - (raising^k)(lowering^s).

    Closed form: sum over i in 1..min(k, s) of i!*C(s,i)*C(k,i) * (k-i, s-i).
    Empty when either exponent is zero.
    """
    if s < 0 or k < 0:
        raise ValueError("exponents must be nonnegative")
    return NormalPolynomial(
        [(NormalMonomial(k - i, s - i), factorial(i) * comb(s, i) * comb(k, i))
         for i in range(1, min(k, s) + 1)]
    )


# ---------------------------------------------------------------------------
# Free words and normal ordering
# ---------------------------------------------------------------------------

class Letter(Enum):
    """Generators of the free word algebra."""

    ANNIHILATOR = "a"
    CREATOR = "ad"

    @classmethod
    def from_token(cls, token: str) -> "Letter":
        if token == "a":
            return cls.ANNIHILATOR
        if token in ("ad", "a†"):
            return cls.CREATOR
        raise ValueError(f"unknown letter token {token!r}")


Word = tuple[Letter, ...]

_LETTER_POLY = {
    Letter.ANNIHILATOR: NormalPolynomial.monomial(LOWER),
    Letter.CREATOR: NormalPolynomial.monomial(RAISE),
}


def word_from_str(text: str) -> Word:
    """Build a word from whitespace-separated letter tokens, e.g. ``"a ad a"``."""
    return tuple(Letter.from_token(t) for t in text.split())


def _leftmost_inversion(word: Word) -> int:
    """Index of the leftmost lowering-then-raising adjacent pair, or -1."""
    for i in range(len(word) - 1):
        if word[i] is Letter.ANNIHILATOR and word[i + 1] is Letter.CREATOR:
            return i
    return -1


def normal_order_rewrite(word: Word) -> NormalPolynomial:
    """Normal ordering by term rewriting on formal sums of words.

    One rewrite replaces the leftmost (lowering, raising) pair of a word by
    the swapped pair plus the word with the pair deleted.  Each step strictly
    reduces (inversions, length) lexicographically, so the loop terminates;
    uniqueness of the normal form makes the rewrite order irrelevant.
    """
    pending: dict[Word, int] = {tuple(word): 1}
    result: dict[NormalMonomial, GaussianRational] = {}
    while pending:
        w, c = pending.popitem()
        i = _leftmost_inversion(w)
        if i < 0:
            mono = NormalMonomial(
                sum(1 for x in w if x is Letter.CREATOR),
                sum(1 for x in w if x is Letter.ANNIHILATOR),
            )
            total = result.get(mono, GaussianRational.zero()) + c
            if total.is_zero():
                result.pop(mono, None)
            else:
                result[mono] = total
            continue
        swapped = w[:i] + (Letter.CREATOR, Letter.ANNIHILATOR) + w[i + 2:]
        deleted = w[:i] + w[i + 2:]
        for nxt in (swapped, deleted):
            pending[nxt] = pending.get(nxt, 0) + c
            if pending[nxt] == 0:
                del pending[nxt]
    return _raw(result)


def normal_order_fold(word: Word) -> NormalPolynomial:
    """Normal ordering by mapping letters to basis elements and multiplying."""
    return reduce(multiply, (_LETTER_POLY[letter] for letter in word), NormalPolynomial.one())


def normal_order_word(word: Word) -> NormalPolynomial:
    """Normal ordering with a built-in cross-check of both strategies.

    Raises AssertionError if the rewrite engine and the fold disagree, which
    would mean an internal arithmetic bug; the raise is explicit so the check
    survives optimized mode.
    """
    rewritten = normal_order_rewrite(word)
    folded = normal_order_fold(word)
    if rewritten != folded:
        raise AssertionError(
            f"normal-ordering strategies disagree on {word!r}: "
            f"rewrite={rewritten!r} fold={folded!r}"
        )
    return rewritten


def power_word(base: Word, n: int) -> Word:
    """The word ``base`` repeated ``n`` times."""
    return tuple(base) * n
