"""The semigroup algebra over exact rationals.

A :class:`FormalSum` is a finite rational linear combination of elements;
products extend the semigroup product bilinearly.  No floats enter here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .elements import PartialBijection, compose, enumerate_rn, symmetric_group


class FormalSum:
    """An immutable rational linear combination of partial bijections."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data: dict[PartialBijection, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for elem, coeff in items:
            c = Fraction(coeff)
            if c:
                c += data.get(elem, Fraction(0))
                if c:
                    data[elem] = c
                else:
                    del data[elem]
        self._terms = data

    @staticmethod
    def of(element: PartialBijection, coeff=1) -> "FormalSum":
        return FormalSum(((element, coeff),))

    @staticmethod
    def zero() -> "FormalSum":
        return FormalSum()

    @staticmethod
    def one() -> "FormalSum":
        return FormalSum.of(PartialBijection.identity())

    @property
    def terms(self) -> dict[PartialBijection, Fraction]:
        return dict(self._terms)

    def coefficient(self, element: PartialBijection) -> Fraction:
        return self._terms.get(element, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        data = dict(self._terms)
        for elem, c in other._terms.items():
            s = data.get(elem, Fraction(0)) + c
            if s:
                data[elem] = s
            else:
                data.pop(elem, None)
        out = FormalSum()
        out._terms = data
        return out

    def __neg__(self) -> "FormalSum":
        out = FormalSum()
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FormalSum):
            data: dict[PartialBijection, Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    prod = compose(e1, e2)
                    s = data.get(prod, Fraction(0)) + c1 * c2
                    if s:
                        data[prod] = s
                    else:
                        data.pop(prod, None)
            out = FormalSum()
            out._terms = data
            return out
        if isinstance(other, Rational):
            return self._scaled(Fraction(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self._scaled(Fraction(other))
        return NotImplemented

    def _scaled(self, c: Fraction) -> "FormalSum":
        if not c:
            return FormalSum()
        out = FormalSum()
        out._terms = {e: c * v for e, v in self._terms.items()}
        return out

    def star(self) -> "FormalSum":
        out = FormalSum()
        out._terms = {e.star(): c for e, c in self._terms.items()}
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        bits = " + ".join(
            f"{c}*{e.literal()}"
            for e, c in sorted(self._terms.items(), key=lambda t: t[0].literal())
        )
        return f"FormalSum({bits})"


def algebra_product(a: FormalSum, b: FormalSum) -> FormalSum:
    """Bilinear extension of the semigroup product."""
    return a * b


def symmetrizer(n: int) -> FormalSum:
    """The normalized symmetrizer (1/n!) * sum of all permutations of 1..n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeff = Fraction(1, math.factorial(n))
    return FormalSum((s, coeff) for s in symmetric_group(n))


@dataclass(frozen=True)
class GelfandReport:
    n: int
    basis_size: int
    distinct_products: int
    pairs_checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_gelfand_pair(n: int, max_violations: int = 20) -> GelfandReport:
    """Verify that symmetrized products p*a*p commute pairwise over R_n.

    Uses a precomputed multiplication table of R_n so the quadratic sweep
    over basis pairs stays fast; all arithmetic is exact.
    """
    if n > 3:
        raise ValueError("the exact commutativity sweep is limited to n <= 3")
    basis = list(enumerate_rn(n))
    index = {e: i for i, e in enumerate(basis)}
    table = [
        [index[compose(a, b)] for b in basis]
        for a in basis
    ]

    def to_indexed(s: FormalSum) -> dict[int, Fraction]:
        return {index[e]: c for e, c in s.terms.items()}

    def table_product(u: dict[int, Fraction], v: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, ci in u.items():
            row = table[i]
            for j, cj in v.items():
                k = row[j]
                s = out.get(k, Fraction(0)) + ci * cj
                if s:
                    out[k] = s
                else:
                    del out[k]
        return out

    p = symmetrizer(n)
    sandwiches = []
    seen: dict[tuple, int] = {}
    for e in basis:
        u = to_indexed(p * FormalSum.of(e) * p)
        key = tuple(sorted(u.items()))
        if key not in seen:
            seen[key] = len(sandwiches)
            sandwiches.append((e, u))

    violations: list[str] = []
    pairs = 0
    for (ea, ua), (eb, ub) in itertools.combinations(sandwiches, 2):
        pairs += 1
        if table_product(ua, ub) != table_product(ub, ua):
            if len(violations) < max_violations:
                violations.append(f"p {ea.literal()} p vs p {eb.literal()} p")
    # Equal sandwiches commute iff their representatives do, so checking the
    # distinct ones settles every basis pair.
    return GelfandReport(n, len(basis), len(sandwiches), pairs, tuple(violations))
