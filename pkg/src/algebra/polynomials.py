"""Polynomials over Q in the torus coordinates and division by weights.

Polynomials are sympy ``PolyElement`` values in the ring Q[x1, ..., xk]
with graded lexicographic order. A weight a is read as the linear form
sum a_i x_i. Reduction modulo a weight substitutes the first variable with
a nonzero coefficient, x_i = -(sum_{j != i} a_j x_j) / a_i; a polynomial
is divisible by the weight iff its image vanishes.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd
from typing import Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

PolynomialQ = PolyElement
Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def polynomial_ring(k: int) -> PolyRing:
    """Return Q[x1, ..., xk] with grlex order."""
    return ring([f"x{i}" for i in range(1, k + 1)], QQ, grlex)[0]


def linear_form(weight: Sequence[int]) -> PolynomialQ:
    """Return sum a_i x_i for the weight a."""
    R = polynomial_ring(len(weight))
    return sum((R.gens[i] * a for i, a in enumerate(weight) if a), R.zero)


@lru_cache(maxsize=None)
def monomials(k: int, d: int) -> Tuple[Monomial, ...]:
    """Return all exponent vectors of total degree d in k variables, sorted descending."""
    result = set()
    for combo in combinations_with_replacement(range(k), d):
        exponent = [0] * k
        for i in combo:
            exponent[i] += 1
        result.add(tuple(exponent))
    return tuple(sorted(result, reverse=True))


def _primitive(weight: Sequence[int]) -> Tuple[int, ...]:
    content = 0
    for a in weight:
        content = gcd(content, a)
    pivot = next(a for a in weight if a)
    sign = 1 if pivot > 0 else -1
    return tuple(sign * a // content for a in weight)


class WeightQuotient:
    """The substitution map Q[x] -> Q[x]/(a) for a nonzero weight a."""

    def __init__(self, weight: Sequence[int]) -> None:
        self.weight = tuple(weight)
        self.ring = polynomial_ring(len(weight))
        self.index = next(i for i, a in enumerate(weight) if a)
        pivot = QQ(weight[self.index])
        gens = self.ring.gens
        self.replacement = self.ring.zero
        for j, a in enumerate(weight):
            if j != self.index and a:
                self.replacement -= gens[j] * (QQ(a) / pivot)
        self._monomial_images: Dict[Monomial, Dict[Monomial, object]] = {}

    def image(self, poly: PolynomialQ) -> PolynomialQ:
        return poly.compose(self.ring.gens[self.index], self.replacement)

    def monomial_image(self, monomial: Monomial) -> Dict[Monomial, object]:
        """Return the image of a monomial as {exponent: QQ coefficient}."""
        cached = self._monomial_images.get(monomial)
        if cached is None:
            poly = self.ring.from_dict({monomial: QQ(1)})
            cached = dict(self.image(poly).items())
            self._monomial_images[monomial] = cached
        return cached

    def divides(self, poly: PolynomialQ) -> bool:
        return not self.image(poly)


@lru_cache(maxsize=None)
def _quotient(primitive: Tuple[int, ...]) -> WeightQuotient:
    return WeightQuotient(primitive)


def weight_quotient(weight: Sequence[int]) -> WeightQuotient:
    """Return the shared quotient map; weights differing by a scalar share it."""
    return _quotient(_primitive(weight))


def divides(weight: Sequence[int], poly: PolynomialQ) -> bool:
    """Return True if the linear form of ``weight`` divides ``poly`` over Q."""
    return weight_quotient(weight).divides(poly)


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def from_vector(k: int, d: int, coefficients: Sequence) -> PolynomialQ:
    """Build the degree-d polynomial with the given coefficients on ``monomials(k, d)``."""
    R = polynomial_ring(k)
    terms = {}
    for monomial, c in zip(monomials(k, d), coefficients):
        if c:
            value = Fraction(c)
            terms[monomial] = QQ(value.numerator, value.denominator)
    return R.from_dict(terms) if terms else R.zero


def to_terms(poly: PolynomialQ) -> List[Tuple[List[int], str]]:
    """Serialize as [exponents, "p/q"] pairs in descending grlex order."""
    return [
        [list(monomial), format_rational(to_fraction(coeff))]
        for monomial, coeff in sorted(poly.items(), reverse=True)
    ]


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
