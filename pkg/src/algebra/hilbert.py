"""Hilbert series of face rings of simplicial posets, in u = t^2."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple

from ..structure.dual_poset import DualSimplicialPoset
from .polynomials import format_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HilbertSeries:
    """Truncated power series in u = t^2, optionally with a rational-function form.

    Attributes:
        coefficients: Coefficient of u^d for d = 0..len-1 (cohomological degree 2d)
        numerator: Numerator polynomial in u of the exact form, if known
        denominator_power: m in the denominator (1-u)^m
    """

    coefficients: Tuple[Fraction, ...]
    numerator: Optional[Tuple[int, ...]] = None
    denominator_power: Optional[int] = None

    def by_degree(self) -> Dict[int, Fraction]:
        return {2 * d: c for d, c in enumerate(self.coefficients)}

    def times_one_minus_u(self) -> "HilbertSeries":
        """Multiply by (1 - t^2), keeping the truncation."""
        previous = (Fraction(0),) + self.coefficients[:-1]
        shifted = [c - p for c, p in zip(self.coefficients, previous)]
        numerator = self.numerator
        power = self.denominator_power
        if numerator is not None and power is not None:
            if power > 0:
                power -= 1
            else:
                numerator = _poly_mul(numerator, (1, -1))
        return HilbertSeries(tuple(shifted), numerator, power)

    def h_vector(self) -> Optional[Tuple[int, ...]]:
        """Numerator coefficients over (1-u)^m, trailing zeros removed."""
        if self.numerator is None:
            return None
        h = list(self.numerator)
        while len(h) > 1 and h[-1] == 0:
            h.pop()
        return tuple(h)

    def to_document(self) -> Dict[str, object]:
        doc: Dict[str, object] = {
            "coefficients": {str(deg): format_rational(c) for deg, c in self.by_degree().items()}
        }
        if self.numerator is not None:
            doc["numerator"] = list(self.h_vector() or ())
            doc["denominator_power"] = self.denominator_power
        return doc


def _poly_mul(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            result[i + j] += x * y
    return tuple(result)


def rank_series(counts: Mapping[int, int], max_degree: int) -> HilbertSeries:
    """Sum over elements of rank r of u^r/(1-u)^r, truncated at cohomological degree ``max_degree``.

    Args:
        counts: Number of poset elements of every rank; rank 0 is the bottom
        max_degree: Cohomological cutoff D; coefficients up to u^(D//2)
    """
    top = max(counts, default=0)
    coefficients: List[Fraction] = []
    for d in range(max_degree // 2 + 1):
        total = counts.get(0, 0) if d == 0 else 0
        for r, f in counts.items():
            if 1 <= r <= d:
                total += f * comb(d - 1, r - 1)
        coefficients.append(Fraction(total))

    numerator = (0,)
    for r, f in counts.items():
        term = (0,) * r + (f,)
        for _ in range(top - r):
            term = _poly_mul(term, (1, -1))
        numerator = _add(numerator, term)
    return HilbertSeries(tuple(coefficients), numerator, top)


def _add(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    size = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))


def face_ring_hilbert(poset: DualSimplicialPoset, max_degree: int) -> HilbertSeries:
    """Return the Hilbert series of the face ring of a simplicial poset.

    Every element of rank r contributes t^{2r}/(1-t^2)^r; the bottom
    element contributes 1.

    Args:
        poset: Simplicial poset with boolean lower intervals
        max_degree: Cohomological cutoff D
    """
    series = rank_series(poset.counts_by_rank(), max_degree)
    logger.debug(f"Face ring h-vector {series.h_vector()} over (1-u)^{series.denominator_power}")
    return series
