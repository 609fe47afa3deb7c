"""Exact reduced rational homology of simplicial complexes.

Boundary matrices are kept as sparse integer columns. Ranks come from a
column reduction that always eliminates the lowest nonzero entry (largest
row index) and divides every column by its content, so entries stay
integral and small. Dimensions are reduced from the top down; a pivot row
found in dimension i+1 clears the matching column of dimension i, which is
known to reduce to zero.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .complex import SimplicialComplexAbstract

logger = logging.getLogger(__name__)

Column = Dict[int, int]


@dataclass(frozen=True)
class ChainComplexQ:
    """Augmented simplicial chain complex.

    Attributes:
        sizes: Number of i-simplices for i = 0..dim
        boundaries: ``boundaries[i]`` holds the columns of the boundary map
            from i-chains to (i-1)-chains; dimension 0 maps to the
            one-dimensional augmentation space
    """

    sizes: Tuple[int, ...]
    boundaries: Tuple[Tuple[Column, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.sizes) - 1

    def boundary_squared_vanishes(self) -> bool:
        """Check that every composite boundary map is exactly zero."""
        for i in range(1, len(self.boundaries)):
            lower = self.boundaries[i - 1]
            for column in self.boundaries[i]:
                image: Dict[int, int] = {}
                for row, value in column.items():
                    for target, inner in lower[row].items():
                        image[target] = image.get(target, 0) + value * inner
                if any(image.values()):
                    return False
        return True


@dataclass(frozen=True)
class BettiVector:
    """Reduced rational Betti numbers b~_0, ..., b~_dim.

    Attributes:
        values: The Betti numbers
        empty: True for the empty complex, whose only reduced homology
            sits in degree -1
    """

    values: Tuple[int, ...]
    empty: bool = False

    def __getitem__(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic sum (-1)^i b~_i."""
        chi = sum((-1) ** i * b for i, b in enumerate(self.values))
        return chi - 1 if self.empty else chi

    def nonzero(self) -> Dict[int, int]:
        return {i: b for i, b in enumerate(self.values) if b}


def chain_complex(complex_: SimplicialComplexAbstract) -> ChainComplexQ:
    """Build the augmented boundary matrices of ``complex_``.

    The k-th vertex deleted from a simplex contributes with sign (-1)^k.
    """
    index: List[Dict[Tuple[int, ...], int]] = [
        {s: i for i, s in enumerate(level)} for level in complex_.simplices
    ]
    boundaries: List[Tuple[Column, ...]] = []
    for dim, level in enumerate(complex_.simplices):
        if dim == 0:
            boundaries.append(tuple({0: 1} for _ in level))
            continue
        faces = index[dim - 1]
        columns = []
        for simplex in level:
            column = {
                faces[simplex[:k] + simplex[k + 1:]]: (-1) ** k for k in range(len(simplex))
            }
            columns.append(column)
        boundaries.append(tuple(columns))
    return ChainComplexQ(tuple(complex_.f_vector()), tuple(boundaries))


def _primitive(column: Column) -> Column:
    content = reduce(gcd, column.values())
    if column[max(column)] < 0:
        content = -content
    return {row: value // content for row, value in column.items()}


def reduce_columns(
    columns: Iterable[Column], cleared: Optional[Set[int]] = None
) -> Tuple[int, Set[int]]:
    """Column-reduce a sparse integer matrix.

    Args:
        columns: Columns as ``{row: value}``
        cleared: Column indices known to reduce to zero; they are skipped

    Returns:
        (rank, pivot rows)
    """
    cleared = cleared or set()
    pivots: Dict[int, Column] = {}
    for j, original in enumerate(columns):
        if j in cleared or not original:
            continue
        column = _primitive(dict(original))
        while column:
            low = max(column)
            other = pivots.get(low)
            if other is None:
                pivots[low] = column
                break
            a, b = column[low], other[low]
            merged: Column = {}
            for row in column.keys() | other.keys():
                value = b * column.get(row, 0) - a * other.get(row, 0)
                if value:
                    merged[row] = value
            column = _primitive(merged) if merged else merged
    return len(pivots), set(pivots)


def boundary_ranks(chains: ChainComplexQ) -> List[int]:
    """Return rank of every boundary map, reducing with clearing from the top down."""
    ranks = [0] * len(chains.boundaries)
    cleared: Set[int] = set()
    for i in range(len(chains.boundaries) - 1, -1, -1):
        ranks[i], cleared = reduce_columns(chains.boundaries[i], cleared)
    return ranks


def reduced_betti(complex_: SimplicialComplexAbstract) -> BettiVector:
    """Return the reduced rational Betti numbers of ``complex_``.

    b~_i = (number of i-simplices - rank d_i) - rank d_{i+1}, with d_0 the
    augmentation.
    """
    if complex_.dim < 0:
        return BettiVector((), empty=True)
    chains = chain_complex(complex_)
    ranks = boundary_ranks(chains) + [0]
    values = tuple(chains.sizes[i] - ranks[i] - ranks[i + 1] for i in range(len(chains.sizes)))
    logger.debug(f"Reduced Betti numbers {values} for f-vector {list(chains.sizes)}")
    return BettiVector(values)


def is_t_acyclic(betti: BettiVector, t: int) -> bool:
    """Return True iff b~_i = 0 for all 0 <= i <= t (vacuously true for t < 0)."""
    return all(betti[i] == 0 for i in range(0, t + 1))
