"""Exact rational linear algebra on top of sympy's DomainMatrix.

Matrices are passed around as sparse row dictionaries ``{row: {col: value}}``
with ``int`` or ``Fraction`` entries. Every rank is computed exactly: rows are
cleared of denominators and reduced by fraction-free elimination over ZZ.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ..utils.config import get_settings

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
SparseRows = Mapping[int, Mapping[int, Rational]]


def _qq(value: Rational):
    if isinstance(value, int):
        return QQ(value)
    return QQ(int(value.numerator), int(value.denominator))


def integer_matrix(entries: SparseRows, shape: Tuple[int, int]) -> DomainMatrix:
    """Build a ZZ matrix whose rows are the given rows with denominators cleared.

    Scaling a row by a nonzero integer changes neither the rank nor the
    kernel, so the result is interchangeable with the rational input for
    both questions.
    """
    dod: Dict[int, Dict[int, object]] = {}
    for i, row in entries.items():
        cleaned = {j: _qq(v) for j, v in row.items() if v != 0}
        if cleaned:
            dod[i] = cleaned
    matrix = DomainMatrix(dod, shape, QQ)
    if dod:
        _, matrix = matrix.clear_denoms_rowwise(convert=True)
    else:
        matrix = matrix.convert_to(ZZ)

    rows, cols = shape
    nnz = sum(len(row) for row in dod.values())
    if rows and cols and nnz / (rows * cols) > get_settings().dense_threshold:
        matrix = matrix.to_dense()
    return matrix


def sparse_rank(entries: SparseRows, shape: Tuple[int, int]) -> int:
    """Return the exact rank of a sparse rational matrix."""
    rows, cols = shape
    if rows == 0 or cols == 0 or not any(entries.values()):
        return 0
    matrix = integer_matrix(entries, shape)
    _, _, pivots = matrix.rref_den(method=get_settings().rank_method)
    logger.debug(f"Rank of {rows}x{cols} matrix: {len(pivots)}")
    return len(pivots)


def sparse_nullspace(entries: SparseRows, shape: Tuple[int, int]) -> List[Dict[int, int]]:
    """Return an integer basis of the right kernel, one sparse vector per basis element."""
    rows, cols = shape
    if rows == 0 or not any(entries.values()):
        return [{j: 1} for j in range(cols)]
    matrix = integer_matrix(entries, shape)
    kernel_matrix = matrix.nullspace()
    kernel = kernel_matrix.to_sparse().to_dod()
    return [
        {j: int(v) for j, v in kernel.get(i, {}).items()} for i in range(kernel_matrix.shape[0])
    ]


def rank_of_vectors(vectors: Sequence[Sequence[Rational]]) -> int:
    """Return the dimension of the rational span of ``vectors``."""
    if not vectors:
        return 0
    entries = {i: {j: v for j, v in enumerate(vec) if v} for i, vec in enumerate(vectors)}
    return sparse_rank(entries, (len(vectors), len(vectors[0])))


def kernel_of_columns(vectors: Sequence[Sequence[int]]) -> List[List[int]]:
    """Return an integer basis of linear relations ``sum c_i v_i = 0``."""
    if not vectors:
        return []
    width = len(vectors[0])
    entries = {
        r: {c: vec[r] for c, vec in enumerate(vectors) if vec[r]} for r in range(width)
    }
    basis = sparse_nullspace(entries, (width, len(vectors)))
    return [[vec.get(c, 0) for c in range(len(vectors))] for vec in basis]


def collinear_scalar(u: Sequence[int], v: Sequence[int]) -> Optional[Fraction]:
    """Return ``c`` with ``u = c * v`` exactly, or None if no such scalar exists.

    Args:
        u: Integer vector to test
        v: Nonzero integer vector

    Returns:
        The rational scalar, or None when ``u`` is not a multiple of ``v``
    """
    pivot = next(i for i, x in enumerate(v) if x != 0)
    c = Fraction(u[pivot], v[pivot])
    if all(c * b == a for a, b in zip(u, v)):
        return c
    return None
