"""
Exact Linear Algebra over Q and Z/p
===================================

Row reduction, rank, null spaces and linear solves over the coefficient fields
the toolkit supports. Rational arrays hold ``fractions.Fraction`` objects;
prime-field arrays hold int64 residues in ``[0, p)``. Keeping ``p < 2**31``
guarantees a product of two residues fits in int64 before reduction.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import isprime

MAX_PRIME = 2 ** 31

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, otherwise Z/p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0:
            if p >= MAX_PRIME:
                raise ValueError(f"prime {p} must be below 2**31")
            if not isprime(p):
                raise ValueError(f"field characteristic {p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def label(self) -> str:
        return "q" if self.is_rational else f"fp:{self.characteristic}"

    @property
    def dtype(self) -> Any:
        return object if self.is_rational else np.int64

    def element(self, value: Scalar) -> Scalar:
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.characteristic)) % self.characteristic
        return int(value) % self.characteristic

    def inverse(self, value: Scalar) -> Scalar:
        if value == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.is_rational:
            return 1 / Fraction(value)
        return pow(int(value), -1, self.characteristic)

    def negate(self, value: Scalar) -> Scalar:
        if self.is_rational:
            return -value
        return (-int(value)) % self.characteristic

    def reduce(self, array: np.ndarray) -> np.ndarray:
        if self.is_rational:
            return array
        return array % self.characteristic

    def zeros(self, shape: Union[int, Tuple[int, ...]]) -> np.ndarray:
        if self.is_rational:
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=np.int64)

    def format(self, value: Scalar) -> Union[int, str]:
        """JSON-friendly form: ints stay ints, non-integral rationals become 'a/b'."""
        if self.is_rational:
            value = Fraction(value)
            return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        return int(value)

    def parse(self, value: Union[int, str]) -> Scalar:
        return self.element(Fraction(value) if isinstance(value, str) else value)

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"Z/{self.characteristic}"


RATIONALS = FieldSpec(0)


def prime_field(p: int) -> FieldSpec:
    """Return Z/p, validating that ``p`` is a prime below 2**31."""
    if p < 2:
        raise ValueError(f"field characteristic must be a prime, got {p}")
    return FieldSpec(p)


def parse_field(text: str) -> FieldSpec:
    """Parse a field spec: ``q`` for the rationals or ``fp:<prime>``.

    Raises:
        ValueError: If the text is not a recognised field spec
    """
    spec = text.strip().lower()
    if spec == "q":
        return RATIONALS
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"unknown field spec {text!r}: expected fp:<prime>") from None
        return prime_field(p)
    raise ValueError(f"unknown field spec {text!r}: expected 'q' or 'fp:<prime>'")


def coerce(matrix: Any, field: FieldSpec) -> np.ndarray:
    """Copy ``matrix`` into a fresh array of field elements."""
    source = np.asarray(matrix, dtype=object)
    if field.is_rational:
        out = np.empty(source.shape, dtype=object)
        out.flat[:] = [Fraction(x) for x in source.flat]
        return out
    p = field.characteristic
    values = [field.element(x) if isinstance(x, Fraction) else int(x) % p for x in source.flat]
    return np.array(values, dtype=np.int64).reshape(source.shape)


def rref(matrix: Any, field: FieldSpec) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form.

    Args:
        matrix: 2-D array-like of integers or field elements
        field: Coefficient field

    Returns:
        (R, pivot_columns)
    """
    A = coerce(matrix, field)
    rows, cols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c] != 0)[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = field.reduce(A[r] * field.inverse(A[r, c]))
        others = np.nonzero(A[:, c] != 0)[0]
        others = others[others != r]
        if others.size:
            A[others] = field.reduce(A[others] - np.outer(A[others, c], A[r]))
        pivots.append(c)
        r += 1
    return A, pivots


def _integer_rank(matrix: np.ndarray) -> int:
    # Fraction-free elimination; rows are divided by their content to keep
    # entries small.
    A = np.array(matrix, dtype=np.int64).astype(object)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c] != 0)[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        below = np.nonzero(A[r + 1:, c] != 0)[0] + r + 1
        if below.size:
            A[below] = A[below] * A[r, c] - np.outer(A[below, c], A[r])
            for i in below:
                g = reduce(math.gcd, A[i].tolist(), 0)
                if g > 1:
                    A[i] = A[i] // g
        r += 1
    return r


def rank(matrix: Any, field: FieldSpec) -> int:
    A = np.asarray(matrix)
    if A.size == 0:
        return 0
    if field.is_rational and A.dtype.kind in "iu":
        return _integer_rank(A)
    return len(rref(A, field)[1])


def nullspace(matrix: Any, field: FieldSpec) -> np.ndarray:
    """Right null space of ``matrix``; the columns of the result form a basis."""
    A = np.asarray(matrix)
    cols = A.shape[1]
    if A.shape[0] == 0:
        basis = field.zeros((cols, cols))
        for j in range(cols):
            basis[j, j] = field.element(1)
        return basis
    R, pivots = rref(A, field)
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    basis = field.zeros((cols, len(free)))
    for k, f in enumerate(free):
        basis[f, k] = field.element(1)
        for row, pc in enumerate(pivots):
            basis[pc, k] = field.negate(R[row, f])
    return basis


def solve(matrix: Any, rhs: Sequence[Any], field: FieldSpec) -> Optional[np.ndarray]:
    """Return one solution of ``A x = b`` (free variables zero), or None."""
    A = coerce(matrix, field)
    b = coerce(np.asarray(rhs, dtype=object).reshape(-1, 1), field)
    rows, cols = A.shape
    if rows == 0:
        return field.zeros(cols)
    R, pivots = rref(np.hstack([A, b]), field)
    if pivots and pivots[-1] == cols:
        return None
    x = field.zeros(cols)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, cols]
    return x


def independent_columns(matrix: Any, field: FieldSpec) -> List[int]:
    """Indices of the leftmost maximal set of linearly independent columns."""
    A = np.asarray(matrix)
    if A.size == 0:
        return []
    return rref(A, field)[1]


def matmul(left: Any, right: Any, field: FieldSpec) -> np.ndarray:
    # object matmul avoids int64 overflow in the accumulated sums
    product = np.asarray(left, dtype=object) @ np.asarray(right, dtype=object)
    return coerce(product, field)


def is_zero(vector: Any) -> bool:
    return not np.any(np.asarray(vector) != 0)
