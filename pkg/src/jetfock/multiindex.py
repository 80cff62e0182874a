"""Multi-index combinatorics for jet derivatives.

A multi-index is an N-tuple of non-negative integers m = (m_0..m_{N-1})
indexing the mixed partial derivative d_0^{m_0}..d_{N-1}^{m_{N-1}}.
Multi-indices are represented as plain tuples of ints throughout.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Optional, Sequence, Tuple

MultiIndex = Tuple[int, ...]


def mi_zero(N: int) -> MultiIndex:
    return (0,) * N


def mi_unit(N: int, mu: int) -> MultiIndex:
    """Unit multi-index in the mu-th direction."""
    return tuple(1 if i == mu else 0 for i in range(N))


def mi_abs(m: Sequence[int]) -> int:
    return sum(m)


def mi_add(m: Sequence[int], n: Sequence[int]) -> MultiIndex:
    return tuple(a + b for a, b in zip(m, n))


def mi_sub(m: Sequence[int], n: Sequence[int]) -> Optional[MultiIndex]:
    """m - n componentwise, or None when any component would go negative."""
    out = []
    for a, b in zip(m, n):
        d = a - b
        if d < 0:
            return None
        out.append(d)
    return tuple(out)


def mi_leq(m: Sequence[int], n: Sequence[int]) -> bool:
    """Componentwise partial order m <= n."""
    return all(a <= b for a, b in zip(m, n))


def _compositions(total: int, parts: int) -> Iterator[MultiIndex]:
    """All tuples of `parts` non-negative ints summing to `total`, lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def multi_indices(N: int, p: int) -> list:
    """All multi-indices with |m| <= p, in graded lexicographic order.

    Grading is by |m|; within one grade the order is lexicographic with
    the first component most significant and descending (so (1,0) comes
    before (0,1)).  The order is stable and documented: every module that
    flattens jet components relies on it.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if p < 0:
        raise ValueError("p must be >= 0")
    out = []
    for grade in range(p + 1):
        out.extend(_compositions(grade, N))
    return out


def multi_binomial(n: Sequence[int], m: Sequence[int]) -> int:
    """Product of componentwise binomial coefficients n!/(m!(n-m)!).

    Zero when any component of m is negative or exceeds the matching
    component of n; this encodes the paper-standard convention that lets
    jet-matrix sums run over unrestricted index ranges.
    """
    out = 1
    for a, b in zip(n, m):
        if b < 0 or b > a:
            return 0
        out *= comb(a, b)
    return out


def count_multi_indices(N: int, p: int) -> int:
    """binom(N+p, p), the number of multi-indices with |m| <= p."""
    return comb(N + p, p)
