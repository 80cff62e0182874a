"""Small dense exact linear algebra over Q(i) (or any commutative ring).

Matrices are lists of lists.  The generic helpers only use +, * and ==,
so they work verbatim for GaussianRational entries and for symbolic
trigonometric-polynomial entries.  The solver is Q(i)-specific.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .scalars import GR, ZERO


def mat_zero(rows: int, cols: int, zero=ZERO) -> list:
    return [[zero for _ in range(cols)] for _ in range(rows)]


def mat_identity(n: int, one=GR(1), zero=ZERO) -> list:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_add(a: list, b: list) -> list:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: list, b: list) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: list) -> list:
    return [[c * x for x in row] for row in a]


def mat_mul(a: list, b: list) -> list:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        arow = a[i]
        orow = []
        for j in range(cols):
            acc = arow[0] * b[0][j]
            for k in range(1, inner):
                acc = acc + arow[k] * b[k][j]
            orow.append(acc)
        out.append(orow)
    return out


def mat_commutator(a: list, b: list) -> list:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_trace(a: list):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def mat_eq(a: list, b: list) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a: list) -> bool:
    return all(not x for row in a for x in row)


def solve_exact(
    columns: Sequence[Sequence[GR]], rhs: Sequence[GR]
) -> Tuple[Optional[List[GR]], int, bool]:
    """Solve sum_j x_j * columns[j] = rhs exactly over Q(i).

    Returns (solution, rank, consistent).  When the system is consistent
    but underdetermined, solution is None and rank < len(columns); free
    variables are not chosen silently because charge measurements must
    never invent a split the data cannot see.
    """
    ncols = len(columns)
    nrows = len(rhs)
    aug = [[GR.of(columns[j][i]) for j in range(ncols)] + [GR.of(rhs[i])]
           for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    consistent = all(not row[ncols] for row in aug[r:])
    if not consistent:
        return None, r, False
    if r < ncols:
        return None, r, True
    sol = [ZERO] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol, r, True
