"""Dense matrix helpers over RatFunc: plain lists of lists, pure functions.

Nothing here mutates its arguments; elimination-based routines (rank, det,
inverse) rely on exact field division so there is no pivoting subtlety.
"""

from __future__ import annotations

from .ratfield import RatFunc


def zeros(r: int, c: int):
    z = RatFunc.zero()
    return [[z for _ in range(c)] for _ in range(r)]


def identity(n: int):
    z = RatFunc.zero()
    o = RatFunc.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def shape(A) -> tuple[int, int]:
    return len(A), len(A[0]) if A else 0


def add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def neg(A):
    return [[-a for a in row] for row in A]


def scale(A, s):
    return [[a * s for a in row] for row in A]


def mul(A, B):
    rows, inner = shape(A)
    inner2, cols = shape(B)
    if inner != inner2:
        raise ValueError(f"shape mismatch: {rows}x{inner} times {inner2}x{cols}")
    Bt = list(zip(*B))
    out = []
    for ra in A:
        row = []
        for cb in Bt:
            acc = RatFunc.zero()
            for a, b in zip(ra, cb):
                if a.is_zero or b.is_zero:
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def transpose(A):
    return [list(row) for row in zip(*A)]


def deriv(A, var: str):
    return [[a.deriv(var) for a in row] for row in A]


def eq(A, B) -> bool:
    if shape(A) != shape(B):
        return False
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_zero(A) -> bool:
    return all(a.is_zero for row in A for a in row)


def is_constant(A) -> bool:
    return all(a.is_constant for row in A for a in row)


def kron(A, B):
    ra, ca = shape(A)
    rb, cb = shape(B)
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            a = A[i][j]
            if a.is_zero:
                continue
            for k in range(rb):
                for l in range(cb):
                    b = B[k][l]
                    if not b.is_zero:
                        out[i * rb + k][j * cb + l] = a * b
    return out


def block(rows):
    """Assemble a matrix from a grid of equally-shaped-per-row/col blocks."""
    out = []
    for brow in rows:
        height = len(brow[0])
        for i in range(height):
            line = []
            for blk in brow:
                line.extend(blk[i])
            out.append(line)
    return out


def rank(A) -> int:
    rows, cols = shape(A)
    M = [list(row) for row in A]
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not M[i][c].is_zero), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = RatFunc.one() / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(rows):
            if i != r and not M[i][c].is_zero:
                f = M[i][c]
                M[i] = [v - f * w for v, w in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


def det(A) -> RatFunc:
    rows, cols = shape(A)
    if rows != cols:
        raise ValueError("determinant of a non-square matrix")
    M = [list(row) for row in A]
    result = RatFunc.one()
    for c in range(cols):
        pivot = next((i for i in range(c, rows) if not M[i][c].is_zero), None)
        if pivot is None:
            return RatFunc.zero()
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            result = -result
        result = result * M[c][c]
        inv = RatFunc.one() / M[c][c]
        for i in range(c + 1, rows):
            if not M[i][c].is_zero:
                f = M[i][c] * inv
                M[i] = [v - f * w for v, w in zip(M[i], M[c])]
    return result


def inverse(A):
    rows, cols = shape(A)
    if rows != cols:
        raise ValueError("inverse of a non-square matrix")
    M = [list(row) + list(irow) for row, irow in zip(A, identity(rows))]
    for c in range(cols):
        pivot = next((i for i in range(c, rows) if not M[i][c].is_zero), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        M[c], M[pivot] = M[pivot], M[c]
        inv = RatFunc.one() / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for i in range(rows):
            if i != c and not M[i][c].is_zero:
                f = M[i][c]
                M[i] = [v - f * w for v, w in zip(M[i], M[c])]
    return [row[cols:] for row in M]
