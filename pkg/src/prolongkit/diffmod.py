"""Differential modules over Q(x, t) and their prolongation calculus.

A module of dimension n is encoded by its n x n system matrix A: writing the
action on basis vectors as d_x e_j = -sum_i A[i][j] e_i, the coordinate
vector a of a horizontal element satisfies d_x a = A a.  Under this sign
convention a matrix P is (the coordinate matrix of) a morphism from a module
with matrix A to one with matrix B exactly when

    d_x P = B P - P A,

which is what is_morphism checks.  Three prolongation shapes appear:

  prolong        block (r, c) = C(r, c) * d_t^(r-c) A          (binomial)
  prolong_lemma  block (r, c) = C(i-c, r-c) * d_t^(r-c) A      (one-step form,
                 basis ordered highest t-derivative first)
  iterate_F      k-fold iteration of B -> [[B, 0], [B_t, B]],  dimension 2^k n

The two order-i shapes are conjugate by the constant upper-triangular matrix
of change_basis_matrix, and the order-2 one-step shape embeds into the
twice-iterated shape through the constant map of embedding_E.
"""

from __future__ import annotations

import math

from . import matrices as mat
from .ratfield import Fraction, RatFunc


class DiffModule:
    """Finite-dimensional differential module, presented by its matrix."""

    __slots__ = ("n", "A", "basis_labels", "name")

    def __init__(self, A, basis_labels=None, name=None):
        n = len(A)
        if n == 0 or any(len(row) != n for row in A):
            raise ValueError("module matrix must be square and nonempty")
        if basis_labels is not None:
            basis_labels = tuple(basis_labels)
            if len(basis_labels) != n:
                raise ValueError("one basis label per dimension")
        self.n = n
        self.A = [list(row) for row in A]
        self.basis_labels = basis_labels
        self.name = name

    def __eq__(self, other) -> bool:
        if isinstance(other, DiffModule):
            return self.n == other.n and mat.eq(self.A, other.A)
        return NotImplemented

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<DiffModule{tag} n={self.n}>"


def trivial_module() -> DiffModule:
    """The one-dimensional module with zero action."""
    return DiffModule([[RatFunc.zero()]])


class ModuleMorphism:
    """A matrix P with d_x P = dst.A P - P src.A; checked at construction."""

    __slots__ = ("src", "dst", "P")

    def __init__(self, src: DiffModule, dst: DiffModule, P):
        if not is_morphism(P, src, dst):
            raise ValueError("matrix does not satisfy the morphism condition")
        self.src = src
        self.dst = dst
        self.P = [list(row) for row in P]

    def __repr__(self) -> str:
        return f"<ModuleMorphism {self.src.n} -> {self.dst.n}>"


def is_morphism(P, src: DiffModule, dst: DiffModule) -> bool:
    """Does P define a morphism src -> dst of differential modules?"""
    rows, cols = mat.shape(P)
    if rows != dst.n or cols != src.n:
        raise ValueError(
            f"morphism matrix must be {dst.n}x{src.n}, got {rows}x{cols}")
    lhs = mat.deriv(P, "x")
    rhs = mat.sub(mat.mul(dst.A, P), mat.mul(P, src.A))
    return mat.eq(lhs, rhs)


# prolongation shapes ------------------------------------------------------

def _t_derivatives(A, i: int):
    out = [A]
    for _ in range(i):
        out.append(mat.deriv(out[-1], "t"))
    return out


def prolong(M: DiffModule, i: int) -> DiffModule:
    """Order-i prolongation with binomial weights.

    Block (r, c) of the (i+1)n x (i+1)n result is C(r, c) * d_t^(r-c) A;
    i = 0 returns a copy of M's matrix.
    """
    if i < 0:
        raise ValueError("prolongation order must be >= 0")
    n = M.n
    As = _t_derivatives(M.A, i)
    rows = []
    for r in range(i + 1):
        brow = []
        for c in range(i + 1):
            if c > r:
                brow.append(mat.zeros(n, n))
            else:
                w = math.comb(r, c)
                blk = As[r - c]
                brow.append(blk if w == 1 else mat.scale(blk, RatFunc.from_int(w)))
        rows.append(brow)
    return DiffModule(mat.block(rows))


def prolong_lemma(M: DiffModule, i: int) -> DiffModule:
    """Order-i prolongation in the one-step (highest derivative first) basis.

    Block (r, c) is C(i-c, r-c) * d_t^(r-c) A, so the first column carries
    C(i, 1) A_t, C(i, 2) A_tt, ...
    """
    if i < 0:
        raise ValueError("prolongation order must be >= 0")
    n = M.n
    As = _t_derivatives(M.A, i)
    rows = []
    for r in range(i + 1):
        brow = []
        for c in range(i + 1):
            w = math.comb(i - c, r - c) if r >= c else 0
            if w == 0:
                brow.append(mat.zeros(n, n))
            else:
                blk = As[r - c]
                brow.append(blk if w == 1 else mat.scale(blk, RatFunc.from_int(w)))
        rows.append(brow)
    return DiffModule(mat.block(rows))


def change_basis_matrix(n: int, i: int):
    """Constant invertible C with conjugate_constant(prolong_lemma(M, i), C)
    equal to prolong(M, i).

    Block (p, q) is binom(i - q + p, p) * I_n for p <= q, zero below the
    diagonal; the diagonal blocks binom(i, p) * I_n make det(C) nonzero.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    rows = []
    for p in range(i + 1):
        brow = []
        for q in range(i + 1):
            w = math.comb(i - q + p, p) if q >= p else 0
            if w == 0:
                brow.append(mat.zeros(n, n))
            else:
                blk = mat.identity(n)
                brow.append(blk if w == 1 else mat.scale(blk, RatFunc.from_int(w)))
        rows.append(brow)
    return mat.block(rows)


def conjugate_constant(M: DiffModule, C) -> DiffModule:
    """Rewrite M in the basis transformed by the constant matrix C.

    The system matrix becomes (C^T)^(-1) A C^T.  C must be constant (both
    derivatives zero entrywise) and invertible.
    """
    rows, cols = mat.shape(C)
    if rows != M.n or cols != M.n:
        raise ValueError(f"change of basis must be {M.n}x{M.n}")
    if not mat.is_constant(C):
        raise ValueError("change of basis matrix must be constant")
    Ct = mat.transpose(C)
    Ct_inv = mat.inverse(Ct)  # raises ValueError when singular
    return DiffModule(mat.mul(Ct_inv, mat.mul(M.A, Ct)))


def iterate_F(M: DiffModule, k: int) -> DiffModule:
    """k-fold first prolongation: B -> [[B, 0], [B_t, B]], dimension 2^k n."""
    if k < 0:
        raise ValueError("iteration count must be >= 0")
    B = M.A
    for _ in range(k):
        n = len(B)
        B = mat.block([[B, mat.zeros(n, n)], [mat.deriv(B, "t"), B]])
    return DiffModule(B)


def embedding_E(M: DiffModule) -> ModuleMorphism:
    """Constant embedding of the order-2 one-step prolongation into the
    twice-iterated first prolongation.

    Rows follow the iterated basis (dd, d1, 1d, 11 blocks), columns the
    one-step basis (second derivative first); the middle column splits
    evenly over the two mixed blocks, giving rank 3n.
    """
    n = M.n
    I = mat.identity(n)
    H = mat.scale(I, RatFunc.from_fraction(Fraction(1, 2)))
    Z = mat.zeros(n, n)
    P = mat.block([
        [I, Z, Z],
        [Z, H, Z],
        [Z, H, Z],
        [Z, Z, I],
    ])
    return ModuleMorphism(prolong_lemma(M, 2), iterate_F(M, 2), P)


# binary constructions -----------------------------------------------------

def tensor(M: DiffModule, N: DiffModule) -> DiffModule:
    """Tensor product; matrix A (x) I + I (x) B on the row-major paired basis."""
    A = mat.kron(M.A, mat.identity(N.n))
    B = mat.kron(mat.identity(M.n), N.A)
    return DiffModule(mat.add(A, B))


def dsum(M: DiffModule, N: DiffModule) -> DiffModule:
    """Direct sum; block-diagonal matrix."""
    return DiffModule(mat.block([
        [M.A, mat.zeros(M.n, N.n)],
        [mat.zeros(N.n, M.n), N.A],
    ]))


def dual(M: DiffModule) -> DiffModule:
    """Dual module; matrix -A^T on the dual basis."""
    return DiffModule(mat.neg(mat.transpose(M.A)))


def dual_morphism(phi: ModuleMorphism) -> ModuleMorphism:
    """Transpose of a morphism, running between the duals in reverse."""
    return ModuleMorphism(dual(phi.dst), dual(phi.src), mat.transpose(phi.P))


# structure maps of the first prolongation ---------------------------------

def inclusion_i(M: DiffModule) -> ModuleMorphism:
    """M -> prolong(M, 1), hitting the order-0 coordinates (the last block)."""
    n = M.n
    P = mat.block([[mat.zeros(n, n)], [mat.identity(n)]])
    return ModuleMorphism(M, prolong(M, 1), P)


def projection_phi(M: DiffModule) -> ModuleMorphism:
    """prolong(M, 1) -> M, reading off the order-1 coordinates (first block)."""
    n = M.n
    P = mat.block([[mat.identity(n), mat.zeros(n, n)]])
    return ModuleMorphism(prolong(M, 1), M, P)


def product_rule_map(M: DiffModule, N: DiffModule) -> ModuleMorphism:
    """prolong(M (x) N, 1) -> prolong(M, 1) (x) prolong(N, 1).

    The order-0 slot of the source lands once in each mixed slot of the
    target (the product rule read backwards) and the derivative slot in the
    derivative-derivative slot.  The target basis is Kronecker-ordered, so
    the four slots are interleaved rather than contiguous; the constant
    matrix has rank 2 * dim(M) * dim(N).
    """
    n, m = M.n, N.n
    nm = n * m
    one = RatFunc.from_int(1)
    P = mat.zeros(4 * nm, 2 * nm)
    for i in range(n):
        for j in range(m):
            src0 = i * m + j
            src1 = nm + src0
            for a in (0, 1):
                for b in (0, 1):
                    row = (a * n + i) * 2 * m + b * m + j
                    if a != b:
                        P[row][src0] = one
                    elif a == 1:
                        P[row][src1] = one
    return ModuleMorphism(prolong(tensor(M, N), 1),
                          tensor(prolong(M, 1), prolong(N, 1)), P)


def dual_swap_g(M: DiffModule) -> ModuleMorphism:
    """prolong(dual(M), 1) -> dual(prolong(M, 1)), swapping the two blocks.

    An isomorphism (the matrix is a block permutation) that matches the
    projection of the dual with the dual of the inclusion and vice versa.
    """
    n = M.n
    I = mat.identity(n)
    Z = mat.zeros(n, n)
    P = mat.block([
        [Z, I],
        [I, Z],
    ])
    return ModuleMorphism(prolong(dual(M), 1), dual(prolong(M, 1)), P)


def prolong_morphism(phi: ModuleMorphism, i: int) -> ModuleMorphism:
    """Functorial order-i prolongation of a morphism: block (r, c) is
    C(r, c) * d_t^(r-c) P, a morphism prolong(src, i) -> prolong(dst, i)."""
    if i < 0:
        raise ValueError("prolongation order must be >= 0")
    Ps = [phi.P]
    for _ in range(i):
        Ps.append(mat.deriv(Ps[-1], "t"))
    rows = []
    zr, zc = phi.dst.n, phi.src.n
    for r in range(i + 1):
        brow = []
        for c in range(i + 1):
            if c > r:
                brow.append(mat.zeros(zr, zc))
            else:
                w = math.comb(r, c)
                blk = Ps[r - c]
                brow.append(blk if w == 1 else mat.scale(blk, RatFunc.from_int(w)))
        rows.append(brow)
    return ModuleMorphism(prolong(phi.src, i), prolong(phi.dst, i),
                          mat.block(rows))
