"""
Exact linear algebra over a prime field F_p.

Matrices are 2-D ``galois`` field arrays (``Mat``); vectors are 1-D field arrays.
Elimination is delegated to ``FieldArray.row_reduce``; the reduced row echelon
form is unique, so every basis returned here is reproducible across runs.
Products and Kronecker products run on the int64 residues and are reduced
afterwards, which keeps empty shapes well defined.
"""
import functools
import logging

import galois
import numpy as np
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

logger = logging.getLogger(__name__)

Mat = galois.FieldArray

# Largest prime whose residue products can be summed in int64 without overflow
# for the matrix sizes met here.
INT64_SAFE_PRIME = 2 ** 26


@functools.lru_cache(maxsize=None)
def _galois_field(prime):
    if prime < 2 or not galois.is_prime(prime):
        raise ImproperlyConfigured(f"Field characteristic must be a prime, got {prime}")
    logger.debug("Building GF(%d)", prime)
    return galois.GF(prime)


def prime_field(prime=None):
    """Field class of F_p; p defaults to settings.FIELD_PRIME."""
    return _galois_field(int(prime if prime is not None else settings.FIELD_PRIME))


def ints(A):
    return A.view(np.ndarray).astype(np.int64, copy=False)


def wrap(field, data):
    """Reduce an integer array modulo p and return it as a field array."""
    arr = np.mod(np.asarray(data, dtype=np.int64), field.order)
    return field(arr, dtype=np.int64)


def matrix(field, rows, shape=None):
    arr = np.asarray(rows, dtype=np.int64)
    if shape is not None:
        arr = arr.reshape(shape)
    elif arr.ndim != 2:
        arr = arr.reshape(len(rows), -1) if len(rows) else arr.reshape(0, 0)
    return wrap(field, arr)


def vector(field, entries):
    return wrap(field, np.asarray(entries, dtype=np.int64).reshape(-1))


def zeros(field, rows, cols):
    return field.Zeros((rows, cols), dtype=np.int64)


def identity(field, n):
    return wrap(field, np.eye(n, dtype=np.int64))


def is_zero(A):
    return not np.any(A.view(np.ndarray))


def mul(A, B):
    field = type(A)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"Cannot multiply {A.shape} by {B.shape}")
    if field.order < INT64_SAFE_PRIME:
        return wrap(field, ints(A) @ ints(B))
    if 0 in A.shape or 0 in B.shape:
        return zeros(field, A.shape[0], B.shape[1])
    return A @ B


def add(A, B):
    return wrap(type(A), ints(A) + ints(B))


def sub(A, B):
    return wrap(type(A), ints(A) - ints(B))


def scale(c, A):
    return wrap(type(A), int(c) * ints(A))


def kron(A, B):
    return wrap(type(A), np.kron(ints(A), ints(B)))


def hstack(field, blocks, rows):
    blocks = [ints(b) for b in blocks]
    if not blocks:
        return zeros(field, rows, 0)
    return wrap(field, np.hstack(blocks))


def vstack(field, blocks, cols):
    blocks = [ints(b) for b in blocks]
    if not blocks:
        return zeros(field, 0, cols)
    return wrap(field, np.vstack(blocks))


def block_diag(field, blocks):
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = ints(b)
        r += b.shape[0]
        c += b.shape[1]
    return wrap(field, out)


def rref(A):
    """Reduced row echelon form of A and the list of its pivot columns."""
    rows, cols = A.shape
    if rows == 0 or cols == 0:
        return A.copy(), []
    R = A.row_reduce()
    pivots = []
    for row in ints(R):
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            break
        pivots.append(int(nonzero[0]))
    return R, pivots


def rank(A):
    return len(rref(A)[1])


def kernel_matrix(A):
    """Matrix whose columns form a basis of {x : Ax = 0}."""
    field = type(A)
    rows, cols = A.shape
    R, pivots = rref(A)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((cols, len(free)), dtype=np.int64)
    if free:
        K[free, range(len(free))] = 1
        if pivots:
            K[pivots, :] = -ints(R)[:len(pivots)][:, free]
    return wrap(field, K)


def kernel_basis(A):
    K = kernel_matrix(A)
    return [K[:, j] for j in range(K.shape[1])]


def solve(A, b):
    """Some x with Ax = b (free variables zero), or None when inconsistent."""
    field = type(A)
    rows, cols = A.shape
    if len(b) != rows:
        raise ValueError(f"Right-hand side has length {len(b)}, expected {rows}")
    augmented = hstack(field, [A, b.reshape(-1, 1)], rows)
    R, pivots = rref(augmented)
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = ints(R)[r, cols]
    return wrap(field, x)


def column_basis(A):
    """Columns of A at its pivot positions: a basis of the column space."""
    _, pivots = rref(A)
    return A[:, pivots]


def complement_coordinates(S, dim):
    """Coordinates c such that the columns of S plus the unit vectors e_c form a basis."""
    if S.shape[1] == 0:
        return list(range(dim))
    _, pivots = rref(S.T)
    taken = set(pivots)
    return [c for c in range(dim) if c not in taken]


def express(B, V):
    """Solve B X = V for B of full column rank; every column of V must lie in span B."""
    field = type(B)
    n, r = B.shape
    m = V.shape[1]
    if r == 0:
        if not is_zero(V):
            raise ValueError("Vectors do not lie in the zero subspace")
        return zeros(field, 0, m)
    R, pivots = rref(hstack(field, [B, V], n))
    if pivots[:r] != list(range(r)) or len(pivots) > r:
        raise ValueError("Vectors do not lie in the span of the given basis")
    return R[:r, r:]


def quotient_projection(S, dim):
    """
    Projection of F_p^dim onto a complement of the column space of S.

    Returns (Q, C): C is the list of complement coordinates and Q is the
    len(C) x dim matrix sending a vector to its C-coordinates in the basis
    [basis of S | e_C]. Q kills exactly span S.
    """
    field = type(S)
    basis = column_basis(S) if S.shape[1] else zeros(field, dim, 0)
    C = complement_coordinates(basis, dim)
    full = hstack(field, [basis, identity(field, dim)[:, C]], dim)
    R, _ = rref(hstack(field, [full, identity(field, dim)], dim))
    inverse = R[:, dim:]
    return inverse[basis.shape[1]:, :], C


def right_inverse(P):
    """Some R with P R = I, for P of full row rank."""
    field = type(P)
    rows, cols = P.shape
    columns = []
    for j in range(rows):
        x = solve(P, identity(field, rows)[:, j])
        if x is None:
            raise ValueError("Matrix does not have full row rank")
        columns.append(x.reshape(-1, 1))
    return hstack(field, columns, cols)


def quotient_dim(U, V):
    """dim span(U) - dim span(V), checking span(V) is inside span(U)."""
    if not U and not V:
        return 0
    field = type((U or V)[0])
    length = len((U or V)[0])
    u = hstack(field, [x.reshape(-1, 1) for x in U], length)
    v = hstack(field, [x.reshape(-1, 1) for x in V], length)
    rank_u = rank(u)
    if rank(hstack(field, [u, v], length)) != rank_u:
        raise ValueError("span(V) is not contained in span(U)")
    return rank_u - rank(v)


def to_lists(A):
    return ints(A).tolist()
