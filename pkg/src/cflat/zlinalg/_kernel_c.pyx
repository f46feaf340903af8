# cython: language_level=3, boundscheck=False, wraparound=False
"""Exact integer elimination kernels (compiled twin).

Same algorithms, pivot rules and scan order as ``_kernel_py``; entries
stay arbitrary-precision Python ints, only the loop dispatch is
compiled.  The two modules must produce bit-identical results.  Edit
both together.
"""

BACKEND_NAME = "c"


cdef void _swap_cols(list m, Py_ssize_t a, Py_ssize_t b):
    cdef list row
    for row in m:
        row[a], row[b] = row[b], row[a]


cdef void _negate_row(list m, Py_ssize_t i):
    cdef list row = m[i]
    cdef Py_ssize_t j
    for j in range(len(row)):
        row[j] = -row[j]


cdef void _row_sub(list m, Py_ssize_t i, Py_ssize_t t, object q):
    # row i -= q * row t
    cdef list ri = m[i]
    cdef list rt = m[t]
    cdef Py_ssize_t j
    for j in range(len(ri)):
        ri[j] -= q * rt[j]


cdef void _row_add(list m, Py_ssize_t t, Py_ssize_t i):
    # row t += row i
    cdef list rt = m[t]
    cdef list ri = m[i]
    cdef Py_ssize_t j
    for j in range(len(rt)):
        rt[j] += ri[j]


cdef void _col_sub(list m, Py_ssize_t j, Py_ssize_t t, object q):
    # col j -= q * col t
    cdef list row
    for row in m:
        row[j] -= q * row[t]


def snf_inplace(list d, list u, list v):
    """Reduce ``d`` to Smith normal form in place (see pure twin)."""
    cdef Py_ssize_t nr = len(d)
    cdef Py_ssize_t nc = len(d[0]) if nr else 0
    cdef Py_ssize_t limit = min(nr, nc)
    cdef Py_ssize_t t = 0
    cdef Py_ssize_t i, j, best_i, best_j
    cdef list di
    cdef object e, best, p, q
    cdef bint again, clean
    while t < limit:
        best_i = -1
        best_j = -1
        best = 0
        for i in range(t, nr):
            di = d[i]
            for j in range(t, nc):
                e = di[j]
                if e:
                    if e < 0:
                        e = -e
                    if best_i < 0 or e < best:
                        best = e
                        best_i = i
                        best_j = j
        if best_i < 0:
            break  # nothing nonzero left
        if best_i != t:
            d[t], d[best_i] = d[best_i], d[t]
            u[t], u[best_i] = u[best_i], u[t]
        if best_j != t:
            _swap_cols(d, t, best_j)
            _swap_cols(v, t, best_j)
        while True:
            p = d[t][t]
            if p < 0:
                _negate_row(d, t)
                _negate_row(u, t)
                p = -p
            again = False
            for i in range(t + 1, nr):
                e = d[i][t]
                if e:
                    q = e // p
                    if q:
                        _row_sub(d, i, t, q)
                        _row_sub(u, i, t, q)
                    if d[i][t]:
                        # remainder beats the pivot; promote it
                        d[t], d[i] = d[i], d[t]
                        u[t], u[i] = u[i], u[t]
                        again = True
                        break
            if again:
                continue
            for j in range(t + 1, nc):
                e = d[t][j]
                if e:
                    q = e // p
                    if q:
                        _col_sub(d, j, t, q)
                        _col_sub(v, j, t, q)
                    if d[t][j]:
                        _swap_cols(d, t, j)
                        _swap_cols(v, t, j)
                        again = True
                        break
            if again:
                continue
            break
        # the pivot must divide the whole remaining block for the
        # divisor chain; fold an offending row into row t and redo
        p = d[t][t]
        clean = True
        for i in range(t + 1, nr):
            di = d[i]
            for j in range(t + 1, nc):
                if di[j] % p:
                    _row_add(d, t, i)
                    _row_add(u, t, i)
                    clean = False
                    break
            if not clean:
                break
        if clean:
            t += 1


def rank_mod_inplace(list m, object p):
    """Rank over the prime field F_p; destroys ``m``."""
    cdef Py_ssize_t nr = len(m)
    cdef Py_ssize_t nc = len(m[0]) if nr else 0
    cdef Py_ssize_t i, j, col, rank, piv
    cdef list mi, row
    cdef object inv, f
    for i in range(nr):
        mi = m[i]
        for j in range(nc):
            mi[j] %= p
    rank = 0
    col = 0
    while rank < nr and col < nc:
        piv = -1
        for i in range(rank, nr):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            col += 1
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        row = m[rank]
        inv = pow(row[col], -1, p)
        for j in range(col, nc):
            row[j] = row[j] * inv % p
        for i in range(nr):
            if i != rank and m[i][col]:
                f = m[i][col]
                mi = m[i]
                for j in range(col, nc):
                    mi[j] = (mi[j] - f * row[j]) % p
        rank += 1
        col += 1
    return rank


def det_inplace(list m):
    """Determinant by fraction-free (Bareiss) elimination; destroys ``m``."""
    cdef Py_ssize_t n = len(m)
    if n == 0:
        return 1
    cdef Py_ssize_t k, i, j, piv
    cdef list mi, mk
    cdef object prev, pkk, mik
    cdef int sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if m[i][k]:
                    piv = i
                    break
            if piv < 0:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pkk - mik * mk[j]) // prev
            mi[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def matmul(list a, list b):
    """Product of two lists-of-lists; inner dimensions must agree."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t nc = len(b[0]) if k else 0
    cdef Py_ssize_t i, t, j
    cdef list ai, bt, row, out
    cdef object f
    out = []
    for i in range(n):
        ai = a[i]
        row = [0] * nc
        for t in range(k):
            f = ai[t]
            if f:
                bt = b[t]
                for j in range(nc):
                    row[j] += f * bt[j]
        out.append(row)
    return out
