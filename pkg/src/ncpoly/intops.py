"""Exact integer matrix routines.

These are the hot kernels behind the rational Matrix API and the polytope
enumeration loops.  Everything works on plain Python integers (arbitrary
precision), with fraction-free eliminations so intermediate values stay
integral.
"""

from math import gcd


def vec_content(v):
    """gcd of the entries, 0 for an all-zero vector."""
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def primitive(v):
    """Divide a vector by its content (no-op on zero vectors)."""
    g = vec_content(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def bareiss_det(rows):
    """Determinant of a square integer matrix by fraction-free elimination.

    Intermediate entries are minors of the input, so they stay integral and
    do not blow up the way naive cross-multiplication would.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def int_rank(rows):
    """Rank of a rectangular integer matrix.

    Gaussian elimination with cross-multiplication; rows are reduced to
    primitive form after each step to keep entries small.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < cols:
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            t = m[i][col]
            if t:
                row = [pv * a - t * b for a, b in zip(m[i], m[rank])]
                m[i] = list(primitive(row))
        rank += 1
        col += 1
    return rank


def cramer_left_kernel(rows):
    """Left kernel of an (r+1) x r integer matrix of rank r.

    Returns the primitive integer vector v with sum_i v[i]*rows[i] = 0,
    normalized so its first nonzero entry is positive.  Returns None when
    the matrix has rank below r (every signed minor vanishes).
    """
    r1 = len(rows)
    r = r1 - 1
    if any(len(row) != r for row in rows):
        raise ValueError("need one more row than columns")
    v = []
    s = 1
    for i in range(r1):
        sub = rows[:i] + rows[i + 1:]
        v.append(s * bareiss_det(sub))
        s = -s
    if not any(v):
        return None
    v = primitive(v)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return None


def reduce_row(row, red):
    """Reduce an integer row against echelon rows, cross-multiplying.

    ``red`` is a list of (row, pivot_col) pairs where each row has its first
    nonzero entry at pivot_col.  The result is primitive; it is the zero
    vector exactly when ``row`` lies in the span of the echelon rows.
    """
    res = list(row)
    for prow, pc in red:
        t = res[pc]
        if t:
            pv = prow[pc]
            res = [pv * a - t * b for a, b in zip(res, prow)]
    return primitive(res)


def echelon_kernel(red, width):
    """Right kernel vector of a rank-deficient-by-one echelon system.

    ``red`` holds ``width - 1`` independent (row, pivot_col) pairs over
    ``width`` columns.  Returns the primitive integer vector u with
    row . u = 0 for every row, sign-normalized on its first nonzero entry.
    """
    pivots = {pc for _, pc in red}
    free = next(c for c in range(width) if c not in pivots)
    scale = 1
    for prow, pc in red:
        scale *= prow[pc]
    u = [0] * width
    u[free] = scale if scale > 0 else -scale
    for prow, pc in reversed(red):
        s = sum(prow[j] * u[j] for j in range(width) if j != pc and u[j])
        q, rem = divmod(-s, prow[pc])
        if rem:
            raise ArithmeticError("non-integral back-substitution")
        u[pc] = q
    u = primitive(u)
    for x in u:
        if x:
            return u if x > 0 else tuple(-y for y in u)
    raise ArithmeticError("zero kernel vector")
