"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``."""


def rref_modp(rows, p):
    """Reduced row echelon form of an integer matrix mod p.

    Returns ``(rref_rows, pivot_columns)``; zero rows are dropped.
    """
    a = [[x % p for x in row] for row in rows]
    m = len(a)
    if m == 0:
        return [], []
    n = len(a[0])
    pivots = []
    r = 0
    for j in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][j], -1, p)
        prow = [x * inv % p for x in a[r]]
        a[r] = prow
        nz = [k for k in range(j, n) if prow[k]]
        for i in range(m):
            f = a[i][j]
            if i == r or not f:
                continue
            row = a[i]
            for k in nz:
                row[k] = (row[k] - f * prow[k]) % p
        pivots.append(j)
        r += 1
    return a[:r], pivots
