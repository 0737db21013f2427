"""Pure-Python versions of the hot kernels (mod-p linear algebra and products).

The compiled twin lives in ``_ckernels.pyx``; both expose the same names.
"""


def rref_mod(rows, p):
    """Reduced row echelon form of an integer matrix mod prime ``p``.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [[v % p for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = pow(row[c], -1, p)
        if inv != 1:
            row = [(v * inv) % p for v in row]
            m[r] = row
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    mi = m[i]
                    m[i] = [(a - f * b) % p for a, b in zip(mi, row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def poly_mul_mod(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


class AlgebraKernel:
    """Multiplication in a finite-dimensional algebra over GF(p)."""

    def __init__(self, flat, dim, p):
        self.dim = dim
        self.p = p
        # sparse rows: (i, j) -> [(k, c), ...]
        self._sparse = [
            [[(k, flat[(i * dim + j) * dim + k]) for k in range(dim) if flat[(i * dim + j) * dim + k]]
             for j in range(dim)]
            for i in range(dim)
        ]

    def mul(self, x, y):
        dim, p = self.dim, self.p
        out = [0] * dim
        sp = self._sparse
        for i in range(dim):
            xi = x[i]
            if not xi:
                continue
            row = sp[i]
            for j in range(dim):
                yj = y[j]
                if not yj:
                    continue
                f = xi * yj
                for k, c in row[j]:
                    out[k] += f * c
        return tuple(v % p for v in out)
