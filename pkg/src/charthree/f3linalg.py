"""Dense linear algebra over F_3: row reduction, solving, kernels.

Matrices are lists of row lists with entries in {0, 1, 2}.  Sizes here
stay below ~150 columns, so plain Python loops are fine.
"""

from __future__ import annotations

_INV3 = (0, 1, 2)  # inverse of 0 (unused), 1, 2 mod 3


def mat_vec(rows: list[list[int]], v: list[int]) -> list[int]:
    return [sum(r[j] * v[j] for j in range(len(v))) % 3 for r in rows]


class LinearSolver:
    """Row-reduced form of a matrix A, reusable for many right-hand sides.

    Solves A x = b over F_3 and exposes a kernel basis.  A has shape
    (nrows, ncols); the transform T with T A = R is kept so each solve is
    one mat-vec plus back-substitution bookkeeping.
    """

    def __init__(self, rows: list[list[int]]):
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        r = [row[:] for row in rows]
        t = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
        pivots: list[int] = []
        rank = 0
        for col in range(ncols):
            piv = next((i for i in range(rank, nrows) if r[i][col]), None)
            if piv is None:
                continue
            r[rank], r[piv] = r[piv], r[rank]
            t[rank], t[piv] = t[piv], t[rank]
            inv = _INV3[r[rank][col]]
            if inv != 1:
                r[rank] = [(inv * x) % 3 for x in r[rank]]
                t[rank] = [(inv * x) % 3 for x in t[rank]]
            for i in range(nrows):
                if i != rank and r[i][col]:
                    f = r[i][col]
                    r[i] = [(a - f * b) % 3 for a, b in zip(r[i], r[rank])]
                    t[i] = [(a - f * b) % 3 for a, b in zip(t[i], t[rank])]
            pivots.append(col)
            rank += 1
            if rank == nrows:
                break
        self.nrows = nrows
        self.ncols = ncols
        self.rref = r
        self.transform = t
        self.pivots = pivots
        self.rank = rank

    def solve(self, b: list[int]) -> list[int] | None:
        """One solution of A x = b, or None if inconsistent."""
        tb = mat_vec(self.transform, b)
        if any(tb[i] for i in range(self.rank, self.nrows)):
            return None
        x = [0] * self.ncols
        for i, col in enumerate(self.pivots):
            # free variables set to 0; rref rows still reference them
            x[col] = (tb[i] - sum(self.rref[i][j] * x[j]
                                  for j in range(col + 1, self.ncols))) % 3
        return x

    def kernel_basis(self) -> list[list[int]]:
        free = [j for j in range(self.ncols) if j not in self.pivots]
        basis = []
        for f in free:
            v = [0] * self.ncols
            v[f] = 1
            for i, col in enumerate(self.pivots):
                v[col] = (-self.rref[i][f]) % 3
            basis.append(v)
        return basis
