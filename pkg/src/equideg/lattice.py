"""Integer lattice arithmetic: Hermite and Smith normal forms.

Lattices are given by integer generator rows; the HNF rows are the canonical
basis used for equality tests, and SNF invariant factors describe quotients
Z^n / L exactly.
"""

from __future__ import annotations

from math import gcd


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_normal_form(rows: list[list[int]], width: int | None = None) -> list[list[int]]:
    """Row-style HNF: positive pivots, entries above a pivot reduced mod it.

    Zero rows are dropped; the result is a canonical basis of the row lattice.
    """
    if width is None:
        width = len(rows[0]) if rows else 0
    basis: list[list[int]] = []  # kept in echelon order, pivot columns increasing
    pivcol: list[int] = []

    def reduce_in(vec: list[int]):
        vec = list(vec)
        for j in range(width):
            if vec[j] == 0:
                continue
            if j in pivcol:
                p = pivcol.index(j)
                row = basis[p]
                a, b = row[j], vec[j]
                if b % a == 0:
                    q = b // a
                    for k in range(j, width):
                        vec[k] -= q * row[k]
                else:
                    g, x, y = _xgcd(a, b)
                    anew = [x * row[k] + y * vec[k] for k in range(width)]
                    vnew = [(-b // g) * row[k] + (a // g) * vec[k] for k in range(width)]
                    basis[p] = anew
                    vec = vnew
            else:
                where = 0
                while where < len(pivcol) and pivcol[where] < j:
                    where += 1
                basis.insert(where, list(vec))
                pivcol.insert(where, j)
                return

    for r in rows:
        if len(r) != width:
            raise ValueError("ragged row")
        if any(r):
            reduce_in([int(x) for x in r])

    # normalize: positive pivots, reduce entries above each pivot; ascending
    # pivot order so entries introduced in later columns get re-reduced
    for i in range(len(basis)):
        j = pivcol[i]
        if basis[i][j] < 0:
            basis[i] = [-x for x in basis[i]]
    for i in range(len(basis)):
        j = pivcol[i]
        p = basis[i][j]
        for k in range(i):
            c = basis[k][j]
            q = c // p  # floor: leaves residue in [0, p)
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def lattice_contains(hnf_basis: list[list[int]], vec: list[int]) -> bool:
    """Membership of an integer vector in the row lattice given by its HNF."""
    v = [int(x) for x in vec]
    width = len(v)
    for row in hnf_basis:
        j = next(k for k in range(width) if row[k] != 0)
        if v[j] == 0:
            continue
        if v[j] % row[j] != 0:
            return False
        q = v[j] // row[j]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def lattices_equal(rows_a: list[list[int]], rows_b: list[list[int]], width: int) -> bool:
    return hermite_normal_form(rows_a, width) == hermite_normal_form(rows_b, width)


def smith_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of the integer matrix."""
    m = [[int(x) for x in r] for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    invariants: list[int] = []
    top = 0

    def find_pivot(t):
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0:
                    return i, j
        return None

    while True:
        loc = find_pivot(top)
        if loc is None:
            break
        i, j = loc
        m[top], m[i] = m[i], m[top]
        for r in range(nr):
            m[r][top], m[r][j] = m[r][j], m[r][top]
        while True:
            # clear column
            for i in range(top + 1, nr):
                if m[i][top] % m[top][top] != 0:
                    g, x, y = _xgcd(m[top][top], m[i][top])
                    a, b = m[top][top] // g, m[i][top] // g
                    rt, ri = m[top], m[i]
                    m[top] = [x * p + y * q for p, q in zip(rt, ri)]
                    m[i] = [-b * p + a * q for p, q in zip(rt, ri)]
            for i in range(top + 1, nr):
                q = m[i][top] // m[top][top]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[top])]
            # clear row
            for j in range(top + 1, nc):
                if m[top][j] % m[top][top] != 0:
                    g, x, y = _xgcd(m[top][top], m[top][j])
                    a, b = m[top][top] // g, m[top][j] // g
                    for r in range(nr):
                        p, q = m[r][top], m[r][j]
                        m[r][top] = x * p + y * q
                        m[r][j] = -b * p + a * q
            for j in range(top + 1, nc):
                q = m[top][j] // m[top][top]
                if q:
                    for r in range(nr):
                        m[r][j] -= q * m[r][top]
            if all(m[i][top] == 0 for i in range(top + 1, nr)) and all(
                m[top][j] == 0 for j in range(top + 1, nc)
            ):
                break
        # divisibility sweep: pivot must divide the remaining block
        d = abs(m[top][top])
        bad = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % d != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            m[top] = [a + b for a, b in zip(m[top], m[bad])]
            continue
        invariants.append(d)
        top += 1
        if top == min(nr, nc):
            break
    return invariants


def quotient_invariants(rows: list[list[int]], ambient_dim: int) -> tuple[int, list[int]]:
    """Invariants of Z^ambient / rowspan: (free rank, torsion orders > 1)."""
    invs = smith_invariants(rows) if rows else []
    free = ambient_dim - len(invs)
    torsion = [d for d in invs if d > 1]
    return free, torsion
