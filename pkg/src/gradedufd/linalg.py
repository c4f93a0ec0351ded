"""Exact dense linear algebra over a Field.

Matrices are lists of row lists holding field elements.  Everything is
fraction-free only in the sense of being exact; pivoting is plain
first-nonzero (no magnitude concerns without floats).
"""


def rref(matrix, field):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                factor = rows[i][c]
                rows[i] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix, field):
    _, pivots = rref(matrix, field)
    return len(pivots)


def solve(columns, target, field):
    """Express target as a linear combination of the given column vectors.

    Returns the coefficient list, or None if target is outside the span.
    """
    n = len(target)
    for col in columns:
        if len(col) != n:
            raise ValueError("column length mismatch")
    # augmented system [columns | target]
    aug = [[col[i] for col in columns] + [target[i]] for i in range(n)]
    rows, pivots = rref(aug, field)
    ncols = len(columns)
    if ncols in pivots:
        return None  # inconsistent
    coeffs = [field.zero()] * ncols
    for r, c in enumerate(pivots):
        coeffs[c] = rows[r][ncols]
    return coeffs


def nullspace(matrix, field, ncols):
    """Basis of the solution space of matrix . x = 0.

    Free variables are set to 1 one at a time; basis vectors come back in
    free-column order, which makes the output deterministic.
    """
    if not matrix:
        basis = []
        for j in range(ncols):
            vec = [field.zero()] * ncols
            vec[j] = field.one()
            basis.append(vec)
        return basis
    rows, pivots = rref(matrix, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [field.zero()] * ncols
        vec[f] = field.one()
        for r, c in enumerate(pivots):
            vec[c] = field.neg(rows[r][f])
        basis.append(vec)
    return basis
