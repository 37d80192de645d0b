"""Dense exact linear algebra over Q[x] and Q(x).

Two thin immutable matrix types (:class:`PolyMatrix`, :class:`RatMatrix`)
plus the operations the rest of the package needs: a fraction-free
(Bareiss) determinant, linear solving with columnwise denominator
clearing, exact rank, determinantal denominators (the monic least common
denominator of all minors up to a given order), Kronecker products and
companion matrices.

Determinantal denominators are computed by exhaustive minor enumeration,
which is combinatorial in the dimensions; they are meant for matrices of
dimension at most about 6 (property tests and small instances).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from pseudolin import _kernel as zk
from pseudolin.poly import Poly, poly_lcm
from pseudolin.ratfun import RatFun, common_denominator


class _Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def __eq__(self, other):
        return (type(self) is type(other) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((type(self).__name__, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows))
        return f"{type(self).__name__}({self.rows}x{self.cols}: [{body}])"

    @classmethod
    def from_rows(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(cls._convert(e) for e in r)
        return cls(nrows, ncols, flat)


class PolyMatrix(_Matrix):
    """Dense matrix with Poly entries."""

    @staticmethod
    def _convert(e):
        if isinstance(e, Poly):
            return e
        if isinstance(e, (int, Fraction)):
            return Poly.const(e)
        raise TypeError(f"cannot store {type(e).__name__} in PolyMatrix")

    @staticmethod
    def identity(n: int) -> PolyMatrix:
        return PolyMatrix(n, n, [Poly.one() if i == j else Poly()
                                 for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> PolyMatrix:
        return PolyMatrix(rows, cols, [Poly()] * (rows * cols))

    def to_rat(self) -> RatMatrix:
        return RatMatrix(self.rows, self.cols,
                         [RatFun(e) for e in self.entries])

    def scale(self, f) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols,
                          [e * f for e in self.entries])


class RatMatrix(_Matrix):
    """Dense matrix with RatFun entries."""

    @staticmethod
    def _convert(e):
        if isinstance(e, RatFun):
            return e
        if isinstance(e, (int, Fraction, Poly)):
            return RatFun(e)
        raise TypeError(f"cannot store {type(e).__name__} in RatMatrix")

    @staticmethod
    def identity(n: int) -> RatMatrix:
        return RatMatrix(n, n, [RatFun.one() if i == j else RatFun.zero()
                                for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> RatMatrix:
        return RatMatrix(rows, cols, [RatFun.zero()] * (rows * cols))

    def scale(self, f) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, [e * f for e in self.entries])

    def add(self, other: RatMatrix) -> RatMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return RatMatrix(self.rows, self.cols,
                         [a + b for a, b in zip(self.entries, other.entries)])

    def matmul(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = RatFun.zero()
                for k in range(self.cols):
                    acc = acc + self.entry(i, k) * other.entry(k, j)
                out.append(acc)
        return RatMatrix(self.rows, other.cols, out)

    def matvec(self, v) -> list[RatFun]:
        if self.cols != len(v):
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = RatFun.zero()
            for k in range(self.cols):
                acc = acc + self.entry(i, k) * v[k]
            out.append(acc)
        return out

    def is_strictly_proper(self) -> bool:
        return all(e.is_strictly_proper() for e in self.entries)


def block_diag_rat(blocks) -> RatMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    entries = [RatFun.zero()] * (n * m)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                entries[(r0 + i) * m + (c0 + j)] = b.entry(i, j)
        r0 += b.rows
        c0 += b.cols
    return RatMatrix(n, m, entries)


def block_diag_poly(blocks) -> PolyMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    entries = [Poly()] * (n * m)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                entries[(r0 + i) * m + (c0 + j)] = b.entry(i, j)
        r0 += b.rows
        c0 += b.cols
    return PolyMatrix(n, m, entries)


def hstack_poly(blocks) -> PolyMatrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ValueError("row mismatch")
    out = []
    for i in range(rows):
        for b in blocks:
            out.extend(b.row(i))
    return PolyMatrix(rows, sum(b.cols for b in blocks), out)


def vstack_poly(blocks) -> PolyMatrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ValueError("column mismatch")
    out = []
    for b in blocks:
        out.extend(b.entries)
    return PolyMatrix(sum(b.rows for b in blocks), cols, out)


# -- fraction-free determinant ------------------------------------------------


def _bareiss_z(m):
    """Bareiss determinant of a square matrix of zpolys (destructive)."""
    n = len(m)
    if n == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        piv = -1
        best = None
        for i in range(k, n):
            e = m[i][k]
            if e and (best is None or len(e) < best):
                piv, best = i, len(e)
        if piv < 0:
            return []
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            head = m[i][k]
            for j in range(k + 1, n):
                t = zk.zp_sub(zk.zp_mul(m[i][j], pivot),
                              zk.zp_mul(head, m[k][j]))
                m[i][j] = zk.zp_divexact(t, prev) if prev != [1] else t
            m[i][k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    return zk.zp_neg(det) if sign < 0 else det


def det_fraction_free(m: PolyMatrix) -> Poly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rows are cleared to integer coefficients first, so all intermediate
    entries are integer polynomials and every division is exact.
    """
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    zrows = []
    for i in range(m.rows):
        zrow = []
        for e in m.row(i):
            z, den = e.clear_denominators()
            zrow.append((z, den))
        den_row = 1
        for _, d in zrow:
            den_row = den_row * d // _gcd_int(den_row, d)
        scale /= den_row
        zrow = [zk.zp_scale(z, den_row // d) for z, d in zrow]
        zrows.append(zrow)
    det = _bareiss_z(zrows)
    return Poly.from_z(det) * scale


def _gcd_int(a, b):
    from math import gcd
    return gcd(a, b)


def _zp_eval(z, pt: int) -> int:
    acc = 0
    for c in reversed(z):
        acc = acc * pt + c
    return acc


def det_rational(R: RatMatrix) -> RatFun:
    """Exact determinant of a square RatMatrix (row-cleared Bareiss)."""
    if R.rows != R.cols:
        raise ValueError("determinant of a non-square matrix")
    return _rat_det([R.row(i) for i in range(R.rows)])


def _rat_det(rows) -> RatFun:
    """Determinant of a small square grid of RatFun entries."""
    n = len(rows)
    scale = RatFun.one()
    zrows = []
    for row in rows:
        rden = common_denominator(row)
        scale = scale * RatFun(1, rden)
        prow = []
        for e in row:
            prow.append((e * rden).num)
        zrows.append(prow)
    det = det_fraction_free(PolyMatrix.from_rows(zrows))
    return scale * det


# -- solving and rank ----------------------------------------------------------


def _clear_columns(A: RatMatrix):
    """Scale each column by the monic lcm of its denominators.

    Returns (polynomial columns, column denominators); the solution of the
    scaled system recovers the original one via nu_j = colden_j * y_j.
    """
    cols = []
    dens = []
    for j in range(A.cols):
        col = A.col(j)
        d = common_denominator(col)
        dens.append(d)
        cols.append([(e * d).num for e in col])
    return cols, dens


def solve_rational(A: RatMatrix, b):
    """Solve A nu = b for a full-column-rank A over Q(x).

    Each column of A and the right-hand side are multiplied by their own
    least common denominator, so the elimination runs entirely in Q[x];
    the scaling is undone on the reduced solution.  Returns None when the
    system is inconsistent; raises ValueError when A does not have full
    column rank.
    """
    if len(b) != A.rows:
        raise ValueError("right-hand side length mismatch")
    cols, dens = _clear_columns(A)
    bden = common_denominator(b)
    brhs = [(e * bden).num for e in b]
    # augmented rows over Q[x]
    rows = [[cols[j][i] for j in range(A.cols)] + [brhs[i]]
            for i in range(A.rows)]
    n, m = A.rows, A.cols
    piv_rows = []
    r = 0
    for c in range(m):
        piv = -1
        best = None
        for i in range(r, n):
            e = rows[i][c]
            if not e.is_zero() and (best is None or e.degree < best):
                piv, best = i, e.degree
        if piv < 0:
            raise ValueError("matrix does not have full column rank")
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, n):
            if not rows[i][c].is_zero():
                head, lead = rows[i][c], rows[r][c]
                rows[i] = [rj * lead - rr * head
                           for rj, rr in zip(rows[i], rows[r])]
        piv_rows.append(r)
        r += 1
    for i in range(r, n):
        if not rows[i][m].is_zero():
            return None
    # back-substitution over Q(x)
    y = [RatFun.zero()] * m
    for c in range(m - 1, -1, -1):
        i = piv_rows[c]
        acc = RatFun(rows[i][m])
        for j in range(c + 1, m):
            acc = acc - RatFun(rows[i][j]) * y[j]
        y[c] = acc / RatFun(rows[i][c])
    return [dens[j] * y[j] / RatFun(bden) for j in range(m)]


class GaussTracker:
    """Incremental fraction-free column elimination over Z[x].

    Offered vectors have ``width`` working slots, optionally followed by
    bookkeeping slots.  Pivots are chosen among the working slots only; a
    vector whose working slots all vanish is dependent, and its remaining
    slots (if any) certify the dependency.  Vectors are normalized up to
    an overall nonzero scalar of Q(x) — integer content, full powers of
    ``den`` and the polynomial content are stripped — which neither the
    rank nor ratios of slots depend on.
    """

    #: evaluation point for the content prechecks below
    _PT = 1048583

    def __init__(self, width: int, den=None):
        self.width = width
        self.den = den if den is not None and len(den) > 1 else None
        self.den_at_pt = _zp_eval(self.den, self._PT) if self.den else None
        self.pivots = []  # (pivot slot, normalized vector)

    def _normalize(self, vec):
        """Strip integer content, full powers of den, polynomial content.

        The two polynomial strips are guarded by integer evaluations at a
        fixed point: a common polynomial factor g forces g(pt) to divide
        every evaluation, so when the evaluations are coprime the strip
        cannot succeed and is skipped.  (Skipping never affects
        correctness: vectors are only defined up to a scalar.)
        """
        g = 0
        for z in vec:
            g = _gcd_int(g, zk.zp_content(z))
            if g == 1:
                break
        if g == 0:
            return vec
        if g > 1:
            vec = [[c // g for c in z] for z in vec]
        evals = [_zp_eval(z, self._PT) for z in vec]
        if self.den is not None:
            dv = self.den_at_pt
            while True:
                if dv and any(e % dv for e in evals):
                    break
                try:
                    vec = [zk.zp_divexact(z, self.den) if z else z
                           for z in vec]
                except ValueError:
                    break
                if dv:
                    evals = [e // dv for e in evals]
                else:
                    evals = [_zp_eval(z, self._PT) for z in vec]
        g = 0
        for e in evals:
            g = _gcd_int(g, e)
            if g == 1:
                return vec
        live = [z for z in vec if z]
        if live:
            g = live[0]
            for z in live[1:]:
                if len(g) == 1:
                    break
                g = zk.zp_gcd(g, z)
            if len(g) > 1:
                vec = [zk.zp_divexact(z, g) if z else z for z in vec]
        return vec

    def offer(self, vec):
        """Reduce vec against the pivots; keep it as a new pivot and return
        None when independent, else return the bookkeeping slots."""
        vec = self._normalize(list(vec))
        for pr, pvec in self.pivots:
            if vec[pr]:
                head, lead = vec[pr], pvec[pr]
                vec = [zk.zp_sub(zk.zp_mul(v, lead), zk.zp_mul(head, w))
                       for v, w in zip(vec, pvec)]
                vec = self._normalize(vec)
        if any(vec[j] for j in range(self.width)):
            pr = min((j for j in range(self.width) if vec[j]),
                     key=lambda j: len(vec[j]))
            self.pivots.append((pr, vec))
            return None
        return vec[self.width:]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(A: RatMatrix) -> int:
    """Exact rank over Q(x), via columnwise denominator clearing."""
    cols, _ = _clear_columns(A)
    tracker = GaussTracker(A.rows)
    for col in cols:
        zcol = []
        dd = 1
        cleared = []
        for e in col:
            z, den = e.clear_denominators()
            cleared.append((z, den))
            dd = dd * den // _gcd_int(dd, den)
        for z, den in cleared:
            zcol.append(zk.zp_scale(z, dd // den))
        tracker.offer(zcol)
    return tracker.rank


def invert(A: RatMatrix) -> RatMatrix:
    """Inverse of a square non-singular RatMatrix (column-by-column solve)."""
    if A.rows != A.cols:
        raise ValueError("inverse of a non-square matrix")
    n = A.rows
    cols = []
    for j in range(n):
        e = [RatFun.one() if i == j else RatFun.zero() for i in range(n)]
        sol = solve_rational(A, e)
        if sol is None:
            raise ValueError("singular matrix")
        cols.append(sol)
    return RatMatrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])


# -- determinantal denominators ------------------------------------------------


def det_denominator(R: RatMatrix, ell: int) -> Poly:
    """phi_ell(R): monic lcm of the denominators of all minors of order <= ell.

    phi_0 = 1.  Every minor is computed exactly and reduced; the cost is
    combinatorial in the dimensions, intended for matrices up to ~6x6.
    """
    if ell < 0:
        raise ValueError("minor order must be nonnegative")
    out = Poly.one()
    kmax = min(ell, R.rows, R.cols)
    for k in range(1, kmax + 1):
        for rsel in combinations(range(R.rows), k):
            for csel in combinations(range(R.cols), k):
                minor = _rat_det([[R.entry(i, j) for j in csel] for i in rsel])
                out = poly_lcm(out, minor.den)
    return out


# -- structured builders ---------------------------------------------------------


def kronecker(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    """Kronecker product: block (i, j) equals A[i, j] * B."""
    rows = A.rows * B.rows
    cols = A.cols * B.cols
    entries = [Poly()] * (rows * cols)
    for i in range(A.rows):
        for j in range(A.cols):
            a = A.entry(i, j)
            if a.is_zero():
                continue
            for p in range(B.rows):
                for q in range(B.cols):
                    entries[(i * B.rows + p) * cols + (j * B.cols + q)] = \
                        a * B.entry(p, q)
    return PolyMatrix(rows, cols, entries)


def companion(coeffs, lead) -> RatMatrix:
    """Companion matrix with subdiagonal ones and last column -coeffs/lead."""
    lead = RatMatrix._convert(lead)
    if lead.is_zero():
        raise ValueError("zero leading coefficient")
    r = len(coeffs)
    if r < 1:
        raise ValueError("empty coefficient list")
    entries = [RatFun.zero()] * (r * r)
    for j in range(r - 1):
        entries[(j + 1) * r + j] = RatFun.one()
    for i in range(r):
        entries[i * r + (r - 1)] = -(RatMatrix._convert(coeffs[i]) / lead)
    return RatMatrix(r, r, entries)
