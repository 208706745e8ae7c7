"""Sparse exact linear algebra over Z/2-graded spaces.

Vectors are dicts {coordinate index: nonzero scalar}.  All elimination goes
through :class:`Echelon`, an incremental forward echelon with leading-column
pivots, back-reduced to a canonical RREF on demand.  Reducing a vector only
ever touches pivot rows inside the connected component of its support, so
block-diagonal matrices (e.g. weight-graded differentials) are eliminated
blockwise automatically; that is what keeps the large boundary-rank
computations fast without any randomness or parallelism.

Subspaces are stored as canonical RREF rows sorted by pivot column, so
subspace equality is literal equality of the stored data.
"""
from __future__ import annotations

import heapq
from typing import NamedTuple


class GradingError(ValueError):
    """Raised when an operation needs parity homogeneity and does not get it."""


class GradedDim(NamedTuple):
    even: int
    odd: int

    def swap(self) -> "GradedDim":
        return GradedDim(self.odd, self.even)

    def __add__(self, other):
        return GradedDim(self.even + other.even, self.odd + other.odd)

    def __str__(self):
        return "(%d|%d)" % (self.even, self.odd)

    @property
    def total(self):
        return self.even + self.odd


class GradedSpace:
    """A finite basis with a parity bit per basis vector."""

    def __init__(self, labels, parities):
        labels = tuple(labels)
        parities = tuple(int(p) for p in parities)
        if len(labels) != len(parities):
            raise ValueError("labels and parities differ in length")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate basis labels")
        for p in parities:
            if p not in (0, 1):
                raise GradingError("parity must be 0 or 1, got %r" % (p,))
        self.labels = labels
        self.parities = parities
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def dim(self):
        return len(self.labels)

    @property
    def graded_dim(self) -> GradedDim:
        odd = sum(self.parities)
        return GradedDim(len(self.parities) - odd, odd)

    def index(self, label: str) -> int:
        return self._index[label]

    def parity_of_vec(self, vec) -> int:
        """Common parity of a vector's support; GradingError if mixed."""
        par = None
        for c in vec:
            p = self.parities[c]
            if par is None:
                par = p
            elif par != p:
                raise GradingError("vector mixes parities")
        if par is None:
            raise GradingError("zero vector has no parity")
        return par

    def describe(self, vec, field) -> str:
        if not vec:
            return "0"
        bits = []
        for c in sorted(vec):
            bits.append("%s*%s" % (field.format(vec[c]), self.labels[c]))
        return " + ".join(bits)

    def __eq__(self, other):
        return (
            isinstance(other, GradedSpace)
            and self.labels == other.labels
            and self.parities == other.parities
        )

    def __hash__(self):
        return hash((self.labels, self.parities))

    def __repr__(self):
        return "<GradedSpace dim %s>" % (self.graded_dim,)


def vec_add_scaled(dst: dict, src: dict, c) -> None:
    """dst += c*src in place."""
    for k, v in src.items():
        cur = dst.get(k)
        if cur is None:
            nv = c * v
            if nv:
                dst[k] = nv
        else:
            nv = cur + c * v
            if nv:
                dst[k] = nv
            else:
                del dst[k]


class Echelon:
    """Incremental forward echelon; rows are monic with minimal leading column."""

    def __init__(self):
        self.pivots = {}  # leading column -> row dict (monic, support >= lead)
        self._rref = None

    @property
    def rank(self):
        return len(self.pivots)

    def insert(self, vec: dict) -> bool:
        """Reduce vec against the stored rows; keep the residue as a new row.

        Returns True when vec enlarged the span.  The reduction walks the
        support in increasing column order with a heap so each cancelled
        column is paid for once.
        """
        work = dict(vec)
        heap = list(work)
        heapq.heapify(heap)
        pivots = self.pivots
        while heap:
            c = heapq.heappop(heap)
            val = work.get(c)
            if not val:
                work.pop(c, None)
                continue
            row = pivots.get(c)
            if row is None:
                # strip zeros the early return would otherwise freeze in
                if val != 1:
                    inv = val
                    work = {k: v / inv for k, v in work.items() if v}
                else:
                    work = {k: v for k, v in work.items() if v}
                pivots[c] = work
                self._rref = None
                return True
            del work[c]
            # row is monic: subtract val * row on the tail (all columns > c)
            for cc, x in row.items():
                if cc == c:
                    continue
                cur = work.get(cc)
                if cur is None:
                    work[cc] = -val * x
                    heapq.heappush(heap, cc)
                else:
                    nv = cur - val * x
                    if nv:
                        work[cc] = nv
                    else:
                        del work[cc]
        return False

    def reduce(self, vec: dict) -> dict:
        """Residue of vec modulo the current span (same walk as insert)."""
        work = dict(vec)
        heap = list(work)
        heapq.heapify(heap)
        out = {}
        while heap:
            c = heapq.heappop(heap)
            val = work.get(c)
            if not val:
                work.pop(c, None)
                continue
            row = self.pivots.get(c)
            if row is None:
                out[c] = val
                del work[c]
                continue
            del work[c]
            for cc, x in row.items():
                if cc == c:
                    continue
                cur = work.get(cc)
                if cur is None:
                    work[cc] = -val * x
                    heapq.heappush(heap, cc)
                else:
                    nv = cur - val * x
                    if nv:
                        work[cc] = nv
                    else:
                        del work[cc]
        return out

    def rref_rows(self):
        """Canonical rows: monic, back-reduced, sorted by pivot column."""
        if self._rref is not None:
            return self._rref
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        # eliminate later pivots from earlier rows, highest pivot first
        for c in reversed(cols):
            row = rows[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r2 = rows[c2]
                val = r2.get(c)
                if val:
                    vec_add_scaled(r2, row, -val)
        self._rref = [rows[c] for c in cols]
        return self._rref


class Subspace:
    """Canonical row space inside a graded ambient space."""

    def __init__(self, space: GradedSpace, rows):
        self.space = space
        self.rows = tuple(dict(r) for r in rows)
        self.pivot_cols = tuple(min(r) for r in self.rows)

    @classmethod
    def from_vectors(cls, space: GradedSpace, vectors) -> "Subspace":
        ech = Echelon()
        for v in vectors:
            ech.insert(v)
        return cls(space, ech.rref_rows())

    @property
    def dim(self):
        return len(self.rows)

    def is_homogeneous(self) -> bool:
        try:
            for r in self.rows:
                self.space.parity_of_vec(r)
        except GradingError:
            return False
        return True

    @property
    def graded_dim(self) -> GradedDim:
        even = odd = 0
        for r in self.rows:
            if self.space.parity_of_vec(r):
                odd += 1
            else:
                even += 1
        return GradedDim(even, odd)

    def reduce(self, vec: dict) -> dict:
        """Residue modulo the subspace; support avoids all pivot columns."""
        out = dict(vec)
        for pc, row in zip(self.pivot_cols, self.rows):
            val = out.get(pc)
            if val:
                vec_add_scaled(out, row, -val)
        return out

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def coords_of(self, vec: dict):
        """Coefficients of vec over the canonical rows, or None if outside."""
        coeffs = {}
        out = dict(vec)
        for idx, (pc, row) in enumerate(zip(self.pivot_cols, self.rows)):
            val = out.get(pc)
            if val:
                coeffs[idx] = val
                vec_add_scaled(out, row, -val)
        if out:
            return None
        return coeffs

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.space == other.space
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.space.labels, tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __repr__(self):
        return "<Subspace %s of dim-%d ambient>" % (len(self.rows), self.space.dim)


class QuotientSpace:
    """Ambient modulo a homogeneous subspace, coordinatized by non-pivot columns."""

    def __init__(self, ambient: GradedSpace, sub: Subspace):
        if sub.space != ambient:
            raise ValueError("subspace lives in a different ambient space")
        if not sub.is_homogeneous():
            raise GradingError("quotient by a non-homogeneous subspace")
        self.ambient = ambient
        self.sub = sub
        pivots = set(sub.pivot_cols)
        self.section_cols = tuple(c for c in range(ambient.dim) if c not in pivots)
        self._col_of = {c: i for i, c in enumerate(self.section_cols)}
        self.space = GradedSpace(
            tuple(ambient.labels[c] for c in self.section_cols),
            tuple(ambient.parities[c] for c in self.section_cols),
        )

    @property
    def graded_dim(self) -> GradedDim:
        return self.space.graded_dim

    @property
    def dim(self):
        return len(self.section_cols)

    def project(self, vec: dict) -> dict:
        """Class of an ambient vector in quotient coordinates."""
        res = self.sub.reduce(vec)
        return {self._col_of[c]: v for c, v in res.items()}

    def section(self, qvec: dict) -> dict:
        """Canonical ambient representative of a quotient vector."""
        return {self.section_cols[c]: v for c, v in qvec.items()}

    def __repr__(self):
        return "<QuotientSpace %s>" % (self.graded_dim,)


class SparseMatrix:
    """Immutable-by-convention sparse matrix, entries keyed by (row, col)."""

    def __init__(self, nrows: int, ncols: int, entries: dict):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {k: v for k, v in entries.items() if v}

    @classmethod
    def from_rows(cls, rows, ncols):
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                entries[(r, c)] = v
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_columns(cls, cols, nrows):
        entries = {}
        for c, col in enumerate(cols):
            for r, v in col.items():
                entries[(r, c)] = v
        return cls(nrows, len(cols), entries)

    def rows_as_dicts(self):
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def cols_as_dicts(self):
        cols = [dict() for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    def transpose(self):
        return SparseMatrix(
            self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def apply(self, vec: dict) -> dict:
        """Matrix times a coordinate vector (vec indexed by columns)."""
        out = {}
        cols = self.cols_as_dicts()
        for c, x in vec.items():
            vec_add_scaled(out, cols[c], x)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __repr__(self):
        return "<SparseMatrix %dx%d, %d nonzero>" % (
            self.nrows,
            self.ncols,
            len(self.entries),
        )


def _check_one_field(entries):
    kinds = set()
    for v in entries:
        kinds.add(type(v))
        if len(kinds) > 1:
            raise ValueError("matrix mixes scalar types: %s" % kinds)


def rref(m: SparseMatrix):
    """Canonical reduced row echelon form and rank; row space is preserved."""
    _check_one_field(m.entries.values())
    ech = Echelon()
    for row in m.rows_as_dicts():
        if row:
            ech.insert(row)
    rows = ech.rref_rows()
    return SparseMatrix.from_rows(rows, m.ncols), ech.rank


def kernel(m: SparseMatrix, domain: GradedSpace, field=None) -> Subspace:
    """Null space {v : m v = 0} as a canonical subspace of the domain."""
    if domain.dim != m.ncols:
        raise ValueError("domain dimension %d != ncols %d" % (domain.dim, m.ncols))
    ech = Echelon()
    for row in m.rows_as_dicts():
        if row:
            ech.insert(row)
    rows = ech.rref_rows()
    pivot_cols = [min(r) for r in rows]
    pivot_set = set(pivot_cols)
    if field is not None:
        one = field.one
    else:
        one = 1
        for v in m.entries.values():
            one = v / v
            break
    out = Echelon()
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        vec = {f: one}
        for pc, row in zip(pivot_cols, rows):
            c = row.get(f)
            if c:
                vec[pc] = -c
        out.insert(vec)
    return Subspace(domain, out.rref_rows())


def quotient(ambient: GradedSpace, sub: Subspace) -> QuotientSpace:
    return QuotientSpace(ambient, sub)


def graded_dim(obj) -> GradedDim:
    """Graded dimension of a space, subspace or quotient."""
    if isinstance(obj, (Subspace, QuotientSpace, GradedSpace)):
        if isinstance(obj, GradedSpace):
            return obj.graded_dim
        return obj.graded_dim
    raise TypeError("no graded dimension for %r" % (obj,))


class AugmentedSpan:
    """Echelon that tracks preimages: solve M t = v and read off ker M.

    Columns of M are inserted with unit tags; tags accumulate so that for
    every stored row  row = sum_j tag_j * (original column j).
    """

    def __init__(self):
        self.pivots = {}  # lead col -> (row, tag)
        self.kernel_tags = []

    def insert(self, vec: dict, tag: dict) -> bool:
        work = dict(vec)
        tg = dict(tag)
        heap = list(work)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            val = work.get(c)
            if not val:
                work.pop(c, None)
                continue
            hit = self.pivots.get(c)
            if hit is None:
                inv = val
                work = {k: v / inv for k, v in work.items() if v}
                tg = {k: v / inv for k, v in tg.items() if v}
                self.pivots[c] = (work, tg)
                return True
            row, rtag = hit
            del work[c]
            for cc, x in row.items():
                if cc == c:
                    continue
                cur = work.get(cc)
                if cur is None:
                    work[cc] = -val * x
                    heapq.heappush(heap, cc)
                else:
                    nv = cur - val * x
                    if nv:
                        work[cc] = nv
                    else:
                        del work[cc]
            vec_add_scaled(tg, rtag, -val)
        if tg:
            self.kernel_tags.append(tg)
        return False

    def solve(self, target: dict):
        """Tag combination t with columns(t) = target, or None."""
        work = dict(target)
        tg = {}
        heap = list(work)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            val = work.get(c)
            if not val:
                work.pop(c, None)
                continue
            hit = self.pivots.get(c)
            if hit is None:
                return None
            row, rtag = hit
            del work[c]
            for cc, x in row.items():
                if cc == c:
                    continue
                cur = work.get(cc)
                if cur is None:
                    work[cc] = -val * x
                    heapq.heappush(heap, cc)
                else:
                    nv = cur - val * x
                    if nv:
                        work[cc] = nv
                    else:
                        del work[cc]
            vec_add_scaled(tg, rtag, val)
        return tg
