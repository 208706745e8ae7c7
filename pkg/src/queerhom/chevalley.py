"""Second homology of a finite-dimensional Lie superalgebra.

The complex is  L3 --d3--> L2 --d2--> g  with the super exterior powers

    L2 = L²g0 + g0(x)g1 + S²g1        basis: (i, j), i <= j, i = j only odd
    L3 = L³g0 + L²g0(x)g1 + g0(x)S²g1 + S³g1   basis: (i,j,k) sorted likewise

    d2(x^y)   = [x, y]
    d3(x^y^z) = [x,y]^z - (-1)^{|y||z|}[x,z]^y + (-1)^{|x|(|y|+|z|)}[y,z]^x

with x^y = -(-1)^{|x||y|} y^x.  H2 = ker d2 / im d3 is computed per parity
block; d2 o d3 = 0 is checked on every streamed d3 column.  Both
differentials preserve the root-space weights of the algebras built here,
so the incremental echelon's support-locality keeps each elimination inside
small blocks.
"""
from __future__ import annotations

import time
from math import comb

from .lie import LieSuperAlgebra
from .linalg import Echelon, GradedDim, GradedSpace, SparseMatrix, kernel, vec_add_scaled


class BudgetExceeded(Exception):
    def __init__(self, lam3_dim, budget):
        super().__init__("degree-3 chain space dimension %d exceeds budget %d" % (lam3_dim, budget))
        self.lam3_dim = lam3_dim
        self.budget = budget


def lam2_dim_formula(gd: GradedDim) -> GradedDim:
    """Graded dimension of L2 for any g of graded dimension gd."""
    a, b = gd.even, gd.odd
    return GradedDim(comb(a, 2) + comb(b + 1, 2), a * b)


def lam3_dim_formula(gd: GradedDim) -> int:
    a, b = gd.even, gd.odd
    return comb(a, 3) + comb(a, 2) * b + a * comb(b + 1, 2) + comb(b + 2, 3)


class CEComplex:
    def __init__(self, g: LieSuperAlgebra):
        self.g = g
        par = g.space.parities
        n = g.dim
        pairs = []
        for i in range(n):
            for j in range(i, n):
                if i == j and par[i] == 0:
                    continue
                pairs.append((i, j))
        pairs.sort(key=lambda t: (par[t[0]] + par[t[1]], t))
        self.pairs = pairs
        self.pair_pos = {t: k for k, t in enumerate(pairs)}
        labels = tuple(
            "%s∧%s" % (g.space.labels[i], g.space.labels[j]) for (i, j) in pairs
        )
        parities = tuple((par[i] + par[j]) % 2 for (i, j) in pairs)
        self.lam2 = GradedSpace(labels, parities)
        self.lam3_dim = lam3_dim_formula(g.space.graded_dim)

    def wedge(self, t: int, c: int):
        """(index, sign) of e_t ^ e_c in the L2 basis, or None if zero."""
        par = self.g.space.parities
        if t == c:
            if par[t] == 0:
                return None
            return self.pair_pos[(t, t)], 1
        if t < c:
            return self.pair_pos[(t, c)], 1
        sign = 1 if (par[t] and par[c]) else -1
        return self.pair_pos[(c, t)], sign

    def d2_column(self, k: int) -> dict:
        i, j = self.pairs[k]
        return dict(self.g.bracket_basis(i, j))

    def iter_lam3(self):
        """Sorted triples (i, j, k); equalities only at odd indices."""
        par = self.g.space.parities
        n = self.g.dim
        for i in range(n):
            for j in range(i, n):
                if i == j and par[i] == 0:
                    continue
                for k in range(j, n):
                    if j == k and par[j] == 0:
                        continue
                    yield (i, j, k)

    def lam3_parity(self, t) -> int:
        par = self.g.space.parities
        return (par[t[0]] + par[t[1]] + par[t[2]]) % 2

    def d3_column(self, t) -> dict:
        i, j, k = t
        g = self.g
        par = g.space.parities
        one = g.field.one
        out = {}

        def add_wedge_scaled(tbl: dict, other: int, coeff):
            for s, v in tbl.items():
                w = self.wedge(s, other)
                if w is None:
                    continue
                pos, sgn = w
                val = v * coeff
                if sgn < 0:
                    val = -val
                cur = out.get(pos)
                if cur is None:
                    out[pos] = val
                else:
                    nv = cur + val
                    if nv:
                        out[pos] = nv
                    else:
                        del out[pos]

        add_wedge_scaled(g.bracket_basis(i, j), k, one)
        c = -one if (par[j] and par[k]) else one
        add_wedge_scaled(g.bracket_basis(i, k), j, -c)
        c = -one if (par[i] and ((par[j] + par[k]) % 2)) else one
        add_wedge_scaled(g.bracket_basis(j, k), i, c)
        return out

    def d2_matrix(self) -> SparseMatrix:
        entries = {}
        for k in range(self.lam2.dim):
            for r, v in self.d2_column(k).items():
                entries[(r, k)] = v
        return SparseMatrix(self.g.dim, self.lam2.dim, entries)

    def d3_matrix(self) -> SparseMatrix:
        entries = {}
        for k, t in enumerate(self.iter_lam3()):
            for r, v in self.d3_column(t).items():
                entries[(r, k)] = v
        return SparseMatrix(self.lam2.dim, self.lam3_dim, entries)


class H2Result:
    def __init__(self, dims: GradedDim, basis, stats: dict):
        self.dims = dims
        self.basis = basis  # list of (parity, vector in L2 coordinates)
        self.stats = stats

    def __repr__(self):
        return "<H2 %s>" % (self.dims,)


def ce_h2(g: LieSuperAlgebra, budget=None, check_d2d3=True) -> H2Result:
    """H2(g) = ker d2 / im d3 with a canonical cycle basis per parity.

    budget caps the dimension of the degree-3 chain space; BudgetExceeded
    is raised before any heavy work.  d2 o d3 = 0 is asserted column by
    column unless check_d2d3 is false.
    """
    cx = CEComplex(g)
    if budget is not None and cx.lam3_dim > budget:
        raise BudgetExceeded(cx.lam3_dim, budget)
    field = g.field
    stats = {
        "lam2_dim": cx.lam2.dim,
        "lam3_dim": cx.lam3_dim,
        "algebra_dim": [g.space.graded_dim.even, g.space.graded_dim.odd],
    }
    timings = {}
    h2_dims = []
    basis = []
    for p in (0, 1):
        t0 = time.perf_counter()
        cols_p = [k for k in range(cx.lam2.dim) if cx.lam2.parities[k] == p]
        pos_p = {k: c for c, k in enumerate(cols_p)}
        entries = {}
        for c, k in enumerate(cols_p):
            for r, v in cx.d2_column(k).items():
                entries[(r, c)] = v
        mat = SparseMatrix(g.dim, len(cols_p), entries)
        space_p = GradedSpace(
            tuple(cx.lam2.labels[k] for k in cols_p), tuple(p for _ in cols_p)
        )
        ker = kernel(mat, space_p, field)
        timings["kernel_parity%d" % p] = time.perf_counter() - t0
        t0 = time.perf_counter()
        ech = Echelon()
        im_rank = 0
        for t in cx.iter_lam3():
            if cx.lam3_parity(t) != p:
                continue
            col = cx.d3_column(t)
            if not col:
                continue
            if check_d2d3:
                acc = {}
                for k, v in col.items():
                    vec_add_scaled(acc, cx.d2_column(k), v)
                if acc:
                    raise AssertionError("d2 o d3 != 0 at triple %r" % (t,))
            if ech.insert({pos_p[k]: v for k, v in col.items()}):
                im_rank += 1
        timings["boundaries_parity%d" % p] = time.perf_counter() - t0
        t0 = time.perf_counter()
        residues = []
        for row in ker.rows:
            res = ech.reduce(dict(row))
            if res:
                residues.append(dict(res))
                ech.insert(res)
        rep_ech = Echelon()
        for res in residues:
            rep_ech.insert(res)
        reps = rep_ech.rref_rows()
        h2_dims.append(len(reps))
        if len(reps) != ker.dim - im_rank:
            raise AssertionError(
                "rank bookkeeping broke: %d homology classes vs kernel %d minus image %d"
                % (len(reps), ker.dim, im_rank)
            )
        stats["ker_rank_parity%d" % p] = ker.dim
        stats["im_rank_parity%d" % p] = im_rank
        for rep in reps:
            basis.append((p, {cols_p[c]: v for c, v in rep.items()}))
        timings["quotient_parity%d" % p] = time.perf_counter() - t0
    dims = GradedDim(h2_dims[0], h2_dims[1])
    stats["h2"] = [dims.even, dims.odd]
    stats["timings"] = timings
    return H2Result(dims, basis, stats)
