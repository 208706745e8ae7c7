"""Lie superalgebras from structure constants, and the queer family.

Brackets are sparse tables brackets[(i, j)] = coordinates of [e_i, e_j].
The queer Lie superalgebra q_n(R) over a coordinate superalgebra R is built
twice: once from the closed bracket formulas on the generators u_ij(a)
(parity |a|) and w_ij(a) (parity |a|+1), and once inside gl_{n|n}(R) via

    u_ij(a) = E_ij(a) + (-1)^{|a|} E_{n+i,n+j}(a)
    w_ij(a) = E_{i,n+j}(a) + (-1)^{|a|} E_{n+i,j}(a)

and the two structure-constant tables must agree exactly, otherwise the
construction aborts.  sq_n(R) is characterized as {(A,B) : tr B in [R,R]}
and must coincide with the derived subalgebra of q_n(R) for n >= 2.

The super Jacobi convention used throughout:
(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0.
"""
from __future__ import annotations

from .algebras import SuperAlgebra, build_q1, commutator_subspace, tensor
from .linalg import (
    Echelon,
    GradedSpace,
    GradingError,
    SparseMatrix,
    Subspace,
    kernel,
    QuotientSpace,
    vec_add_scaled,
)
from .scalars import ScalarError


class StructureError(ValueError):
    """A would-be Lie algebra fails an exact structural identity."""


class LieSuperAlgebra:
    def __init__(self, field, space: GradedSpace, brackets: dict, name=""):
        self.field = field
        self.space = space
        self.brackets = {k: dict(v) for k, v in brackets.items() if v}
        self.name = name or "lie"

    @property
    def dim(self):
        return self.space.dim

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.brackets.get((i, j), {})

    def bracket_coords(self, x: dict, y: dict) -> dict:
        out = {}
        for i, xi in x.items():
            for j, yj in y.items():
                tbl = self.brackets.get((i, j))
                if tbl:
                    vec_add_scaled(out, tbl, xi * yj)
        return out

    def __repr__(self):
        return "<LieSuperAlgebra %s %s>" % (self.name, self.space.graded_dim)


def check_lie(g: LieSuperAlgebra, max_failures=20):
    """Exact grading, super antisymmetry and super Jacobi on basis tuples.

    Jacobi is evaluated on sorted triples only: given antisymmetry, the
    Jacobi expression for a permuted triple differs by an overall sign.
    Raises StructureError listing the first failures.
    """
    par = g.space.parities
    n = g.dim
    failures = []

    def sgn(p):
        return -1 if p else 1

    for (i, j), tbl in g.brackets.items():
        want = (par[i] + par[j]) % 2
        for k, v in tbl.items():
            if v and par[k] != want:
                failures.append("grading: [e%d,e%d] has parity-%d component e%d" % (i, j, par[k], k))
    for i in range(n):
        for j in range(i, n):
            bij = g.bracket_basis(i, j)
            bji = g.bracket_basis(j, i)
            s = sgn(par[i] * par[j])
            want = {k: -v if s > 0 else v for k, v in bij.items()}
            if bji != want:
                failures.append("antisymmetry fails on (e%d,e%d)" % (i, j))
        if par[i] == 0 and g.bracket_basis(i, i):
            failures.append("[e%d,e%d] != 0 for even e%d" % (i, i, i))
    for j in range(n):
        for k in range(j, n):
            bjk = g.bracket_basis(j, k)
            for i in range(j + 1):
                # sorted triple (i, j, k)
                acc = {}
                if bjk:
                    s1 = sgn(par[i] * par[k])
                    for t, v in bjk.items():
                        tb = g.brackets.get((i, t))
                        if tb:
                            vec_add_scaled(acc, tb, v if s1 > 0 else -v)
                bki = g.bracket_basis(k, i)
                if bki:
                    s2 = sgn(par[j] * par[i])
                    for t, v in bki.items():
                        tb = g.brackets.get((j, t))
                        if tb:
                            vec_add_scaled(acc, tb, v if s2 > 0 else -v)
                bij = g.bracket_basis(i, j)
                if bij:
                    s3 = sgn(par[k] * par[j])
                    for t, v in bij.items():
                        tb = g.brackets.get((k, t))
                        if tb:
                            vec_add_scaled(acc, tb, v if s3 > 0 else -v)
                if acc:
                    failures.append("jacobi fails on (e%d,e%d,e%d)" % (i, j, k))
                if len(failures) >= max_failures:
                    raise StructureError("; ".join(failures))
    if failures:
        raise StructureError("; ".join(failures))
    return True


def lie_from_assoc(A: SuperAlgebra) -> LieSuperAlgebra:
    """Supercommutator Lie structure on an associative superalgebra."""
    par = A.space.parities
    brackets = {}
    for i in range(A.dim):
        ei = A.basis_vec(i)
        for j in range(A.dim):
            ej = A.basis_vec(j)
            xy = A.mul_coords(ei, ej)
            yx = A.mul_coords(ej, ei)
            sign = -1 if (par[i] and par[j]) else 1
            out = dict(xy)
            vec_add_scaled(out, yx, A.field.from_int(-sign))
            if out:
                brackets[(i, j)] = out
    return LieSuperAlgebra(A.field, A.space, brackets, name="Lie(%s)" % A.name)


# ------------------------------------------------------------------ gl and q

def build_gl(m: int, n: int, R: SuperAlgebra) -> LieSuperAlgebra:
    """gl_{m|n}(R): matrix positions graded by blocks, entries graded by R.

    |E_ij(a)| = |i| + |j| + |a| where |i| = 0 for i <= m.
    """
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("need m + n >= 1")
    N = m + n
    dR = R.dim
    rpar = R.space.parities

    def pos_par(i):  # 1-based
        return 0 if i <= m else 1

    labels = []
    parities = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for r in range(dR):
                labels.append("E[%d,%d](%s)" % (i, j, R.space.labels[r]))
                parities.append((pos_par(i) + pos_par(j) + rpar[r]) % 2)
    space = GradedSpace(labels, parities)

    def idx(i, j, r):
        return ((i - 1) * N + (j - 1)) * dR + r

    brackets = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for a in range(dR):
                pa = (pos_par(i) + pos_par(j) + rpar[a]) % 2
                x = idx(i, j, a)
                for k in range(1, N + 1):
                    for l in range(1, N + 1):
                        for b in range(dR):
                            pb = (pos_par(k) + pos_par(l) + rpar[b]) % 2
                            out = {}
                            if j == k:
                                tbl = R.products.get((a, b))
                                if tbl:
                                    for t, c in tbl.items():
                                        key = idx(i, l, t)
                                        out[key] = out.get(key, R.field.zero) + c
                            if l == i:
                                tbl = R.products.get((b, a))
                                if tbl:
                                    sgn = -1 if (pa and pb) else 1
                                    for t, c in tbl.items():
                                        key = idx(k, j, t)
                                        cur = out.get(key, R.field.zero)
                                        out[key] = cur - c if sgn > 0 else cur + c
                            out = {t: v for t, v in out.items() if v}
                            if out:
                                brackets[(x, idx(k, l, b))] = out
    g = LieSuperAlgebra(R.field, space, brackets, name="gl(%d|%d;%s)" % (m, n, R.name))
    g.block_sizes = (m, n)
    g.coord = R
    g.entry_index = idx
    return g


class _QIndex:
    """Index bookkeeping for q_n(R): u-block then w-block."""

    def __init__(self, n, dR):
        self.n = n
        self.dR = dR

    def u(self, i, j, r):
        return ((i - 1) * self.n + (j - 1)) * self.dR + r

    def w(self, i, j, r):
        return self.n * self.n * self.dR + ((i - 1) * self.n + (j - 1)) * self.dR + r

    def unpack(self, t):
        block = self.n * self.n * self.dR
        kind = "u" if t < block else "w"
        t = t % block
        r = t % self.dR
        ij = t // self.dR
        return kind, ij // self.n + 1, ij % self.n + 1, r


def _q_formula_brackets(n: int, R: SuperAlgebra, qi: _QIndex) -> dict:
    dR = R.dim
    rpar = R.space.parities
    brackets = {}

    def put(tbl, key, val):
        cur = tbl.get(key)
        if cur is None:
            tbl[key] = val
        else:
            nv = cur + val
            if nv:
                tbl[key] = nv
            else:
                del tbl[key]

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for a in range(dR):
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        for b in range(dR):
                            ab = R.products.get((a, b), {})
                            ba = R.products.get((b, a), {})
                            s_ab = -1 if (rpar[a] and rpar[b]) else 1
                            # [u,u] -> u
                            out = {}
                            if j == k:
                                for t, c in ab.items():
                                    put(out, qi.u(i, l, t), c)
                            if i == l:
                                for t, c in ba.items():
                                    put(out, qi.u(k, j, t), -c if s_ab > 0 else c)
                            if out:
                                brackets[(qi.u(i, j, a), qi.u(k, l, b))] = out
                            # [u,w] -> w
                            out = {}
                            if j == k:
                                for t, c in ab.items():
                                    put(out, qi.w(i, l, t), c)
                            if i == l:
                                for t, c in ba.items():
                                    put(out, qi.w(k, j, t), -c if s_ab > 0 else c)
                            if out:
                                brackets[(qi.u(i, j, a), qi.w(k, l, b))] = out
                            # [w,w] -> (-1)^{|b|} (delta_jk u_il(ab) + (-1)^{|a||b|} delta_il u_kj(ba))
                            out = {}
                            lead = -1 if rpar[b] else 1
                            if j == k:
                                for t, c in ab.items():
                                    put(out, qi.u(i, l, t), c if lead > 0 else -c)
                            if i == l:
                                sgn = lead * s_ab
                                for t, c in ba.items():
                                    put(out, qi.u(k, j, t), c if sgn > 0 else -c)
                            if out:
                                brackets[(qi.w(i, j, a), qi.w(k, l, b))] = out
    # [w,u] from super antisymmetry
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for a in range(dR):
                pu = rpar[a]
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        for b in range(dR):
                            pw = (rpar[b] + 1) % 2
                            tbl = brackets.get((qi.u(i, j, a), qi.w(k, l, b)))
                            if not tbl:
                                continue
                            sgn = -1 if (pu and pw) else 1
                            flipped = {t: (v if sgn < 0 else -v) for t, v in tbl.items()}
                            brackets[(qi.w(k, l, b), qi.u(i, j, a))] = flipped
    return brackets


def build_q(n: int, R: SuperAlgebra, verify=True) -> LieSuperAlgebra:
    """q_n(R) with basis u_ij(a), w_ij(a).

    With verify=True (default) the formula table is compared entry by entry
    against the supercommutator table of the block realization inside
    gl_{n|n}(R); any mismatch raises StructureError.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    dR = R.dim
    rpar = R.space.parities
    qi = _QIndex(n, dR)
    labels = []
    parities = []
    for kind in ("u", "w"):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for r in range(dR):
                    labels.append("%s[%d,%d](%s)" % (kind, i, j, R.space.labels[r]))
                    p = rpar[r] if kind == "u" else (rpar[r] + 1) % 2
                    parities.append(p)
    space = GradedSpace(labels, parities)
    brackets = _q_formula_brackets(n, R, qi)
    g = LieSuperAlgebra(R.field, space, brackets, name="q(%d;%s)" % (n, R.name))
    g.block_n = n
    g.coord = R
    g.qindex = qi
    if verify:
        _verify_q_against_block_realization(g)
    return g


def _q_embed_column(g, t):
    """Block image of the t-th q-basis vector inside gl_{n|n}(R)."""
    n = g.block_n
    R = g.coord
    dR = R.dim
    N = 2 * n

    def gidx(i, j, r):
        return ((i - 1) * N + (j - 1)) * dR + r

    kind, i, j, r = g.qindex.unpack(t)
    sgn = g.field.from_int(-1 if R.space.parities[r] else 1)
    one = g.field.one
    if kind == "u":
        return {gidx(i, j, r): one, gidx(n + i, n + j, r): sgn}
    return {gidx(i, n + j, r): one, gidx(n + i, j, r): sgn}


def _verify_q_against_block_realization(g):
    n = g.block_n
    R = g.coord
    glnn = build_gl(n, n, R)
    cols = [_q_embed_column(g, t) for t in range(g.dim)]
    dR = R.dim
    N = 2 * n

    def gidx(i, j, r):
        return ((i - 1) * N + (j - 1)) * dR + r

    def to_q_coords(vec):
        """Invert the embedding; StructureError if vec is not in the image."""
        out = {}
        work = dict(vec)
        for key in sorted(work):
            val = work.get(key)
            if not val:
                continue
            pos, r = divmod(key, dR)
            i, j = divmod(pos, N)
            i += 1
            j += 1
            if i <= n and j <= n:
                t = g.qindex.u(i, j, r)
            elif i <= n < j:
                t = g.qindex.w(i, j - n, r)
            else:
                raise StructureError("block image leaks outside the queer pattern")
            out[t] = val
            vec_add_scaled(work, _q_embed_column(g, t), -val)
        if any(work.values()):
            raise StructureError("vector is not in the image of the queer embedding")
        return out

    for x in range(g.dim):
        cx = cols[x]
        for y in range(g.dim):
            img = glnn.bracket_coords(cx, cols[y])
            expect = g.bracket_basis(x, y)
            got = to_q_coords(img)
            if got != expect:
                raise StructureError(
                    "structure constants disagree with the block realization at (%s, %s)"
                    % (g.space.labels[x], g.space.labels[y])
                )


# --------------------------------------------------------- derived pieces

def derived_subalgebra(g: LieSuperAlgebra) -> Subspace:
    """Canonical span of all brackets [g, g]."""
    ech = Echelon()
    for (i, j), tbl in sorted(g.brackets.items()):
        if i <= j and tbl:
            ech.insert(dict(tbl))
    return Subspace(g.space, ech.rref_rows())


def induced_lie(g: LieSuperAlgebra, sub: Subspace, name="") -> LieSuperAlgebra:
    """Lie structure on a bracket-closed subspace, in its canonical basis."""
    if sub.space != g.space:
        raise ValueError("subspace is not inside the algebra")
    rows = sub.rows
    dim = len(rows)
    labels = tuple(g.space.labels[pc] for pc in sub.pivot_cols)
    parities = tuple(g.space.parity_of_vec(r) for r in rows)
    space = GradedSpace(labels, parities)
    brackets = {}
    for a in range(dim):
        for b in range(dim):
            vec = g.bracket_coords(rows[a], rows[b])
            if not vec:
                continue
            coords = sub.coords_of(vec)
            if coords is None:
                raise StructureError("subspace is not closed under the bracket")
            brackets[(a, b)] = coords
    out = LieSuperAlgebra(g.field, space, brackets, name=name or "sub(%s)" % g.name)
    out.ambient = g
    out.subspace = sub
    return out


def is_perfect(g: LieSuperAlgebra) -> bool:
    return derived_subalgebra(g).dim == g.dim


def _trace_constrained_diagonal(field, R, n, entry_index, allowed: Subspace):
    """Vectors diag(b_1..b_n) (via entry_index(i, r)) with sum b_i in `allowed`."""
    comm_q = QuotientSpace(R.space, allowed)
    cols = []
    for i in range(1, n + 1):
        for r in range(R.dim):
            cols.append((i, r))
    entries = {}
    for cidx, (i, r) in enumerate(cols):
        pr = comm_q.project({r: field.one})
        for qrow, v in pr.items():
            entries[(qrow, cidx)] = v
    m = SparseMatrix(comm_q.dim, len(cols), entries)
    kspace = GradedSpace(
        tuple("d%d" % t for t in range(len(cols))),
        tuple(R.space.parities[r] for (_, r) in cols),
    )
    ker = kernel(m, kspace, field)
    out = []
    for row in ker.rows:
        vec = {}
        for cidx, v in row.items():
            i, r = cols[cidx]
            vec[entry_index(i, r)] = v
        out.append(vec)
    return out


def build_sq_by_characterization(n: int, R: SuperAlgebra, q: LieSuperAlgebra = None) -> Subspace:
    """{(A,B) in q_n(R) : tr B in [R,R]} as a canonical subspace of q_n(R)."""
    if q is None:
        q = build_q(n, R, verify=False)
    qi = q.qindex
    field = q.field
    vecs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for r in range(R.dim):
                vecs.append({qi.u(i, j, r): field.one})
                if i != j:
                    vecs.append({qi.w(i, j, r): field.one})
    comm = commutator_subspace(R)
    vecs.extend(
        _trace_constrained_diagonal(field, R, n, lambda i, r: qi.w(i, i, r), comm)
    )
    sub = Subspace.from_vectors(q.space, vecs)
    if n >= 2:
        if sub != derived_subalgebra(q):
            raise StructureError("trace characterization differs from the derived subalgebra")
    return sub


def build_sl(n: int, S: SuperAlgebra) -> Subspace:
    """{X in gl_n(S) : tr X in [S,S]} as a canonical subspace of gl_n(S)."""
    gl = build_gl(n, 0, S)
    field = S.field
    dS = S.dim
    vecs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for s in range(dS):
                vecs.append({gl.entry_index(i, j, s): field.one})
    comm = commutator_subspace(S)
    vecs.extend(
        _trace_constrained_diagonal(field, S, n, lambda i, s: gl.entry_index(i, i, s), comm)
    )
    return Subspace.from_vectors(gl.space, vecs)


# ------------------------------------------------------------ homomorphisms

class VerifiedHomomorphism:
    """A graded linear map between Lie superalgebras with recomputed flags."""

    def __init__(self, source: LieSuperAlgebra, target: LieSuperAlgebra, columns, name=""):
        self.source = source
        self.target = target
        self.columns = [dict(c) for c in columns]
        self.name = name or "hom"
        self.failures = []
        self.parity_preserving = None
        self.bracket_preserving = None
        self.injective = None
        self.surjective = None
        self.verify()

    def apply(self, vec: dict) -> dict:
        out = {}
        for i, v in vec.items():
            vec_add_scaled(out, self.columns[i], v)
        return out

    def verify(self, max_failures=20):
        src, tgt = self.source, self.target
        self.failures = []
        ok_par = True
        for i, col in enumerate(self.columns):
            if not col:
                continue
            try:
                p = tgt.space.parity_of_vec(col)
            except GradingError:
                ok_par = False
                self.failures.append("image of %s mixes parities" % src.space.labels[i])
                continue
            if p != src.space.parities[i]:
                ok_par = False
                self.failures.append("image of %s flips parity" % src.space.labels[i])
        self.parity_preserving = ok_par
        ok_br = True
        for i in range(src.dim):
            ci = self.columns[i]
            for j in range(src.dim):
                lhs = self.apply(src.bracket_basis(i, j))
                rhs = tgt.bracket_coords(ci, self.columns[j])
                if lhs != rhs:
                    ok_br = False
                    if len(self.failures) < max_failures:
                        self.failures.append(
                            "bracket not preserved on (%s, %s)"
                            % (src.space.labels[i], src.space.labels[j])
                        )
        self.bracket_preserving = ok_br
        ech = Echelon()
        rank = 0
        for col in self.columns:
            if col and ech.insert(dict(col)):
                rank += 1
        self.injective = rank == src.dim
        self.surjective = rank == tgt.dim
        return self

    @property
    def is_isomorphism(self):
        return (
            self.parity_preserving
            and self.bracket_preserving
            and self.injective
            and self.surjective
        )

    def map_subspace(self, sub: Subspace) -> Subspace:
        vecs = [self.apply(dict(r)) for r in sub.rows]
        return Subspace.from_vectors(self.target.space, vecs)

    def __repr__(self):
        return "<VerifiedHomomorphism %s: iso=%s>" % (self.name, self.is_isomorphism)


def iso_q_to_gl(n: int, R: SuperAlgebra) -> VerifiedHomomorphism:
    """q_n(R) -> gl_n(R(x)Q1): u_ij(a) -> E_ij(a(x)1), w_ij(a) -> E_ij(a(x)nu)."""
    q = build_q(n, R)
    S = tensor(R, build_q1(R.field))
    gl = build_gl(n, 0, S)
    one = R.field.one
    cols = []
    for t in range(q.dim):
        kind, i, j, r = q.qindex.unpack(t)
        s = r * 2 + (0 if kind == "u" else 1)
        cols.append({gl.entry_index(i, j, s): one})
    return VerifiedHomomorphism(q, gl, cols, name="q%d(%s)->gl%d(%s)" % (n, R.name, n, S.name))


def iso_qQ1_to_glnn(n: int, R: SuperAlgebra) -> VerifiedHomomorphism:
    """q_n(R(x)Q1) -> gl_{n|n}(R), needs a square root of -1 in the field."""
    field = R.field
    i_val = field.sqrt_minus_one()
    if i_val is None:
        raise ScalarError("field %s has no square root of -1" % field.name)
    S = tensor(R, build_q1(field))
    q = build_q(n, S)
    gl = build_gl(n, n, R)
    one = field.one
    rpar = R.space.parities
    cols = []
    for t in range(q.dim):
        kind, i, j, s = q.qindex.unpack(t)
        r, nu_part = divmod(s, 2)
        sgn = field.from_int(-1 if rpar[r] else 1)
        if kind == "u" and nu_part == 0:
            col = {gl.entry_index(i, j, r): one, gl.entry_index(n + i, n + j, r): sgn}
        elif kind == "u" and nu_part == 1:
            col = {gl.entry_index(i, n + j, r): one, gl.entry_index(n + i, j, r): sgn}
        elif kind == "w" and nu_part == 0:
            col = {
                gl.entry_index(i, n + j, r): -i_val,
                gl.entry_index(n + i, j, r): i_val * sgn,
            }
        else:
            col = {
                gl.entry_index(i, j, r): i_val,
                gl.entry_index(n + i, n + j, r): -(i_val * sgn),
            }
        cols.append({k: v for k, v in col.items() if v})
    return VerifiedHomomorphism(q, gl, cols, name="q%d(%s)->gl(%d|%d;%s)" % (n, S.name, n, n, R.name))


def lie_tensor(g: LieSuperAlgebra, R: SuperAlgebra) -> LieSuperAlgebra:
    """g (x) R for supercommutative R: [x(x)a, y(x)b] = (-1)^{|a||y|}[x,y](x)ab."""
    if commutator_subspace(R).dim != 0:
        raise ValueError("lie_tensor needs supercommutative coordinates")
    if g.field != R.field:
        raise ValueError("mixed fields")
    dR = R.dim
    labels = []
    parities = []
    for i in range(g.dim):
        for a in range(dR):
            labels.append("%s⊗%s" % (g.space.labels[i], R.space.labels[a]))
            parities.append((g.space.parities[i] + R.space.parities[a]) % 2)
    space = GradedSpace(labels, parities)
    brackets = {}
    for (i, j), tbl in g.brackets.items():
        for a in range(dR):
            for b in range(dR):
                ab = R.products.get((a, b))
                if not ab:
                    continue
                sign = -1 if (R.space.parities[a] and g.space.parities[j]) else 1
                out = {}
                for t, c in tbl.items():
                    for s, cr in ab.items():
                        v = c * cr
                        if sign < 0:
                            v = -v
                        key = t * dR + s
                        cur = out.get(key)
                        if cur is None:
                            out[key] = v
                        else:
                            nv = cur + v
                            if nv:
                                out[key] = nv
                            else:
                                del out[key]
                if out:
                    brackets[(i * dR + a, j * dR + b)] = out
    return LieSuperAlgebra(g.field, space, brackets, name="%s⊗%s" % (g.name, R.name))


def center(g: LieSuperAlgebra) -> Subspace:
    """{x : [x, g] = 0} with canonical homogeneous basis."""
    entries = {}
    row_index = {}
    for j in range(g.dim):
        for i in range(g.dim):
            tbl = g.bracket_basis(j, i)
            for k, v in tbl.items():
                key = (i, k)
                r = row_index.setdefault(key, len(row_index))
                entries[(r, j)] = v
    m = SparseMatrix(len(row_index), g.dim, entries)
    return kernel(m, g.space, g.field)


def quotient_lie(g: LieSuperAlgebra, ideal: Subspace, name=""):
    """Quotient by a graded ideal; returns the quotient algebra.

    The ideal property [g, ideal] <= ideal is checked exactly first.
    The returned algebra carries .quotient (the QuotientSpace).
    """
    for row in ideal.rows:
        for i in range(g.dim):
            out = g.bracket_coords({i: g.field.one}, dict(row))
            if out and not ideal.contains(out):
                raise StructureError("subspace is not an ideal: fails at basis %d" % i)
    quot = QuotientSpace(g.space, ideal)
    dim = quot.dim
    brackets = {}
    for a in range(dim):
        va = quot.section({a: g.field.one})
        for b in range(dim):
            vb = quot.section({b: g.field.one})
            out = g.bracket_coords(va, vb)
            pr = quot.project(out)
            if pr:
                brackets[(a, b)] = pr
    out_alg = LieSuperAlgebra(g.field, quot.space, brackets, name=name or "%s/ideal" % g.name)
    out_alg.quotient = quot
    out_alg.ambient = g
    return out_alg
