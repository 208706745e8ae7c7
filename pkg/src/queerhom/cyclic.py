"""First graded cyclic homology of an associative superalgebra.

The pair space <R,R> is the quotient of R(x)R (parity of a(x)b is |a|+|b|)
by the graded antisymmetry and cyclicity relations

    a(x)b + (-1)^{|a||b|} b(x)a
    (-1)^{|a||c|} ab(x)c + (-1)^{|b||a|} bc(x)a + (-1)^{|c||b|} ca(x)b

over homogeneous basis triples.  lam(a, b) is the class of a(x)b.
HC1(R) is the kernel of the induced map lam(a,b) -> [a,b]; its
well-definedness on the relation subspace is re-checked every time.

For S = R(x)Q1 the class map is written h(x, y); check_h_relations
verifies the mixing identities between h on S and lam on R, and
build_shift_iso constructs the mutually inverse odd maps between
HC1(S) and HC1(R) on canonical bases.
"""
from __future__ import annotations

from .algebras import SuperAlgebra, build_q1, tensor
from .linalg import (
    AugmentedSpan,
    GradedDim,
    GradedSpace,
    QuotientSpace,
    SparseMatrix,
    Subspace,
    kernel,
    vec_add_scaled,
)
from .lie import StructureError


class PairSpace:
    """R(x)R modulo the graded antisymmetry and cyclicity relations."""

    def __init__(self, R: SuperAlgebra):
        self.R = R
        self.field = R.field
        d = R.dim
        par = R.space.parities
        labels = []
        parities = []
        for a in range(d):
            for b in range(d):
                labels.append("%s⊗%s" % (R.space.labels[a], R.space.labels[b]))
                parities.append((par[a] + par[b]) % 2)
        self.space = GradedSpace(labels, parities)
        one = self.field.one
        rel = []
        for a in range(d):
            for b in range(a, d):
                vec = {}
                vec[a * d + b] = one
                sgn = -one if (par[a] and par[b]) else one
                cur = vec.get(b * d + a, self.field.zero) + sgn
                if cur:
                    vec[b * d + a] = cur
                else:
                    vec.pop(b * d + a, None)
                if vec:
                    rel.append(vec)
        for a in range(d):
            for b in range(d):
                ab = R.products.get((a, b), {})
                for c in range(d):
                    vec = {}
                    s1 = -one if (par[a] and par[c]) else one
                    for t, v in ab.items():
                        vec_add_scaled(vec, {t * d + c: v}, s1)
                    bc = R.products.get((b, c), {})
                    s2 = -one if (par[b] and par[a]) else one
                    for t, v in bc.items():
                        vec_add_scaled(vec, {t * d + a: v}, s2)
                    ca = R.products.get((c, a), {})
                    s3 = -one if (par[c] and par[b]) else one
                    for t, v in ca.items():
                        vec_add_scaled(vec, {t * d + b: v}, s3)
                    if vec:
                        rel.append(vec)
        self.relations = Subspace.from_vectors(self.space, rel)
        if not self.relations.is_homogeneous():
            raise StructureError("relation subspace of %s mixes parities" % R.name)
        self.quot = QuotientSpace(self.space, self.relations)

    @property
    def quot_dim(self):
        return self.quot.dim

    def pair_index(self, a: int, b: int) -> int:
        return a * self.R.dim + b

    def tensor_vec(self, x: dict, y: dict) -> dict:
        """Coordinates of x(x)y in the ambient R(x)R (no sign: it is a pair,
        not a product)."""
        d = self.R.dim
        out = {}
        for a, xa in x.items():
            for b, yb in y.items():
                v = xa * yb
                if not v:
                    continue
                key = a * d + b
                cur = out.get(key)
                if cur is None:
                    out[key] = v
                else:
                    nv = cur + v
                    if nv:
                        out[key] = nv
                    else:
                        del out[key]
        return out

    def lam(self, x, y) -> dict:
        """Class of x(x)y in <R,R>, as coordinates on the quotient basis."""
        if hasattr(x, "coords"):
            x = x.coords
        if hasattr(y, "coords"):
            y = y.coords
        return self.quot.project(self.tensor_vec(x, y))

    def class_of(self, ambient_vec: dict) -> dict:
        return self.quot.project(ambient_vec)

    def describe_class(self, qvec: dict) -> str:
        return self.quot.space.describe(qvec, self.field)


class HC1Result:
    def __init__(self, pair: PairSpace, subspace: Subspace):
        self.pair = pair
        self.subspace = subspace
        self.graded_dim = subspace.graded_dim

    def __repr__(self):
        return "<HC1 %s %s>" % (self.pair.R.name, self.graded_dim)


def _commutator_of_pair_vec(R: SuperAlgebra, vec: dict) -> dict:
    """Apply a(x)b -> ab - (-1)^{|a||b|} ba linearly to an R(x)R vector."""
    d = R.dim
    par = R.space.parities
    out = {}
    for key, v in vec.items():
        a, b = divmod(key, d)
        ab = R.products.get((a, b))
        if ab:
            vec_add_scaled(out, ab, v)
        ba = R.products.get((b, a))
        if ba:
            sgn = R.field.from_int(-1 if not (par[a] and par[b]) else 1)
            vec_add_scaled(out, ba, sgn * v)
    return out


def hc1(R: SuperAlgebra, pair: PairSpace = None) -> HC1Result:
    """Kernel of the induced commutator map on <R,R>.

    Raises StructureError if the ambient commutator map fails to kill the
    relation subspace (which would make the induced map ill-defined).
    """
    if pair is None:
        pair = PairSpace(R)
    for row in pair.relations.rows:
        img = _commutator_of_pair_vec(R, dict(row))
        if img:
            raise StructureError(
                "commutator map is not well-defined on <%s,%s>: relation row "
                "with leading %s has nonzero image" % (R.name, R.name, min(row))
            )
    qdim = pair.quot.dim
    entries = {}
    for col in range(qdim):
        rep = pair.quot.section({col: R.field.one})
        img = _commutator_of_pair_vec(R, rep)
        for r, v in img.items():
            entries[(r, col)] = v
    m = SparseMatrix(R.dim, qdim, entries)
    sub = kernel(m, pair.quot.space, R.field)
    return HC1Result(pair, sub)


# ----------------------------------------------------------- h relations

class RelationRow:
    __slots__ = ("check", "inputs", "ok", "note")

    def __init__(self, check, inputs, ok, note=""):
        self.check = check
        self.inputs = inputs
        self.ok = ok
        self.note = note


class RelationReport:
    def __init__(self, R, rows):
        self.R = R
        self.rows = rows

    @property
    def ok(self):
        return all(r.ok for r in self.rows)

    def failures(self):
        return [r for r in self.rows if not r.ok]


def check_h_relations(R: SuperAlgebra) -> RelationReport:
    """Mixing identities for h on S = R(x)Q1, each reduced to canonical form.

    Row families, over homogeneous basis elements a, b of R:
      swap-odd                h(a(x)1, b(x)nu) + (-1)^{|a||b|} h(b(x)1, a(x)nu) = 0
      odd-pair-vanishes[1]    h(a(x)1, b(x)1) = 0     when a or b is odd
      odd-pair-vanishes[nu]   h(a(x)nu, b(x)nu) = 0   when a or b is odd
      even-commutator-half    h(a(x)1, b(x)1) = (1/2) h([a,b](x)nu, 1(x)nu)    both even
      even-anticommutator-half h(a(x)nu, b(x)nu) = (1/2) h({a,b}(x)nu, 1(x)nu) both even
      unit-nu                 h(a(x)1, 1(x)nu) = 0
    """
    field = R.field
    S = tensor(R, build_q1(field))
    pair = PairSpace(S)
    d = R.dim
    par = R.space.parities
    labels = R.space.labels
    half = field.invert(field.from_int(2))
    one = field.one

    def elem(r_coords: dict, nu: int) -> dict:
        return {r * 2 + nu: c for r, c in r_coords.items()}

    unit_nu = elem(R.unit, 1)
    rows = []

    def residue_row(check, inputs, amb_vec):
        res = pair.class_of(amb_vec)
        note = "" if not res else "residue " + pair.describe_class(res)
        rows.append(RelationRow(check, inputs, not res, note))

    for a in range(d):
        for b in range(d):
            xa1 = elem({a: one}, 0)
            xb1 = elem({b: one}, 0)
            xanu = elem({a: one}, 1)
            xbnu = elem({b: one}, 1)
            sgn = -one if (par[a] and par[b]) else one
            amb = pair.tensor_vec(xa1, xbnu)
            vec_add_scaled(amb, pair.tensor_vec(xb1, xanu), sgn)
            residue_row("swap-odd", (labels[a], labels[b]), amb)
            if par[a] or par[b]:
                residue_row(
                    "odd-pair-vanishes[1]", (labels[a], labels[b]), pair.tensor_vec(xa1, xb1)
                )
                residue_row(
                    "odd-pair-vanishes[nu]", (labels[a], labels[b]), pair.tensor_vec(xanu, xbnu)
                )
            else:
                ab = dict(R.products.get((a, b), {}))
                comm = dict(ab)
                vec_add_scaled(comm, R.products.get((b, a), {}), -one)
                amb = pair.tensor_vec(xa1, xb1)
                vec_add_scaled(amb, pair.tensor_vec(elem(comm, 1), unit_nu), -half)
                residue_row("even-commutator-half", (labels[a], labels[b]), amb)
                anti = dict(ab)
                vec_add_scaled(anti, R.products.get((b, a), {}), one)
                amb = pair.tensor_vec(xanu, xbnu)
                vec_add_scaled(amb, pair.tensor_vec(elem(anti, 1), unit_nu), -half)
                residue_row("even-anticommutator-half", (labels[a], labels[b]), amb)
        residue_row("unit-nu", (labels[a], "1"), pair.tensor_vec(elem({a: one}, 0), unit_nu))
    return RelationReport(R, rows)


# -------------------------------------------------- the odd shift maps

class OddIsoPair:
    """Mutually inverse odd maps between HC1(R(x)Q1) and HC1(R).

    phi sends a class written as sum of h(a_i(x)1, b_i(x)nu) to the sum of
    lam(a_i, b_i); psi is the reverse.  All flags are recomputed exactly.
    """

    def __init__(self, R, hc_R: HC1Result, hc_S: HC1Result):
        self.R = R
        self.hc_R = hc_R
        self.hc_S = hc_S
        self.psi_kills_relations = None
        self.psi_image_in_hc1 = None
        self.phi_solvable = None
        self.phi_well_defined = None
        self.phi_image_in_hc1 = None
        self.mutually_inverse = None
        self.parity_flip = None
        self.dims_swap = None
        self.failures = []

    @property
    def ok(self):
        flags = (
            self.psi_kills_relations,
            self.psi_image_in_hc1,
            self.phi_solvable,
            self.phi_well_defined,
            self.phi_image_in_hc1,
            self.mutually_inverse,
            self.parity_flip,
            self.dims_swap,
        )
        return all(f is True for f in flags)


def build_shift_iso(R: SuperAlgebra, hc_R: HC1Result = None, hc_S: HC1Result = None) -> OddIsoPair:
    field = R.field
    S = tensor(R, build_q1(field))
    if hc_R is None:
        hc_R = hc1(R)
    if hc_S is None:
        hc_S = hc1(S)
    pair_R = hc_R.pair
    pair_S = hc_S.pair
    d = R.dim
    one = field.one
    out = OddIsoPair(R, hc_R, hc_S)

    def h_col(a: int, b: int) -> dict:
        """Class of (a(x)1)(x)(b(x)nu) in <S,S>."""
        return pair_S.class_of({(2 * a) * S.dim + (2 * b + 1): one})

    def lam_col(a: int, b: int) -> dict:
        return pair_R.class_of({a * d + b: one})

    # psi on the ambient R(x)R: a(x)b -> h(a(x)1, b(x)nu); must kill I_R.
    ok = True
    for row in pair_R.relations.rows:
        img = {}
        for key, v in row.items():
            a, b = divmod(key, d)
            vec_add_scaled(img, h_col(a, b), v)
        if img:
            ok = False
            out.failures.append("psi does not kill a relation row (leading %d)" % min(row))
    out.psi_kills_relations = ok

    # psi restricted to the canonical HC1(R) basis.
    psi_cols = []
    ok = True
    for row in hc_R.subspace.rows:
        img = {}
        for qcol, v in row.items():
            rep = pair_R.quot.section({qcol: one})
            for key, cv in rep.items():
                a, b = divmod(key, d)
                vec_add_scaled(img, h_col(a, b), cv * v)
        psi_cols.append(img)
        if not hc_S.subspace.contains(img):
            ok = False
            out.failures.append("psi image leaves HC1 of the tensor algebra")
    out.psi_image_in_hc1 = ok

    # phi: solve each HC1(S) basis vector as a combination of h-columns.
    span = AugmentedSpan()
    pairs_order = [(a, b) for a in range(d) for b in range(d)]
    for (a, b) in pairs_order:
        col = h_col(a, b)
        if col:
            span.insert(col, {(a, b): one})
    ok_wd = True
    for tag in span.kernel_tags:
        img = {}
        for (a, b), v in tag.items():
            vec_add_scaled(img, lam_col(a, b), v)
        if img:
            ok_wd = False
            out.failures.append("phi is ill-defined on a kernel combination of h-columns")
    out.phi_well_defined = ok_wd

    phi_cols = []
    ok_solve = True
    ok_image = True
    for row in hc_S.subspace.rows:
        tags = span.solve(dict(row))
        if tags is None:
            ok_solve = False
            out.failures.append("an HC1 class of the tensor algebra has no h-normal form")
            phi_cols.append(None)
            continue
        img = {}
        for (a, b), v in tags.items():
            vec_add_scaled(img, lam_col(a, b), v)
        phi_cols.append(img)
        if not hc_R.subspace.contains(img):
            ok_image = False
            out.failures.append("phi image leaves HC1 of the coordinate algebra")
    out.phi_solvable = ok_solve
    out.phi_image_in_hc1 = ok_image

    # mutual inverse on the canonical bases, via subspace coordinates.
    ok_inv = ok_solve and ok_image and out.psi_image_in_hc1
    if ok_inv:
        nR = len(hc_R.subspace.rows)
        nS = len(hc_S.subspace.rows)
        for i in range(nR):
            back = {}
            coords = hc_S.subspace.coords_of(psi_cols[i])
            if coords is None:
                ok_inv = False
                break
            for j, v in coords.items():
                if phi_cols[j] is None:
                    ok_inv = False
                    break
                vec_add_scaled(back, phi_cols[j], v)
            expect = {k: v for k, v in hc_R.subspace.rows[i].items()}
            if back != expect:
                ok_inv = False
                out.failures.append("phi(psi(x)) != x on basis vector %d" % i)
        for j in range(nS):
            if phi_cols[j] is None:
                ok_inv = False
                continue
            coords = hc_R.subspace.coords_of(phi_cols[j])
            if coords is None:
                ok_inv = False
                continue
            back = {}
            for i, v in coords.items():
                vec_add_scaled(back, psi_cols[i], v)
            expect = {k: v for k, v in hc_S.subspace.rows[j].items()}
            if back != expect:
                ok_inv = False
                out.failures.append("psi(phi(y)) != y on basis vector %d" % j)
    out.mutually_inverse = ok_inv

    ok_par = True
    for i, row in enumerate(hc_R.subspace.rows):
        if not psi_cols[i]:
            continue
        p_src = pair_R.quot.space.parity_of_vec(row)
        p_img = pair_S.quot.space.parity_of_vec(psi_cols[i])
        if (p_src + p_img) % 2 != 1:
            ok_par = False
            out.failures.append("psi does not flip parity on basis vector %d" % i)
    for j, row in enumerate(hc_S.subspace.rows):
        if phi_cols[j] is None or not phi_cols[j]:
            continue
        p_src = pair_S.quot.space.parity_of_vec(row)
        p_img = pair_R.quot.space.parity_of_vec(phi_cols[j])
        if (p_src + p_img) % 2 != 1:
            ok_par = False
            out.failures.append("phi does not flip parity on basis vector %d" % j)
    out.parity_flip = ok_par
    out.dims_swap = hc_S.graded_dim == hc_R.graded_dim.swap()
    if not out.dims_swap:
        out.failures.append(
            "graded dimension %s is not the swap of %s"
            % (hc_S.graded_dim, hc_R.graded_dim)
        )
    out.psi = psi_cols
    out.phi = phi_cols
    return out


def graded_dim_of(x) -> GradedDim:
    if isinstance(x, HC1Result):
        return x.graded_dim
    if isinstance(x, Subspace):
        return x.graded_dim
    raise TypeError("no graded dimension for %r" % (x,))
