"""Finite-dimensional associative superalgebras given by structure constants.

An algebra is a graded basis, a unit vector and a sparse product table
products[(i, j)] = coordinates of e_i e_j.  Missing (i, j) entries mean the
product is zero.  ``validate`` checks grading compatibility, associativity
on all basis triples and the two-sided unit law, exactly.

The builtin catalog covers the coordinate algebras used by the verification
scenarios: the base field, the two-dimensional algebra Q1 = k + k*nu with nu
odd and nu^2 = 1, Grassmann algebras, truncated polynomials, monogenic
algebras k[x]/(f), cyclic group algebras, matrix algebras and the square-zero
plane k[x,y]/(x,y)^2.  Tensor products carry the Koszul sign
(a1 (x) b1)(a2 (x) b2) = (-1)^{|a2||b1|} (a1 a2) (x) (b1 b2).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .linalg import Echelon, GradedDim, GradedSpace, GradingError, Subspace, vec_add_scaled
from .scalars import Field, ScalarError


@dataclass
class ValidationFailure:
    kind: str  # grading | associativity | unit | structure
    where: tuple
    detail: str


@dataclass
class ValidationReport:
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self, limit=20) -> str:
        if self.ok:
            return "valid"
        lines = [
            "%s at %s: %s" % (f.kind, f.where, f.detail)
            for f in self.failures[:limit]
        ]
        extra = len(self.failures) - limit
        if extra > 0:
            lines.append("... and %d more" % extra)
        return "\n".join(lines)


class SuperAlgebra:
    """Associative superalgebra with a distinguished unit."""

    def __init__(self, field: Field, space: GradedSpace, products: dict, unit: dict, name=""):
        self.field = field
        self.space = space
        self.products = {k: dict(v) for k, v in products.items() if v}
        self.unit = dict(unit)
        self.name = name or "algebra"

    @property
    def dim(self):
        return self.space.dim

    def mul_coords(self, x: dict, y: dict) -> dict:
        out = {}
        products = self.products
        for i, xi in x.items():
            for j, yj in y.items():
                tbl = products.get((i, j))
                if tbl:
                    vec_add_scaled(out, tbl, xi * yj)
        return out

    def basis_vec(self, i: int) -> dict:
        return {i: self.field.one}

    def el(self, spec) -> "AlgebraElement":
        """Element from a basis label, index, or coordinate dict."""
        if isinstance(spec, str):
            return AlgebraElement(self, {self.space.index(spec): self.field.one})
        if isinstance(spec, int):
            return AlgebraElement(self, {spec: self.field.one})
        return AlgebraElement(self, dict(spec))

    @property
    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, dict(self.unit))

    def __repr__(self):
        return "<SuperAlgebra %s %s>" % (self.name, self.space.graded_dim)


class AlgebraElement:
    """Coordinate vector bound to its algebra; supports +, -, * and scaling."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent: SuperAlgebra, coords: dict):
        self.parent = parent
        self.coords = {k: v for k, v in coords.items() if v}

    def __add__(self, other):
        out = dict(self.coords)
        vec_add_scaled(out, other.coords, self.parent.field.one)
        return AlgebraElement(self.parent, out)

    def __sub__(self, other):
        out = dict(self.coords)
        neg = -self.parent.field.one
        vec_add_scaled(out, other.coords, neg)
        return AlgebraElement(self.parent, out)

    def __neg__(self):
        return self.scale(-self.parent.field.one)

    def __mul__(self, other):
        return AlgebraElement(self.parent, self.parent.mul_coords(self.coords, other.coords))

    def scale(self, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = self.parent.field.from_int(c)
        return AlgebraElement(self.parent, {k: c * v for k, v in self.coords.items()})

    def parity(self):
        return self.parent.space.parity_of_vec(self.coords)

    def is_zero(self):
        return not self.coords

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.parent is other.parent
            and self.coords == other.coords
        )

    def __repr__(self):
        return "<%s in %s>" % (
            self.parent.space.describe(self.coords, self.parent.field),
            self.parent.name,
        )


def validate(A: SuperAlgebra) -> ValidationReport:
    """Exact check of grading, associativity and unit on all basis tuples."""
    rep = ValidationReport()
    par = A.space.parities
    n = A.dim
    for (i, j), tbl in A.products.items():
        want = (par[i] + par[j]) % 2
        for k, v in tbl.items():
            if v and par[k] != want:
                rep.failures.append(
                    ValidationFailure(
                        "grading",
                        (i, j, k),
                        "product of parities %d,%d hits parity %d" % (par[i], par[j], par[k]),
                    )
                )
    unit = A.unit
    for i in range(n):
        e = A.basis_vec(i)
        left = A.mul_coords(unit, e)
        right = A.mul_coords(e, unit)
        if left != e:
            rep.failures.append(ValidationFailure("unit", (i, "left"), "1*e_%d != e_%d" % (i, i)))
        if right != e:
            rep.failures.append(ValidationFailure("unit", (i, "right"), "e_%d*1 != e_%d" % (i, i)))
    for i in range(n):
        ei = A.basis_vec(i)
        for j in range(n):
            ij = A.mul_coords(ei, A.basis_vec(j))
            ej = A.basis_vec(j)
            for k in range(n):
                ek = A.basis_vec(k)
                lhs = A.mul_coords(ij, ek)
                rhs = A.mul_coords(ei, A.mul_coords(ej, ek))
                if lhs != rhs:
                    rep.failures.append(
                        ValidationFailure("associativity", (i, j, k), "(e_i e_j)e_k != e_i(e_j e_k)")
                    )
    return rep


def tensor(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """Graded tensor product with the Koszul sign rule."""
    if A.field != B.field:
        raise ValueError("tensor factors over different fields")
    field = A.field
    db = B.dim
    labels = []
    parities = []
    for i, la in enumerate(A.space.labels):
        for j, lb in enumerate(B.space.labels):
            labels.append("%s⊗%s" % (la, lb))
            parities.append((A.space.parities[i] + B.space.parities[j]) % 2)
    space = GradedSpace(labels, parities)
    products = {}
    for (i1, j1) in ((i, j) for i in range(A.dim) for j in range(B.dim)):
        for (i2, j2) in ((i, j) for i in range(A.dim) for j in range(B.dim)):
            ta = A.products.get((i1, i2))
            tb = B.products.get((j1, j2))
            if not ta or not tb:
                continue
            sign = -1 if (A.space.parities[i2] and B.space.parities[j1]) else 1
            tbl = {}
            for t, ca in ta.items():
                for s, cb in tb.items():
                    v = ca * cb
                    if sign < 0:
                        v = -v
                    key = t * db + s
                    cur = tbl.get(key)
                    if cur is None:
                        tbl[key] = v
                    else:
                        nv = cur + v
                        if nv:
                            tbl[key] = nv
                        else:
                            del tbl[key]
            if tbl:
                products[(i1 * db + j1, i2 * db + j2)] = tbl
    unit = {}
    for i, va in A.unit.items():
        for j, vb in B.unit.items():
            unit[i * db + j] = va * vb
    return SuperAlgebra(field, space, products, unit, name="%s⊗%s" % (A.name, B.name))


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Supercommutator xy - (-1)^{|x||y|} yx of homogeneous elements."""
    sign = -1 if (x.parity() and y.parity()) else 1
    xy = x * y
    yx = y * x
    if sign < 0:
        return xy + yx
    return xy - yx


def anticommutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y + y * x


def commutator_subspace(A: SuperAlgebra) -> Subspace:
    """Span of all supercommutators of basis elements, canonical form [A, A]."""
    ech = Echelon()
    for i in range(A.dim):
        for j in range(i, A.dim):
            c = commutator(A.el(i), A.el(j)).coords
            if c:
                ech.insert(dict(c))
    return Subspace(A.space, ech.rref_rows())


def two_sided_ideal(A: SuperAlgebra, generators) -> Subspace:
    """Smallest subspace containing the generators and closed under both
    multiplications by basis elements."""
    ech = Echelon()
    queue = []
    for g in generators:
        coords = g.coords if isinstance(g, AlgebraElement) else dict(g)
        if coords and ech.insert(dict(coords)):
            queue.append(dict(coords))
    while queue:
        v = queue.pop()
        for i in range(A.dim):
            e = A.basis_vec(i)
            for prod in (A.mul_coords(e, v), A.mul_coords(v, e)):
                if prod and ech.insert(dict(prod)):
                    queue.append(prod)
    return Subspace(A.space, ech.rref_rows())


def an_vanishing_check(R: SuperAlgebra, n: int) -> GradedDim:
    """Graded dimension of (R(x)Q1)/<n*1, [S,S]> where S = R(x)Q1.

    The characteristic must be 0 or coprime to n, otherwise n*1 is not a
    unit for the wrong reason.
    """
    p = R.field.characteristic
    if p and n % p == 0:
        raise ScalarError("characteristic %d divides n=%d" % (p, n))
    S = tensor(R, build_q1(R.field))
    gens = [dict((k, R.field.from_int(n) * v) for k, v in S.unit.items())]
    comm = commutator_subspace(S)
    gens.extend(dict(r) for r in comm.rows)
    ideal = two_sided_ideal(S, gens)
    ambient = S.space.graded_dim
    cut = ideal.graded_dim
    return GradedDim(ambient.even - cut.even, ambient.odd - cut.odd)


# ---------------------------------------------------------------- builders

def build_base_field(field: Field) -> SuperAlgebra:
    space = GradedSpace(("1",), (0,))
    return SuperAlgebra(field, space, {(0, 0): {0: field.one}}, {0: field.one}, name="base-field")


def build_q1(field: Field) -> SuperAlgebra:
    """k + k*nu, nu odd, nu^2 = 1."""
    space = GradedSpace(("1", "nu"), (0, 1))
    one = field.one
    products = {
        (0, 0): {0: one},
        (0, 1): {1: one},
        (1, 0): {1: one},
        (1, 1): {0: one},
    }
    return SuperAlgebra(field, space, products, {0: one}, name="q1")


def build_grassmann(field: Field, k: int) -> SuperAlgebra:
    """Exterior algebra on k odd generators; dimension 2^k."""
    if k < 0:
        raise ValueError("grassmann needs k >= 0")
    subsets = []
    for mask in range(1 << k):
        subsets.append(tuple(i for i in range(k) if mask >> i & 1))
    index = {s: n for n, s in enumerate(subsets)}
    labels = ["1" if not s else "".join("x%d" % (i + 1) for i in s) for s in subsets]
    parities = [len(s) % 2 for s in subsets]
    space = GradedSpace(labels, parities)
    one = field.one
    products = {}
    for a in subsets:
        for b in subsets:
            if set(a) & set(b):
                continue
            merged = tuple(sorted(a + b))
            # sign of the shuffle sorting a+b
            seq = list(a + b)
            sign = 1
            for i in range(len(seq)):
                for j in range(i + 1, len(seq)):
                    if seq[i] > seq[j]:
                        sign = -sign
            products[(index[a], index[b])] = {index[merged]: one if sign > 0 else -one}
    return SuperAlgebra(field, space, products, {0: one}, name="grassmann(%d)" % k)


def build_truncated_poly(field: Field, m: int) -> SuperAlgebra:
    """k[x]/(x^m), all even."""
    if m < 1:
        raise ValueError("truncated-poly needs m >= 1")
    labels = ["1"] + ["x^%d" % d if d > 1 else "x" for d in range(1, m)]
    space = GradedSpace(labels, (0,) * m)
    one = field.one
    products = {}
    for i in range(m):
        for j in range(m):
            if i + j < m:
                products[(i, j)] = {i + j: one}
    return SuperAlgebra(field, space, products, {0: one}, name="truncated-poly(%d)" % m)


def build_monogenic(field: Field, coeffs) -> SuperAlgebra:
    """k[x]/(f) for monic integer f given by ascending coefficients.

    coeffs = (c0, ..., c_{d-1}, 1), degree d >= 1.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) < 2 or coeffs[-1] != 1:
        raise ValueError("monogenic needs a monic polynomial of degree >= 1")
    d = len(coeffs) - 1
    # x^d = -(c0 + c1 x + ... + c_{d-1} x^{d-1})
    top = {i: field.from_int(-coeffs[i]) for i in range(d) if coeffs[i]}
    powers = [dict() for _ in range(2 * d - 1)]
    for i in range(d):
        powers[i] = {i: field.one}
    for e in range(d, 2 * d - 1):
        prev = powers[e - 1]
        nxt = {}
        for i, v in prev.items():
            if i + 1 < d:
                nxt[i + 1] = nxt.get(i + 1, field.zero) + v
            else:
                for t, c in top.items():
                    nxt[t] = nxt.get(t, field.zero) + v * c
        powers[e] = {k: v for k, v in nxt.items() if v}
    labels = ["1"] + ["x^%d" % i if i > 1 else "x" for i in range(1, d)]
    space = GradedSpace(labels, (0,) * d)
    products = {}
    for i in range(d):
        for j in range(d):
            tbl = powers[i + j]
            if tbl:
                products[(i, j)] = dict(tbl)
    name = "monogenic(%s)" % format_poly(coeffs)
    return SuperAlgebra(field, space, products, {0: field.one}, name=name)


def build_group_algebra(field: Field, m: int) -> SuperAlgebra:
    """k[t]/(t^m - 1), the cyclic group algebra, all even."""
    if m < 1:
        raise ValueError("group-algebra needs m >= 1")
    labels = ["1"] + ["t^%d" % d if d > 1 else "t" for d in range(1, m)]
    space = GradedSpace(labels, (0,) * m)
    one = field.one
    products = {}
    for i in range(m):
        for j in range(m):
            products[(i, j)] = {(i + j) % m: one}
    return SuperAlgebra(field, space, products, {0: one}, name="group-algebra(%d)" % m)


def build_matrix(field: Field, k: int) -> SuperAlgebra:
    """Full matrix algebra M_k, all even."""
    if k < 1:
        raise ValueError("matrix needs k >= 1")
    labels = ["E%d%d" % (i + 1, j + 1) for i in range(k) for j in range(k)]
    space = GradedSpace(labels, (0,) * (k * k))
    one = field.one
    products = {}
    for i in range(k):
        for j in range(k):
            for l in range(k):
                # E_ij E_jl = E_il
                products[(i * k + j, j * k + l)] = {i * k + l: one}
    unit = {i * k + i: one for i in range(k)}
    return SuperAlgebra(field, space, products, unit, name="matrix(%d)" % k)


def build_square_zero_plane(field: Field) -> SuperAlgebra:
    """k[x,y]/(x,y)^2: basis 1, x, y with xx = xy = yx = yy = 0."""
    space = GradedSpace(("1", "x", "y"), (0, 0, 0))
    one = field.one
    products = {
        (0, 0): {0: one},
        (0, 1): {1: one},
        (0, 2): {2: one},
        (1, 0): {1: one},
        (2, 0): {2: one},
    }
    return SuperAlgebra(field, space, products, {0: one}, name="square-zero-plane")


_POLY_TERM = re.compile(r"^([+-]?\d*)(?:(x)(?:\^(\d+))?)?$")


def parse_poly(text: str):
    """Ascending coefficient tuple of an integer polynomial in x."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    coeffs = {}
    for chunk in chunks:
        m = _POLY_TERM.match(chunk)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError("bad polynomial term: %r" % chunk)
        coef_txt, has_x, exp_txt = m.groups()
        if coef_txt in ("", "+"):
            coef = 1
        elif coef_txt == "-":
            coef = -1
        else:
            coef = int(coef_txt)
        if has_x:
            exp = int(exp_txt) if exp_txt else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + coef
    deg = max(e for e, c in coeffs.items() if c) if any(coeffs.values()) else 0
    return tuple(coeffs.get(e, 0) for e in range(deg + 1))


def format_poly(coeffs) -> str:
    bits = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            term = str(abs(c))
        else:
            base = "x" if e == 1 else "x^%d" % e
            term = base if abs(c) == 1 else "%d%s" % (abs(c), base)
        if not bits:
            bits.append(term if c > 0 else "-" + term)
        else:
            bits.append(("+" if c > 0 else "-") + term)
    return "".join(bits) or "0"


_TAG_RE = re.compile(r"^([a-z0-9-]+)(?:\((.*)\))?$")

BUILTIN_FAMILIES = (
    "base-field",
    "q1",
    "grassmann",
    "truncated-poly",
    "monogenic",
    "group-algebra",
    "matrix",
    "square-zero-plane",
)


def build_builtin(tag: str, field: Field) -> SuperAlgebra:
    """Builtin catalog: e.g. grassmann(2), monogenic(x^2-2), matrix(2)."""
    m = _TAG_RE.match(tag.strip())
    if not m:
        raise ValueError("bad builtin tag: %r" % tag)
    family, arg = m.group(1), m.group(2)
    if family not in BUILTIN_FAMILIES:
        raise ValueError("unknown builtin family: %r" % family)
    if family == "base-field":
        return build_base_field(field)
    if family == "q1":
        return build_q1(field)
    if family == "square-zero-plane":
        return build_square_zero_plane(field)
    if arg is None:
        raise ValueError("builtin %s needs an argument" % family)
    if family == "grassmann":
        return build_grassmann(field, int(arg))
    if family == "truncated-poly":
        return build_truncated_poly(field, int(arg))
    if family == "group-algebra":
        return build_group_algebra(field, int(arg))
    if family == "matrix":
        return build_matrix(field, int(arg))
    if family == "monogenic":
        return build_monogenic(field, parse_poly(arg))
    raise ValueError("unhandled builtin: %r" % tag)
