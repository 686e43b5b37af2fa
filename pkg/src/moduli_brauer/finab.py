"""Finite abelian groups with exact integer linear algebra.

Everything in this module is exact.  Matrices are plain lists of Python
ints (rows of columns-entries), values in Q/Z are held as reduced
fractions, and the central primitive is an integer Smith normal form
with recorded unimodular transforms.

A group is always carried together with a presentation: the ambient
free group Z^m modulo the column span of a relation matrix.  Elements
are ambient integer vectors; two vectors represent the same element
exactly when their difference lies in the relation lattice.  The
canonical form (invariant factors d_1 | d_2 | ... , each >= 2) and the
coordinate transforms in both directions are computed once at
construction, so identical inputs always produce bit-identical
presentations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

__all__ = [
    "QmodZ",
    "smith_normal_form",
    "FinAbGroup",
    "GroupHom",
    "subgroup",
    "quotient",
    "kernel",
    "image_cokernel",
    "preimage",
    "dual",
    "dual_pairing",
    "exterior_square",
    "direct_sum",
    "power",
    "schur_multiplier_oracle",
]


# ---------------------------------------------------------------------------
# small exact-matrix helpers (lists of lists of int)


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def mat_copy(m: list[list[int]]) -> list[list[int]]:
    return [row[:] for row in m]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    oi[j] += aik * bk[j]
    return out


def mat_vec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def mat_cols(m: list[list[int]]) -> int:
    return len(m[0]) if m else 0


def block_diagonal(blocks: list[list[list[int]]]) -> list[list[int]]:
    total_rows = sum(len(b) for b in blocks)
    total_cols = sum(mat_cols(b) for b in blocks)
    out = zero_matrix(total_rows, total_cols)
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[r0 + i][c0 : c0 + len(row)] = row
        r0 += len(b)
        c0 += mat_cols(b)
    return out


def column(m: list[list[int]], j: int) -> list[int]:
    return [row[j] for row in m]


def columns(m: list[list[int]]) -> list[list[int]]:
    return [column(m, j) for j in range(mat_cols(m))]


def from_columns(cols: list[list[int]], rows: int) -> list[list[int]]:
    return [[c[i] for c in cols] for i in range(rows)]


# ---------------------------------------------------------------------------
# Q/Z values


@dataclass(frozen=True)
class QmodZ:
    """A residue in Q/Z, stored reduced with 0 <= numerator < denominator.

    >>> QmodZ.from_fraction(Fraction(7, 4))
    QmodZ(3/4)
    >>> QmodZ.from_fraction(Fraction(-1, 3)) + QmodZ.from_fraction(Fraction(2, 3))
    QmodZ(1/3)
    >>> QmodZ.from_fraction(Fraction(5, 10)).order()
    2
    """

    numerator: int
    denominator: int

    @staticmethod
    def from_fraction(f: Fraction) -> "QmodZ":
        f = f - (f.numerator // f.denominator)
        return QmodZ(f.numerator, f.denominator)

    @staticmethod
    def zero() -> "QmodZ":
        return QmodZ(0, 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other: "QmodZ") -> "QmodZ":
        return QmodZ.from_fraction(self.as_fraction() + other.as_fraction())

    def __neg__(self) -> "QmodZ":
        return QmodZ.from_fraction(-self.as_fraction())

    def scaled(self, k: int) -> "QmodZ":
        return QmodZ.from_fraction(k * self.as_fraction())

    def is_zero(self) -> bool:
        return self.numerator == 0

    def order(self) -> int:
        """Additive order: the smallest k >= 1 with k*self = 0."""
        return self.denominator

    def __repr__(self) -> str:
        return f"QmodZ({self.numerator}/{self.denominator})"

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(
    matrix: list[list[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Exact Smith normal form with recorded transforms.

    Returns (U, S, V) with U * matrix * V = S, where U and V are
    unimodular and S is diagonal with nonnegative entries satisfying
    S[0][0] | S[1][1] | ... .  The computation is deterministic: the
    pivot is always the smallest nonzero entry in absolute value of the
    remaining submatrix, ties broken by lowest row index, then lowest
    column index.

    >>> U, S, V = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    >>> [S[i][i] for i in range(3)]
    [2, 2, 156]
    >>> from moduli_brauer.finab import mat_mul
    >>> mat_mul(mat_mul(U, [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]), V) == S
    True
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = identity_matrix(rows)
    v = identity_matrix(cols)
    t = 0
    limit = min(rows, cols)
    while t < limit:
        # deterministic pivot: smallest |entry|, then lowest row, lowest column
        pi = pj = -1
        pval = 0
        for i in range(t, rows):
            mi = m[i]
            for j in range(t, cols):
                a = mi[j]
                if a != 0 and (pval == 0 or abs(a) < abs(pval)):
                    pi, pj, pval = i, j, a
        if pval == 0:
            break
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        pivot = m[t][t]
        dirty = False
        for i in range(t + 1, rows):
            q = m[i][t] // pivot
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                u[i] = [a - q * b for a, b in zip(u[i], u[t])]
            if m[i][t]:
                dirty = True
        for j in range(t + 1, cols):
            q = m[t][j] // pivot
            if q:
                for row in m:
                    row[j] -= q * row[t]
                for row in v:
                    row[j] -= q * row[t]
            if m[t][j]:
                dirty = True
        if dirty:
            continue  # residues are smaller than the pivot; re-select
        fix = -1
        for i in range(t + 1, rows):
            if any(m[i][j] % pivot for j in range(t + 1, cols)):
                fix = i
                break
        if fix >= 0:
            # fold the offending row into the pivot row and restart the step
            m[t] = [a + b for a, b in zip(m[t], m[fix])]
            u[t] = [a + b for a, b in zip(u[t], u[fix])]
            continue
        t += 1
    return u, m, v


def snf_diagonal(matrix: list[list[int]]) -> list[int]:
    _, s, _ = smith_normal_form(matrix)
    return [s[i][i] for i in range(min(len(s), mat_cols(s)))]


# ---------------------------------------------------------------------------
# integer lattice helpers


def lattice_solve(lat: list[list[int]], vec: list[int]) -> list[int] | None:
    """Solve lat * x = vec over Z, or return None.

    ``lat`` is read as a matrix whose columns generate a lattice; a
    solution expresses ``vec`` as an integer combination of them.
    """
    rows = len(lat)
    cols = mat_cols(lat)
    if rows != len(vec):
        raise ValueError("dimension mismatch")
    if cols == 0:
        return [] if all(x == 0 for x in vec) else None
    u, s, v = smith_normal_form(lat)
    w = mat_vec(u, vec)
    y = [0] * cols
    for i in range(rows):
        si = s[i][i] if i < min(rows, cols) else 0
        if si:
            if w[i] % si:
                return None
            y[i] = w[i] // si
        elif w[i]:
            return None
    return mat_vec(v, y)


def kernel_columns(matrix: list[list[int]]) -> list[list[int]]:
    """A basis (as a list of columns) of the integer kernel of the matrix."""
    rows = len(matrix)
    cols = mat_cols(matrix)
    if cols == 0:
        return []
    _, s, v = smith_normal_form(matrix)
    rank = sum(1 for i in range(min(rows, cols)) if s[i][i])
    return [column(v, j) for j in range(rank, cols)]


def preimage_lattice(f: list[list[int]], rel: list[list[int]]) -> list[list[int]]:
    """Columns generating {x : f*x lies in the column span of rel}."""
    cols_f = mat_cols(f)
    if cols_f == 0:
        return []
    stacked = [f[i] + rel[i] for i in range(len(f))] if rel and mat_cols(rel) else f
    ker = kernel_columns(stacked)
    return [k[:cols_f] for k in ker]


# ---------------------------------------------------------------------------
# groups


class FinAbGroup:
    """A finite abelian group presented as Z^m modulo a relation lattice.

    Ambient coordinates are integer vectors of length ``ambient_rank``.
    ``invariant_factors`` lists the canonical cyclic orders
    d_1 | d_2 | ... (all >= 2; the trivial group has an empty list) and
    the transform pair maps ambient coordinates to canonical ones and
    back:

    >>> g = FinAbGroup.from_relations([[2, 0], [0, 3]])
    >>> g.invariant_factors
    [6]
    >>> g.order()
    6
    >>> g.canonical_coords([1, 1])   # a generator of the cyclic group
    (5,)
    >>> g.element_order([1, 1])
    6
    >>> FinAbGroup.from_invariants([2, 4]).exponent()
    4
    """

    __slots__ = ("relations", "invariant_factors", "to_canonical", "from_canonical")

    def __init__(
        self,
        relations: list[list[int]],
        invariant_factors: list[int],
        to_canonical: list[list[int]],
        from_canonical: list[list[int]],
    ) -> None:
        self.relations = relations
        self.invariant_factors = invariant_factors
        self.to_canonical = to_canonical
        self.from_canonical = from_canonical

    # -- construction

    @staticmethod
    def from_relations(relations: list[list[int]]) -> "FinAbGroup":
        """Quotient of Z^m by the column span of ``relations``.

        Raises ValueError if the quotient is infinite.
        """
        rows = len(relations)
        cols = mat_cols(relations)
        if rows == 0:
            return FinAbGroup([], [], [], [])
        u, s, v = smith_normal_form(relations)
        diag = [s[i][i] for i in range(min(rows, cols))]
        rank = sum(1 for d in diag if d)
        if rank < rows:
            raise ValueError("relation lattice has deficient rank: quotient is infinite")
        keep = [i for i in range(rows) if diag[i] > 1]
        inv = [diag[i] for i in keep]
        to_can = [u[i][:] for i in keep]
        rv = mat_mul(relations, v)
        from_can_cols = []
        for i in keep:
            col = column(rv, i)
            if any(x % diag[i] for x in col):
                raise AssertionError("transform reconstruction failed")
            from_can_cols.append([x // diag[i] for x in col])
        from_can = from_columns(from_can_cols, rows)
        return FinAbGroup(mat_copy(relations), inv, to_can, from_can)

    @staticmethod
    def from_invariants(ds: list[int]) -> "FinAbGroup":
        """Direct construction from a divisibility chain (each entry >= 2)."""
        ds = list(ds)
        for i, d in enumerate(ds):
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if i and ds[i] % ds[i - 1]:
                raise ValueError("invariant factors must form a divisibility chain")
        n = len(ds)
        rel = [[ds[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return FinAbGroup(rel, ds, identity_matrix(n), identity_matrix(n))

    @staticmethod
    def trivial() -> "FinAbGroup":
        return FinAbGroup.from_invariants([])

    # -- basic data

    @property
    def ambient_rank(self) -> int:
        return len(self.relations)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def order(self) -> int:
        return prod(self.invariant_factors)

    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def same_invariants(self, other: "FinAbGroup") -> bool:
        return self.invariant_factors == other.invariant_factors

    # -- elements

    def zero(self) -> list[int]:
        return [0] * self.ambient_rank

    def canonical_coords(self, x: list[int]) -> tuple[int, ...]:
        if len(x) != self.ambient_rank:
            raise ValueError("ambient coordinate length mismatch")
        return tuple(
            sum(row[k] * x[k] for k in range(len(x))) % d
            for row, d in zip(self.to_canonical, self.invariant_factors)
        )

    def element_from_canonical(self, coords: tuple[int, ...] | list[int]) -> list[int]:
        coords = list(coords)
        if len(coords) != self.rank:
            raise ValueError("canonical coordinate length mismatch")
        return mat_vec(self.from_canonical, coords) if self.rank else self.zero()

    def canonical_generators(self) -> list[list[int]]:
        return [column(self.from_canonical, j) for j in range(self.rank)]

    def is_zero_element(self, x: list[int]) -> bool:
        return all(c == 0 for c in self.canonical_coords(x))

    def elements(self) -> list[list[int]]:
        """All elements (ambient coordinates).  Only for small groups."""
        out = []
        for coords in itertools.product(*(range(d) for d in self.invariant_factors)):
            out.append(self.element_from_canonical(coords))
        return out

    def element_order(self, x: list[int]) -> int:
        coords = self.canonical_coords(x)
        return lcm(*(d // gcd(c, d) for c, d in zip(coords, self.invariant_factors))) if coords else 1

    def __repr__(self) -> str:
        if not self.invariant_factors:
            return "FinAbGroup(trivial)"
        desc = " + ".join(f"Z/{d}" for d in self.invariant_factors)
        return f"FinAbGroup({desc})"


# ---------------------------------------------------------------------------
# homomorphisms


class GroupHom:
    """A homomorphism between presented groups, given on ambient coordinates.

    ``matrix`` has shape target.ambient_rank x source.ambient_rank.  At
    construction the map is certified to be well defined: every source
    relation must land in the target relation lattice.  A matrix that
    fails the certificate raises ValueError instead of silently
    defining a non-map.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FinAbGroup, target: FinAbGroup, matrix: list[list[int]]):
        if len(matrix) != target.ambient_rank:
            raise ValueError("hom matrix row count must equal target ambient rank")
        for row in matrix:
            if len(row) != source.ambient_rank:
                raise ValueError("hom matrix column count must equal source ambient rank")
        for j in range(mat_cols(source.relations)):
            image_of_relation = mat_vec(matrix, column(source.relations, j))
            if lattice_solve(target.relations, image_of_relation) is None:
                raise ValueError("matrix does not send source relations into target relations")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, x: list[int]) -> list[int]:
        return mat_vec(self.matrix, x)

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other (other first)."""
        if other.target is not self.source and not other.target.same_invariants(self.source):
            raise ValueError("composition mismatch")
        return GroupHom(other.source, self.target, mat_mul(self.matrix, other.matrix))

    def is_zero(self) -> bool:
        return all(
            self.target.is_zero_element(self.apply(col))
            for col in identity_matrix(self.source.ambient_rank)
        ) if self.source.ambient_rank else True

    @staticmethod
    def identity(group: FinAbGroup) -> "GroupHom":
        return GroupHom(group, group, identity_matrix(group.ambient_rank))

    @staticmethod
    def zero_map(source: FinAbGroup, target: FinAbGroup) -> "GroupHom":
        return GroupHom(source, target, zero_matrix(target.ambient_rank, source.ambient_rank))


# ---------------------------------------------------------------------------
# constructions


def subgroup(group: FinAbGroup, gens: list[list[int]]) -> tuple[FinAbGroup, GroupHom]:
    """Subgroup generated by the given ambient vectors.

    Returns (S, incl) where S has one ambient coordinate per generator
    and incl maps those coordinates back into the big group.

    >>> a = FinAbGroup.from_invariants([4])
    >>> s, incl = subgroup(a, [[2]])
    >>> s.invariant_factors
    [2]
    """
    g = from_columns(gens, group.ambient_rank) if gens else zero_matrix(group.ambient_rank, 0)
    if gens and group.ambient_rank:
        rel_cols = preimage_lattice(g, group.relations)
        rel = from_columns(rel_cols, len(gens))
    else:
        # ambient rank 0: every generator is zero, all relations hold
        rel = identity_matrix(len(gens)) if gens else []
    sub = FinAbGroup.from_relations(rel)
    incl = GroupHom(sub, group, g)
    return sub, incl


def quotient(group: FinAbGroup, gens: list[list[int]]) -> tuple[FinAbGroup, GroupHom]:
    """Quotient by the subgroup generated by the given ambient vectors.

    The quotient keeps the same ambient coordinates; the projection is
    the identity matrix.

    >>> a = FinAbGroup.from_invariants([4])
    >>> q, proj = quotient(a, [[2]])
    >>> q.invariant_factors
    [2]
    """
    extra = from_columns(gens, group.ambient_rank) if gens else zero_matrix(group.ambient_rank, 0)
    rel = [group.relations[i] + extra[i] for i in range(group.ambient_rank)]
    quot = FinAbGroup.from_relations(rel)
    proj = GroupHom(group, quot, identity_matrix(group.ambient_rank))
    return quot, proj


def kernel(f: GroupHom) -> tuple[FinAbGroup, GroupHom]:
    """Kernel of a homomorphism, as (K, inclusion into the source)."""
    lat = preimage_lattice(f.matrix, f.target.relations)
    return subgroup(f.source, lat)


def image_cokernel(f: GroupHom) -> tuple[FinAbGroup, GroupHom, FinAbGroup, GroupHom]:
    """Image and cokernel of a homomorphism.

    Returns (image, image_inclusion, cokernel, projection).  The order
    identity |image| * |cokernel| = |target| is asserted.
    """
    gens = [f.apply(col) for col in columns(identity_matrix(f.source.ambient_rank))]
    img, incl = subgroup(f.target, gens)
    cok, proj = quotient(f.target, gens)
    if img.order() * cok.order() != f.target.order():
        raise AssertionError("image/cokernel order identity violated")
    return img, incl, cok, proj


def preimage(f: GroupHom, y: list[int]) -> list[int] | None:
    """Some x with f(x) = y in the target, or None if y is not hit."""
    stacked_cols = columns(f.matrix) + columns(f.target.relations)
    stacked = from_columns(stacked_cols, f.target.ambient_rank)
    sol = lattice_solve(stacked, y)
    if sol is None:
        return None
    return sol[: f.source.ambient_rank]


def contains_element(group: FinAbGroup, gens: list[list[int]], x: list[int]) -> bool:
    """Is x in the subgroup of ``group`` generated by ``gens``?"""
    _, incl = subgroup(group, gens)
    return preimage(incl, x) is not None


def dual(group: FinAbGroup) -> FinAbGroup:
    """The character group Hom(A, Q/Z), canonically presented.

    Dual ambient coordinates c pair with group elements x through
    ``dual_pairing``: the value is sum_j c_j * canon(x)_j / d_j.
    """
    return FinAbGroup.from_invariants(list(group.invariant_factors))


def dual_pairing(group: FinAbGroup, char: list[int], x: list[int]) -> QmodZ:
    coords = group.canonical_coords(x)
    total = Fraction(0)
    for c, val, d in zip(char, coords, group.invariant_factors):
        total += Fraction(c * val, d)
    return QmodZ.from_fraction(total)


def exterior_square(group: FinAbGroup) -> FinAbGroup:
    """Exterior square of a finite abelian group.

    For A = Z/d_1 + ... + Z/d_k (divisibility chain) this is the direct
    sum of Z/gcd(d_i, d_j) over i < j, i.e. Z/d_i appears k-1-i times.

    >>> exterior_square(FinAbGroup.from_invariants([2, 2, 2])).invariant_factors
    [2, 2, 2]
    >>> exterior_square(FinAbGroup.from_invariants([15])).invariant_factors
    []
    """
    ds = group.invariant_factors
    k = len(ds)
    chain = []
    for i in range(k):
        chain.extend([ds[i]] * (k - 1 - i))
    return FinAbGroup.from_invariants(chain)


def direct_sum(a: FinAbGroup, b: FinAbGroup) -> FinAbGroup:
    """Direct sum with concatenated ambient coordinates.

    >>> direct_sum(FinAbGroup.from_invariants([4]), FinAbGroup.from_invariants([6])).invariant_factors
    [2, 12]
    """
    return FinAbGroup.from_relations(block_diagonal([a.relations, b.relations]))


def power(a: FinAbGroup, copies: int) -> FinAbGroup:
    """Direct sum of ``copies`` copies of ``a``, built without elimination.

    The ambient coordinates are the concatenation of ``copies`` blocks
    of a's ambient coordinates, in order.
    """
    if copies < 0:
        raise ValueError("copies must be >= 0")
    if copies == 0 or a.ambient_rank == 0:
        return FinAbGroup.trivial()
    amb = a.ambient_rank
    rel = block_diagonal([a.relations] * copies)
    inv = []
    to_can = []
    from_can_cols = []
    for i, d in enumerate(a.invariant_factors):
        for j in range(copies):
            inv.append(d)
            row = [0] * (amb * copies)
            row[j * amb : (j + 1) * amb] = a.to_canonical[i]
            to_can.append(row)
            col = [0] * (amb * copies)
            src = column(a.from_canonical, i)
            col[j * amb : (j + 1) * amb] = src
            from_can_cols.append(col)
    from_can = from_columns(from_can_cols, amb * copies)
    return FinAbGroup(rel, inv, to_can, from_can)


def hom_from_images(
    source: FinAbGroup, target: FinAbGroup, images: list[list[int]]
) -> GroupHom:
    """Homomorphism sending the j-th canonical generator to ``images[j]``.

    ``images`` are target ambient vectors, one per canonical generator
    of the source.  The assignment extends to all of the source through
    canonical coordinates; the GroupHom certificate then rejects
    assignments that do not define a homomorphism.
    """
    if len(images) != source.rank:
        raise ValueError("need one image per canonical generator")
    amb = source.ambient_rank
    cols = []
    for t in range(amb):
        e = [0] * amb
        e[t] = 1
        coords = source.canonical_coords(e)
        col = [0] * target.ambient_rank
        for j, c in enumerate(coords):
            if c:
                for r in range(target.ambient_rank):
                    col[r] += c * images[j][r]
        cols.append(col)
    return GroupHom(source, target, from_columns(cols, target.ambient_rank))


def merged_invariants(*chains: list[int]) -> list[int]:
    """Invariant factors of the direct sum of groups given by invariant chains.

    Works on the prime-power multiset, so no matrix elimination is
    needed; handy when the summands are large but the entries small.

    >>> merged_invariants([4], [6])
    [2, 12]
    >>> merged_invariants([2, 4], [3])
    [2, 12]
    """
    powers: dict[int, list[int]] = {}
    for chain in chains:
        for d in chain:
            if d < 1:
                raise ValueError("invariant factors must be positive")
            rest = d
            p = 2
            while p * p <= rest:
                if rest % p == 0:
                    e = 0
                    while rest % p == 0:
                        rest //= p
                        e += 1
                    powers.setdefault(p, []).append(p**e)
                p += 1
            if rest > 1:
                powers.setdefault(rest, []).append(rest)
    for plist in powers.values():
        plist.sort(reverse=True)
    depth = max((len(v) for v in powers.values()), default=0)
    out = []
    for i in range(depth):
        d = 1
        for plist in powers.values():
            if i < len(plist):
                d *= plist[i]
        out.append(d)
    out.reverse()
    return out


def from_invariant_sum(*groups: FinAbGroup) -> FinAbGroup:
    """Abstract direct sum in canonical form, skipping elimination."""
    return FinAbGroup.from_invariants(
        merged_invariants(*(g.invariant_factors for g in groups))
    )


# ---------------------------------------------------------------------------
# Schur multiplier oracle (brute force, small groups only)


def _numpy_snf_torsion(mat) -> list[int]:
    """Invariant factors (> 1) of the cokernel of an int64 numpy matrix.

    Vectorized Smith elimination.  Entries are checked against an
    overflow guard after every pivot; inputs here are tiny bar-complex
    differentials, far below the bound in practice.
    """
    import numpy as np

    m = mat.astype(np.int64).copy()
    rows, cols = m.shape
    t = 0
    limit = min(rows, cols)
    guard = 1 << 40
    while t < limit:
        sub = m[t:, t:]
        abs_sub = np.abs(sub)
        if not abs_sub.any():
            break
        # a +-1 pivot clears its row and column in a single pass and can
        # never violate divisibility, so take one whenever available
        ones = abs_sub == 1
        if ones.any():
            flat = int(np.argmax(ones))
        else:
            masked = np.where(abs_sub == 0, np.iinfo(np.int64).max, abs_sub)
            flat = int(np.argmin(masked))
        pi, pj = divmod(flat, sub.shape[1])
        pi += t
        pj += t
        if pi != t:
            m[[t, pi], :] = m[[pi, t], :]
        if pj != t:
            m[:, [t, pj]] = m[:, [pj, t]]
        if m[t, t] < 0:
            m[t, :] = -m[t, :]
        pivot = int(m[t, t])
        col = m[t + 1 :, t]
        if col.any():
            q = col // pivot
            m[t + 1 :, :] -= np.outer(q, m[t, :])
        row = m[t, t + 1 :]
        if row.any():
            q = row // pivot
            m[:, t + 1 :] -= np.outer(m[:, t], q)
        if int(np.abs(m).max()) >= guard:
            raise OverflowError("entries exceeded the elimination guard")
        if m[t + 1 :, t].any() or m[t, t + 1 :].any():
            continue
        if pivot != 1:
            rem = m[t + 1 :, t + 1 :] % pivot
            if rem.any():
                bad = int(np.nonzero(rem.any(axis=1))[0][0]) + t + 1
                m[t, :] += m[bad, :]
                continue
        t += 1
    return [int(m[i, i]) for i in range(limit) if int(m[i, i]) > 1]


def schur_multiplier_oracle(group: FinAbGroup) -> list[int]:
    """Invariant factors of H^2(A, C*) computed by brute force.

    Classes of 2-cocycles valued in roots of unity modulo coboundaries
    of the full multiplicative group are, dually, the degree-2 homology
    of the normalized bar complex with integer coefficients.  This
    routine builds the degree-3 bar differential explicitly from the
    multiplication table and reads the invariant factors off its
    cokernel, so it never consults the exterior-square formula it is
    used to certify.

    Intended for |A| <= 16 (the matrix has (|A|-1)^3 columns).

    >>> schur_multiplier_oracle(FinAbGroup.from_invariants([2, 2]))
    [2]
    >>> schur_multiplier_oracle(FinAbGroup.from_invariants([12]))
    []
    """
    import numpy as np

    n = group.order()
    if n > 16:
        raise ValueError("oracle is restricted to groups of order <= 16")
    if n == 1:
        return []
    ds = group.invariant_factors
    elems = list(itertools.product(*(range(d) for d in ds)))
    index = {e: i for i, e in enumerate(elems)}

    def add(x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, ds))

    zero = elems[0]
    nonzero = [e for e in elems if e != zero]
    pair_index = {}
    for i, x in enumerate(nonzero):
        for j, y in enumerate(nonzero):
            pair_index[(x, y)] = i * len(nonzero) + j
    n1 = len(nonzero)
    d3 = np.zeros((n1 * n1, n1 * n1 * n1), dtype=np.int64)
    col = 0
    for a in nonzero:
        for b in nonzero:
            ab = add(a, b)
            for c in nonzero:
                bc = add(b, c)
                d3[pair_index[(b, c)], col] += 1
                if ab != zero:
                    d3[pair_index[(ab, c)], col] -= 1
                if bc != zero:
                    d3[pair_index[(a, bc)], col] += 1
                d3[pair_index[(a, b)], col] -= 1
                col += 1
    return _numpy_snf_torsion(d3)
