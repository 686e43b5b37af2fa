"""Root data for the simple Dynkin types, with exact centers and linking forms.

Simple roots are realized in Euclidean coordinates over the rationals
(standard realizations, one per family).  From those the module derives
Cartan matrices, the Gram matrix of the basic even invariant form on
the coroot lattice, and the center of the simply connected group as a
finite abelian group: the quotient of the coweight lattice by the
coroot lattice, carrying a Q/Z-valued linking form induced by the basic
form.

Conventions used throughout:

* vectors are tuples/lists of ``Fraction``; nothing is ever a float;
* the coroot of a root a is 2a/(a,a);
* the basic form is the unique rescaling of the Euclidean pairing on
  the coroot lattice that is integral, even, and gives the short
  coroots self-pairing 2;
* ``center(t)`` presents the quotient in "omega coordinates": ambient
  Z^rank whose basis vectors are the fundamental coweights scaled into
  the coweight lattice (column i of the basis solves B x = n_i e_i with
  n_i = B_ii / 2).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .finab import (
    FinAbGroup,
    GroupHom,
    QmodZ,
    block_diagonal,
    column,
    contains_element,
    from_columns,
    kernel,
    smith_normal_form,
    subgroup,
)

__all__ = [
    "DynkinType",
    "CenterData",
    "GroupSpec",
    "simple_roots",
    "cartan_matrix",
    "coroot_gram",
    "center",
    "product_center",
    "named_subgroup",
    "max_rank",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}

DEFAULT_MAX_RANK = 64


def max_rank() -> int:
    """Rank cap for a whole group spec, configurable via environment."""
    raw = os.environ.get("MODULI_BRAUER_MAX_RANK", "")
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_RANK
    return value if value >= 1 else DEFAULT_MAX_RANK


@dataclass(frozen=True)
class DynkinType:
    """A simple Dynkin type: family letter plus rank.

    >>> DynkinType("A", 3)
    DynkinType(A3)
    >>> DynkinType("D", 3).rank   # accepted; same root system as A3
    3
    >>> DynkinType("E", 9)
    Traceback (most recent call last):
        ...
    ValueError: E9 is not a valid Dynkin type
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam = self.family
        if fam not in _MIN_RANK:
            raise ValueError(f"unknown family {fam!r}")
        lo = _MIN_RANK[fam]
        hi = _MAX_RANK.get(fam, None)
        ok = self.rank >= lo and (hi is None or self.rank <= hi)
        if fam == "E" and self.rank not in (6, 7, 8):
            ok = False
        if not ok:
            raise ValueError(f"{fam}{self.rank} is not a valid Dynkin type")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:
        return f"DynkinType({self})"


def _frac_vec(*entries) -> list[Fraction]:
    return [Fraction(e) for e in entries]


def simple_roots(t: DynkinType) -> list[list[Fraction]]:
    """Simple roots in a rational Euclidean space (standard realizations)."""
    n = t.rank
    fam = t.family
    if fam == "A":
        dim = n + 1
        roots = []
        for i in range(n):
            v = [Fraction(0)] * dim
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
            roots.append(v)
        return roots
    if fam in ("B", "C", "D"):
        dim = n
        roots = []
        for i in range(n - 1):
            v = [Fraction(0)] * dim
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
            roots.append(v)
        last = [Fraction(0)] * dim
        if fam == "B":
            last[n - 1] = Fraction(1)
        elif fam == "C":
            last[n - 1] = Fraction(2)
        else:
            last[n - 2] = Fraction(1)
            last[n - 1] = Fraction(1)
        roots.append(last)
        return roots
    if fam == "E":
        half = Fraction(1, 2)
        e8 = [
            [half, -half, -half, -half, -half, -half, -half, half],
            _frac_vec(1, 1, 0, 0, 0, 0, 0, 0),
            _frac_vec(-1, 1, 0, 0, 0, 0, 0, 0),
            _frac_vec(0, -1, 1, 0, 0, 0, 0, 0),
            _frac_vec(0, 0, -1, 1, 0, 0, 0, 0),
            _frac_vec(0, 0, 0, -1, 1, 0, 0, 0),
            _frac_vec(0, 0, 0, 0, -1, 1, 0, 0),
            _frac_vec(0, 0, 0, 0, 0, -1, 1, 0),
        ]
        return e8[:n]
    if fam == "F":
        return [
            _frac_vec(0, 1, -1, 0),
            _frac_vec(0, 0, 1, -1),
            _frac_vec(0, 0, 0, 1),
            [Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)],
        ]
    # G2 inside the plane x+y+z = 0
    return [
        _frac_vec(1, -1, 0),
        _frac_vec(-2, 1, 1),
    ]


def _dot(u: list[Fraction], v: list[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@lru_cache(maxsize=None)
def _cartan_and_gram(t: DynkinType) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    roots = simple_roots(t)
    n = t.rank
    cartan = []
    for i in range(n):
        row = []
        for j in range(n):
            val = 2 * _dot(roots[i], roots[j]) / _dot(roots[j], roots[j])
            if val.denominator != 1:
                raise AssertionError("Cartan entry not integral")
            row.append(int(val))
        cartan.append(tuple(row))
    coroots = [[2 * x / _dot(r, r) for x in r] for r in roots]
    norms = [_dot(c, c) for c in coroots]
    scale = 2 / min(norms)
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            val = scale * _dot(coroots[i], coroots[j])
            if val.denominator != 1:
                raise AssertionError("Gram entry not integral")
            row.append(int(val))
        gram.append(tuple(row))
    for i in range(n):
        if gram[i][i] % 2:
            raise AssertionError("Gram diagonal must be even")
    return tuple(cartan), tuple(gram)


def cartan_matrix(t: DynkinType) -> list[list[int]]:
    """Cartan matrix, rows indexed like the simple roots.

    Entry (i, j) is 2(a_i, a_j)/(a_j, a_j).

    >>> cartan_matrix(DynkinType("A", 2))
    [[2, -1], [-1, 2]]
    """
    cartan, _ = _cartan_and_gram(t)
    return [list(row) for row in cartan]


def coroot_gram(t: DynkinType) -> list[list[int]]:
    """Gram matrix of the basic even invariant form on the simple coroots.

    Integral, even diagonal, positive definite; short coroots have
    self-pairing 2.

    >>> coroot_gram(DynkinType("C", 2))
    [[4, -2], [-2, 2]]
    """
    _, gram = _cartan_and_gram(t)
    return [list(row) for row in gram]


def _det_int(m: list[list[int]]) -> int:
    _, s, _ = smith_normal_form(m)
    det = 1
    for i in range(len(m)):
        det *= s[i][i]
    return det


def _gauss_solve(m: list[list[Fraction]], rhs_cols: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve m * X = rhs for a square invertible m; columns of rhs/X."""
    n = len(m)
    width = len(rhs_cols)
    a = [m[i][:] + [rhs_cols[j][i] for j in range(width)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [[a[i][n + j] for i in range(n)] for j in range(width)]


def _fraction_inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    eye = [[Fraction(1) if i == j else Fraction(0) for i in range(n)] for j in range(n)]
    sol_cols = _gauss_solve(m, eye)
    return [[sol_cols[j][i] for j in range(n)] for i in range(n)]


@dataclass
class CenterData:
    """Center of a (product of) simply connected group(s) with its linking form.

    ``group`` is presented in omega coordinates (one per simple root
    across all factors).  ``gen_coords`` gives each canonical generator
    as an exact coweight vector in simple-coroot coordinates; ``form``
    is the Q/Z-valued linking pairing on those generators.
    """

    types: tuple[DynkinType, ...]
    group: FinAbGroup
    gen_coords: list[list[Fraction]]
    form: list[list[QmodZ]]
    gram: list[list[int]]
    weight_basis: list[list[Fraction]]  # columns: ambient generator -> coroot coords
    factor_slices: list[tuple[int, int]]  # omega/coroot coordinate ranges per factor

    def pairing(self, x: list[int], y: list[int]) -> QmodZ:
        """Linking form on two elements given in ambient (omega) coordinates."""
        total = Fraction(0)
        xw = self._to_coroot_coords(x)
        yw = self._to_coroot_coords(y)
        for i, row in enumerate(self.gram):
            if xw[i]:
                total += xw[i] * sum(Fraction(row[j]) * yw[j] for j in range(len(row)))
        return QmodZ.from_fraction(total)

    def factor_pairing(self, factor: int, x: list[int], y: list[int]) -> QmodZ:
        """Contribution of one simple factor to the linking form."""
        lo, hi = self.factor_slices[factor]
        xw = self._to_coroot_coords(x)
        yw = self._to_coroot_coords(y)
        total = Fraction(0)
        for i in range(lo, hi):
            if xw[i]:
                total += xw[i] * sum(
                    Fraction(self.gram[i][j]) * yw[j] for j in range(lo, hi)
                )
        return QmodZ.from_fraction(total)

    def _to_coroot_coords(self, x: list[int]) -> list[Fraction]:
        return [
            sum(row[k] * x[k] for k in range(len(x)))
            for row in self.weight_basis
        ]

    def class_of_coweight(self, y: list[Fraction]) -> list[int]:
        """Ambient coordinates of the class of a coweight vector.

        ``y`` is in simple-coroot coordinates and must lie in the
        coweight lattice.
        """
        inv = self._weight_basis_inverse()
        coords = [sum(row[k] * y[k] for k in range(len(y))) for row in inv]
        out = []
        for c in coords:
            if c.denominator != 1:
                raise ValueError("vector is not in the coweight lattice")
            out.append(int(c))
        return out

    def _weight_basis_inverse(self) -> list[list[Fraction]]:
        if not hasattr(self, "_wb_inv"):
            self._wb_inv = _fraction_inverse([row[:] for row in self.weight_basis])
        return self._wb_inv

    def form_order(self, factor: int | None = None) -> int:
        """Additive order of the linking form (of one factor if given)."""
        if factor is None:
            rows = self.form
            return lcm(1, *(v.order() for row in rows for v in row)) if rows else 1
        lo, hi = self.factor_slices[factor]
        gens = self.group.canonical_generators()
        orders = []
        for a in gens:
            for b in gens:
                orders.append(self.factor_pairing(factor, a, b).order())
        return lcm(1, *orders) if orders else 1

    def is_nondegenerate(self) -> bool:
        """Whether x -> b(x, .) embeds the center into its character group."""
        k = self.group.rank
        ds = self.group.invariant_factors
        if k == 0:
            return True
        cols = []
        for i in range(k):
            col = []
            for j in range(k):
                val = self.form[i][j].as_fraction() * ds[j]
                if val.denominator != 1:
                    raise AssertionError("linking form incompatible with orders")
                col.append(int(val) % ds[j])
            cols.append(col)
        from .finab import dual as _dual

        hom = GroupHom(
            FinAbGroup.from_invariants(list(ds)),
            _dual(self.group),
            from_columns(cols, k),
        )
        ker, _ = kernel(hom)
        return ker.is_trivial()


def _center_from_gram(
    types: tuple[DynkinType, ...], gram: list[list[int]], slices: list[tuple[int, int]]
) -> CenterData:
    rank = len(gram)
    if rank == 0:
        return CenterData(types, FinAbGroup.trivial(), [], [], [], [], [])
    n_half = [gram[i][i] // 2 for i in range(rank)]
    gram_frac = [[Fraction(x) for x in row] for row in gram]
    inv = _fraction_inverse(gram_frac)
    # weight basis W: column i solves  B x = n_i e_i
    w = [[inv[r][i] * n_half[i] for i in range(rank)] for r in range(rank)]
    denom = lcm(*(entry.denominator for row in w for entry in row))
    w_int = [[int(entry * denom) for entry in row] for row in w]
    _, s, v = smith_normal_form(w_int)
    # relation lattice of the quotient in omega coordinates:
    # x is a relation iff W x has integer coroot coordinates
    mults = []
    for i in range(rank):
        si = s[i][i]
        if si == 0:
            raise AssertionError("coweight basis is singular")
        mults.append(denom // gcd(si, denom))
    rel_cols = []
    for i in range(rank):
        rel_cols.append([v[r][i] * mults[i] for r in range(rank)])
    relations = from_columns(rel_cols, rank)
    group = FinAbGroup.from_relations(relations)
    cartan_det = 1
    for t in types:
        cartan_det *= _det_int(cartan_matrix(t))
    if group.order() != cartan_det:
        raise AssertionError("center order must equal the Cartan determinant")
    gen_coords = []
    for j in range(group.rank):
        amb = column(group.from_canonical, j)
        gen_coords.append(
            [sum(w[r][k] * amb[k] for k in range(rank)) for r in range(rank)]
        )
    form = []
    for gi in gen_coords:
        row = []
        for gj in gen_coords:
            val = sum(
                (
                    gi[a] * gram_frac[a][b] * gj[b]
                    for a in range(rank)
                    for b in range(rank)
                    if gi[a] and gj[b]
                ),
                Fraction(0),
            )
            row.append(QmodZ.from_fraction(val))
        form.append(row)
    return CenterData(types, group, gen_coords, form, [r[:] for r in gram], w, slices)


@lru_cache(maxsize=None)
def _center_cached(types: tuple[DynkinType, ...]) -> CenterData:
    grams = [coroot_gram(t) for t in types]
    gram = block_diagonal(grams)
    slices = []
    at = 0
    for t in types:
        slices.append((at, at + t.rank))
        at += t.rank
    return _center_from_gram(types, gram, slices)


def center(t: DynkinType) -> CenterData:
    """Center of the simply connected group of type t, with linking form.

    >>> c = center(DynkinType("A", 3))
    >>> c.group.invariant_factors
    [4]
    >>> str(c.form[0][0])
    '3/4'
    """
    return _center_cached((t,))


def product_center(types: list[DynkinType] | tuple[DynkinType, ...]) -> CenterData:
    """Center of a product of simply connected simple groups.

    The form is block diagonal: factors never pair with each other.
    """
    return _center_cached(tuple(types))


def _coweight_class_from_euclidean(t: DynkinType, vec: list[Fraction]) -> list[int]:
    """Center class of a Euclidean coweight vector (B/D realizations only)."""
    roots = simple_roots(t)
    coroots = [[2 * x / _dot(r, r) for x in r] for r in roots]
    n = t.rank
    coroot_matrix = [[coroots[j][i] for j in range(n)] for i in range(n)]
    coords = _gauss_solve(coroot_matrix, [vec])[0]
    return center(t).class_of_coweight(coords)


def _vector_rep_kernel_class(t: DynkinType) -> list[int]:
    """Class of the first Euclidean coweight (kernel of the vector rep)."""
    vec = [Fraction(1 if i == 0 else 0) for i in range(t.rank)]
    return _coweight_class_from_euclidean(t, vec)


def _half_spin_class(t: DynkinType) -> list[int]:
    vec = [Fraction(1, 2) for _ in range(t.rank)]
    return _coweight_class_from_euclidean(t, vec)


def named_subgroup(t: DynkinType, name: str) -> list[list[int]]:
    """Generators (ambient coordinates) of a named subgroup of center(t).

    Supported names:

    * ``trivial``        : no generators, any type;
    * ``full``           : the whole center, any type;
    * ``so-kernel``      : kernel of the vector representation (B and D);
    * ``omega-kernel``   : a half-spin order-2 class (D with even rank);
    * ``mu(k)``          : the order-k subgroup of a type-A center, k | n+1.
    """
    c = center(t)
    if name == "trivial":
        return []
    if name == "full":
        return c.group.canonical_generators()
    if name == "so-kernel":
        if t.family not in ("B", "D"):
            raise ValueError("so-kernel requires type B or D")
        return [_vector_rep_kernel_class(t)]
    if name == "omega-kernel":
        if t.family != "D" or t.rank % 2:
            raise ValueError("omega-kernel requires type D of even rank")
        return [_half_spin_class(t)]
    if name.startswith("mu(") and name.endswith(")"):
        if t.family != "A":
            raise ValueError("mu(k) requires type A")
        k = int(name[3:-1])
        n = t.rank + 1
        if k < 1 or n % k:
            raise ValueError(f"mu({k}) requires k to divide {n}")
        gen = c.group.canonical_generators()[0]
        return [[x * (n // k) for x in gen]] if k > 1 else []
    raise ValueError(f"unknown subgroup name {name!r}")


@dataclass(frozen=True)
class GroupSpec:
    """A (possibly twisted) semisimple group over a fixed curve genus.

    ``factors`` are the simple factors of the simply connected cover.
    ``pi1_gens`` generate the fundamental group as a subgroup of the
    product center and ``delta`` is the topological type of the
    bundles; both are written in the *canonical* coordinates of the
    center group (one integer per invariant factor).  In ``component``
    mode delta must lie in the subgroup generated by pi1; in
    ``twisted-sc`` mode pi1 must be empty and delta is any center
    element.
    """

    factors: tuple[DynkinType, ...]
    pi1_gens: tuple[tuple[int, ...], ...] = ()
    delta: tuple[int, ...] = ()
    genus: int = 3
    mode: str = "component"
    allow_low_genus: bool = False

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("at least one simple factor is required")
        total_rank = sum(t.rank for t in self.factors)
        cap = max_rank()
        if total_rank > cap:
            raise ValueError(f"total rank {total_rank} exceeds the cap {cap}")
        if self.mode not in ("component", "twisted-sc"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.genus < 3 and not self.allow_low_genus:
            raise ValueError("genus must be >= 3 (pass allow_low_genus to explore)")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.mode == "twisted-sc" and self.pi1_gens:
            raise ValueError("twisted-sc mode requires a simply connected group")
        c = product_center(self.factors)
        k = c.group.rank
        delta = self.delta if self.delta else tuple([0] * k)
        object.__setattr__(self, "delta", tuple(delta))
        if len(self.delta) != k:
            raise ValueError(f"delta must have {k} canonical coordinates")
        for g in self.pi1_gens:
            if len(g) != k:
                raise ValueError(f"pi1 generators must have {k} canonical coordinates")
        if self.mode == "component":
            if not contains_element(c.group, self.pi1_ambient(), self.delta_ambient()):
                raise ValueError("delta must lie in the subgroup generated by pi1")

    @property
    def center_data(self) -> CenterData:
        return product_center(self.factors)

    def pi1_ambient(self) -> list[list[int]]:
        g = self.center_data.group
        return [g.element_from_canonical(list(v)) for v in self.pi1_gens]

    def delta_ambient(self) -> list[int]:
        g = self.center_data.group
        return g.element_from_canonical(list(self.delta))

    def pi1_subgroup(self) -> tuple[FinAbGroup, GroupHom]:
        return subgroup(self.center_data.group, self.pi1_ambient())

    def describe(self) -> str:
        parts = "x".join(str(t) for t in self.factors)
        return f"{parts} genus={self.genus} mode={self.mode}"
