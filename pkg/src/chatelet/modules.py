"""Modules over finite groups, presented by generators, relations, and action matrices.

A GModule is the abelian group Z^rank / (relation lattice) together with one
integer matrix per group element.  Action matrices only need to satisfy the
module axioms modulo the relation lattice, so finite coefficient modules such
as Z/2 with a twisted action fit without any special casing.

The constructors at the bottom (restriction, induction, hom modules and the
unit/counit of induction) are the building blocks for everything the
cohomology layer does.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .groups import FiniteGroup, Subgroup
from .intmat import (
    IntMatrix,
    LatticeSubquotient,
    SmithDecomposition,
    Vector,
    kernel_basis,
    smith_normal_form,
    solve,
)


def describe_invariants(invariants: Sequence[int]) -> str:
    """Human-readable cyclic decomposition, for example 'Z/2 x Z/4' or '0'."""
    if not invariants:
        return "0"
    return " x ".join("Z" if d == 0 else f"Z/{d}" for d in invariants)


class FpAbGroup:
    """A finitely presented abelian group Z^rank / (relations).

    Elements are handled through `coords`, which maps an ambient vector to
    its coordinates with respect to a fixed cyclic decomposition.
    """

    __slots__ = ("rank", "relations", "_subq")

    def __init__(self, rank: int, relations: Sequence[Sequence[int]] = ()):
        self.rank = rank
        self.relations = tuple(tuple(int(x) for x in r) for r in relations)
        if any(len(r) != rank for r in self.relations):
            raise ValueError("relation length does not match rank")
        basis = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
        self._subq = LatticeSubquotient(rank, basis, self.relations)

    @property
    def invariants(self) -> tuple[int, ...]:
        return self._subq.invariants

    @property
    def order(self) -> int | None:
        return self._subq.order

    @property
    def is_trivial(self) -> bool:
        return self._subq.is_trivial

    def coords(self, v: Sequence[int]) -> Vector:
        return self._subq.coords(v)

    def lift(self, coords: Sequence[int]) -> Vector:
        return self._subq.lift(coords)

    def generators(self) -> list[Vector]:
        return list(self._subq.generators)

    def reduce_coords(self, coords: Sequence[int]) -> Vector:
        return self._subq.reduce_coords(coords)

    def elements(self) -> Iterable[Vector]:
        """All coordinate tuples; only available for finite groups."""
        if self.order is None:
            raise ValueError("group is infinite")
        from itertools import product

        return product(*(range(d) for d in self.invariants))

    def describe(self) -> str:
        return describe_invariants(self.invariants)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FpAbGroup)
                and self.rank == other.rank and self.relations == other.relations)

    def __hash__(self) -> int:
        return hash((self.rank, self.relations))

    def __repr__(self) -> str:
        return f"FpAbGroup({self.describe()})"


class GModule:
    """A module over a finite group, in generator/relation/action-matrix form."""

    __slots__ = ("group", "rank", "relations", "action", "name",
                 "_rel_matrix", "_rel_dec", "_coeff")

    def __init__(self, group: FiniteGroup, rank: int,
                 relations: Sequence[Sequence[int]],
                 action: Sequence[IntMatrix] | Mapping[int, IntMatrix],
                 name: str = "M", check: bool = True):
        self.group = group
        self.rank = rank
        self.relations = tuple(tuple(int(x) for x in r) for r in relations)
        if isinstance(action, Mapping):
            action = [action[g] for g in group.elements()]
        self.action = tuple(action)
        self.name = name
        if len(self.action) != group.order:
            raise ValueError("need one action matrix per group element")
        self._rel_matrix = IntMatrix.from_columns(self.relations, nrows=rank)
        self._rel_dec = smith_normal_form(self._rel_matrix)
        self._coeff: FpAbGroup | None = None
        if check:
            self.validate()

    # -- structural checks ----------------------------------------------------

    def in_relation_lattice(self, v: Sequence[int]) -> bool:
        return solve(self._rel_matrix, v, self._rel_dec) is not None

    def vectors_equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.in_relation_lattice([a - b for a, b in zip(u, v)])

    def matrices_equal(self, A: IntMatrix, B: IntMatrix) -> bool:
        """Equality of matrices as maps into this module (columnwise mod relations)."""
        diff = A - B
        return all(self.in_relation_lattice(diff.col(j)) for j in range(diff.ncols))

    def validate(self) -> "GModule":
        """Exhaustive module axioms: shapes, identity, relation stability,
        and the homomorphism law for every pair of group elements."""
        if any(len(r) != self.rank for r in self.relations):
            raise ValueError("relation length does not match rank")
        for g in self.group.elements():
            if self.action[g].shape != (self.rank, self.rank):
                raise ValueError("action matrix has wrong shape")
        eye = IntMatrix.identity(self.rank)
        if not self.matrices_equal(self.action[self.group.identity], eye):
            raise ValueError("identity does not act as the identity")
        for g in self.group.elements():
            for r in self.relations:
                if not self.in_relation_lattice(self.action[g].apply(r)):
                    raise ValueError("action does not preserve the relation lattice")
        for g in self.group.elements():
            ag = self.action[g]
            for h in self.group.elements():
                if not self.matrices_equal(ag @ self.action[h],
                                           self.action[self.group.mul(g, h)]):
                    raise ValueError("action matrices are not a homomorphism")
        return self

    # -- access ----------------------------------------------------------------

    def act(self, g: int) -> IntMatrix:
        return self.action[g]

    def act_on(self, g: int, v: Sequence[int]) -> Vector:
        return self.action[g].apply(v)

    @property
    def rel_matrix(self) -> IntMatrix:
        return self._rel_matrix

    def coeff_group(self) -> FpAbGroup:
        """The underlying abelian group, forgetting the action."""
        if self._coeff is None:
            self._coeff = FpAbGroup(self.rank, self.relations)
        return self._coeff

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GModule) and self.group == other.group
                and self.rank == other.rank and self.relations == other.relations
                and self.action == other.action)

    def __hash__(self) -> int:
        return hash((self.group, self.rank, self.relations, self.action))

    def __repr__(self) -> str:
        return f"GModule({self.name!r}, rank={self.rank}, over {self.group.name})"


class GModuleMap:
    """An additive map between modules, given by a matrix on generators.

    `scope` restricts the equivariance claim: None means equivariant for the
    whole (common) group; a Subgroup means the map is only asserted and
    checked to commute with that subgroup's action.  Both modules must be
    over the same FiniteGroup either way.
    """

    __slots__ = ("source", "target", "matrix", "scope")

    def __init__(self, source: GModule, target: GModule, matrix: IntMatrix,
                 scope: Subgroup | None = None, check: bool = True):
        self.source = source
        self.target = target
        self.matrix = matrix
        self.scope = scope
        if matrix.shape != (target.rank, source.rank):
            raise ValueError("matrix shape does not match source/target ranks")
        if source.group != target.group:
            raise ValueError("source and target are over different groups")
        if check:
            self.validate()

    def validate(self) -> "GModuleMap":
        for r in self.source.relations:
            if not self.target.in_relation_lattice(self.matrix.apply(r)):
                raise ValueError("map is not well defined on relations")
        if self.scope is None:
            gens = self.source.group.generating_set()
        else:
            if self.scope.parent != self.source.group:
                raise ValueError("scope subgroup belongs to a different group")
            gens = [self.scope.embed(i) for i in self.scope.group.generating_set()]
        for g in gens:
            lhs = self.matrix @ self.source.act(g)
            rhs = self.target.act(g) @ self.matrix
            if not self.target.matrices_equal(lhs, rhs):
                raise ValueError("map does not commute with the group action")
        return self

    def apply(self, v: Sequence[int]) -> Vector:
        return self.matrix.apply(v)

    def then(self, after: "GModuleMap") -> "GModuleMap":
        """Composite `after of self` (apply self first)."""
        if after.source is not self.target and after.source != self.target:
            raise ValueError("maps do not compose")
        scope = self.scope if after.scope is None else after.scope
        if self.scope is not None and after.scope is not None \
                and self.scope.elements != after.scope.elements:
            common = set(self.scope.elements) & set(after.scope.elements)
            scope = Subgroup(self.source.group, common)
        return GModuleMap(self.source, after.target, after.matrix @ self.matrix,
                          scope=scope, check=False)

    def __repr__(self) -> str:
        tag = "G-map" if self.scope is None else f"map over subgroup of order {self.scope.order}"
        return f"GModuleMap({self.source.name} -> {self.target.name}, {tag})"


# -- constructors ---------------------------------------------------------------


def trivial_module(G: FiniteGroup, rank: int = 1,
                   relations: Sequence[Sequence[int]] = (), name: str | None = None) -> GModule:
    """Z^rank / relations with every group element acting as the identity."""
    eye = IntMatrix.identity(rank)
    return GModule(G, rank, relations, [eye] * G.order,
                   name=name or f"triv^{rank}", check=False)


def regular_module(G: FiniteGroup) -> GModule:
    """The group ring Z[G] with the left translation action."""
    n = G.order
    mats = []
    for g in range(n):
        rows = [[0] * n for _ in range(n)]
        for h in range(n):
            rows[G.mul(g, h)][h] = 1
        mats.append(IntMatrix(rows, ncols=n))
    return GModule(G, n, (), mats, name=f"Z[{G.name}]", check=False)


def permutation_module(G: FiniteGroup, perms: Sequence[Sequence[int]],
                       name: str = "perm") -> GModule:
    """Free module on a finite G-set; perms[g][x] is the image of point x under g."""
    if len(perms) != G.order:
        raise ValueError("need one permutation per group element")
    size = len(perms[0])
    for g in G.elements():
        if sorted(perms[g]) != list(range(size)):
            raise ValueError("entry is not a permutation")
    for g in G.elements():
        for h in G.elements():
            gh = G.mul(g, h)
            if any(perms[g][perms[h][x]] != perms[gh][x] for x in range(size)):
                raise ValueError("permutations do not define a group action")
    mats = []
    for g in G.elements():
        rows = [[0] * size for _ in range(size)]
        for x in range(size):
            rows[perms[g][x]][x] = 1
        mats.append(IntMatrix(rows, ncols=size))
    return GModule(G, size, (), mats, name=name, check=False)


def chatelet_picard_module() -> GModule:
    """Rank two module over the order two group with the generator acting as -1.

    This is the geometric Picard lattice of a Chatelet surface given by a
    product of two conjugate linear factors, relative to its degree two
    splitting extension, modulo the part with trivial cohomology.
    """
    from .groups import cyclic_group

    c2 = cyclic_group(2)
    eye = IntMatrix.identity(2)
    return GModule(c2, 2, (), [eye, -eye], name="pic", check=False)


def direct_sum(M: GModule, N: GModule) -> GModule:
    if M.group != N.group:
        raise ValueError("summands are over different groups")
    from .intmat import block_diagonal

    rank = M.rank + N.rank
    relations = [tuple(r) + (0,) * N.rank for r in M.relations]
    relations += [(0,) * M.rank + tuple(r) for r in N.relations]
    mats = [block_diagonal([M.act(g), N.act(g)]) for g in M.group.elements()]
    return GModule(M.group, rank, relations, mats,
                   name=f"{M.name}+{N.name}", check=False)


def restrict_module(M: GModule, H: Subgroup) -> GModule:
    """The same abelian group viewed as a module over the subgroup."""
    if H.parent != M.group:
        raise ValueError("subgroup belongs to a different group")
    mats = [M.act(H.embed(i)) for i in H.group.elements()]
    return GModule(H.group, M.rank, M.relations, mats,
                   name=f"Res({M.name})", check=False)


def induce_module(M: GModule, H: Subgroup) -> GModule:
    """Induction from a subgroup to its parent.

    M must be a module over H.group.  The underlying group is a direct sum of
    one copy of M per left coset; g sends the copy at coset i to the copy at
    coset j through the subgroup factor h of g * r_i = r_j * h.
    """
    if M.group != H.group:
        raise ValueError("module is not over the given subgroup")
    G = H.parent
    n = H.index
    r = M.rank
    rank = n * r
    relations = []
    for i in range(n):
        for rel in M.relations:
            v = [0] * rank
            v[i * r:(i + 1) * r] = list(rel)
            relations.append(tuple(v))
    mats = []
    for g in G.elements():
        rows = [[0] * rank for _ in range(rank)]
        for i in range(n):
            j, h_par = H.transfer_factor(g, i)
            block = M.act(H.locate(h_par))
            for a in range(r):
                for b in range(r):
                    rows[j * r + a][i * r + b] = block.rows[a][b]
        mats.append(IntMatrix(rows, ncols=rank))
    return GModule(G, rank, relations, mats, name=f"Ind({M.name})", check=False)


def ind_unit(M: GModule, H: Subgroup) -> GModuleMap:
    """The unit M -> Ind(Res(M)) of induction, m |-> sum over cosets of
    (copy at coset i of r_i^{-1} m).  Equivariant over the full group."""
    if H.parent != M.group:
        raise ValueError("subgroup belongs to a different group")
    target = induce_module(restrict_module(M, H), H)
    reps = H.left_coset_reps()
    blocks = [M.act(M.group.inv(rep)) for rep in reps]
    from .intmat import vstack

    return GModuleMap(M, target, vstack(*blocks), check=False)


def ind_counit(M: GModule, H: Subgroup) -> GModuleMap:
    """The counit Ind(Res(M)) -> M, (copy at coset i of m) |-> r_i m."""
    if H.parent != M.group:
        raise ValueError("subgroup belongs to a different group")
    source = induce_module(restrict_module(M, H), H)
    reps = H.left_coset_reps()
    blocks = [M.act(rep) for rep in reps]
    from .intmat import hstack

    return GModuleMap(source, M, hstack(*blocks), check=False)


# -- hom modules -----------------------------------------------------------------


def _projected_kernel(rows: list[list[int]], keep: int, ncols: int) -> list[Vector]:
    """Solutions of a homogeneous system, projected to the first `keep` coordinates."""
    A = IntMatrix(rows, ncols=ncols)
    return [v[:keep] for v in kernel_basis(A)]


class HomModule(GModule):
    """Hom(M, N) as a module over the common group, with conversion helpers.

    Coordinates are with respect to a cyclic decomposition of the group of
    additive maps M -> N; `matrix_of` and `coords_of` convert between
    coordinate vectors and honest matrices.
    """

    __slots__ = ("hom_source", "hom_target", "_hom_subq")

    def __init__(self, source: GModule, target: GModule):
        if source.group != target.group:
            raise ValueError("source and target are over different groups")
        G = source.group
        rm, rn = source.rank, target.rank
        B = rn * rm  # entry (i, j) of a matrix sits at i * rm + j
        km = len(source.relations)
        kn = len(target.relations)

        # lattice of matrices that are well defined on relations:
        # for each source relation, F . rel must land in the relation lattice
        # of the target; slack variables express the lattice membership.
        if km == 0:
            hom_gens = [tuple(1 if t == s else 0 for t in range(B)) for s in range(B)]
        else:
            rows = []
            for t, rel in enumerate(source.relations):
                for i in range(rn):
                    row = [0] * (B + km * kn)
                    for j in range(rm):
                        row[i * rm + j] = rel[j]
                    for s, nrel in enumerate(target.relations):
                        row[B + t * kn + s] = -nrel[i]
                    rows.append(row)
            hom_gens = _projected_kernel(rows, B, B + km * kn)

        # matrices that are zero as maps: every column in the target relations
        triv_gens = []
        for j in range(rm):
            for nrel in target.relations:
                v = [0] * B
                for i in range(rn):
                    v[i * rm + j] = nrel[i]
                triv_gens.append(tuple(v))

        subq = LatticeSubquotient(B, hom_gens, triv_gens)
        n = len(subq.invariants)
        relations = []
        for pos, d in enumerate(subq.invariants):
            if d != 0:
                relations.append(tuple(d if t == pos else 0 for t in range(n)))

        def to_matrix(vec: Sequence[int]) -> IntMatrix:
            return IntMatrix([[vec[i * rm + j] for j in range(rm)] for i in range(rn)],
                             ncols=rm)

        mats = []
        for g in G.elements():
            cols = []
            ag = target.act(g)
            ag_inv = source.act(G.inv(g))
            for gen in subq.generators:
                conj = ag @ to_matrix(gen) @ ag_inv
                flat = tuple(conj.rows[i][j] for i in range(rn) for j in range(rm))
                cols.append(subq.coords(flat))
            mats.append(IntMatrix.from_columns(cols, nrows=n))

        super().__init__(G, n, relations, mats,
                         name=f"Hom({source.name},{target.name})", check=False)
        self.hom_source = source
        self.hom_target = target
        self._hom_subq = subq

    def matrix_of(self, coords: Sequence[int]) -> IntMatrix:
        """An honest matrix representing the hom class with these coordinates."""
        flat = self._hom_subq.lift(coords)
        rm = self.hom_source.rank
        rn = self.hom_target.rank
        return IntMatrix([[flat[i * rm + j] for j in range(rm)] for i in range(rn)],
                         ncols=rm)

    def coords_of(self, F: IntMatrix) -> Vector:
        """Coordinates of a matrix; raises if it is not well defined on relations."""
        rm = self.hom_source.rank
        rn = self.hom_target.rank
        if F.shape != (rn, rm):
            raise ValueError("matrix shape does not match the hom module")
        flat = tuple(F.rows[i][j] for i in range(rn) for j in range(rm))
        return self._hom_subq.coords(flat)


from functools import lru_cache


@lru_cache(maxsize=None)
def hom_module(M: GModule, N: GModule) -> HomModule:
    """Hom(M, N) with the conjugation action g . f = g f g^{-1}."""
    return HomModule(M, N)


def invariant_subquotient(M: GModule) -> LatticeSubquotient:
    """The invariants M^G as a subquotient of the generator lattice.

    Numerator: vectors moved into the relation lattice by every g - 1.
    Denominator: the relation lattice itself.
    """
    r = M.rank
    k = len(M.relations)
    gens = M.group.generating_set()
    if not gens:
        basis = [tuple(1 if i == j else 0 for j in range(r)) for i in range(r)]
        return LatticeSubquotient(r, basis, M.relations)
    eye = IntMatrix.identity(r)
    rows = []
    total_cols = r + len(gens) * k
    for t, g in enumerate(gens):
        diff = M.act(g) - eye
        for i in range(r):
            row = [0] * total_cols
            row[:r] = list(diff.rows[i])
            for s, rel in enumerate(M.relations):
                row[r + t * k + s] = -rel[i]
            rows.append(row)
    inv_gens = _projected_kernel(rows, r, total_cols)
    return LatticeSubquotient(r, inv_gens, M.relations)


def equivariant_hom_basis(M: GModule, N: GModule) -> list[IntMatrix]:
    """Matrices whose classes generate the group of equivariant maps M -> N."""
    hm = hom_module(M, N)
    subq = invariant_subquotient(hm)
    return [hm.matrix_of(v) for v in subq.generators]
