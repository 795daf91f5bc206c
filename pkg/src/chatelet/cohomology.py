"""Group cohomology in degrees zero and one, and the maps between the groups.

H^1 is computed from cocycles parametrized by their values on a generating
set: the cocycle identity is propagated along a breadth-first traversal of
the Cayley graph, the edges that close cycles become integer linear
conditions modulo the relation lattice, and the quotient by coboundaries is
a lattice subquotient.  Everything reduces to Smith normal form.

A CohomologyGroup hands out honest cocycles (one module element per group
element) for its generators and converts arbitrary cocycles back to
coordinates, which is what the restriction, corestriction, and induced maps
are built from.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .groups import FiniteGroup, Subgroup
from .intmat import (
    IntMatrix,
    LatticeSubquotient,
    Vector,
    solution_lattice,
)
from .modules import (
    FpAbGroup,
    GModule,
    GModuleMap,
    describe_invariants,
    invariant_subquotient,
    restrict_module,
)

Cocycle = Mapping[int, Sequence[int]]


class CohomologyGroup:
    """H^0 or H^1 of a finite group with coefficients in a GModule.

    Elements are coordinate tuples with respect to `invariants`.  For degree
    one, cocycles are dictionaries mapping every group element to a vector in
    the module's generator lattice; for degree zero they are plain vectors.
    """

    __slots__ = ("degree", "group", "module", "_subq",
                 "_to_ambient", "_from_ambient")

    def __init__(self, degree: int, group: FiniteGroup, module: GModule,
                 subq: LatticeSubquotient,
                 to_ambient: Callable[[object], Sequence[int]],
                 from_ambient: Callable[[Sequence[int]], object]):
        self.degree = degree
        self.group = group
        self.module = module
        self._subq = subq
        self._to_ambient = to_ambient
        self._from_ambient = from_ambient

    def _verify_element(self, cocycle) -> None:
        M = self.module
        if self.degree == 0:
            for g in self.group.generating_set():
                if not M.vectors_equal(M.act(g).apply(cocycle), cocycle):
                    raise ValueError("vector is not invariant")
        else:
            if not is_cocycle(M, cocycle):
                raise ValueError("function does not satisfy the cocycle identity")

    @property
    def invariants(self) -> tuple[int, ...]:
        return self._subq.invariants

    @property
    def order(self) -> int | None:
        return self._subq.order

    @property
    def is_trivial(self) -> bool:
        return self._subq.is_trivial

    def describe(self) -> str:
        return describe_invariants(self.invariants)

    def coords_of_cocycle(self, cocycle, verify: bool = True) -> Vector:
        """Coordinates of the class of a cocycle (a dict in degree one,
        a vector in degree zero).

        With verify on, the cocycle identity (or invariance in degree zero)
        is checked exhaustively first.
        """
        if verify:
            self._verify_element(cocycle)
        return self._subq.coords(self._to_ambient(cocycle))

    def cocycle_from_coords(self, coords: Sequence[int]):
        """An honest representative with the given coordinates."""
        return self._from_ambient(self._subq.lift(coords))

    def generator_cocycles(self) -> list:
        return [self._from_ambient(v) for v in self._subq.generators]

    def reduce_coords(self, coords: Sequence[int]) -> Vector:
        return self._subq.reduce_coords(coords)

    def zero_coords(self) -> Vector:
        return tuple(0 for _ in self.invariants)

    def __repr__(self) -> str:
        return (f"CohomologyGroup(H^{self.degree}, {self.group.name}, "
                f"{self.module.name}, {self.describe()})")


def _identity_cocycle_check(group: FiniteGroup, cocycle: Cocycle, rank: int) -> None:
    if set(cocycle.keys()) != set(group.elements()):
        raise ValueError("cocycle must assign a value to every group element")
    if any(len(tuple(v)) != rank for v in cocycle.values()):
        raise ValueError("cocycle value has the wrong length")


def is_cocycle(M: GModule, cocycle: Cocycle) -> bool:
    """Exhaustive check of c(gh) = c(g) + g c(h) modulo the relation lattice."""
    G = M.group
    _identity_cocycle_check(G, cocycle, M.rank)
    for g in G.elements():
        cg = tuple(cocycle[g])
        for h in G.elements():
            lhs = cocycle[G.mul(g, h)]
            rhs = [a + b for a, b in zip(cg, M.act(g).apply(cocycle[h]))]
            if not M.vectors_equal(lhs, rhs):
                return False
    return True


@lru_cache(maxsize=None)
def h0(G: FiniteGroup, M: GModule) -> CohomologyGroup:
    """Invariants M^G as a cohomology group in degree zero."""
    if M.group != G:
        raise ValueError("module is not over the given group")
    subq = invariant_subquotient(M)
    return CohomologyGroup(0, G, M, subq,
                           to_ambient=lambda v: tuple(v),
                           from_ambient=lambda v: tuple(v))


@lru_cache(maxsize=None)
def h1(G: FiniteGroup, M: GModule) -> CohomologyGroup:
    """First cohomology via generator-parametrized cocycles."""
    if M.group != G:
        raise ValueError("module is not over the given group")
    r = M.rank
    gens = G.generating_set()
    ns = len(gens)
    u_dim = ns * r

    if ns == 0:
        subq = LatticeSubquotient(0, [], [])
        return CohomologyGroup(1, G, M, subq,
                               to_ambient=lambda c: (),
                               from_ambient=lambda u: {G.identity: (0,) * r})

    def selector(t: int) -> IntMatrix:
        rows = [[0] * u_dim for _ in range(r)]
        for i in range(r):
            rows[i][t * r + i] = 1
        return IntMatrix(rows, ncols=u_dim)

    sels = [selector(t) for t in range(ns)]

    # expression matrices: c(g) = E_g . u where u stacks the values on gens
    from collections import deque

    exprs: dict[int, IntMatrix] = {G.identity: IntMatrix.zeros(r, u_dim)}
    constraints: list[IntMatrix] = []
    queue = deque([G.identity])
    while queue:
        g = queue.popleft()
        for t, s in enumerate(gens):
            gs = G.mul(g, s)
            expr = exprs[g] + M.act(g) @ sels[t]
            known = exprs.get(gs)
            if known is None:
                exprs[gs] = expr
                queue.append(gs)
            else:
                diff = expr - known
                if not diff.is_zero():
                    constraints.append(diff)

    z1 = solution_lattice(u_dim, [(C, M.relations) for C in constraints])

    b1: list[Vector] = []
    eye = IntMatrix.identity(r)
    for j in range(r):
        u = []
        for s in gens:
            u.extend((M.act(s) - eye).col(j))
        b1.append(tuple(u))
    for t in range(ns):
        for rel in M.relations:
            v = [0] * u_dim
            v[t * r:(t + 1) * r] = list(rel)
            b1.append(tuple(v))

    subq = LatticeSubquotient(u_dim, z1, b1)
    expr_table = dict(exprs)

    def to_ambient(cocycle: Cocycle) -> Vector:
        _identity_cocycle_check(G, cocycle, r)
        u: list[int] = []
        for s in gens:
            u.extend(cocycle[s])
        return tuple(u)

    def from_ambient(u: Sequence[int]) -> dict[int, Vector]:
        return {g: expr_table[g].apply(u) for g in G.elements()}

    return CohomologyGroup(1, G, M, subq, to_ambient, from_ambient)


def h1_cyclic(G: FiniteGroup, M: GModule) -> CohomologyGroup:
    """Independent H^1 for cyclic groups: kernel of the norm over the image
    of (generator - 1).  Used as an oracle against the general machinery."""
    if M.group != G:
        raise ValueError("module is not over the given group")
    n = G.order
    sigma = next((g for g in G.elements() if G.element_order(g) == n), None)
    if sigma is None:
        raise ValueError("group is not cyclic")
    r = M.rank
    powers = [G.power(sigma, k) for k in range(n)]
    norm = IntMatrix.zeros(r, r)
    for g in powers:
        norm = norm + M.act(g)
    numerator = solution_lattice(r, [(norm, M.relations)])
    diff = M.act(sigma) - IntMatrix.identity(r)
    denominator = [diff.col(j) for j in range(r)] + [tuple(rel) for rel in M.relations]
    subq = LatticeSubquotient(r, numerator, denominator)

    def to_ambient(cocycle: Cocycle) -> Vector:
        _identity_cocycle_check(G, cocycle, r)
        return tuple(cocycle[sigma])

    def from_ambient(a: Sequence[int]) -> dict[int, Vector]:
        out: dict[int, Vector] = {}
        acc = [0] * r
        for k in range(n):
            out[powers[k]] = tuple(acc)
            step = M.act(powers[k]).apply(a)
            acc = [x + y for x, y in zip(acc, step)]
        return out

    return CohomologyGroup(1, G, M, subq, to_ambient, from_ambient)


# -- maps between cohomology groups ---------------------------------------------


class CohMap:
    """An additive map between cohomology groups (or finite abelian groups)
    in their coordinate presentations.

    `source` and `target` only need to expose `invariants`; both
    CohomologyGroup and FpAbGroup qualify.  `kind` records how the map was
    built (restriction, corestriction, induced-by-module-map, transpose-dual,
    or a composite).
    """

    __slots__ = ("source", "target", "matrix", "kind")

    def __init__(self, source, target, matrix: IntMatrix, kind: str, check: bool = True):
        self.source = source
        self.target = target
        self.matrix = matrix
        self.kind = kind
        s = len(source.invariants)
        t = len(target.invariants)
        if matrix.shape != (t, s):
            raise ValueError("matrix shape does not match coordinate ranks")
        if check:
            for i, d in enumerate(source.invariants):
                if d != 0:
                    col = [d * x for x in matrix.col(i)]
                    if any(self._reduce(col)):
                        raise ValueError("map is not well defined on the torsion relations")

    def _reduce(self, coords: Sequence[int]) -> Vector:
        return tuple(c % d if d != 0 else c
                     for c, d in zip(coords, self.target.invariants))

    def apply(self, coords: Sequence[int]) -> Vector:
        if len(coords) != len(self.source.invariants):
            raise ValueError("coordinate length mismatch")
        return self._reduce(self.matrix.apply(coords))

    def then(self, after: "CohMap") -> "CohMap":
        if after.source is not self.target and after.source != self.target:
            raise ValueError("maps do not compose")
        return CohMap(self.source, after.target, after.matrix @ self.matrix,
                      kind=f"{self.kind};{after.kind}", check=False)

    # -- structural predicates, all exact ------------------------------------

    def _source_relations(self) -> list[Vector]:
        s = len(self.source.invariants)
        return [tuple(d if i == j else 0 for j in range(s))
                for i, d in enumerate(self.source.invariants) if d != 0]

    def _target_relations(self) -> list[Vector]:
        t = len(self.target.invariants)
        return [tuple(d if i == j else 0 for j in range(t))
                for i, d in enumerate(self.target.invariants) if d != 0]

    def kernel_invariants(self) -> tuple[int, ...]:
        s = len(self.source.invariants)
        num = solution_lattice(s, [(self.matrix, self._target_relations())])
        return LatticeSubquotient(s, num, self._source_relations()).invariants

    def image_invariants(self) -> tuple[int, ...]:
        t = len(self.target.invariants)
        cols = self.matrix.columns() + self._target_relations()
        return LatticeSubquotient(t, cols, self._target_relations()).invariants

    def cokernel_invariants(self) -> tuple[int, ...]:
        t = len(self.target.invariants)
        basis = [tuple(1 if i == j else 0 for j in range(t)) for i in range(t)]
        den = self.matrix.columns() + self._target_relations()
        return LatticeSubquotient(t, basis, den).invariants

    def is_zero(self) -> bool:
        return all(not any(self._reduce(self.matrix.col(j)))
                   for j in range(self.matrix.ncols))

    def is_injective(self) -> bool:
        return not self.kernel_invariants()

    def is_surjective(self) -> bool:
        return not self.cokernel_invariants()

    def is_identity(self) -> bool:
        if self.source.invariants != self.target.invariants:
            return False
        s = len(self.source.invariants)
        for i in range(s):
            e = tuple(1 if j == i else 0 for j in range(s))
            if self.apply(e) != self._reduce(e):
                return False
        return True

    def describe(self) -> str:
        bits = []
        if self.is_zero():
            bits.append("zero")
        if self.is_injective():
            bits.append("injective")
        if self.is_surjective():
            bits.append("surjective")
        return ",".join(bits) if bits else "general"

    def __repr__(self) -> str:
        return f"CohMap({self.kind}: {self.matrix.shape[1]} -> {self.matrix.shape[0]} coords)"


def _map_from_transform(src: CohomologyGroup, dst: CohomologyGroup,
                        transform: Callable, kind: str) -> CohMap:
    cols = [dst.coords_of_cocycle(transform(c)) for c in src.generator_cocycles()]
    matrix = IntMatrix.from_columns(cols, nrows=len(dst.invariants))
    return CohMap(src, dst, matrix, kind)


def restriction_map(H: Subgroup, M: GModule, degree: int = 1) -> CohMap:
    """H^d(G, M) -> H^d(H, M restricted), by restricting cocycles."""
    G = H.parent
    if M.group != G:
        raise ValueError("module is not over the subgroup's parent")
    RM = restrict_module(M, H)
    if degree == 0:
        return _map_from_transform(h0(G, M), h0(H.group, RM),
                                   lambda v: v, "restriction")
    if degree != 1:
        raise ValueError("only degrees 0 and 1 are supported")

    def transform(cocycle: Cocycle) -> dict[int, Vector]:
        return {i: tuple(cocycle[H.embed(i)]) for i in H.group.elements()}

    return _map_from_transform(h1(G, M), h1(H.group, RM), transform, "restriction")


def corestriction_map(H: Subgroup, M: GModule, degree: int = 1) -> CohMap:
    """H^d(H, M restricted) -> H^d(G, M), by the coset transfer.

    In degree one a cocycle c goes to g |-> sum over cosets i of
    r_j . c(h), where g r_i = r_j h splits through the subgroup; in degree
    zero it is the norm sum over coset representatives.
    """
    G = H.parent
    if M.group != G:
        raise ValueError("module is not over the subgroup's parent")
    RM = restrict_module(M, H)
    reps = H.left_coset_reps()
    if degree == 0:
        def norm(v) -> Vector:
            out = [0] * M.rank
            for rep in reps:
                out = [a + b for a, b in zip(out, M.act(rep).apply(v))]
            return tuple(out)

        return _map_from_transform(h0(H.group, RM), h0(G, M), norm, "corestriction")
    if degree != 1:
        raise ValueError("only degrees 0 and 1 are supported")

    def transform(cocycle: Cocycle) -> dict[int, Vector]:
        out: dict[int, Vector] = {}
        for g in G.elements():
            total = [0] * M.rank
            for i in range(len(reps)):
                j, h_par = H.transfer_factor(g, i)
                val = M.act(reps[j]).apply(cocycle[H.locate(h_par)])
                total = [a + b for a, b in zip(total, val)]
            out[g] = tuple(total)
        return out

    return _map_from_transform(h1(H.group, RM), h1(G, M), transform, "corestriction")


def induced_map(f: GModuleMap, degree: int = 1) -> CohMap:
    """H^d(G, source) -> H^d(G, target) induced by an equivariant module map."""
    if f.scope is not None:
        raise ValueError("map must be equivariant over the whole group")
    G = f.source.group
    if degree == 0:
        return _map_from_transform(h0(G, f.source), h0(G, f.target),
                                   lambda v: f.apply(v), "induced-by-module-map")
    if degree != 1:
        raise ValueError("only degrees 0 and 1 are supported")

    def transform(cocycle: Cocycle) -> dict[int, Vector]:
        return {g: f.apply(v) for g, v in cocycle.items()}

    return _map_from_transform(h1(G, f.source), h1(G, f.target),
                               transform, "induced-by-module-map")


# -- duality ----------------------------------------------------------------------


def dual_group(A) -> FpAbGroup:
    """The character group Hom(A, Q/Z) of a finite abelian group.

    Coordinates are dual to A's: generator i of the dual sends generator i of
    A to 1/d_i and the others to zero.  A must be finite.
    """
    invariants = tuple(A.invariants)
    if any(d == 0 for d in invariants):
        raise ValueError("dual group needs a finite argument")
    relations = [tuple(d if i == j else 0 for j in range(len(invariants)))
                 for i, d in enumerate(invariants)]
    return FpAbGroup(len(invariants), relations)


def dual_map(f: CohMap) -> CohMap:
    """The transpose of f on character groups, contravariantly.

    For f: A -> B with invariants a_i, b_j and matrix F, the dual sends the
    j-th character of B to sum_i ((F[j][i] a_i / b_j) mod a_i) characters of
    A; integrality of a_i F[j][i] / b_j is exactly f being well defined.
    """
    a = tuple(f.source.invariants)
    b = tuple(f.target.invariants)
    if any(d == 0 for d in a) or any(d == 0 for d in b):
        raise ValueError("dual map needs finite source and target")
    rows = []
    for i in range(len(a)):
        row = []
        for j in range(len(b)):
            num = f.matrix.rows[j][i] * a[i]
            if num % b[j] != 0:
                raise ValueError("map is not well defined; dual does not exist")
            row.append((num // b[j]) % a[i])
        rows.append(row)
    matrix = IntMatrix(rows, ncols=len(b))
    return CohMap(dual_group(f.target), dual_group(f.source), matrix,
                  kind="transpose-dual")
