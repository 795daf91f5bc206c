"""Finite groups as explicit multiplication tables.

Elements are integers 0..n-1 and the identity is always element 0 for groups
built by the constructors here.  A Subgroup carries its own re-indexed
FiniteGroup together with maps in and out of the parent, plus the left coset
bookkeeping (representatives and transfer factors) that corestriction and
induction are built from.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class FiniteGroup:
    """A finite group presented by its full multiplication table."""

    __slots__ = ("table", "identity", "name", "_inv", "_gens")

    def __init__(self, table: Sequence[Sequence[int]], name: str = "G", check: bool = True):
        n = len(table)
        self.table = tuple(tuple(row) for row in table)
        self.name = name
        self._gens: list[int] | None = None
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table is not square")
        if any(x < 0 or x >= n for row in self.table for x in row):
            raise ValueError("table entry out of range")
        identity = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        self.identity = identity
        inv = [None] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == identity and self.table[h][g] == identity:
                    inv[g] = h
                    break
            if inv[g] is None:
                raise ValueError(f"element {g} has no inverse")
        self._inv = tuple(inv)
        # associativity is cubic in the order; skip it for big tables, the
        # constructors below always produce valid groups
        if check and n <= 64:
            for a in range(n):
                for b in range(n):
                    ab = self.table[a][b]
                    for c in range(n):
                        if self.table[ab][c] != self.table[a][self.table[b][c]]:
                            raise ValueError("table is not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self._inv[g]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self._inv[g], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][g]
        return out

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def closure(self, gens: Iterable[int]) -> tuple[int, ...]:
        """Subgroup generated by the given elements, as a sorted tuple."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return tuple(sorted(seen))

    def generating_set(self) -> list[int]:
        """Deterministic small generating set: greedily add the least missing element."""
        if self._gens is None:
            gens: list[int] = []
            have = self.closure(gens)
            while len(have) < self.order:
                nxt = next(x for x in range(self.order) if x not in have)
                gens.append(nxt)
                have = self.closure(gens)
            self._gens = gens
        return list(self._gens)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


class Subgroup:
    """A subgroup of a FiniteGroup, with coset and transfer bookkeeping.

    `group` is the subgroup itself re-indexed as a standalone FiniteGroup;
    `embed` and `locate` translate between its element numbering and the
    parent's.  Left coset representatives are chosen deterministically (least
    parent element in each coset, identity coset first).
    """

    __slots__ = ("parent", "elements", "group", "_locate", "_reps", "_coset_idx")

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], check: bool = True):
        elems = tuple(sorted(set(elements)))
        if check:
            if parent.identity not in elems:
                raise ValueError("subgroup must contain the identity")
            eset = set(elems)
            for a in elems:
                if parent.inv(a) not in eset:
                    raise ValueError("subgroup not closed under inverse")
                for b in elems:
                    if parent.mul(a, b) not in eset:
                        raise ValueError("subgroup not closed under multiplication")
        self.parent = parent
        self.elements = elems
        self._locate = {x: i for i, x in enumerate(elems)}
        sub_table = [[self._locate[parent.mul(a, b)] for b in elems] for a in elems]
        self.group = FiniteGroup(sub_table, name=f"{parent.name}-sub{len(elems)}", check=False)
        reps: list[int] = []
        coset_idx: dict[int, int] = {}
        for g in range(parent.order):
            if g not in coset_idx:
                j = len(reps)
                reps.append(g)
                for h in elems:
                    coset_idx[parent.mul(g, h)] = j
        self._reps = tuple(reps)
        self._coset_idx = coset_idx

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.elements)

    def embed(self, i: int) -> int:
        """Parent element for subgroup-local element i."""
        return self.elements[i]

    def locate(self, g: int) -> int:
        """Subgroup-local index of a parent element (KeyError if outside)."""
        return self._locate[g]

    def contains(self, g: int) -> bool:
        return g in self._locate

    def left_coset_reps(self) -> tuple[int, ...]:
        return self._reps

    def coset_of(self, g: int) -> int:
        return self._coset_idx[g]

    def transfer_factor(self, g: int, i: int) -> tuple[int, int]:
        """Decompose g * r_i = r_j * h with h in the subgroup.

        Returns (j, h) with h as a parent element.  This is the coset action
        datum behind corestriction and induced modules.
        """
        p = self.parent
        gri = p.mul(g, self._reps[i])
        j = self._coset_idx[gri]
        h = p.mul(p.inv(self._reps[j]), gri)
        return j, h

    def is_normal(self) -> bool:
        p = self.parent
        eset = set(self.elements)
        return all(p.mul(p.mul(g, h), p.inv(g)) in eset
                   for g in range(p.order) for h in self.elements)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, [G.identity], check=False)


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order), check=False)


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, found by closing generator sets one element at a time."""
    found = {G.closure([])}
    frontier = [G.closure([])]
    while frontier:
        base = frontier.pop()
        for x in range(G.order):
            if x not in base:
                bigger = G.closure(list(base) + [x])
                if bigger not in found:
                    found.add(bigger)
                    frontier.append(bigger)
    ordered = sorted(found, key=lambda t: (len(t), t))
    return [Subgroup(G, t, check=False) for t in ordered]


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with element k representing the k-th power of the generator."""
    if n < 1:
        raise ValueError("order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"C{n}", check=False)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: element i + n*j is rotation^i * flip^j."""
    if n < 1:
        raise ValueError("need n >= 1")

    def mul(x, y):
        a, b = x % n, x // n
        c, d = y % n, y // n
        i = (a + (c if b == 0 else -c)) % n
        return i + n * ((b + d) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return FiniteGroup(table, name=f"D{n}", check=False)


def symmetric_group(n: int) -> FiniteGroup:
    """Symmetric group on n letters; elements are permutations in lex order."""
    from itertools import permutations

    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, name=f"S{n}", check=False)


def quaternion_group() -> FiniteGroup:
    """The quaternion group of order 8 on {+-1, +-i, +-j, +-k}."""
    # basis products: (b1, b2) -> (sign, basis), bases 0:1, 1:i, 2:j, 3:k
    prod = {}
    for b in range(4):
        prod[(0, b)] = (1, b)
        prod[(b, 0)] = (1, b)
    for b in (1, 2, 3):
        prod[(b, b)] = (-1, 0)
    prod[(1, 2)] = (1, 3)
    prod[(2, 1)] = (-1, 3)
    prod[(2, 3)] = (1, 1)
    prod[(3, 2)] = (-1, 1)
    prod[(3, 1)] = (1, 2)
    prod[(1, 3)] = (-1, 2)

    def encode(sign, basis):
        return basis * 2 + (0 if sign == 1 else 1)

    def mul(x, y):
        s1, b1 = (1 if x % 2 == 0 else -1), x // 2
        s2, b2 = (1 if y % 2 == 0 else -1), y // 2
        s3, b3 = prod[(b1, b2)]
        return encode(s1 * s2 * s3, b3)

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    return FiniteGroup(table, name="Q8", check=False)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with (g, h) encoded as g * |H| + h."""
    m = H.order
    table = [[G.mul(x // m, y // m) * m + H.mul(x % m, y % m)
              for y in range(G.order * m)] for x in range(G.order * m)]
    return FiniteGroup(table, name=f"{G.name}x{H.name}", check=False)
