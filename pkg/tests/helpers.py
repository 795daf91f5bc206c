"""Shared builders for randomized tests.

Random modules are drawn from a library of constructions that are valid by
construction (trivial modules, coset permutation modules, index-two sign
twists, direct sums, hom modules), so seeded loops never have to reject and
retry action matrices.
"""

import random

from chatelet.groups import FiniteGroup, Subgroup, all_subgroups
from chatelet.intmat import IntMatrix
from chatelet.modules import (
    GModule,
    direct_sum,
    hom_module,
    permutation_module,
    trivial_module,
)


def coset_permutation_module(G: FiniteGroup, H: Subgroup, name: str = "cosets") -> GModule:
    """Free module on the left cosets of H with the translation action."""
    reps = H.left_coset_reps()
    perms = [tuple(H.coset_of(G.mul(g, r)) for r in reps) for g in G.elements()]
    return permutation_module(G, perms, name=name)


def index_two_sign_module(G: FiniteGroup, K: Subgroup,
                          modulus: int = 0) -> GModule:
    """Z (or Z/modulus) where elements outside an index-two subgroup act as -1."""
    if K.index != 2:
        raise ValueError("need an index-two subgroup")
    mats = [IntMatrix([[1 if K.contains(g) else -1]]) for g in G.elements()]
    relations = [(modulus,)] if modulus else ()
    return GModule(G, 1, relations, mats, name="sign", check=False)


def module_library(G: FiniteGroup, rng: random.Random) -> list[GModule]:
    """A pool of small valid modules over G to draw test instances from."""
    subs = all_subgroups(G)
    pool = [
        trivial_module(G),
        trivial_module(G, relations=[(rng.choice([2, 3, 4]),)]),
        trivial_module(G, rank=2, relations=[(2, 0)]),
    ]
    proper = [s for s in subs if 1 < s.index <= 4]
    if proper:
        pool.append(coset_permutation_module(G, rng.choice(proper)))
    index2 = [s for s in subs if s.index == 2]
    if index2:
        K = rng.choice(index2)
        pool.append(index_two_sign_module(G, K))
        pool.append(index_two_sign_module(G, K, modulus=4))
    return pool


def random_module(G: FiniteGroup, rng: random.Random, max_rank: int = 4) -> GModule:
    pool = module_library(G, rng)
    choice = rng.random()
    if choice < 0.55:
        M = rng.choice(pool)
    elif choice < 0.85:
        M = direct_sum(rng.choice(pool), rng.choice(pool))
    else:
        small = [m for m in pool if m.rank == 1]
        M = hom_module(rng.choice(small), rng.choice(small))
    if M.rank > max_rank:
        M = rng.choice(pool)
    return M


def random_cocycle(coh, rng: random.Random):
    """A random honest cocycle (degree one) drawn through the coordinates."""
    coords = [rng.randrange(d) if d else rng.randint(-2, 2) for d in coh.invariants]
    return coh.cocycle_from_coords(coords), tuple(coords)
