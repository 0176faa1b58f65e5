"""Fixed-point closure operators: generated subgroups, ideals, commutator groups.

Subsets of the carrier are plain frozensets of indices.  All closures use
deterministic worklists (ascending element order, operations in signature
order) so results are reproducible bit for bit.  Each pass only pairs the
newly added frontier against the accumulated set, which keeps the total work
proportional to the number of distinct tuples ever formed.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Iterable, Iterator

from .core import FiniteOmegaGroup
from .errors import NotASubgroupError, NotContainedError, TooLargeError

ENUMERATION_LIMIT = 16  # 2^n subset scans beyond this are refused


def _omega_commutator(algebra, table, a_tuple, b_tuple) -> int:
    wa = table.table[table.flat_index(a_tuple, algebra.size)]
    wb = table.table[table.flat_index(b_tuple, algebra.size)]
    summed = tuple(algebra.add_of(x, y) for x, y in zip(a_tuple, b_tuple))
    wab = table.table[table.flat_index(summed, algebra.size)]
    return algebra.add_of(algebra.add_of(algebra.neg_of(wa), algebra.neg_of(wb)), wab)


def _tuples_touching(frontier: list[int], older: list[int], arity: int) -> Iterator[tuple]:
    """All arity-tuples over frontier+older that use at least one frontier element."""
    everything = sorted(set(frontier) | set(older))
    frontier_set = set(frontier)
    for combo in iproduct(everything, repeat=arity):
        if any(x in frontier_set for x in combo):
            yield combo


def is_omega_subgroup(algebra: FiniteOmegaGroup, subset: frozenset[int]) -> bool:
    """Contains 0 and closed under add, neg, and every extra operation."""
    if 0 not in subset:
        return False
    n = algebra.size
    add_t, neg_t = algebra.add, algebra.neg
    members = sorted(subset)
    for a in members:
        if neg_t[a] not in subset:
            return False
        row = a * n
        for b in members:
            if add_t[row + b] not in subset:
                return False
    for table in algebra.omega:
        for args in iproduct(members, repeat=table.arity):
            if table.table[table.flat_index(args, n)] not in subset:
                return False
    return True


def is_ideal(
    algebra: FiniteOmegaGroup,
    subset: frozenset[int],
    ambient: frozenset[int] | None = None,
) -> bool:
    """Ideal test relative to an ambient subgroup (whole carrier by default).

    Checks: closure under every extra operation, normality in the additive
    group of the ambient, and absorption of omega-commutators whose second
    tuple ranges over the ambient.
    """
    amb = sorted(ambient) if ambient is not None else list(algebra.elements)
    if not subset <= set(amb) or 0 not in subset:
        return False
    n = algebra.size
    members = sorted(subset)
    for a in members:
        if algebra.neg_of(a) not in subset:
            return False
        for b in members:
            if algebra.add_of(a, b) not in subset:
                return False
    for u in members:
        for p in amb:
            if algebra.conjugate(u, p) not in subset:
                return False
    for table in algebra.omega:
        for args in iproduct(members, repeat=table.arity):
            if table.table[table.flat_index(args, n)] not in subset:
                return False
        for a_tuple in iproduct(members, repeat=table.arity):
            for b_tuple in iproduct(amb, repeat=table.arity):
                if _omega_commutator(algebra, table, a_tuple, b_tuple) not in subset:
                    return False
    return True


def omega_subgroup_closure(
    algebra: FiniteOmegaGroup, seed: Iterable[int]
) -> frozenset[int]:
    """Least subgroup containing the seed and closed under all operations."""
    n = algebra.size
    add_t, neg_t = algebra.add, algebra.neg
    current: set[int] = {0} | set(seed)
    frontier = sorted(current)
    older: list[int] = []
    while frontier:
        if len(current) == n:
            return frozenset(current)  # cannot grow past the carrier
        new: set[int] = set()

        def consider(v: int):
            if v not in current:
                new.add(v)

        for a in frontier:
            consider(neg_t[a])
        members = sorted(current)
        for a in frontier:
            row = a * n
            for b in members:
                consider(add_t[row + b])
                consider(add_t[b * n + a])
        for table in algebra.omega:
            for args in _tuples_touching(frontier, older, table.arity):
                consider(table.table[table.flat_index(args, n)])
        older = members
        current |= new
        frontier = sorted(new)
    return frozenset(current)


def ideal_closure(
    algebra: FiniteOmegaGroup,
    ambient: frozenset[int] | None,
    seed: Iterable[int],
) -> frozenset[int]:
    """Least ideal of the ambient subgroup containing the seed.

    The fixed point runs over: additive subgroup generation, conjugation by
    ambient elements, the extra operations on tuples from the set, and
    omega-commutators pairing tuples from the set with tuples from the
    ambient.
    """
    if ambient is None:
        amb_set = frozenset(algebra.elements)
    else:
        amb_set = frozenset(ambient)
        if not is_omega_subgroup(algebra, amb_set):
            raise NotASubgroupError("ambient is not a closed subgroup")
    seed_set = set(seed)
    if not seed_set <= amb_set:
        raise NotContainedError("seed must lie inside the ambient subgroup")

    n = algebra.size
    add_t, neg_t = algebra.add, algebra.neg
    amb = sorted(amb_set)
    amb_tuples = {
        table.name: list(iproduct(amb, repeat=table.arity)) for table in algebra.omega
    }
    current: set[int] = {0} | seed_set
    frontier = sorted(current)
    older: list[int] = []
    while frontier:
        if len(current) == len(amb):
            return frozenset(current)  # the ambient is itself an ideal
        new: set[int] = set()

        def consider(v: int):
            if v not in current:
                new.add(v)

        for a in frontier:
            consider(neg_t[a])
        members = sorted(current)
        for a in frontier:
            row = a * n
            for b in members:
                consider(add_t[row + b])
                consider(add_t[b * n + a])
        for u in frontier:
            for p in amb:
                consider(add_t[add_t[neg_t[p] * n + u] * n + p])
        for table in algebra.omega:
            for args in _tuples_touching(frontier, older, table.arity):
                consider(table.table[table.flat_index(args, n)])
            for a_tuple in _tuples_touching(frontier, older, table.arity):
                for b_tuple in amb_tuples[table.name]:
                    consider(_omega_commutator(algebra, table, a_tuple, b_tuple))
        older = members
        current |= new
        frontier = sorted(new)
    return frozenset(current)


def commutator_group(
    algebra: FiniteOmegaGroup, a_set: frozenset[int], b_set: frozenset[int]
) -> frozenset[int]:
    """The ideal, inside the subgroup the two sets generate, spanned by their
    group commutators and omega-commutators."""
    if not is_omega_subgroup(algebra, a_set) or not is_omega_subgroup(algebra, b_set):
        raise NotASubgroupError("commutator_group expects closed subgroups")
    ambient = omega_subgroup_closure(algebra, a_set | b_set)
    gens = set(v for _, v in _described_commutator_generators(algebra, a_set, b_set))
    return ideal_closure(algebra, ambient, gens)


def commutator_group_is_trivial(
    algebra: FiniteOmegaGroup, a_set: frozenset[int], b_set: frozenset[int]
) -> tuple[bool, tuple | None]:
    """Fast equivalent of commutator_group(...) == {0}.

    The generated ideal is trivial exactly when every generator is already 0,
    so no closure needs to be built.  Returns (verdict, first nonzero
    generator descriptor or None); the scan order is deterministic.
    """
    if not is_omega_subgroup(algebra, a_set) or not is_omega_subgroup(algebra, b_set):
        raise NotASubgroupError("commutator test expects closed subgroups")
    for desc, value in _described_commutator_generators(algebra, a_set, b_set):
        if value != 0:
            return False, desc
    return True, None


def _described_commutator_generators(algebra, a_set, b_set):
    """Generators of the commutator group, each tagged with how it was formed.

    Order: group commutators lexicographic in (a, b), then per operation,
    lexicographic in (a-tuple, b-tuple).
    """
    a_sorted = sorted(a_set)
    b_sorted = sorted(b_set)
    for a in a_sorted:
        for b in b_sorted:
            yield ("commutator", a, b), algebra.group_commutator(a, b)
    for table in algebra.omega:
        for a_tuple in iproduct(a_sorted, repeat=table.arity):
            for b_tuple in iproduct(b_sorted, repeat=table.arity):
                yield (
                    ("omega-commutator", table.name, a_tuple, b_tuple),
                    _omega_commutator(algebra, table, a_tuple, b_tuple),
                )


def enumerate_ideals(
    algebra: FiniteOmegaGroup, ambient: frozenset[int] | None = None
) -> list[frozenset[int]]:
    """All ideals of the ambient subgroup, by exhaustive subset scan.

    Subsets appear in ascending bitmask order over the ambient's sorted
    elements.  Guarded to ambients of at most ENUMERATION_LIMIT elements.
    """
    if ambient is not None and not is_omega_subgroup(algebra, frozenset(ambient)):
        raise NotASubgroupError("ambient is not a closed subgroup")
    amb = sorted(ambient) if ambient is not None else list(algebra.elements)
    k = len(amb)
    if k > ENUMERATION_LIMIT:
        raise TooLargeError(f"subset scan over {k} elements exceeds {ENUMERATION_LIMIT}")
    ambient_set = frozenset(amb)
    out = []
    for mask in range(1 << k):
        subset = frozenset(amb[i] for i in range(k) if mask >> i & 1)
        if 0 not in subset:
            continue
        if is_ideal(algebra, subset, ambient_set):
            out.append(subset)
    return out


def enumerate_omega_subgroups(algebra: FiniteOmegaGroup) -> list[frozenset[int]]:
    """All closed subgroups, by exhaustive subset scan (same guard as ideals)."""
    n = algebra.size
    if n > ENUMERATION_LIMIT:
        raise TooLargeError(f"subset scan over {n} elements exceeds {ENUMERATION_LIMIT}")
    out = []
    for mask in range(1, 1 << n, 2):  # must contain element 0
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        if is_omega_subgroup(algebra, subset):
            out.append(subset)
    return out


def generated_subgroup(algebra: FiniteOmegaGroup, element: int) -> frozenset[int]:
    return omega_subgroup_closure(algebra, (element,))


def principal_ideal(
    algebra: FiniteOmegaGroup, element: int, ambient: frozenset[int] | None = None
) -> frozenset[int]:
    return ideal_closure(algebra, ambient, (element,))
