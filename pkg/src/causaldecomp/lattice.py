"""Redundancy lattice of antichains over a small set of intervenable variables.

Variable subsets are encoded as bitmasks over ``{0, ..., n-1}``. An antichain
is a canonical tuple of pairwise incomparable (under set inclusion) nonempty
subsets, and antichains are ordered by the redundancy relation

    alpha <= beta   iff   every member of beta contains some member of alpha.

Under this order the antichains form a lattice whose bottom is the family of
all singletons and whose top is the full variable set alone. The node count
is the n-th Dedekind number minus two (1, 4, 18, 166, 7579 for n = 1..5),
which is why the variable count is capped at five.

Internally every antichain is identified with its up-closure (the filter of
all subsets containing some member), stored as a bitmask with one slot per
nonempty subset. The redundancy order is then reverse filter inclusion, and
a cover step removes exactly one minimal element from the filter. That makes
enumeration, cover computation, and order queries cheap integer work.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, InvalidAntichainError, LatticeLookupError

MAX_VARIABLES = 5

SubsetLike = "int | Iterable[int]"


def subset_mask(indices: Iterable[int], n: int | None = None) -> int:
    """Encode a collection of variable indices as a bitmask.

    Empty collections are rejected: measures and antichains in this package
    never involve the empty subset.
    """
    mask = 0
    for i in indices:
        i = int(i)
        if i < 0:
            raise InvalidAntichainError(f"variable index {i} is negative")
        if n is not None and i >= n:
            raise InvalidAntichainError(f"variable index {i} out of range for n={n}")
        mask |= 1 << i
    if mask == 0:
        raise InvalidAntichainError("variable subset is empty")
    return mask


def subset_indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def subset_label(mask: int, names: Sequence[str] | None = None) -> str:
    """Render a subset as ``{02}``, or ``{A,C}``-style when names are wide."""
    parts = [str(i) if names is None else str(names[i]) for i in subset_indices(mask)]
    joiner = "" if all(len(p) == 1 for p in parts) else ","
    return "{" + joiner.join(parts) + "}"


def _as_mask(subset) -> int:
    if isinstance(subset, int):
        if subset <= 0:
            raise InvalidAntichainError(f"subset mask {subset} is not a nonempty bitmask")
        return subset
    return subset_mask(subset)


def _member_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class Antichain:
    """Canonical family of pairwise inclusion-incomparable variable subsets.

    ``members`` holds subset bitmasks sorted by (cardinality, mask value), so
    equality and hashing are structural. Use :func:`canonicalize` to build one
    from an arbitrary subset family.
    """

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise InvalidAntichainError("antichain needs at least one member subset")
        prev = None
        for m in self.members:
            if not isinstance(m, int) or m <= 0:
                raise InvalidAntichainError(f"subset mask {m!r} is not a nonempty bitmask")
            key = _member_key(m)
            if prev is not None and key <= prev:
                raise InvalidAntichainError(
                    "members must be strictly sorted by (cardinality, mask value)"
                )
            prev = key
        for i, a in enumerate(self.members):
            for b in self.members[i + 1 :]:
                inter = a & b
                if inter == a or inter == b:
                    raise InvalidAntichainError(
                        f"members {subset_label(a)} and {subset_label(b)} are comparable"
                    )

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def max_index(self) -> int:
        return max(m.bit_length() for m in self.members) - 1

    @property
    def has_singleton(self) -> bool:
        return self.members[0].bit_count() == 1

    def subsets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(subset_indices(m) for m in self.members)

    def label(self, names: Sequence[str] | None = None) -> str:
        return "".join(subset_label(m, names) for m in self.members)

    def __repr__(self) -> str:  # keep asserts readable
        return f"Antichain({self.label()})"


def canonicalize(subsets) -> Antichain:
    """Reduce a family of subsets to its antichain of minimal elements.

    Accepts an :class:`Antichain` (returned unchanged), or an iterable whose
    entries are either bitmask ints or iterables of variable indices.
    Supersets of other members and duplicates are dropped; the result is
    sorted canonically. Idempotent. Raises :class:`InvalidAntichainError` on
    an empty family or an empty member subset.
    """
    if isinstance(subsets, Antichain):
        return subsets
    masks = {_as_mask(s) for s in subsets}
    if not masks:
        raise InvalidAntichainError("cannot canonicalize an empty subset family")
    minimal = [
        m for m in masks if not any(o != m and o & m == o for o in masks)
    ]
    return Antichain(tuple(sorted(minimal, key=_member_key)))


def is_below(alpha: Antichain, beta: Antichain) -> bool:
    """Redundancy order: every member of ``beta`` contains some member of ``alpha``."""
    return all(any(a & b == a for a in alpha.members) for b in beta.members)


class RedundancyLattice:
    """All antichains over ``n`` variables, with covers and Moebius values.

    Nodes are stored in a fixed topological order (bottom first, ties broken
    by the canonical antichain sort key), so any summation that follows node
    order is deterministic. Instances are immutable after construction; the
    only internal mutation is the lazy Moebius cache for n = 5, whose fills
    are idempotent because the values are determined by the lattice alone.
    """

    def __init__(self, n: int) -> None:
        if not isinstance(n, int) or not 1 <= n <= MAX_VARIABLES:
            raise CapacityError(
                f"n={n!r} unsupported: the antichain count follows the Dedekind "
                f"numbers (superexponential growth), capped at n={MAX_VARIABLES}"
            )
        self.n = n
        full = (1 << n) - 1

        # Up-closure of each subset, as a bitmask with slot (s - 1) per subset s.
        up_slots = {}
        for m in range(1, full + 1):
            comp = full ^ m
            bits = 0
            s = comp
            while True:
                bits |= 1 << ((m | s) - 1)
                if s == 0:
                    break
                s = (s - 1) & comp
            up_slots[m] = bits

        # Enumerate antichains by recursive extension over canonically ordered
        # subsets, pruning any candidate comparable to a chosen member.
        order = sorted(range(1, full + 1), key=_member_key)
        found: list[tuple[int, ...]] = []

        def extend(start: int, chosen: tuple[int, ...]) -> None:
            for k in range(start, len(order)):
                m = order[k]
                ok = True
                for c in chosen:
                    inter = m & c
                    if inter == m or inter == c:
                        ok = False
                        break
                if ok:
                    nxt = chosen + (m,)
                    found.append(nxt)
                    extend(k + 1, nxt)

        extend(0, ())

        def node_key(members: tuple[int, ...], filt: int) -> tuple:
            return (-filt.bit_count(), tuple(_member_key(m) for m in members))

        raw = []
        for members in found:
            filt = 0
            for m in members:
                filt |= up_slots[m]
            raw.append((members, filt))
        raw.sort(key=lambda mf: node_key(mf[0], mf[1]))

        self.nodes: tuple[Antichain, ...] = tuple(Antichain(m) for m, _ in raw)
        self._filters: tuple[int, ...] = tuple(f for _, f in raw)
        self._index: dict[Antichain, int] = {a: j for j, a in enumerate(self.nodes)}
        by_filter = {f: j for j, f in enumerate(self._filters)}

        # A cover step up removes one minimal element (one member) from the
        # filter; the result is again a filter unless it would be empty.
        parents: list[list[int]] = [[] for _ in self.nodes]
        children: list[list[int]] = [[] for _ in self.nodes]
        for j, node in enumerate(self.nodes):
            filt = self._filters[j]
            for m in node.members:
                pf = filt & ~(1 << (m - 1))
                if pf:
                    p = by_filter[pf]
                    parents[j].append(p)
                    children[p].append(j)
        self._parents = tuple(tuple(sorted(p)) for p in parents)
        self._children = tuple(tuple(sorted(c)) for c in children)

        # Down-set bitsets over node ids; children sit strictly earlier in
        # topological order, so one ascending pass suffices.
        down = [0] * len(self.nodes)
        for j in range(len(self.nodes)):
            bits = 1 << j
            for c in self._children[j]:
                bits |= down[c]
            down[j] = bits
        self._down_bits = tuple(down)

        singletons = tuple(1 << i for i in range(n))
        if self.nodes[0].members != singletons or self.nodes[-1].members != (full,):
            raise AssertionError("lattice ends are not the singleton family and full set")

        self._down_ids_cache: dict[int, tuple[int, ...]] = {}
        self._mu_memo: dict[tuple[int, int], int] = {}
        self._mu: np.ndarray | None = None
        if n <= 4:
            self._mu = self._build_mu_table()

    # -- basic queries ----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def bottom(self) -> Antichain:
        return self.nodes[0]

    @property
    def top(self) -> Antichain:
        return self.nodes[-1]

    def node_id(self, alpha: Antichain) -> int:
        try:
            return self._index[alpha]
        except KeyError:
            raise LatticeLookupError(
                f"{alpha.label()} is not a node of the n={self.n} lattice"
            ) from None

    def is_below_ids(self, i: int, j: int) -> bool:
        return bool(self._down_bits[j] >> i & 1)

    def cover_parents(self, alpha: Antichain) -> tuple[Antichain, ...]:
        return tuple(self.nodes[p] for p in self._parents[self.node_id(alpha)])

    def cover_edges(self) -> tuple[tuple[int, int], ...]:
        """All (lower id, upper id) pairs of the transitive reduction."""
        return tuple(
            (j, p) for j in range(self.size) for p in self._parents[j]
        )

    def down_ids(self, j: int) -> tuple[int, ...]:
        """Ascending ids of every node at or below node ``j``."""
        got = self._down_ids_cache.get(j)
        if got is None:
            ids = []
            bits = self._down_bits[j]
            while bits:
                low = bits & -bits
                ids.append(low.bit_length() - 1)
                bits ^= low
            got = tuple(ids)
            self._down_ids_cache[j] = got
        return got

    # -- Moebius function --------------------------------------------------

    def _build_mu_table(self) -> np.ndarray:
        mu = np.zeros((self.size, self.size), dtype=np.int64)
        down_bits = self._down_bits
        for j in range(self.size):
            dn = self.down_ids(j)
            mu[j, j] = 1
            col = mu[:, j]
            for a in reversed(dn[:-1]):
                s = 0
                for z in dn:
                    if z > a and down_bits[z] >> a & 1:
                        s += col[z]
                col[a] = -s
        return mu

    def mobius_ids(self, i: int, j: int) -> int:
        if i == j:
            return 1
        if not self.is_below_ids(i, j):
            return 0
        if self._mu is not None:
            return int(self._mu[i, j])
        got = self._mu_memo.get((i, j))
        if got is None:
            s = 0
            for z in self.down_ids(j):
                if z != i and self.is_below_ids(i, z):
                    s += self.mobius_ids(z, j)
            got = -s
            self._mu_memo[(i, j)] = got
        return got

    def __repr__(self) -> str:
        return f"RedundancyLattice(n={self.n}, size={self.size})"


@functools.lru_cache(maxsize=None)
def build_lattice(n: int) -> RedundancyLattice:
    """Build (and cache) the redundancy lattice over ``n`` variables.

    Lattices are immutable, so the cache is safe to share; repeated callers
    get the same instance.
    """
    return RedundancyLattice(n)


def mobius(lattice: RedundancyLattice, alpha: Antichain, beta: Antichain) -> int:
    """Moebius function of the lattice: exact integer, 0 unless alpha <= beta.

    Defined by mu(a, a) = 1 and, for a < b, mu(a, b) = -sum of mu(z, b) over
    all z with a < z <= b. Values are memoized; for n <= 4 the full table is
    precomputed at build time.
    """
    return lattice.mobius_ids(lattice.node_id(alpha), lattice.node_id(beta))


def export_dot(lattice: RedundancyLattice, names: Sequence[str] | None = None) -> str:
    """Render the Hasse diagram (cover edges only) as DOT text, bottom-up."""
    lines = [
        "digraph redundancy_lattice {",
        "  rankdir=BT;",
        '  node [shape=none, fontsize=11];',
    ]
    for j, node in enumerate(lattice.nodes):
        lines.append(f'  n{j} [label="{node.label(names)}"];')
    for j, p in lattice.cover_edges():
        lines.append(f"  n{j} -> n{p};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_table(lattice: RedundancyLattice, names: Sequence[str] | None = None) -> str:
    """Dump nodes as tab-separated lines: id, label, cover-parent ids."""
    lines = ["id\tlabel\tcover_parents"]
    for j, node in enumerate(lattice.nodes):
        ps = ",".join(str(p) for p in lattice._parents[j])
        lines.append(f"{j}\t{node.label(names)}\t{ps}")
    return "\n".join(lines) + "\n"
