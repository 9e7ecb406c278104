"""Symbolic set families as Venn-zone cardinality maps.

A family A_1, ..., A_n of finite sets is described, up to renaming of
points, by the cardinality of every *zone*: for each nonempty subset I
of {1..n}, the number of points lying in exactly the sets indexed by I.
Zones are keyed by bitmask (bit i-1 set means index i participates);
only nonzero zones are stored.  All counts are plain Python integers,
so arithmetic is exact at any size, and threshold comparisons are done
by cross-multiplication so no rounding ever occurs.
"""

from __future__ import annotations

from fractions import Fraction

from .digraph import Digraph
from .errors import InsufficientZoneError

MAX_INDICES = 30  # enumeration over subsets is exponential in n


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


class ZoneMap:
    """Zone-cardinality description of a family of n finite sets.

    Instances are value-like: no operation mutates an existing map.
    """

    __slots__ = ("n", "_zones")

    def __init__(self, n: int, zones=None):
        if not (0 <= n <= MAX_INDICES):
            raise ValueError(f"index count must be in 0..{MAX_INDICES}, got {n}")
        self.n = n
        clean: dict[int, int] = {}
        if zones:
            full = (1 << n) - 1
            for key, count in zones.items():
                mask = key if isinstance(key, int) else mask_of(key)
                if mask == 0 or mask & ~full:
                    raise ValueError(f"zone key {key!r} not a nonempty subset of 1..{n}")
                if count < 0:
                    raise ValueError(f"negative zone cardinality for {key!r}")
                if count:
                    clean[mask] = clean.get(mask, 0) + count
        self._zones = clean

    # -- basic accessors ------------------------------------------------

    def zone(self, indices) -> int:
        return self._zones.get(mask_of(indices), 0)

    def zone_mask(self, mask: int) -> int:
        return self._zones.get(mask, 0)

    def nonzero_zones(self) -> dict[int, int]:
        return dict(self._zones)

    @property
    def total_points(self) -> int:
        return sum(self._zones.values())

    def _check_index(self, i: int):
        if not (1 <= i <= self.n):
            raise IndexError(f"index {i} out of range 1..{self.n}")

    def set_size(self, i: int) -> int:
        """|A_i|: total of all zones containing index i."""
        self._check_index(i)
        bit = 1 << (i - 1)
        return sum(c for m, c in self._zones.items() if m & bit)

    def pair_intersection(self, i: int, j: int) -> int:
        """|A_i ∩ A_j| for distinct indices."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise ValueError("pair_intersection requires distinct indices")
        both = (1 << (i - 1)) | (1 << (j - 1))
        return sum(c for m, c in self._zones.items() if m & both == both)

    # -- transformations ------------------------------------------------

    def transfer_private(self, i: int, j: int, c: int) -> "ZoneMap":
        """Move c points out of the private intersection of A_i and A_j.

        The points leave zone {i,j} and fresh copies are added privately
        to each of A_i and A_j, so both set sizes stay fixed while
        |A_i ∩ A_j| drops by c.
        """
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise ValueError("transfer_private requires distinct indices")
        if c < 0:
            raise ValueError("transfer amount must be nonnegative")
        pair = (1 << (i - 1)) | (1 << (j - 1))
        avail = self._zones.get(pair, 0)
        if c > avail:
            raise InsufficientZoneError(
                f"zone {{{i},{j}}} holds {avail} points, cannot remove {c}"
            )
        zones = dict(self._zones)
        zones[pair] = avail - c
        for single in (1 << (i - 1), 1 << (j - 1)):
            zones[single] = zones.get(single, 0) + c
        return ZoneMap(self.n, zones)

    def scaled(self, k: int) -> "ZoneMap":
        if k < 0:
            raise ValueError("scale factor must be nonnegative")
        return ZoneMap(self.n, {m: c * k for m, c in self._zones.items()})

    def relabeled(self, new_index) -> "ZoneMap":
        """Apply an index relabeling; ``new_index(i)`` gives i's new name."""
        zones = {}
        for mask, count in self._zones.items():
            new_mask = mask_of(new_index(i) for i in indices_of(mask))
            zones[new_mask] = zones.get(new_mask, 0) + count
        return ZoneMap(self.n, zones)

    # -- induced digraphs -----------------------------------------------

    def induced_digraph(self, alpha: Fraction) -> Digraph:
        """Digraph with i -> j iff |A_i ∩ A_j| > alpha * |A_i|, exactly."""
        alpha = Fraction(alpha)
        num, den = alpha.numerator, alpha.denominator
        sizes = [self.set_size(i) for i in range(1, self.n + 1)]
        edges = set()
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if i == j:
                    continue
                inter = self.pair_intersection(i, j)
                if den * inter > num * sizes[i - 1]:
                    edges.add((i, j))
        return Digraph(self.n, frozenset(edges))

    def induced_interval_digraph(self, alpha: Fraction, beta: Fraction) -> Digraph:
        """Digraph with i -> j iff alpha*|A_i| < |A_i ∩ A_j| < beta*|A_i|."""
        alpha, beta = Fraction(alpha), Fraction(beta)
        if alpha >= beta:
            raise ValueError(f"need alpha < beta, got {alpha} >= {beta}")
        an, ad = alpha.numerator, alpha.denominator
        bn, bd = beta.numerator, beta.denominator
        sizes = [self.set_size(i) for i in range(1, self.n + 1)]
        edges = set()
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if i == j:
                    continue
                inter = self.pair_intersection(i, j)
                size = sizes[i - 1]
                if ad * inter > an * size and bd * inter < bn * size:
                    edges.add((i, j))
        return Digraph(self.n, frozenset(edges))

    # -- explicit witnesses ---------------------------------------------

    def materialize(self) -> "SetFamily":
        """Allocate explicit points: consecutive naturals, ascending by zone mask."""
        members = [set() for _ in range(self.n)]
        next_point = 0
        for mask in sorted(self._zones):
            count = self._zones[mask]
            points = range(next_point, next_point + count)
            next_point += count
            for i in indices_of(mask):
                members[i - 1].update(points)
        return SetFamily(
            n=self.n,
            universe=frozenset(range(next_point)),
            members=tuple(frozenset(s) for s in members),
        )

    def __eq__(self, other):
        if not isinstance(other, ZoneMap):
            return NotImplemented
        return self.n == other.n and self._zones == other._zones

    def __hash__(self):
        return hash((self.n, frozenset(self._zones.items())))

    def __repr__(self):
        zones = {indices_of(m): c for m, c in sorted(self._zones.items())}
        return f"ZoneMap(n={self.n}, zones={zones})"


class SetFamily:
    """Explicit finite sets A_1, ..., A_n over a shared point universe."""

    __slots__ = ("n", "universe", "members")

    def __init__(self, n: int, universe, members):
        members = tuple(frozenset(m) for m in members)
        if len(members) != n:
            raise ValueError(f"expected {n} member sets, got {len(members)}")
        universe = frozenset(universe)
        covered = frozenset().union(*members) if members else frozenset()
        if not covered <= universe:
            raise ValueError("member sets contain points outside the universe")
        if covered != universe:
            raise ValueError("every universe point must lie in some member set")
        self.n = n
        self.universe = universe
        self.members = members

    def member(self, i: int) -> frozenset:
        if not (1 <= i <= self.n):
            raise IndexError(f"index {i} out of range 1..{self.n}")
        return self.members[i - 1]

    def zone_map(self) -> ZoneMap:
        """Recover the zone profile by classifying every point's memberships."""
        zones: dict[int, int] = {}
        for point in self.universe:
            mask = 0
            for i, member in enumerate(self.members):
                if point in member:
                    mask |= 1 << i
            zones[mask] = zones.get(mask, 0) + 1
        return ZoneMap(self.n, zones)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return (self.n, self.universe, self.members) == (
            other.n,
            other.universe,
            other.members,
        )

    def __repr__(self):
        return f"SetFamily(n={self.n}, |universe|={len(self.universe)})"


def from_set_family(family: SetFamily) -> ZoneMap:
    """Zone profile of an explicit family; inverse of ``ZoneMap.materialize``."""
    return family.zone_map()
