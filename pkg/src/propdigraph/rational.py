"""Witness construction for rational thresholds p/q.

Given a digraph without one-way cycles and a threshold p/q, builds a
zone map whose induced digraph at p/q is exactly the input.  The
construction starts from product-style base sets whose pairwise
intersection ratio is exactly p/q, inflates them, pushes every pair
strictly above the threshold with a shared core, then selectively
drains private intersections to break the unwanted directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, to_appropriate_pair
from .zonemap import ZoneMap


def _check_pq(p: int, q: int):
    if not (0 < p < q):
        raise ValueError(f"need 0 < p < q, got p={p}, q={q}")


@dataclass(frozen=True)
class RationalParams:
    """Inflation parameters for the p/q construction.

    ``a`` sizes the shared core of a*p*n points, ``m`` the copy count of
    the base sets.  They satisfy (q-p)*a > q and m*p^2*(q-p)^(n-2) > a*p*n,
    which keep the core strictly smaller than every private intersection.
    """

    p: int
    q: int
    n: int
    a: int
    m: int

    def __post_init__(self):
        _check_pq(self.p, self.q)
        if (self.q - self.p) * self.a <= self.q:
            raise ValueError(f"a={self.a} too small for p/q={self.p}/{self.q}")
        if self.n >= 2:
            private = self.m * self.p**2 * (self.q - self.p) ** (self.n - 2)
            if private <= self.a * self.p * self.n:
                raise ValueError(f"m={self.m} too small for n={self.n}")

    @property
    def core(self) -> int:
        return self.a * self.p * self.n


def base_zones(n: int, p: int, q: int) -> ZoneMap:
    """Zone profile of the base family B_i = {s in {1..q}^n : s_i <= p}.

    Every nonempty zone I gets p^|I| * (q-p)^(n-|I|) points, which makes
    |B_i| = p*q^(n-1) and |B_i ∩ B_j| = p^2*q^(n-2) = (p/q)*|B_i|.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not (1 <= p <= q):
        raise ValueError(f"need 1 <= p <= q, got p={p}, q={q}")
    zones = {}
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        zones[mask] = p**size * (q - p) ** (n - size)
    return ZoneMap(n, zones)


def check_elementary(p: int, q: int, a: int, r: int, s: int) -> bool:
    """Exact test of (p + a*r)/(q + a*r + s) > p/q."""
    if not (0 < p < q) or r <= 0 or s < 0 or a < 0:
        raise ValueError("need q > p > 0, r > 0, s >= 0, a >= 0")
    return Fraction(p + a * r, q + a * r + s) > Fraction(p, q)


def choose_parameters(n: int, p: int, q: int) -> RationalParams:
    """Smallest a and m meeting the construction's two inequalities."""
    _check_pq(p, q)
    if n < 2:
        raise ValueError(f"parameter selection needs n >= 2, got {n}")
    a = q // (q - p) + 1
    m = (a * p * n) // (p**2 * (q - p) ** (n - 2)) + 1
    return RationalParams(p=p, q=q, n=n, a=a, m=m)


def one_way_transfer_amount(params: RationalParams, i: int) -> int:
    """Points to drain from the private intersection of a one-way pair (i, j).

    Chosen so that the remaining intersection stays strictly above p/q of
    |A_i| but at most p/q of |A_j|; depends only on the smaller index i.
    """
    p, q, core = params.p, params.q, params.core
    ceil_term = -((-(q - p) * core) // q)
    return ceil_term - p * i - 1


def realize_rational(g: Digraph, p: int, q: int) -> ZoneMap:
    """Build a zone map whose induced digraph at p/q equals ``g``.

    Raises OneWayCycleError (with witness) when ``g`` is not representable.
    """
    _check_pq(p, q)
    pair = to_appropriate_pair(g)
    n = g.n
    if n == 0:
        return ZoneMap(0)
    if n == 1:
        return ZoneMap(1, {(1,): 1})

    params = choose_parameters(n, p, q)
    z = base_zones(n, p, q).scaled(params.m)

    # Shared core: pushes every pairwise ratio strictly above p/q.
    zones = z.nonzero_zones()
    full = (1 << n) - 1
    zones[full] = zones.get(full, 0) + params.core
    # Private padding: q*i fresh points to A_i, tilting sizes by index.
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        zones[bit] = zones.get(bit, 0) + q * i
    z = ZoneMap(n, zones)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if frozenset((i, j)) in pair.S:
                continue
            if (i, j) in pair.T:
                c = one_way_transfer_amount(params, i)
            else:
                c = z.zone((i, j))  # non-adjacent: drain the whole zone
            z = z.transfer_private(i, j, c)

    return z.relabeled(pair.original)


def size_bound_rational(n: int, e: int) -> int:
    """Universe-size ceiling 3n(1+2^n) + n(n+1) + 3ne for the p/q = 1/2 case."""
    return 3 * n * (1 + 2**n) + n * (n + 1) + 3 * n * e
