"""Witness construction for arbitrary thresholds alpha in (0, 1).

Works over exact rational weights: a *size function* assigns a weight to
every nonempty index subset (playing the role of a fractional zone), and
its *star* sums the weights of all supersets (the fractional analogue of
an intersection cardinality).  The pipeline perturbs the canonical size
function so that every ordered pair is strictly separated from alpha in
the right direction, then scales by a denominator N and takes floors,
doubling N until the rounded integer zones induce the target digraph.

The construction accepts alpha only as an exact rational.  Irrational
thresholds would need algebraic-number arithmetic; nothing below relies
on irrationality, so this is purely an input-format restriction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, to_appropriate_pair
from .zonemap import ZoneMap, mask_of

_MAX_DOUBLINGS = 64


def _check_alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if not (0 < alpha < 1):
        raise ValueError(f"threshold must lie strictly in (0, 1), got {alpha}")
    return alpha


class SizeFunction:
    """Exact nonnegative rational weight per nonempty subset of {1..n}."""

    __slots__ = ("n", "_values")

    def __init__(self, n: int, values=None):
        if n < 0:
            raise ValueError(f"index count must be nonnegative, got {n}")
        self.n = n
        clean: dict[int, Fraction] = {}
        if values:
            full = (1 << n) - 1
            for key, value in values.items():
                mask = key if isinstance(key, int) else mask_of(key)
                if mask == 0 or mask & ~full:
                    raise ValueError(f"key {key!r} not a nonempty subset of 1..{n}")
                value = Fraction(value)
                if value < 0:
                    raise ValueError(f"negative weight for {key!r}")
                if value:
                    clean[mask] = value
        self._values = clean

    def value(self, indices) -> Fraction:
        return self._values.get(mask_of(indices), Fraction(0))

    def value_mask(self, mask: int) -> Fraction:
        return self._values.get(mask, Fraction(0))

    def star(self, indices) -> Fraction:
        return self.star_mask(mask_of(indices))

    def star_mask(self, mask: int) -> Fraction:
        """Sum of the weights of all supersets of ``mask``."""
        if mask == 0:
            raise ValueError("star is only defined for nonempty subsets")
        return sum(
            (v for m, v in self._values.items() if m & mask == mask), Fraction(0)
        )

    def items(self):
        return self._values.items()

    def __repr__(self):
        return f"SizeFunction(n={self.n}, {len(self._values)} nonzero weights)"


def canonical_size_function(n: int, alpha) -> SizeFunction:
    """The weight alpha^(|I|-1) * (1-alpha)^(n-|I|) on every nonempty I.

    Normalized so that star({i}) = 1 and star({i,j}) = alpha exactly.
    """
    alpha = _check_alpha(alpha)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    values = {}
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        values[mask] = alpha ** (size - 1) * (1 - alpha) ** (n - size)
    return SizeFunction(n, values)


@dataclass(frozen=True)
class RealAlphaParams:
    """Perturbation magnitudes for the real-threshold construction."""

    n: int
    alpha: Fraction
    epsilon: Fraction
    delta: Fraction

    @classmethod
    def for_threshold(cls, n: int, alpha) -> "RealAlphaParams":
        alpha = _check_alpha(alpha)
        epsilon = alpha * (1 - alpha) ** (n - 1) / 2
        delta = epsilon * (1 - alpha) / (2 * alpha)
        return cls(n=n, alpha=alpha, epsilon=epsilon, delta=delta)


def choose_gamma(params: RealAlphaParams, i: int, j: int) -> Fraction:
    """Drain amount for the one-way pair (i, j), i < j.

    Any value strictly between eps*(1-a) - a*d*j/n and eps*(1-a) - a*d*i/n
    leaves the pair's star above alpha relative to A_i but below alpha
    relative to A_j; the midpoint maximizes both margins, which lets the
    rounding step succeed at a smaller denominator.
    """
    if not (1 <= i < j <= params.n):
        raise ValueError(f"need 1 <= i < j <= {params.n}, got ({i}, {j})")
    a, e, d, n = params.alpha, params.epsilon, params.delta, params.n
    return e * (1 - a) - a * d * (i + j) / (2 * n)


def build_h(g: Digraph, alpha):
    """Perturbed size function separating every ordered pair from alpha.

    Returns (h, pair) where ``pair`` is the appropriate-pair relabeling of
    ``g`` and ``h`` lives on the relabeled indices: for the relabeled
    digraph, i -> j implies star(h,{i,j}) > alpha*star(h,{i}) and
    i -/-> j implies star(h,{i,j}) < alpha*star(h,{i}).
    """
    alpha = _check_alpha(alpha)
    pair = to_appropriate_pair(g)
    n = g.n
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    params = RealAlphaParams.for_threshold(n, alpha)

    f = canonical_size_function(n, alpha)
    values = {mask: value for mask, value in f.items()}
    full = (1 << n) - 1
    values[full] = values.get(full, Fraction(0)) + params.epsilon
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        values[bit] = values.get(bit, Fraction(0)) + Fraction(i) * params.delta / n

    # Drain each pair weight by phi and return phi privately to both
    # singletons, keeping every star({i}) fixed.
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if frozenset((i, j)) in pair.S:
                continue
            pair_mask = (1 << (i - 1)) | (1 << (j - 1))
            if (i, j) in pair.T:
                phi = choose_gamma(params, i, j)
            else:
                phi = values.get(pair_mask, Fraction(0))
            values[pair_mask] = values.get(pair_mask, Fraction(0)) - phi
            values[1 << (i - 1)] += phi
            values[1 << (j - 1)] += phi

    return SizeFunction(n, values), pair


def round_to_zonemap(h: SizeFunction, target: Digraph, alpha):
    """Scale ``h`` by an integer N and floor to integer zones.

    Starts at N = 2^(2n) and doubles until the rounded zone map induces
    ``target`` at ``alpha`` exactly; the strict separation of ``h``
    guarantees this terminates.  Returns (zone_map, N).
    """
    alpha = _check_alpha(alpha)
    n = h.n
    _check_separation(h, target, alpha)
    ratios = {mask: (v.numerator, v.denominator) for mask, v in h.items()}

    N = 1 << (2 * n)
    for _ in range(_MAX_DOUBLINGS):
        zones = {}
        for mask, (num, den) in ratios.items():
            count = num * N // den
            if count:
                zones[mask] = count
        z = ZoneMap(n, zones)
        if z.induced_digraph(alpha) == target:
            return z, N
        N *= 2
    raise RuntimeError("rounding did not converge; separation margins too thin")


def _check_separation(h: SizeFunction, target: Digraph, alpha: Fraction):
    for i in range(1, target.n + 1):
        star_i = h.star((i,))
        for j in range(1, target.n + 1):
            if i == j:
                continue
            star_ij = h.star((i, j))
            if target.has_edge(i, j):
                ok = star_ij > alpha * star_i
            else:
                ok = star_ij < alpha * star_i
            if not ok:
                raise ValueError(
                    f"size function does not separate pair ({i}, {j}) from {alpha}"
                )


def realize_real(g: Digraph, alpha) -> ZoneMap:
    """Build a zone map whose induced digraph at ``alpha`` equals ``g``.

    Raises OneWayCycleError (with witness) when ``g`` is not representable.
    """
    alpha = _check_alpha(alpha)
    if g.n == 0:
        to_appropriate_pair(g)
        return ZoneMap(0)
    if g.n == 1:
        to_appropriate_pair(g)
        return ZoneMap(1, {(1,): 1})
    h, pair = build_h(g, alpha)
    z, _ = round_to_zonemap(h, pair.to_digraph(), alpha)
    return z.relabeled(pair.original)
