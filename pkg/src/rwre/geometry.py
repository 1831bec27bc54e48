"""Space-time geometry: anchored intervals and boxes, allowed paths,
the multiplicative scale ladder, grid rounding, and box pavings.

Anchors may sit at non-integer horizontal positions, so every operation
that intersects an interval with the lattice works in exact rational
arithmetic.  Floats given by users are read through their shortest
decimal repr (0.4 means 2/5, not the nearest binary double), which keeps
half-open boundary decisions reproducible and unsurprising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, float, Fraction]


class GridTooCoarse(ValueError):
    """Rounding grid degenerated to zero spacing."""


class LadderStalled(ValueError):
    """Scale recursion hit a unit multiplier and can no longer grow."""


def as_fraction(x: Rational) -> Fraction:
    """Exact rational view of a user-supplied number.

    Floats go through their shortest decimal repr so 0.4 becomes 2/5.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite coordinate {x}")
        return Fraction(repr(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


@dataclass(frozen=True)
class RealAnchor:
    """Point (x, n) with a real horizontal coordinate and integer time."""

    x: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "x", as_fraction(self.x))
        if self.n < 0:
            raise ValueError(f"anchor time must be >= 0, got {self.n}")

    def shifted(self, dx: Rational, dn: int) -> "RealAnchor":
        return RealAnchor(self.x + as_fraction(dx), self.n + dn)


ORIGIN = RealAnchor(Fraction(0), 0)


@dataclass(frozen=True)
class BoxSpec:
    """Axis-aligned box [x_lo, x_hi) x [n_lo, n_hi), half-open on both axes."""

    x_lo: Fraction
    x_hi: Fraction
    n_lo: int
    n_hi: int

    def __post_init__(self):
        object.__setattr__(self, "x_lo", as_fraction(self.x_lo))
        object.__setattr__(self, "x_hi", as_fraction(self.x_hi))
        if not (self.x_lo < self.x_hi and self.n_lo < self.n_hi):
            raise ValueError(f"empty box {self}")

    @property
    def width(self) -> Fraction:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> int:
        return self.n_hi - self.n_lo

    def lattice_x_range(self) -> tuple[int, int]:
        """Integer sites in [x_lo, x_hi) as a half-open (lo, hi) pair."""
        return _ceil(self.x_lo), _ceil(self.x_hi)

    def contains_site(self, x: int, n: int) -> bool:
        return self.x_lo <= x < self.x_hi and self.n_lo <= n < self.n_hi

    def vertical_gap(self, other: "BoxSpec") -> int:
        """Vertical distance between the boxes (0 if they overlap in time)."""
        return max(self.n_lo - other.n_hi, other.n_lo - self.n_hi, 0)


def _ceil(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


def interval_points(w: RealAnchor, H: Rational) -> list[tuple[int, int]]:
    """Lattice points of the horizontal interval w + [0, H) x {0}."""
    H = as_fraction(H)
    if H <= 0:
        raise ValueError(f"interval length must be positive, got {H}")
    lo = _ceil(w.x)
    hi = _ceil(w.x + H)
    return [(x, w.n) for x in range(lo, hi)]


def box_of(w: RealAnchor, H: Rational, R: int) -> BoxSpec:
    """Localization box w + [-(R+1)H, (R+2)H) x [0, H).

    Any jump-range-R path of length < H started in the interval at w
    stays inside, even after widening by the environment window.
    """
    H = as_fraction(H)
    if H <= 0:
        raise ValueError(f"box height must be positive, got {H}")
    if R < 1:
        raise ValueError(f"jump range must be >= 1, got {R}")
    n_hi = w.n + _ceil(H)
    return BoxSpec(w.x - (R + 1) * H, w.x + (R + 2) * H, w.n, n_hi)


@dataclass(frozen=True)
class AllowedPath:
    """Space-time path moving one time step and at most R sites per step."""

    points: tuple[tuple[int, int], ...]

    @staticmethod
    def from_positions(positions: Sequence[int], n0: int = 0) -> "AllowedPath":
        return AllowedPath(tuple((x, n0 + i) for i, x in enumerate(positions)))

    def is_allowed(self, R: int) -> bool:
        return all(
            abs(b[0] - a[0]) <= R and b[1] == a[1] + 1
            for a, b in zip(self.points, self.points[1:])
        )


def path_localized(
    path: AllowedPath, w: RealAnchor, H: Rational, ell: int, R: int | None = None
) -> bool:
    """Whether the path, widened by [-ell, ell] x {0}, stays in box_of(w, H, R).

    For allowed paths of length < H started in the interval at w this is
    guaranteed whenever H >= ell; the operation exists as a test oracle
    for that fact.  R defaults to the path's own largest jump (min 1).
    """
    H = as_fraction(H)
    if H < ell:
        raise ValueError(f"need H >= ell, got H={H}, ell={ell}")
    start = path.points[0]
    if not (w.x <= start[0] < w.x + H and start[1] == w.n):
        raise ValueError(f"path must start in the interval at {w}, got {start}")
    if R is None:
        R = max(
            [1]
            + [abs(b[0] - a[0]) for a, b in zip(path.points, path.points[1:])]
        )
    box = box_of(w, H, R)
    return all(
        box.x_lo <= x - ell and x + ell < box.x_hi and box.n_lo <= n < box.n_hi
        for x, n in path.points
    )


def paving(scale_ladder: "ScaleLadder", k: int, h: int, R: int) -> list[RealAnchor]:
    """Anchors whose intervals tile the level-(k+1) box on the h*L_k grid.

    The union of the intervals I_{h L_k}(w) over the returned anchors is
    B_{h L_{k+1}} intersected with the rows at multiples of h*L_k; there
    are (2R+3) * l_k**2 anchors, anchored at the left edge of the box.
    """
    L_k, l_k = scale_ladder.levels[k]
    L_next = scale_ladder.levels[k + 1][0]
    return paving_anchors(h * L_k, h * L_next, R)


def paving_anchors(
    unit: int, big_h: int, R: int, base: RealAnchor = ORIGIN
) -> list[RealAnchor]:
    """Grid anchors tiling B_{big_h}(base) rows at multiples of ``unit``.

    ``big_h`` must be a multiple of ``unit``; the tiling has
    (2R+3) * (big_h/unit)**2 anchors.
    """
    if big_h % unit != 0:
        raise ValueError(f"{big_h} is not a multiple of the unit {unit}")
    m = big_h // unit
    x0 = base.x - (R + 1) * big_h
    return [
        RealAnchor(x0 + i * unit, base.n + j * unit)
        for j in range(m)
        for i in range((2 * R + 3) * m)
    ]


@dataclass(frozen=True)
class ScaleLadder:
    """Scales L_{k+1} = l_k * L_k with l_k = floor(L_k**(1/4))."""

    L0: int
    levels: tuple[tuple[int, int], ...]

    def L(self, k: int) -> int:
        return self.levels[k][0]

    def multiplier(self, k: int) -> int:
        return self.levels[k][1]

    @property
    def depth(self) -> int:
        return len(self.levels)


def _iroot4(n: int) -> int:
    return math.isqrt(math.isqrt(n))


def ladder(L0: int, k_max: int) -> ScaleLadder:
    """Build the scale ladder up to level k_max.

    L0 floors at 2; the recursion refuses to continue through a unit
    multiplier (L0 < 16 stalls at the first level).  Desk-scale runs use
    small L0; the asymptotic analyses behind the scale choice assume
    L0 >= 10**10, which run manifests record as a deviation.
    """
    if L0 < 2:
        raise ValueError(f"L0 must be >= 2, got {L0}")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    levels = []
    L = L0
    for k in range(k_max + 1):
        l = _iroot4(L)
        levels.append((L, l))
        if k < k_max:
            if l < 2:
                raise LadderStalled(
                    f"l_{k} = {l} at L_{k} = {L}; ladder needs L0 >= 16 to grow"
                )
            L = l * L
    return ScaleLadder(L0, tuple(levels))


def rounded_point(y: tuple[int, int], delta: Rational, h_k: Rational) -> tuple[int, int]:
    """Closest point to the left of y on the coarse grid of step floor(delta*h_k/4)."""
    grid = math.floor(as_fraction(delta) * as_fraction(h_k) / 4)
    if grid < 1:
        raise GridTooCoarse(f"delta*h_k/4 = {as_fraction(delta) * as_fraction(h_k) / 4} < 1")
    x, n = y
    return ((x // grid) * grid, n)


def grid_step(delta: Rational, h_k: Rational) -> int:
    """Spacing of the rounding grid, floor(delta*h_k/4)."""
    step = math.floor(as_fraction(delta) * as_fraction(h_k) / 4)
    if step < 1:
        raise GridTooCoarse(f"delta*h_k/4 < 1 for delta={delta}, h_k={h_k}")
    return step
