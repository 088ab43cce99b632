"""Annular geometry: radial segments, annuli, and nested partitions.

An annular partition is a finite increasing sequence of radii
``0 < r_1 < r_2 < ... < r_N`` splitting the annulus ``A(r_1, r_N)`` of
``R^d`` into ``N - 1`` concentric sub-annuli.  All interpolation and
error machinery in this package is organized around such partitions.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Segment:
    """Radial interval ``0 < r_lo < r_hi`` carrying one sub-annulus."""

    r_lo: float
    r_hi: float

    def __post_init__(self) -> None:
        if not (0.0 < self.r_lo < self.r_hi):
            raise ValueError(
                f"segment requires 0 < r_lo < r_hi, got ({self.r_lo}, {self.r_hi})"
            )

    @property
    def width(self) -> float:
        return self.r_hi - self.r_lo

    @property
    def ratio(self) -> float:
        """Inner to outer radius ratio, in (0, 1)."""
        return self.r_lo / self.r_hi


@dataclass(frozen=True)
class Annulus:
    """Open annulus ``{x in R^dim : inner < |x| < outer}``."""

    inner: float
    outer: float
    dim: int

    def __post_init__(self) -> None:
        if int(self.dim) != self.dim or self.dim < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))
        if not (0.0 < self.inner < self.outer):
            raise ValueError(
                f"annulus requires 0 < inner < outer, got ({self.inner}, {self.outer})"
            )

    @property
    def width(self) -> float:
        return self.outer - self.inner

    @property
    def ratio(self) -> float:
        return self.inner / self.outer

    @property
    def segment(self) -> Segment:
        return Segment(self.inner, self.outer)


@dataclass(frozen=True)
class AnnularPartition:
    """Strictly increasing positive radii r_1 < ... < r_N, N >= 2."""

    radii: tuple[float, ...]

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if len(radii) < 2:
            raise ValueError("partition needs at least two radii")
        if radii[0] <= 0.0:
            raise ValueError("radii must be positive")
        for a, b in zip(radii, radii[1:]):
            if b <= a:
                raise ValueError(f"radii must be strictly increasing, got {radii}")
        object.__setattr__(self, "radii", radii)

    @property
    def inner(self) -> float:
        return self.radii[0]

    @property
    def outer(self) -> float:
        return self.radii[-1]

    @property
    def n_nodes(self) -> int:
        return len(self.radii)

    @property
    def n_segments(self) -> int:
        return len(self.radii) - 1

    @property
    def h_max(self) -> float:
        """Largest segment width; the mesh parameter in the error bounds."""
        return max(b - a for a, b in zip(self.radii, self.radii[1:]))

    def segment(self, j: int) -> Segment:
        return Segment(self.radii[j], self.radii[j + 1])

    def segments(self) -> tuple[Segment, ...]:
        return tuple(self.segment(j) for j in range(self.n_segments))

    def annulus(self, dim: int) -> Annulus:
        """Full annulus A(r_1, r_N) in dimension dim."""
        return Annulus(self.inner, self.outer, dim)

    def bisect(self) -> "AnnularPartition":
        """Insert the midpoint of every segment; halves h_max exactly."""
        out: list[float] = []
        for a, b in zip(self.radii, self.radii[1:]):
            out.append(a)
            out.append(0.5 * (a + b))
        out.append(self.radii[-1])
        return AnnularPartition(tuple(out))

    def refine(self, levels: int) -> "AnnularPartition":
        """Apply bisect() repeatedly; levels = 0 returns self."""
        part = self
        for _ in range(levels):
            part = part.bisect()
        return part
