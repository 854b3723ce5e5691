"""Seeded free-form brush-stroke masks and rectangle masks.

Free-form masks are random-walk polylines swept with a disk brush and
rasterized with a hard threshold, regenerated from derived sub-seeds until
the hole coverage lands inside the configured bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, MaskGenerationError, ShapeError
from .image import Mask
from .seeds import rng_for

MAX_ATTEMPTS = 64


@dataclass(frozen=True)
class FreeformSpec:
    strokes_min: int = 1
    strokes_max: int = 4
    vertices_min: int = 4
    vertices_max: int = 12
    width_min: float = 4.0
    width_max: float = 12.0
    length_min: float = 4.0
    length_max: float = 16.0
    angle_jitter: float = math.pi / 4
    coverage_min: float = 0.20
    coverage_max: float = 0.40

    def validate(self) -> None:
        pairs = [
            ("strokes", self.strokes_min, self.strokes_max),
            ("vertices", self.vertices_min, self.vertices_max),
            ("width", self.width_min, self.width_max),
            ("length", self.length_min, self.length_max),
        ]
        for name, lo, hi in pairs:
            if lo < 0 or lo > hi:
                raise ConfigError(f"{name} bounds must satisfy 0 <= min <= max, got [{lo}, {hi}]")
        if not (0.0 <= self.coverage_min < self.coverage_max < 1.0):
            raise ConfigError(
                "coverage bounds must satisfy 0 <= min < max < 1, got "
                f"[{self.coverage_min}, {self.coverage_max}]"
            )
        if self.angle_jitter < 0:
            raise ConfigError("angle_jitter must be non-negative")


@dataclass(frozen=True)
class RectSpec:
    rect_height: int
    rect_width: int
    origin: tuple | str = "random"  # (y, x) or "random"

    def validate(self) -> None:
        if self.rect_height < 1 or self.rect_width < 1:
            raise ConfigError("rectangle sides must be positive")
        if self.origin != "random":
            y, x = self.origin
            if y < 0 or x < 0:
                raise ConfigError(f"origin must be non-negative, got {self.origin}")


def coverage(mask: Mask) -> float:
    """Fraction of pixels marked missing."""
    return float(mask.data.sum()) / (mask.height * mask.width)


def _stamp_segment(grid: np.ndarray, p0, p1, radius: float) -> None:
    """Mark pixels within `radius` of the segment p0->p1 (a swept disk)."""
    h, w = grid.shape
    y0 = max(int(math.floor(min(p0[0], p1[0]) - radius)), 0)
    y1 = min(int(math.ceil(max(p0[0], p1[0]) + radius)) + 1, h)
    x0 = max(int(math.floor(min(p0[1], p1[1]) - radius)), 0)
    x1 = min(int(math.ceil(max(p0[1], p1[1]) + radius)) + 1, w)
    if y0 >= y1 or x0 >= x1:
        return
    ys = np.arange(y0, y1, dtype=np.float64)[:, None]
    xs = np.arange(x0, x1, dtype=np.float64)[None, :]
    dy = p1[0] - p0[0]
    dx = p1[1] - p0[1]
    seg_sq = dy * dy + dx * dx
    if seg_sq == 0.0:
        dist_sq = (ys - p0[0]) ** 2 + (xs - p0[1]) ** 2
    else:
        t = ((ys - p0[0]) * dy + (xs - p0[1]) * dx) / seg_sq
        t = np.clip(t, 0.0, 1.0)
        dist_sq = (ys - (p0[0] + t * dy)) ** 2 + (xs - (p0[1] + t * dx)) ** 2
    grid[y0:y1, x0:x1] |= dist_sq <= radius * radius


def _draw_strokes(height: int, width: int, spec: FreeformSpec, rng: np.random.Generator) -> np.ndarray:
    grid = np.zeros((height, width), dtype=bool)
    n_strokes = int(rng.integers(spec.strokes_min, spec.strokes_max + 1))
    for _ in range(n_strokes):
        radius = rng.uniform(spec.width_min, spec.width_max) / 2.0
        n_vertices = int(rng.integers(spec.vertices_min, spec.vertices_max + 1))
        y = rng.uniform(0, height)
        x = rng.uniform(0, width)
        angle = rng.uniform(0, 2 * math.pi)
        for _ in range(n_vertices):
            length = rng.uniform(spec.length_min, spec.length_max)
            ny = y + length * math.sin(angle)
            nx = x + length * math.cos(angle)
            _stamp_segment(grid, (y, x), (ny, nx), radius)
            y, x = ny, nx
            angle += rng.uniform(-spec.angle_jitter, spec.angle_jitter)
    return grid.astype(np.uint8)


def gen_freeform(height: int, width: int, spec: FreeformSpec, seed: int) -> Mask:
    """Brush-stroke mask whose coverage lands in [coverage_min, coverage_max].

    Identical (height, width, spec, seed) always produce the identical mask.
    Raises MaskGenerationError when no attempt satisfies the bounds.
    """
    spec.validate()
    if height < 16 or width < 16:
        raise ShapeError(f"free-form masks need at least 16x16, got {height}x{width}")
    last = None
    for attempt in range(MAX_ATTEMPTS):
        grid = _draw_strokes(height, width, spec, rng_for(seed, attempt))
        cov = float(grid.sum()) / (height * width)
        if spec.coverage_min <= cov <= spec.coverage_max:
            return Mask(grid)
        last = cov
    bound = "coverage_min" if last < spec.coverage_min else "coverage_max"
    raise MaskGenerationError(
        f"no mask within coverage [{spec.coverage_min}, {spec.coverage_max}] after "
        f"{MAX_ATTEMPTS} attempts (last coverage {last:.4f} violates {bound})"
    )


def gen_rect(height: int, width: int, spec: RectSpec, seed: int) -> Mask:
    """Axis-aligned rectangular hole, placed explicitly or uniformly at random."""
    spec.validate()
    if spec.rect_height > height or spec.rect_width > width:
        raise MaskGenerationError(
            f"{spec.rect_height}x{spec.rect_width} rectangle does not fit in {height}x{width}"
        )
    if spec.origin == "random":
        rng = rng_for(seed)
        y0 = int(rng.integers(0, height - spec.rect_height + 1))
        x0 = int(rng.integers(0, width - spec.rect_width + 1))
    else:
        y0, x0 = spec.origin
        if y0 + spec.rect_height > height or x0 + spec.rect_width > width:
            raise MaskGenerationError(
                f"rectangle at ({y0}, {x0}) sized {spec.rect_height}x{spec.rect_width} "
                f"exceeds {height}x{width} bounds"
            )
    grid = np.zeros((height, width), dtype=np.uint8)
    grid[y0:y0 + spec.rect_height, x0:x0 + spec.rect_width] = 1
    return Mask(grid)
