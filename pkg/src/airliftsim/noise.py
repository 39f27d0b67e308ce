"""Classic 2-D gradient (Perlin) noise used for terrain generation.

Single-octave values come from the textbook construction: a seeded
permutation table picks one of eight unit-ish gradients per lattice corner,
corner contributions are blended with the quintic fade 6t^5 - 15t^4 + 10t^3.
Fractal values sum octaves with persistence 0.5 and lacunarity 2 and are
rescaled into [0, 1] so a land threshold can be expressed as a plain number.
"""

from __future__ import annotations

import numpy as np

_GRADS = np.array(
    [(1, 1), (-1, 1), (1, -1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1)],
    dtype=np.float64,
)


def _fade(t: np.ndarray) -> np.ndarray:
    return t * t * t * (t * (t * 6.0 - 15.0) + 10.0)


class PerlinNoise2D:
    def __init__(self, rng: np.random.Generator):
        perm = rng.permutation(256)
        self._perm = np.concatenate([perm, perm]).astype(np.int64)

    def _grad_at(self, xi: np.ndarray, yi: np.ndarray) -> np.ndarray:
        h = self._perm[self._perm[xi & 255] + (yi & 255)] & 7
        return _GRADS[h]

    def raw(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Single-octave noise, roughly in [-0.71, 0.71]."""
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        x0 = np.floor(x).astype(np.int64)
        y0 = np.floor(y).astype(np.int64)
        fx = x - x0
        fy = y - y0

        def corner(dx, dy):
            g = self._grad_at(x0 + dx, y0 + dy)
            return g[..., 0] * (fx - dx) + g[..., 1] * (fy - dy)

        u = _fade(fx)
        v = _fade(fy)
        nx0 = corner(0, 0) + u * (corner(1, 0) - corner(0, 0))
        nx1 = corner(0, 1) + u * (corner(1, 1) - corner(0, 1))
        return nx0 + v * (nx1 - nx0)

    def fractal(self, x: np.ndarray, y: np.ndarray, octaves: int = 3,
                persistence: float = 0.5, lacunarity: float = 2.0) -> np.ndarray:
        """Octave sum rescaled to [0, 1]; 0.5 is the zero level."""
        total = np.zeros(np.broadcast(np.asarray(x), np.asarray(y)).shape)
        amplitude = 1.0
        frequency = 1.0
        norm = 0.0
        for _ in range(max(1, octaves)):
            total = total + amplitude * self.raw(
                np.asarray(x) * frequency, np.asarray(y) * frequency)
            norm += amplitude
            amplitude *= persistence
            frequency *= lacunarity
        return np.clip((total / norm + 1.0) * 0.5, 0.0, 1.0)


def noise_grid(width: int, height: int, frequency: float, octaves: int,
               rng: np.random.Generator) -> np.ndarray:
    """(height, width) array of fractal noise values in [0, 1]."""
    noise = PerlinNoise2D(rng)
    cols = np.arange(width, dtype=np.float64) * frequency
    rows = np.arange(height, dtype=np.float64) * frequency
    x, y = np.meshgrid(cols, rows)
    return noise.fractal(x, y, octaves=octaves)
