"""Categorical palettes in CIELUV and rendering style parameters."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from itertools import combinations
from pathlib import Path
from typing import Sequence

import numpy as np

MAX_HUES = 10
DEFAULT_THRESHOLD = 25.0
RING_LIGHTNESS = 60.0

# sRGB primaries, D65 white
_RGB_TO_XYZ = np.array([
    [0.4124564, 0.3575761, 0.1804375],
    [0.2126729, 0.7151522, 0.0721750],
    [0.0193339, 0.1191920, 0.9503041],
])
_XYZ_TO_RGB = np.linalg.inv(_RGB_TO_XYZ)
_WHITE = _RGB_TO_XYZ @ np.ones(3)
_EPS = 216 / 24389
_KAPPA = 24389 / 27


class PaletteError(ValueError):
    pass


def _uv_prime(xyz):
    x, y, z = xyz
    d = x + 15 * y + 3 * z
    if d == 0:
        return 0.0, 0.0
    return 4 * x / d, 9 * y / d


def xyz_to_luv(xyz) -> np.ndarray:
    y = xyz[1] / _WHITE[1]
    L = 116 * np.cbrt(y) - 16 if y > _EPS else _KAPPA * y
    up, vp = _uv_prime(xyz)
    un, vn = _uv_prime(_WHITE)
    return np.array([L, 13 * L * (up - un), 13 * L * (vp - vn)])


def luv_to_xyz(luv) -> np.ndarray:
    L, u, v = luv
    if L <= 0:
        return np.zeros(3)
    un, vn = _uv_prime(_WHITE)
    up = u / (13 * L) + un
    vp = v / (13 * L) + vn
    y = ((L + 16) / 116) ** 3 if L > _KAPPA * _EPS else L / _KAPPA
    y *= _WHITE[1]
    x = y * 9 * up / (4 * vp)
    z = y * (12 - 3 * up - 20 * vp) / (4 * vp)
    return np.array([x, y, z])


def _compand(c):
    c = np.asarray(c, dtype=float)
    return np.where(c <= 0.0031308, 12.92 * c, 1.055 * np.abs(c) ** (1 / 2.4) - 0.055)


def _linearize(c):
    c = np.asarray(c, dtype=float)
    return np.where(c <= 0.04045, c / 12.92, ((c + 0.055) / 1.055) ** 2.4)


def srgb8_to_luv(rgb: Sequence[int]) -> np.ndarray:
    lin = _linearize(np.asarray(rgb, dtype=float) / 255)
    return xyz_to_luv(_RGB_TO_XYZ @ lin)


def luv_to_linear_rgb(luv) -> np.ndarray:
    return _XYZ_TO_RGB @ luv_to_xyz(luv)


def luv_to_srgb8(luv) -> tuple[int, int, int]:
    """Convert to 8-bit sRGB, clamping each channel to the gamut."""
    lin = np.clip(luv_to_linear_rgb(luv), 0.0, 1.0)
    rgb = np.clip(np.round(_compand(lin) * 255), 0, 255).astype(int)
    return tuple(int(c) for c in rgb)


def _ring_point(chroma: float, hue_deg: float, lightness: float = RING_LIGHTNESS) -> np.ndarray:
    h = np.radians(hue_deg)
    return np.array([lightness, chroma * np.cos(h), chroma * np.sin(h)])


def max_chroma(hue_deg: float, lightness: float = RING_LIGHTNESS, steps: int = 60) -> float:
    """Largest chroma at this hue and lightness that stays inside sRGB."""
    lo, hi = 0.0, 200.0
    for _ in range(steps):
        mid = (lo + hi) / 2
        rgb = luv_to_linear_rgb(_ring_point(mid, hue_deg, lightness))
        if np.all(rgb >= 0) and np.all(rgb <= 1):
            lo = mid
        else:
            hi = mid
    return lo


def hex_color(rgb: Sequence[int]) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def parse_hex(text: str) -> tuple[int, int, int]:
    s = text.strip().removeprefix("#")
    if len(s) == 3:
        s = "".join(c * 2 for c in s)
    if len(s) != 6:
        raise PaletteError(f"not a hex colour: {text!r}")
    try:
        return tuple(int(s[i:i + 2], 16) for i in (0, 2, 4))
    except ValueError:
        raise PaletteError(f"not a hex colour: {text!r}") from None


@dataclass(frozen=True)
class PaletteEntry:
    label: str
    rgb: tuple[int, int, int]
    luv: tuple[float, float, float]

    @property
    def hex(self) -> str:
        return hex_color(self.rgb)


@dataclass(frozen=True)
class Palette:
    colors: tuple[PaletteEntry, ...]

    def __len__(self):
        return len(self.colors)

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.colors]

    def color_of(self, label: str) -> str:
        for c in self.colors:
            if c.label == label:
                return c.hex
        raise PaletteError(f"no colour assigned to set {label!r}")

    def min_distance(self) -> float:
        """Smallest pairwise CIELUV distance (inf for fewer than two colours)."""
        pts = [np.array(c.luv) for c in self.colors]
        return min((float(np.linalg.norm(a - b)) for a, b in combinations(pts, 2)), default=float("inf"))

    def relabel(self, labels: Sequence[str]) -> Palette:
        if len(labels) > len(self.colors):
            raise PaletteError(f"{len(labels)} sets but only {len(self.colors)} colours")
        return Palette(tuple(replace(c, label=s) for c, s in zip(self.colors, labels)))


def _entries(rgbs, labels):
    if labels is None:
        labels = [str(i) for i in range(len(rgbs))]
    return tuple(PaletteEntry(s, rgb, tuple(float(v) for v in srgb8_to_luv(rgb))) for s, rgb in zip(labels, rgbs))


def _check_count(n: int):
    if n > MAX_HUES:
        raise PaletteError(f"{n} colours requested; at most {MAX_HUES} distinguishable hues are supported")
    if n < 1:
        raise PaletteError("at least one colour is needed")


def generate_palette(n: int, threshold: float = DEFAULT_THRESHOLD,
                     labels: Sequence[str] | None = None) -> Palette:
    """``n`` hues equally spaced from 0 degrees on a fixed-lightness CIELUV ring.

    The ring radius is the largest chroma at which all ``n`` hues are
    still displayable in sRGB.  Separation is measured after rounding to
    8-bit channels.
    """
    _check_count(n)
    if labels is not None and len(labels) != n:
        raise PaletteError(f"{len(labels)} labels for {n} colours")
    hues = [360.0 * k / n for k in range(n)]
    chroma = min(max_chroma(h) for h in hues)
    rgbs = [luv_to_srgb8(_ring_point(chroma, h)) for h in hues]
    palette = Palette(_entries(rgbs, labels))
    achieved = palette.min_distance()
    if achieved < threshold:
        raise PaletteError(
            f"cannot separate {n} colours by {threshold:g} in CIELUV; the best achievable is {achieved:.2f}")
    return palette


def palette_from_hex(colors: Sequence[str], labels: Sequence[str] | None = None,
                     threshold: float = DEFAULT_THRESHOLD, check: bool = True) -> Palette:
    """Palette from user-supplied hex colours; the distance check can be skipped."""
    _check_count(len(colors))
    if labels is not None and len(labels) > len(colors):
        raise PaletteError(f"{len(labels)} sets but only {len(colors)} colours given")
    rgbs = [parse_hex(c) for c in colors]
    if labels is not None:
        rgbs = rgbs[:len(labels)]
    palette = Palette(_entries(rgbs, labels))
    if check and palette.min_distance() < threshold:
        raise PaletteError(
            f"colours are only {palette.min_distance():.2f} apart in CIELUV (need {threshold:g})")
    return palette


@dataclass(frozen=True)
class Style:
    width: int = 600
    height: int = 300
    margin: float = 10.0
    legend_width: float = 120.0
    line_thickness: float = 2.0
    guide_color: str = "#b0b0b0"
    guide_width: float = 1.0
    border_width: float = 1.0
    border_color: str = "#ffffff"
    font_size: float = 12.0
    font_family: str = "sans-serif"
    text_color: str = "#000000"
    background: str = "#ffffff"

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas width and height must be positive")
        if self.line_thickness <= 0 or self.border_width < 0 or self.guide_width < 0:
            raise ValueError("stroke widths must be non-negative (line thickness positive)")
        if self.plot_width <= 0 or self.plot_height <= 0:
            raise ValueError("margins and legend leave no room for the diagram")

    @property
    def plot_x(self) -> float:
        return self.margin + self.legend_width

    @property
    def plot_y(self) -> float:
        return self.margin

    @property
    def plot_width(self) -> float:
        return self.width - self.plot_x - self.margin

    @property
    def plot_height(self) -> float:
        return self.height - 2 * self.margin

    def check_thin(self, rows: int):
        spacing = self.plot_height / rows
        if not self.line_thickness < spacing / 3:
            raise ValueError(
                f"line thickness {self.line_thickness:g}px is not thin for {rows} rows "
                f"(must be below {spacing / 3:.2f}px)")

    @classmethod
    def from_dict(cls, data: dict) -> Style:
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown style keys: {', '.join(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, path: str | Path) -> Style:
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

    def updated(self, **overrides) -> Style:
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})
