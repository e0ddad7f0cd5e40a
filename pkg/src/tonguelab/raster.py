"""Parameter-plane rasters: gray staircase images and tongue masks.

Pixel (r, c) samples the parameter point at the pixel center, row-major with
a increasing upward (row 0 carries the largest a) and t increasing rightward.
Output is binary PGM (P5, TransGray) or PBM (P4, TongueMask); both carry one
header comment documenting the orientation, and identical configs produce
identical bytes.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import ParameterOutOfRange
from .families import FamilySpec
from .rotation import displacements
from .tongue import check_rational

logger = logging.getLogger(__name__)

MODE_TRANSGRAY = "transgray"
MODE_TONGUEMASK = "tonguemask"

_MASK_TOL = 1e-10    # same boundary tolerance as classify
_MASK_BAND = 1e-3    # refinement band around the tolerance; see tongue_mask


@dataclass(frozen=True)
class RasterConfig:
    family: FamilySpec
    t_range: tuple[float, float]
    a_range: tuple[float, float]
    width_px: int
    height_px: int
    n: int
    mode: str
    tongues: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        t_lo, t_hi = self.t_range
        a_lo, a_hi = self.a_range
        if not (t_lo <= t_hi and a_lo <= a_hi):
            raise ValueError("t_range and a_range must be nonempty intervals")
        if self.width_px < 2 or self.height_px < 2:
            raise ValueError("pixel counts must be >= 2")
        if self.n < 1:
            raise ValueError("iteration count must be >= 1")
        if self.mode not in (MODE_TRANSGRAY, MODE_TONGUEMASK):
            raise ValueError(f"mode must be {MODE_TRANSGRAY!r} or {MODE_TONGUEMASK!r}")
        if self.mode == MODE_TONGUEMASK:
            if not self.tongues:
                raise ValueError("tonguemask mode needs at least one p/q")
            for p, q in self.tongues:
                check_rational(p, q)


def _pixel_centers(cfg: RasterConfig):
    t_lo, t_hi = cfg.t_range
    a_lo, a_hi = cfg.a_range
    w, h = cfg.width_px, cfg.height_px
    ts = t_lo + (np.arange(w) + 0.5) * (t_hi - t_lo) / w
    rows = np.arange(h)
    aa = a_lo + (h - rows - 0.5) * (a_hi - a_lo) / h  # row 0 on the a_hi side
    return ts, aa


def _valid_rows(cfg: RasterConfig, aa: np.ndarray) -> np.ndarray:
    fam = cfg.family
    valid = (aa > fam.a_min) & (aa < fam.a_max)
    if not valid.any():
        raise ParameterOutOfRange(
            f"every row of a_range {cfg.a_range!r} lies outside the open "
            f"interval ({fam.a_min!r}, {fam.a_max!r})")
    if not valid.all():
        bad = np.nonzero(~valid)[0]
        logger.warning("skipping %d raster rows (indices %d..%d) with a outside (%g, %g)",
                       bad.size, bad.min(), bad.max(), fam.a_min, fam.a_max)
    return valid


def _header_comment(cfg: RasterConfig) -> bytes:
    t_lo, t_hi = cfg.t_range
    a_lo, a_hi = cfg.a_range
    extra = ""
    if cfg.mode == MODE_TONGUEMASK:
        extra = " tongues=" + ",".join(f"{p}/{q}" for p, q in cfg.tongues)
    return (f"# {cfg.mode} family={cfg.family.kind} rows: a in [{a_lo!r},{a_hi!r}] "
            f"increasing upward; cols: t in [{t_lo!r},{t_hi!r}] increasing "
            f"rightward; n={cfg.n}{extra}").encode()


def render(cfg: RasterConfig) -> bytes:
    """Rasterize the configured parameter rectangle; see module docstring."""
    ts, aa = _pixel_centers(cfg)
    valid = _valid_rows(cfg, aa)
    w, h = cfg.width_px, cfg.height_px
    if cfg.mode == MODE_TRANSGRAY:
        img = np.zeros((h, w), dtype=np.uint8)
        for r in range(h):
            if not valid[r]:
                continue
            est = displacements(cfg.family, ts, np.full(w, aa[r]), cfg.n) / cfg.n
            img[r] = np.floor((est - np.floor(est)) * 255.0 + 0.5).astype(np.uint8)
        return b"P5\n" + _header_comment(cfg) + b"\n" + \
            f"{w} {h}\n255\n".encode() + img.tobytes()
    # tongue mask
    fam = cfg.family
    blaschke = fam.kind == "blaschke"
    _, ks, ca, sa = fam.kernel_args()
    ps = np.array([p for p, _ in cfg.tongues], dtype=np.int64)
    qs = np.array([q for _, q in cfg.tongues], dtype=np.int64)
    grid = max(1024, 64 * int(qs.max()))
    out = np.zeros((h, w), dtype=np.uint8)
    _kernels.tongue_mask(blaschke, ks, ca, sa, ps, qs, ts, aa,
                         valid.astype(np.uint8), grid, _MASK_TOL, _MASK_BAND, out)
    return b"P4\n" + _header_comment(cfg) + b"\n" + \
        f"{w} {h}\n".encode() + np.packbits(out, axis=1).tobytes()
