"""Pixel containers, masking arithmetic, compositing, transforms and PNG I/O.

Images live in [0, 1] as float32 (H, W, C) arrays with 1 or 3 channels.
Masks are (H, W) uint8 arrays over {0, 1} where 1 marks a missing pixel.
Mask PNGs use 255 = hole, 0 = valid.
"""

from __future__ import annotations

import numpy as np
from PIL import Image as PILImage
from PIL import UnidentifiedImageError

from .errors import FormatError, ShapeError

TRANSFORM_OPS = (
    "identity",
    "hflip",
    "vflip",
    "rot90",
    "rot180",
    "rot270",
)

_INVERSE_OP = {
    "identity": "identity",
    "hflip": "hflip",
    "vflip": "vflip",
    "rot90": "rot270",
    "rot180": "rot180",
    "rot270": "rot90",
}


class Image:
    """An (H, W, C) raster of unit-interval intensities, C in {1, 3}.

    Values are clamped to [0, 1] on construction; treat instances as
    immutable and build new ones for every edit.
    """

    __slots__ = ("data",)

    def __init__(self, data: np.ndarray):
        arr = np.asarray(data, dtype=np.float32)
        if arr.ndim == 2:
            arr = arr[:, :, None]
        if arr.ndim != 3 or arr.shape[2] not in (1, 3):
            raise ShapeError(f"image data must be (H, W, 1|3), got {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeError(f"image dimensions must be positive, got {arr.shape}")
        self.data = np.clip(arr, 0.0, 1.0)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    def to_rgb(self) -> "Image":
        """Single-channel images replicated to 3 channels; RGB passes through."""
        if self.channels == 3:
            return self
        return Image(np.repeat(self.data, 3, axis=2))

    def allclose(self, other: "Image", atol: float = 0.0) -> bool:
        return self.data.shape == other.data.shape and np.allclose(
            self.data, other.data, rtol=0.0, atol=atol
        )

    def __repr__(self):
        return f"Image({self.height}x{self.width}x{self.channels})"


class Mask:
    """An (H, W) binary map; 1 marks a missing pixel."""

    __slots__ = ("data",)

    def __init__(self, data: np.ndarray):
        arr = np.asarray(data)
        if arr.ndim != 2:
            raise ShapeError(f"mask data must be (H, W), got {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeError(f"mask dimensions must be positive, got {arr.shape}")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("mask values must be exactly 0 or 1")
        self.data = arr.astype(np.uint8)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def complement(self) -> "Mask":
        return Mask(1 - self.data)

    def __repr__(self):
        return f"Mask({self.height}x{self.width}, holes={int(self.data.sum())})"


def _check_dims(image: Image, mask: Mask, op: str) -> None:
    if (image.height, image.width) != (mask.height, mask.width):
        raise ShapeError(
            f"{op}: image is {image.height}x{image.width} "
            f"but mask is {mask.height}x{mask.width}"
        )


def apply_mask(image: Image, mask: Mask) -> Image:
    """Zero out masked pixels: output = image * (1 - mask)."""
    _check_dims(image, mask, "apply_mask")
    keep = (1 - mask.data).astype(np.float32)[:, :, None]
    return Image(image.data * keep)


def composite(prediction: Image, base: Image, mask: Mask) -> Image:
    """Take prediction inside the hole, base pixels elsewhere."""
    if prediction.data.shape != base.data.shape:
        raise ShapeError(
            f"composite: prediction {prediction.data.shape} vs base {base.data.shape}"
        )
    _check_dims(base, mask, "composite")
    hole = mask.data.astype(bool)[:, :, None]
    return Image(np.where(hole, prediction.data, base.data))


def _transform_array(arr: np.ndarray, op: str) -> np.ndarray:
    # rot90 is clockwise; np.rot90 rotates counter-clockwise for positive k
    if op == "identity":
        return arr.copy()
    if op == "hflip":
        return arr[:, ::-1].copy()
    if op == "vflip":
        return arr[::-1].copy()
    if op == "rot90":
        return np.rot90(arr, k=-1, axes=(0, 1)).copy()
    if op == "rot180":
        return np.rot90(arr, k=2, axes=(0, 1)).copy()
    if op == "rot270":
        return np.rot90(arr, k=1, axes=(0, 1)).copy()
    raise ValueError(f"unknown transform op {op!r}; choose from {TRANSFORM_OPS}")


def _check_square_for(op: str, h: int, w: int) -> None:
    if op in ("rot90", "rot270") and h != w:
        raise ShapeError(f"{op} requires a square input, got {h}x{w}")


def transform(image: Image, op: str) -> Image:
    """Apply one of the eight-fold symmetry ops (pixel permutation only)."""
    _check_square_for(op, image.height, image.width)
    return Image(_transform_array(image.data, op))


def transform_mask(mask: Mask, op: str) -> Mask:
    """Same permutation as `transform`, for masks."""
    _check_square_for(op, mask.height, mask.width)
    return Mask(_transform_array(mask.data, op))


def inverse_op(op: str) -> str:
    if op not in _INVERSE_OP:
        raise ValueError(f"unknown transform op {op!r}")
    return _INVERSE_OP[op]


def load_image(path) -> Image:
    """Load an 8-bit or 16-bit PNG as a unit-range Image."""
    try:
        with PILImage.open(path) as img:
            img.load()
            mode = img.mode
            if mode in ("L", "RGB"):
                arr = np.asarray(img, dtype=np.float32) / 255.0
            elif mode in ("I;16", "I"):
                arr = np.asarray(img, dtype=np.float32) / 65535.0
            else:
                raise FormatError(f"{path}: unsupported PNG mode {mode!r}")
    except UnidentifiedImageError as exc:
        raise IOError(f"{path}: not a readable image file") from exc
    except FileNotFoundError as exc:
        raise IOError(f"{path}: no such file") from exc
    return Image(arr)


def save_image(image: Image, path) -> None:
    """Write an 8-bit PNG (grayscale or RGB)."""
    arr = np.round(image.data * 255.0).astype(np.uint8)
    if image.channels == 1:
        PILImage.fromarray(arr[:, :, 0], mode="L").save(path, format="PNG")
    else:
        PILImage.fromarray(arr, mode="RGB").save(path, format="PNG")


def load_mask(path) -> Mask:
    """Load a mask PNG; any value >= 128 counts as hole (canonical is 255)."""
    img = load_image(path)
    if img.channels != 1:
        raise FormatError(f"{path}: mask PNG must be single-channel")
    return Mask((img.data[:, :, 0] >= 0.5).astype(np.uint8))


def save_mask(mask: Mask, path) -> None:
    """Write a mask as an 8-bit grayscale PNG, 255 = hole."""
    PILImage.fromarray(mask.data * np.uint8(255), mode="L").save(path, format="PNG")
