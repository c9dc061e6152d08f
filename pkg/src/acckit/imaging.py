"""RGBA pixel buffers, binary PPM I/O, pixel filters, masked blits and frame rendering.

Buffers hold a ``(height, width, 4)`` uint8 array, i.e. row-major RGBA.
Transparency is keyed on a mask colour compared over RGB only; alpha is
carried along but never blended.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Mapping, NamedTuple, Optional, Sequence

import numpy as np


class Color(NamedTuple):
    r: int
    g: int
    b: int
    a: int = 255


WHITE = Color(255, 255, 255)
BLACK = Color(0, 0, 0)
DEFAULT_MASK = WHITE


class PPMFormatError(ValueError):
    pass


class RegistryError(KeyError):
    pass


def parse_color(text: str) -> Color:
    text = text.strip().lstrip("#")
    if not re.fullmatch(r"[0-9a-fA-F]{6}", text):
        raise ValueError("colour must be RRGGBB hex, got %r" % text)
    return Color(int(text[0:2], 16), int(text[2:4], 16), int(text[4:6], 16))


class PixelBuffer:
    def __init__(self, pixels: np.ndarray, mask: Optional[Color] = None):
        pixels = np.asarray(pixels, dtype=np.uint8)
        if pixels.ndim != 3 or pixels.shape[2] != 4 or pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise ValueError("pixels must be a non-empty (height, width, 4) array")
        self.pixels = pixels
        self.mask = None if mask is None else Color(*mask)

    @classmethod
    def filled(cls, width: int, height: int, color: Color = BLACK, mask: Optional[Color] = None) -> "PixelBuffer":
        px = np.empty((height, width, 4), dtype=np.uint8)
        px[:, :] = tuple(color)
        return cls(px, mask)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Sequence[int]]], mask: Optional[Color] = None) -> "PixelBuffer":
        """Build from nested rows of (r, g, b) or (r, g, b, a) tuples."""
        px = [[tuple(c) + (255,) * (4 - len(c)) for c in row] for row in rows]
        return cls(np.array(px, dtype=np.uint8), mask)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def get_pixel(self, x: int, y: int) -> Color:
        return Color(*(int(v) for v in self.pixels[y, x]))

    def put_pixel(self, x: int, y: int, c: Color) -> None:
        self.pixels[y, x] = tuple(c)

    def copy(self) -> "PixelBuffer":
        return PixelBuffer(self.pixels.copy(), self.mask)

    def mask_map(self) -> np.ndarray:
        """Boolean (height, width) map of pixels matching the mask colour."""
        if self.mask is None:
            return np.zeros(self.pixels.shape[:2], dtype=bool)
        return np.all(self.pixels[:, :, :3] == np.array(self.mask[:3], dtype=np.uint8), axis=2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PixelBuffer):
            return NotImplemented
        return self.mask == other.mask and np.array_equal(self.pixels, other.pixels)

    def __repr__(self) -> str:
        return "PixelBuffer(%dx%d, mask=%r)" % (self.width, self.height, self.mask)


# ---------------------------------------------------------------- PPM codec

_TOKEN = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)")


def decode_ppm(data: bytes, mask: Optional[Color] = None) -> PixelBuffer:
    if data[:2] != b"P6":
        raise PPMFormatError("bad magic %r, expected b'P6'" % data[:2])
    pos = 2
    header = []
    for name in ("width", "height", "maxval"):
        m = _TOKEN.match(data, pos)
        if m is None:
            raise PPMFormatError("header ends before %s" % name)
        try:
            header.append(int(m.group(1)))
        except ValueError:
            raise PPMFormatError("%s is not a number: %r" % (name, m.group(1))) from None
        pos = m.end()
    width, height, maxval = header
    if width < 1 or height < 1:
        raise PPMFormatError("non-positive size %dx%d" % (width, height))
    if maxval != 255:
        raise PPMFormatError("maxval %d unsupported, only 255" % maxval)
    if pos >= len(data) or data[pos:pos + 1] not in b" \t\r\n":
        raise PPMFormatError("missing whitespace after maxval")
    pos += 1
    need = width * height * 3
    raster = data[pos:pos + need]
    if len(raster) < need:
        raise PPMFormatError("truncated pixel data: %d of %d bytes" % (len(raster), need))
    rgb = np.frombuffer(raster, dtype=np.uint8).reshape(height, width, 3)
    px = np.empty((height, width, 4), dtype=np.uint8)
    px[:, :, :3] = rgb
    px[:, :, 3] = 255
    return PixelBuffer(px, mask)


def encode_ppm(buf: PixelBuffer) -> bytes:
    header = b"P6\n%d %d\n255\n" % (buf.width, buf.height)
    return header + np.ascontiguousarray(buf.pixels[:, :, :3]).tobytes()


def read_ppm(path, mask: Optional[Color] = None) -> PixelBuffer:
    with open(path, "rb") as f:
        return decode_ppm(f.read(), mask)


def write_ppm(path, buf: PixelBuffer) -> None:
    with open(path, "wb") as f:
        f.write(encode_ppm(buf))


# ------------------------------------------------------------------ effects

@dataclass(frozen=True)
class EffectSpec:
    kind: str = "none"
    delta: int = 0
    color: Color = BLACK

    KINDS = ("none", "gray", "blur", "brightup", "brightdown", "fill")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError("unknown effect %r" % self.kind)
        if self.delta < 0:
            raise ValueError("brightness delta must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "EffectSpec":
        """``gray``, ``blur``, ``brightup:D``, ``brightdown:D``, ``fill:RRGGBB`` or ``none``."""
        name, _, arg = text.strip().lower().partition(":")
        if name in ("brightup", "brightdown"):
            if not arg.isdigit():
                raise ValueError("%s needs a non-negative integer delta, e.g. %s:20" % (name, name))
            return cls(name, delta=int(arg))
        if name == "fill":
            return cls("fill", color=parse_color(arg))
        if arg:
            raise ValueError("effect %r takes no argument" % name)
        return cls(name)


NO_EFFECT = EffectSpec()


def _gray(px: np.ndarray, masked: np.ndarray) -> None:
    rgb = px[:, :, :3].astype(np.int32)
    g = (rgb.sum(axis=2) // 3).astype(np.uint8)
    for ch in range(3):
        px[:, :, ch] = np.where(masked, px[:, :, ch], g)


def _blur(px: np.ndarray, masked: np.ndarray) -> None:
    h, w = masked.shape
    if w < 3:
        return
    src = px[:, :, :3].astype(np.int32)  # snapshot; reads never see blurred values
    center = src[:, 1:-1]
    right_ok = ~masked[:, 2:]
    left_ok = ~masked[:, :-2]
    total = center + src[:, 2:] * right_ok[..., None] + src[:, :-2] * left_ok[..., None]
    n = 1 + right_ok.astype(np.int32) + left_ok.astype(np.int32)
    blurred = (total // n[..., None]).astype(np.uint8)
    inner = px[:, 1:-1, :3]
    skip = masked[:, 1:-1, None]
    px[:, 1:-1, :3] = np.where(skip, inner, blurred)


def _bright(px: np.ndarray, masked: np.ndarray, delta: int) -> None:
    rgb = px[:, :, :3].astype(np.int32) + delta
    out = np.clip(rgb, 0, 255).astype(np.uint8)
    px[:, :, :3] = np.where(masked[..., None], px[:, :, :3], out)


def apply_effect(buf: PixelBuffer, effect: EffectSpec) -> PixelBuffer:
    """Return a filtered copy; ``buf`` itself is never modified."""
    if effect.kind == "none":
        return buf
    out = buf.copy()
    px = out.pixels
    if effect.kind == "fill":
        px[:, :] = tuple(effect.color)
        return out
    masked = buf.mask_map()
    if effect.kind == "gray":
        _gray(px, masked)
    elif effect.kind == "blur":
        _blur(px, masked)
    elif effect.kind == "brightup":
        _bright(px, masked, effect.delta)
    elif effect.kind == "brightdown":
        _bright(px, masked, -effect.delta)
    return out


def blit(dst: PixelBuffer, src: PixelBuffer, x: int, y: int, use_mask: bool = True) -> PixelBuffer:
    """Copy ``src`` onto ``dst`` in place with its top-left at (x, y), clipping at the edges."""
    x0, y0 = max(x, 0), max(y, 0)
    x1, y1 = min(x + src.width, dst.width), min(y + src.height, dst.height)
    if x0 >= x1 or y0 >= y1:
        return dst
    part = src.pixels[y0 - y:y1 - y, x0 - x:x1 - x]
    region = dst.pixels[y0:y1, x0:x1]
    if use_mask and src.mask is not None:
        opaque = ~src.mask_map()[y0 - y:y1 - y, x0 - x:x1 - x]
        region[opaque] = part[opaque]
    else:
        region[:] = part
    return dst


SpriteRegistry = Mapping[str, PixelBuffer]

DEFAULT_EFFECTS: Dict[str, EffectSpec] = {
    "none": NO_EFFECT,
    "gray": EffectSpec("gray"),
    "blur": EffectSpec("blur"),
}


def render_frame(commands: Sequence, registry: SpriteRegistry, background: PixelBuffer,
                 effects: Mapping[str, EffectSpec] = DEFAULT_EFFECTS) -> PixelBuffer:
    """Draw commands in order over a copy of ``background``.

    Each sprite is filtered as a copy, so registry buffers are never touched.
    """
    frame = background.copy()
    for cmd in commands:
        try:
            sprite = registry[cmd.shape_id]
        except KeyError:
            raise RegistryError("no sprite registered for %r" % (cmd.shape_id,)) from None
        try:
            effect = effects[cmd.effect or "none"]
        except KeyError:
            raise RegistryError("no effect registered for %r" % (cmd.effect,)) from None
        blit(frame, apply_effect(sprite, effect), cmd.screen_x, cmd.screen_y, use_mask=True)
    return frame
