"""Procedural default sprites so the simulator needs no binary assets."""

from __future__ import annotations

import os
from typing import Dict, Optional

import numpy as np

from .imaging import BLACK, DEFAULT_MASK, Color, PixelBuffer, read_ppm
from .sim.kinematics import GROUND_LEVEL, PLAYER_W, SCREEN_H, SCREEN_W
from .sim.world import OBJECT_H, PLAYER_FRAMES, PLAYER_H

MAP_W = SCREEN_W * 3


def _disc_sprite(w: int, h: int, color: Color) -> PixelBuffer:
    """Solid ellipse on a white (masked) field."""
    buf = PixelBuffer.filled(w, h, DEFAULT_MASK, mask=DEFAULT_MASK)
    yy, xx = np.mgrid[0:h, 0:w]
    cx, cy = (w - 1) / 2, (h - 1) / 2
    inside = ((xx - cx) / (w / 2)) ** 2 + ((yy - cy) / (h / 2)) ** 2 <= 1.0
    buf.pixels[inside] = tuple(color)
    return buf


def _player_frame(i: int) -> PixelBuffer:
    buf = _disc_sprite(PLAYER_W, PLAYER_H, Color(40, 90 + 40 * i, 220))
    # legs alternate between frames
    leg = 6 + 6 * i
    buf.pixels[PLAYER_H - 8:, leg:leg + 6] = (20, 20, 60, 255)
    buf.pixels[PLAYER_H - 8:, PLAYER_W - leg - 6:PLAYER_W - leg] = (20, 20, 60, 255)
    return buf


def default_map(width: int = MAP_W, height: int = SCREEN_H, ground: int = GROUND_LEVEL) -> PixelBuffer:
    px = np.zeros((height, width, 4), dtype=np.uint8)
    px[:, :, 3] = 255
    sky = np.linspace(120, 200, num=height, dtype=np.int32)
    px[:, :, 2] = sky[:, None]
    px[:, :, 1] = (sky // 2)[:, None]
    # vertical stripe every 80 px so scrolling shows up in the frame dumps
    px[:, ::80, :3] = (90, 90, 110)
    px[ground:, :, :3] = (70, 140, 60)
    return PixelBuffer(px)


def default_registry() -> Dict[str, PixelBuffer]:
    reg = {name: _player_frame(i) for i, name in enumerate(PLAYER_FRAMES)}
    reg["enemy"] = _disc_sprite(OBJECT_H, OBJECT_H, Color(210, 40, 40))
    reg["prize"] = _disc_sprite(OBJECT_H, OBJECT_H, Color(240, 200, 30))
    reg["bullet"] = PixelBuffer.filled(4, 10, Color(20, 20, 20), mask=DEFAULT_MASK)
    reg["map"] = default_map()
    return reg


def load_registry(asset_dir: Optional[str] = None) -> Dict[str, PixelBuffer]:
    """Default sprites, overridden by any ``<shape_id>.ppm`` found in ``asset_dir``."""
    reg = default_registry()
    if asset_dir:
        for name in list(reg):
            path = os.path.join(asset_dir, name + ".ppm")
            if os.path.exists(path):
                reg[name] = read_ppm(path, mask=None if name == "map" else DEFAULT_MASK)
    return reg


def screen_canvas(width: int = SCREEN_W, height: int = SCREEN_H) -> PixelBuffer:
    return PixelBuffer.filled(width, height, BLACK)
