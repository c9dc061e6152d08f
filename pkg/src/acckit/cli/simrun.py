from __future__ import annotations

import hashlib
import os
from collections import defaultdict
from typing import Dict, List, Optional, Sequence

from ..assets import load_registry, screen_canvas
from ..imaging import DEFAULT_EFFECTS, encode_ppm, render_frame
from ..sim.world import InputEvent, TraceError, WorldConfig, build_world, step_frame


def run_sim_trace(trace: Sequence[InputEvent], frames: int, seed: int = 1, dump_dir: Optional[str] = None,
                  mode: str = "topdown", asset_dir: Optional[str] = None,
                  config: Optional[WorldConfig] = None) -> Dict:
    """Step the default world ``frames`` times, rendering every frame.

    The digest is a 64-bit BLAKE2b over the PPM encoding of every frame in order.
    """
    if frames < 0:
        raise ValueError("frames must be non-negative")
    by_frame: Dict[int, List[InputEvent]] = defaultdict(list)
    for ev in trace:
        if ev.frame >= frames:
            raise TraceError("trace event at frame %d but only %d frames will run" % (ev.frame, frames))
        by_frame[ev.frame].append(ev)

    registry = load_registry(asset_dir)
    world = build_world(mode, seed, config)
    canvas = screen_canvas(world.config.screen_w, world.config.screen_h)
    if dump_dir:
        os.makedirs(dump_dir, exist_ok=True)

    digest = hashlib.blake2b(digest_size=8)
    quit_frame = None
    for f in range(frames):
        commands = step_frame(world, by_frame.get(f, ()))
        if world.quit and quit_frame is None:
            quit_frame = f
        data = encode_ppm(render_frame(commands, registry, canvas, DEFAULT_EFFECTS))
        digest.update(data)
        if dump_dir:
            with open(os.path.join(dump_dir, "frame_%05d.ppm" % f), "wb") as fh:
                fh.write(data)

    return {
        "frame_count": world.frame_count,
        "quit": world.quit,
        "win": world.win,
        "quit_frame": quit_frame,
        "player_x": world.player.x,
        "player_y": world.player.y,
        "enemy_count": len(world.enemies),
        "prize_visible": world.prize.visible,
        "digest": digest.hexdigest(),
    }
