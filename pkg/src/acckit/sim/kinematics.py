"""Game objects and the per-object rules: movement, collision, jumping, camera."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Sequence, Tuple

GRAVITY = 1
GROUND_LEVEL = 380
SCREEN_W = 640
SCREEN_H = 480
PLAYER_W = 48
JUMP_V0 = -25
COLLISION_THRESHOLD = 10

# per-level spawn points of the reference enemy
SPAWN_TABLE: Tuple[Tuple[int, int], ...] = ((100, 100), (120, 120), (140, 140), (160, 160), (180, 180))


class ContractError(Exception):
    """A caller broke an operation's precondition."""


@dataclass
class AnimationState:
    frame_shape_ids: Tuple[str, ...] = ("frame0", "frame1", "frame2")
    current_frame: int = 0

    @property
    def shape_id(self) -> str:
        return self.frame_shape_ids[self.current_frame]


@dataclass
class JumpState:
    y0: int = 0
    v0: int = 0
    t: int = 0
    jumping: bool = False


@dataclass
class GameObject:
    x: int = 0
    y: int = 0
    vx: int = 0
    vy: int = 0
    w: int = 1
    h: int = 1
    visible: bool = True
    shape_id: str = ""
    capabilities: FrozenSet[str] = frozenset()
    # "static", "patrol" (velocity + edge bounce) or "jitter" (random step)
    motion: str = "static"
    age: int = -1
    jump: Optional[JumpState] = None
    anim: Optional[AnimationState] = None

    def has(self, capability: str) -> bool:
        return capability in self.capabilities

    def clone(self, **changes) -> "GameObject":
        fields = dict(self.__dict__)
        fields["jump"] = None if self.jump is None else JumpState(**self.jump.__dict__)
        fields["anim"] = None if self.anim is None else AnimationState(**self.anim.__dict__)
        fields.update(changes)
        return GameObject(**fields)


class GuardState(enum.Enum):
    WALK = "walk"
    WATCH = "watch"
    ATTACK = "attack"


def move_toward(obj: GameObject, target_x: int, target_y: int, speed: int) -> GameObject:
    """Step each axis by ``speed`` toward the target; an axis already on target stays put."""
    if speed <= 0:
        raise ValueError("speed must be positive")
    if obj.x < target_x:
        obj.x += speed
    elif obj.x > target_x:
        obj.x -= speed
    if obj.y < target_y:
        obj.y += speed
    elif obj.y > target_y:
        obj.y -= speed
    return obj


def distance(a: GameObject, b: GameObject) -> float:
    return math.hypot(b.x - a.x, b.y - a.y)


def check_collision(a: GameObject, b: GameObject, threshold: int = COLLISION_THRESHOLD) -> bool:
    return abs(a.x - b.x) < threshold and abs(a.y - b.y) < threshold


def aabb_contains(px: int, py: int, box: GameObject) -> bool:
    return box.x < px < box.x + box.w and box.y < py < box.y + box.h


def guard_fsm(dist: float) -> GuardState:
    if dist > 200:
        return GuardState.WALK
    elif dist > 100:
        return GuardState.WATCH
    return GuardState.ATTACK


def _trunc_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def jump_height(j: JumpState, g: int = GRAVITY) -> int:
    t = j.t
    return j.y0 + j.v0 * t + _trunc_div(g * t * t, 2)


def jump_step(j: JumpState, ground: int, g: int = GRAVITY) -> int:
    """Advance one frame of a jump and return the new y."""
    if not j.jumping:
        raise ContractError("jump_step called while not jumping")
    candidate = jump_height(j, g)
    if candidate > ground:
        new_y = ground
        j.jumping = False
    else:
        new_y = candidate
    j.t += 1
    return new_y


def start_jump(j: JumpState, y: int, v0: int = JUMP_V0) -> bool:
    if j.jumping:
        return False
    j.y0, j.v0, j.t, j.jumping = y, v0, 0, True
    return True


def camera_offset(player_x: int, screen_w: int = SCREEN_W, player_w: int = PLAYER_W) -> int:
    return player_x - (screen_w // 2 - player_w // 2)


def world_to_screen(x: int, offset: int) -> int:
    return x - offset


def advance_animation(a: AnimationState) -> AnimationState:
    a.current_frame += 1
    if a.current_frame >= len(a.frame_shape_ids):
        a.current_frame = 0
    return a


def spawn_at_level(e: GameObject, level: int,
                   defaults: Sequence[Tuple[int, int]] = SPAWN_TABLE) -> GameObject:
    if not 0 <= level < len(defaults):
        raise IndexError("level %d outside the %d-entry spawn table" % (level, len(defaults)))
    e.x, e.y = defaults[level]
    return e
