"""Cloning enemies, the smoke-style particle system and the player's bullet list."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from ..containers import LinkedList
from .kinematics import SCREEN_H, SCREEN_W, GameObject, check_collision
from .rng import Lcg

CLONE_AGE = 50
NUM_PARTICLES = 20
FULL_VISIBILITY = 100
BULLET_SPEED = 4


def age_and_clone(e: GameObject, rng: Lcg) -> Optional[GameObject]:
    """Age a cloner by one frame; on reaching CLONE_AGE it spawns exactly one copy."""
    if e.age == -1:
        return None
    e.age += 1
    if e.age != CLONE_AGE:
        return None
    e.age = -1
    vx = rng.jitter()
    vy = rng.jitter()
    return e.clone(vx=vx, vy=vy, age=0)


def patrol_move(e: GameObject, screen_w: int = SCREEN_W, screen_h: int = SCREEN_H) -> None:
    e.x += e.vx
    e.y += e.vy
    if e.x < 0 or e.x > screen_w:
        e.vx *= -1
    if e.y < 0 or e.y > screen_h:
        e.vy *= -1


def jitter_move(e: GameObject, rng: Lcg) -> None:
    e.x += rng.jitter()
    e.y += rng.jitter()


@dataclass
class Particle:
    x: int
    y: int
    visibility: int = FULL_VISIBILITY

    def set_visibility(self, v: int) -> None:
        # out-of-range values are ignored, not clamped
        if 0 <= v <= FULL_VISIBILITY:
            self.visibility = v


@dataclass
class ParticleSystem:
    source: GameObject
    particles: List[Particle] = field(default_factory=list)

    @classmethod
    def create(cls, rng: Lcg, x: int = SCREEN_W // 2, y: int = SCREEN_H // 2,
               count: int = NUM_PARTICLES) -> "ParticleSystem":
        source = GameObject(x=x, y=y, shape_id="source")
        particles = [Particle(x, y, rng.next_high() % FULL_VISIBILITY) for _ in range(count)]
        return cls(source, particles)

    def step(self, dx: int, dy: int, rng: Lcg) -> List[int]:
        """Move the source and every particle; return indices of particles that respawned."""
        self.source.x += dx
        self.source.y += dy
        respawned = []
        for i, p in enumerate(self.particles):
            p.x += rng.jitter()
            p.y += rng.jitter()
            v = p.visibility - 1
            p.set_visibility(v)
            if v <= 0:
                p.x, p.y = self.source.x, self.source.y
                p.visibility = FULL_VISIBILITY
                respawned.append(i)
        return respawned


def particle_step(ps: ParticleSystem, dx: int, dy: int, rng: Lcg) -> ParticleSystem:
    ps.step(dx, dy, rng)
    return ps


def fire_bullet(player: GameObject, bullets: LinkedList, bullet_speed: int = BULLET_SPEED,
                shared_shape: str = "bullet") -> GameObject:
    bullet = GameObject(x=player.x, y=player.y, vx=0, vy=-bullet_speed, w=4, h=10,
                        shape_id=shared_shape, capabilities=frozenset({"bullet"}))
    bullets.append(bullet)
    return bullet


def advance_bullets(bullets: LinkedList, enemies: Sequence[GameObject]) -> Optional[GameObject]:
    """Move every bullet, test only the oldest one and cull it once off the top.

    Returns the first visible enemy the oldest bullet touches, if any.
    """
    for b in bullets:
        b.x += b.vx
        b.y += b.vy
    if bullets.head is None:
        return None
    first = bullets.head.payload
    hit = None
    for e in enemies:
        if e.visible and check_collision(first, e):
            hit = e
            break
    if first.y < 0:
        bullets.pop_front()
    return hit


def update_bullets(bullets: LinkedList, enemy: GameObject) -> bool:
    return advance_bullets(bullets, [enemy]) is not None
