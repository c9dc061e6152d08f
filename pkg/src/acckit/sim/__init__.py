"""Deterministic, integer-only headless game kernel."""

from .entities import (
    ParticleSystem, Particle, advance_bullets, age_and_clone, fire_bullet, particle_step, update_bullets,
)
from .kinematics import (
    AnimationState, ContractError, GameObject, GuardState, JumpState, aabb_contains, advance_animation,
    camera_offset, check_collision, distance, guard_fsm, jump_step, move_toward, spawn_at_level,
    start_jump, world_to_screen,
)
from .rng import Lcg, next_jitter
from .world import (
    InputEvent, RenderCommand, TraceError, World, WorldConfig, build_world, format_trace, parse_trace,
    render_commands, step_frame,
)
