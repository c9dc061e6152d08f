"""Frame-stepped world: one call to ``step_frame`` is one pass of the game loop."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Sequence

from ..containers import LinkedList
from .entities import BULLET_SPEED, advance_bullets, age_and_clone, fire_bullet, jitter_move, patrol_move
from .kinematics import (
    GROUND_LEVEL, PLAYER_W, SCREEN_H, SCREEN_W, AnimationState, ContractError, GameObject, JumpState,
    advance_animation, camera_offset, check_collision, jump_step, start_jump,
)
from .rng import Lcg

KEYS = ("LEFT", "RIGHT", "UP", "DOWN", "SPACE", "ESCAPE")
EDGES = ("DOWN", "UP")
MODES = ("topdown", "scroller")

PLAYER_H = 48
OBJECT_H = 37
ENEMY_SPEED = 2
PLAYER_FRAMES = ("player0", "player1", "player2")


class InputEvent(NamedTuple):
    frame: int
    key: str
    edge: str


class RenderCommand(NamedTuple):
    shape_id: str
    screen_x: int
    screen_y: int
    effect: str = "none"


class TraceError(ValueError):
    pass


@dataclass
class WorldConfig:
    mode: str = "topdown"
    screen_w: int = SCREEN_W
    screen_h: int = SCREEN_H
    ground_level: int = GROUND_LEVEL
    player_w: int = PLAYER_W
    player_h: int = PLAYER_H
    player_speed: int = 3
    bullet_speed: int = BULLET_SPEED
    enemy_effect: str = "gray"


@dataclass
class World:
    player: GameObject
    enemies: List[GameObject]
    prize: GameObject
    enemy_bullet: GameObject
    rng: Lcg
    config: WorldConfig = field(default_factory=WorldConfig)
    player_bullets: LinkedList = field(default_factory=LinkedList)
    offset: int = 0
    frame_count: int = 0
    quit: bool = False
    win: bool = False
    left: bool = False
    right: bool = False
    up: bool = False
    down: bool = False

    @property
    def ground(self) -> int:
        """Resting y of the player's top edge."""
        return self.config.ground_level - self.player.h

    def snapshot(self) -> dict:
        def obj(o: GameObject) -> tuple:
            return (o.x, o.y, o.vx, o.vy, o.visible, o.shape_id, o.age)

        return {
            "frame_count": self.frame_count, "offset": self.offset, "quit": self.quit, "win": self.win,
            "player": obj(self.player),
            "jump": None if self.player.jump is None else tuple(self.player.jump.__dict__.values()),
            "enemies": [obj(e) for e in self.enemies], "prize": obj(self.prize),
            "enemy_bullet": obj(self.enemy_bullet),
            "player_bullets": [obj(b) for b in self.player_bullets],
            "rng": self.rng.state,
            "flags": (self.left, self.right, self.up, self.down),
        }


def build_world(mode: str = "topdown", seed: int = 1, config: WorldConfig = None) -> World:
    """The default level for ``mode``.

    topdown: player at the origin, a wandering cloner enemy and a prize.
    scroller: player centred on screen at ground level, a patrolling enemy and
    a prize further along the map; SPACE jumps.
    """
    if mode not in MODES:
        raise ValueError("unknown world mode %r" % mode)
    cfg = config or WorldConfig(mode=mode)
    cfg.mode = mode
    rng = Lcg(seed)
    anim = AnimationState(PLAYER_FRAMES)
    player = GameObject(w=cfg.player_w, h=cfg.player_h, shape_id=anim.shape_id,
                        capabilities=frozenset({"player", "animated"}), jump=JumpState(), anim=anim)
    if mode == "topdown":
        player.x, player.y = 0, 0
        enemy = GameObject(x=100, y=180, w=OBJECT_H, h=OBJECT_H, shape_id="enemy", motion="jitter",
                           capabilities=frozenset({"enemy", "cloner"}), age=0)
        enemy.vx, enemy.vy = rng.jitter(), rng.jitter()
        prize = GameObject(x=200, y=200, w=OBJECT_H, h=OBJECT_H, shape_id="prize",
                           capabilities=frozenset({"prize"}))
    else:
        # objects share the player's resting anchor so the 10 px test can fire
        rest_y = cfg.ground_level - cfg.player_h
        player.x, player.y = cfg.screen_w // 2 - cfg.player_w // 2, rest_y
        enemy = GameObject(x=cfg.screen_w * 3 // 4, y=rest_y, vx=ENEMY_SPEED, w=OBJECT_H, h=OBJECT_H,
                           shape_id="enemy", motion="patrol", capabilities=frozenset({"enemy"}))
        prize = GameObject(x=cfg.screen_w * 3 // 2, y=rest_y, w=OBJECT_H, h=OBJECT_H, shape_id="prize",
                           capabilities=frozenset({"prize"}))
    enemy_bullet = GameObject(x=enemy.x, y=enemy.y, vy=cfg.bullet_speed, w=4, h=10, visible=False,
                              shape_id="bullet", capabilities=frozenset({"bullet", "enemy"}))
    world = World(player=player, enemies=[enemy], prize=prize, enemy_bullet=enemy_bullet, rng=rng, config=cfg)
    world.offset = camera_offset(player.x, cfg.screen_w, cfg.player_w)
    return world


def _apply_events(w: World, events: Sequence[InputEvent]) -> None:
    for ev in events:
        down = ev.edge == "DOWN"
        if ev.key == "ESCAPE":
            if down:
                w.quit = True
        elif ev.key == "SPACE":
            if down:
                fire_bullet(w.player, w.player_bullets, w.config.bullet_speed)
                if w.config.mode == "scroller" and w.player.jump is not None:
                    start_jump(w.player.jump, w.player.y)
        elif ev.key == "LEFT":
            w.left = down
        elif ev.key == "RIGHT":
            w.right = down
        elif ev.key == "UP":
            w.up = down
        elif ev.key == "DOWN":
            w.down = down


def _update_player(w: World) -> None:
    p, cfg = w.player, w.config
    p.vx = (cfg.player_speed if w.right else 0) - (cfg.player_speed if w.left else 0)
    p.vy = 0
    if cfg.mode == "topdown":
        p.vy = (cfg.player_speed if w.down else 0) - (cfg.player_speed if w.up else 0)
    p.x += p.vx
    p.y += p.vy
    if p.jump is not None and p.jump.jumping:
        p.y = jump_step(p.jump, w.ground)
    if p.anim is not None:
        if p.vx != 0:
            advance_animation(p.anim)
        p.shape_id = p.anim.shape_id


def _update_enemies(w: World) -> None:
    cfg = w.config
    born = []
    for e in w.enemies:
        if e.motion == "jitter":
            jitter_move(e, w.rng)
        elif e.motion == "patrol":
            patrol_move(e, cfg.screen_w, cfg.screen_h)
        if e.has("cloner"):
            child = age_and_clone(e, w.rng)
            if child is not None:
                born.append(child)
    # clones join the list after this frame's pass
    w.enemies.extend(born)

    eb = w.enemy_bullet
    if not eb.visible:
        for e in w.enemies:
            if e.visible and abs(e.x - w.player.x) < 5:
                eb.x, eb.y, eb.visible = e.x, e.y, True
                break
    if eb.visible:
        eb.x += eb.vx
        eb.y += eb.vy
        if eb.y > cfg.screen_h:
            eb.visible = False


def render_commands(w: World) -> List[RenderCommand]:
    off = w.offset
    cmds = [RenderCommand("map", -off, 0)]
    if w.prize.visible:
        cmds.append(RenderCommand(w.prize.shape_id, w.prize.x - off, w.prize.y))
    for e in w.enemies:
        if e.visible:
            cmds.append(RenderCommand(e.shape_id, e.x - off, e.y, w.config.enemy_effect))
    if w.enemy_bullet.visible:
        cmds.append(RenderCommand(w.enemy_bullet.shape_id, w.enemy_bullet.x - off, w.enemy_bullet.y))
    if w.player.visible:
        cmds.append(RenderCommand(w.player.shape_id, w.player.x - off, w.player.y))
    for b in w.player_bullets:
        cmds.append(RenderCommand(b.shape_id, b.x - off, b.y))
    return cmds


def step_frame(w: World, events: Sequence[InputEvent] = ()) -> List[RenderCommand]:
    """Advance the world by one frame and return the draw list for it.

    Once ``quit`` is set the world is frozen: later frames only do the
    frame/offset bookkeeping and redraw the final scene.
    """
    for ev in events:
        if ev.frame != w.frame_count:
            raise ContractError("event for frame %d fed to frame %d" % (ev.frame, w.frame_count))
    if not w.quit:
        _apply_events(w, events)
        _update_player(w)
        _update_enemies(w)

        won = False
        target = advance_bullets(w.player_bullets, w.enemies)
        if target is not None:
            target.visible = False
            w.win = w.quit = won = True

        p = w.player
        if w.prize.visible and check_collision(p, w.prize):
            w.prize.visible = False
            w.win = w.quit = won = True
        if not won:
            hit_enemy = any(e.visible and check_collision(p, e) for e in w.enemies)
            hit_bullet = w.enemy_bullet.visible and check_collision(p, w.enemy_bullet)
            if hit_enemy or hit_bullet:
                p.visible = False
                w.win = False
                w.quit = True

    w.offset = camera_offset(w.player.x, w.config.screen_w, w.config.player_w)
    w.frame_count += 1
    return render_commands(w)


def parse_trace(lines: Iterable[str]) -> List[InputEvent]:
    """Parse ``<frame> <KEY> <DOWN|UP>`` lines; ``#`` starts a comment."""
    events = []
    last = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise TraceError("line %d: expected '<frame> <KEY> <DOWN|UP>', got %r" % (lineno, line))
        frame_s, key, edge = parts
        try:
            frame = int(frame_s)
        except ValueError:
            raise TraceError("line %d: bad frame number %r" % (lineno, frame_s)) from None
        key, edge = key.upper(), edge.upper()
        if frame < 0:
            raise TraceError("line %d: negative frame" % lineno)
        if key not in KEYS:
            raise TraceError("line %d: unknown key %r" % (lineno, key))
        if edge not in EDGES:
            raise TraceError("line %d: edge must be DOWN or UP, not %r" % (lineno, edge))
        if frame < last:
            raise TraceError("line %d: frame %d goes backwards" % (lineno, frame))
        last = frame
        events.append(InputEvent(frame, key, edge))
    return events


def format_trace(events: Iterable[InputEvent]) -> str:
    return "".join("%d %s %s\n" % ev for ev in events)
