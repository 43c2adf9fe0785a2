"""Two vertex-disjoint paths joined by cross edges.

A :class:`TwoPathConfig` describes a bottom path ``x_1..x_p``, a top path
``y_1..y_q`` and cross edges ``x_i y_j``.  Such a graph has no chorded
cycle exactly when it has at most two cross edges or it matches one of
nine exception drawings with three or four cross edges.

Matching works on order types: only the relative order of the cross-edge
endpoints along each path matters (coincident endpoints share a rank),
up to reversing either path and swapping the two paths.  The interior
path vertices between endpoints are ignored, with one exception: in
``F2e`` the two middle endpoints must not be consecutive on either path,
otherwise the path edge between them is itself a chord.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .cycles import ChordedCycle, find_chorded_cycle
from .errors import InvariantViolation
from .graph import Graph

__all__ = [
    "TwoPathConfig",
    "ExceptionTemplate",
    "TEMPLATES",
    "Chorded",
    "NoChordedFewEdges",
    "NoChordedTemplate",
    "order_type",
    "match_template",
    "two_path_analyze",
]


@dataclass(frozen=True)
class TwoPathConfig:
    """Bottom path of ``p`` vertices, top path of ``q``, 1-based cross pairs ``(i, j)``."""

    p: int
    q: int
    cross: frozenset[tuple[int, int]]

    def __init__(self, p: int, q: int, cross: Iterable[tuple[int, int]]):
        cross = frozenset((int(i), int(j)) for i, j in cross)
        if p < 1 or q < 1:
            raise ValueError("both paths need at least one vertex")
        for i, j in cross:
            if not (1 <= i <= p and 1 <= j <= q):
                raise ValueError(f"cross pair {(i, j)} out of range")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "cross", cross)

    def bottom(self, i: int) -> int:
        return i - 1

    def top(self, j: int) -> int:
        return self.p + j - 1

    def realize(self) -> Graph:
        """x_i becomes vertex i-1 and y_j becomes vertex p+j-1."""
        p, q = self.p, self.q
        n = p + q
        rows = [0] * n
        for a in range(n - 1):
            if a != p - 1:
                rows[a] |= 1 << (a + 1)
                rows[a + 1] |= 1 << a
        for i, j in self.cross:
            rows[i - 1] |= 1 << (p + j - 1)
            rows[p + j - 1] |= 1 << (i - 1)
        return Graph._trusted(n, tuple(rows))


OrderType = tuple[tuple[int, int], tuple[tuple[int, int], ...]]


def _ranks(values: Iterable[int]) -> dict[int, int]:
    return {v: k + 1 for k, v in enumerate(sorted(set(values)))}


def order_type(cross: Iterable[tuple[int, int]]) -> OrderType:
    """Canonical order type: ``((kx, ky), sorted rank pairs)``, minimised over symmetries."""
    cross = list(cross)
    rx = _ranks(i for i, _ in cross)
    ry = _ranks(j for _, j in cross)
    kx, ky = len(rx), len(ry)
    pattern = [(rx[i], ry[j]) for i, j in cross]
    best = None
    for swap in (False, True):
        for flip_x in (False, True):
            for flip_y in (False, True):
                out = []
                for a, b in pattern:
                    a = kx + 1 - a if flip_x else a
                    b = ky + 1 - b if flip_y else b
                    out.append((b, a) if swap else (a, b))
                key = ((ky, kx) if swap else (kx, ky), tuple(sorted(out)))
                if best is None or key < best:
                    best = key
    return best


@dataclass(frozen=True)
class ExceptionTemplate:
    id: str
    pattern: tuple[tuple[int, int], ...]
    middle_gaps: bool = False

    @property
    def order_type(self) -> OrderType:
        return order_type(self.pattern)


# Pairs are (rank on bottom path, rank on top path), read off the drawings.
TEMPLATES: tuple[ExceptionTemplate, ...] = (
    ExceptionTemplate("F1a", ((1, 1), (3, 1), (2, 2))),
    ExceptionTemplate("F1b", ((1, 2), (3, 1), (2, 3))),
    ExceptionTemplate("F1c", ((1, 1), (3, 2), (2, 3))),
    ExceptionTemplate("F2a", ((1, 2), (3, 2), (2, 3), (2, 1))),
    ExceptionTemplate("F2b", ((1, 2), (4, 2), (2, 3), (3, 1))),
    ExceptionTemplate("F2c", ((1, 2), (4, 2), (3, 3), (2, 1))),
    ExceptionTemplate("F2d", ((2, 1), (1, 2), (4, 3), (3, 4))),
    ExceptionTemplate("F2e", ((3, 1), (1, 2), (4, 3), (2, 4)), middle_gaps=True),
    ExceptionTemplate("F2f", ((3, 1), (1, 3), (4, 2), (2, 4))),
)

_BY_TYPE: dict[OrderType, ExceptionTemplate] = {}
for _t in TEMPLATES:
    _BY_TYPE.setdefault(_t.order_type, _t)


def _middle_gap_ok(values: Iterable[int]) -> bool:
    xs = sorted(set(values))
    return xs[2] - xs[1] >= 2


def match_template(cfg: TwoPathConfig) -> ExceptionTemplate | None:
    """The first template (in drawing order) whose order type ``cfg`` realises."""
    if len(cfg.cross) not in (3, 4):
        return None
    tpl = _BY_TYPE.get(order_type(cfg.cross))
    if tpl is None:
        return None
    if tpl.middle_gaps:
        if not (_middle_gap_ok(i for i, _ in cfg.cross) and _middle_gap_ok(j for _, j in cfg.cross)):
            return None
    return tpl


@dataclass(frozen=True)
class Chorded:
    witness: ChordedCycle


@dataclass(frozen=True)
class NoChordedFewEdges:
    pass


@dataclass(frozen=True)
class NoChordedTemplate:
    id: str


def two_path_analyze(cfg: TwoPathConfig) -> Chorded | NoChordedFewEdges | NoChordedTemplate:
    """Classify a two-path configuration.

    The verdict comes from the edge count and template match alone; for a
    chorded verdict a witness is then searched in the realised graph.

    >>> two_path_analyze(TwoPathConfig(3, 2, {(1, 1), (3, 1), (2, 2)}))
    NoChordedTemplate(id='F1a')
    >>> two_path_analyze(TwoPathConfig(5, 5, {(1, 1)}))
    NoChordedFewEdges()
    """
    if len(cfg.cross) <= 2:
        return NoChordedFewEdges()
    tpl = match_template(cfg)
    if tpl is not None:
        return NoChordedTemplate(tpl.id)
    g = cfg.realize()
    witness = find_chorded_cycle(g)
    if witness is None:
        raise InvariantViolation(f"no chorded cycle found for non-exceptional {cfg}")
    witness.validate(g)
    return Chorded(witness)
