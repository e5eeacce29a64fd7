"""Closed walks and Steiner cycles.

A closed walk is a cyclic vertex sequence whose consecutive pairs, including
last-to-first, are graph edges. Its length is the number of steps and its
unique count is the number of distinct vertices; the walk is simple when the
two agree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidWalk, RequiredNotOnCycle


@dataclass(frozen=True)
class ClosedWalk:
    sequence: tuple

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(int(v) for v in self.sequence))
        if len(self.sequence) < 3:
            raise InvalidWalk(f"a closed walk needs length >= 3, got {len(self.sequence)}")

    @classmethod
    def in_graph(cls, g, sequence):
        w = cls(sequence)
        w.validate(g)
        return w

    def validate(self, g):
        seq = self.sequence
        for i, u in enumerate(seq):
            v = seq[(i + 1) % len(seq)]
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise InvalidWalk(f"step {u} -> {v} is not an edge")

    @property
    def length(self):
        return len(self.sequence)

    @property
    def unique_count(self):
        return len(set(self.sequence))

    @property
    def vertices(self):
        return frozenset(self.sequence)

    @property
    def is_simple(self):
        return self.unique_count == self.length

    def edges(self):
        seq = self.sequence
        return [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]


class WalkStats(NamedTuple):
    unique: int
    length: int
    beta: Fraction


def walk_stats(w):
    return WalkStats(w.unique_count, w.length, Fraction(w.length, w.unique_count))


@dataclass(frozen=True)
class SteinerCycle:
    """A closed walk through every vertex of ``required``.

    ``beta`` is length over unique count; ``gamma = beta - 1`` is zero
    exactly when the walk is a simple cycle.
    """

    walk: ClosedWalk
    required: frozenset
    method: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "required", frozenset(self.required))
        missing = self.required - self.walk.vertices
        if missing:
            raise RequiredNotOnCycle(f"required vertices {sorted(missing)} are not on the walk")

    @property
    def beta(self):
        return Fraction(self.walk.length, self.walk.unique_count)

    @property
    def gamma(self):
        return self.beta - 1

    @property
    def is_simple(self):
        return self.walk.is_simple

    @property
    def unique_count(self):
        return self.walk.unique_count

    @property
    def length(self):
        return self.walk.length

    @property
    def sequence(self):
        return self.walk.sequence
