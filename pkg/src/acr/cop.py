"""Problem instances, permutation molecules, and the mass function.

A molecule is a permutation of the city indices 1..n; its mass is the
closed Hamiltonian tour cost, so under minimization light molecules are
the good ones. Cities are 1-indexed everywhere a user can see them (and
in the instance file format); the engines index a cost matrix padded
with an unused row/column 0 so that city labels double as array indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import InstanceFormatError, InvalidInputError
from .rng import RandomStream


@dataclass(frozen=True)
class TspInstance:
    """A symmetric TSP instance: optional plane coordinates plus a cost matrix."""

    n: int
    costs: np.ndarray                      # (n, n) float64, symmetric, zero diagonal
    coords: Optional[tuple] = None         # n (x, y) pairs when built from points
    _padded: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInputError(f"an instance needs at least 2 cities, got {self.n}")
        c = np.asarray(self.costs, dtype=np.float64)
        if c.shape != (self.n, self.n):
            raise InvalidInputError(f"cost matrix shape {c.shape} does not match n={self.n}")
        if np.any(np.diagonal(c) != 0.0):
            raise InvalidInputError("cost matrix must have a zero diagonal")
        if np.any(c != c.T):
            raise InvalidInputError("cost matrix must be symmetric")
        if np.any(c < 0.0) or not np.all(np.isfinite(c)):
            raise InvalidInputError("costs must be finite and non-negative")
        object.__setattr__(self, "costs", c)
        # Row/column 0 unused: city labels 1..n index this matrix directly.
        padded = np.zeros((self.n + 1, self.n + 1), dtype=np.float64)
        padded[1:, 1:] = c
        object.__setattr__(self, "_padded", padded)
        if self.coords is not None:
            pts = tuple((float(x), float(y)) for x, y in self.coords)
            if len(pts) != self.n:
                raise InvalidInputError(f"{len(pts)} coordinate pairs for n={self.n}")
            object.__setattr__(self, "coords", pts)

    @classmethod
    def from_coords(cls, points: Sequence[tuple]) -> "TspInstance":
        """Build an instance whose costs are exact Euclidean distances."""
        pts = [(float(x), float(y)) for x, y in points]
        n = len(pts)
        if n < 2:
            raise InvalidInputError(f"an instance needs at least 2 cities, got {n}")
        costs = np.zeros((n, n), dtype=np.float64)
        for i in range(n):
            xi, yi = pts[i]
            for j in range(i + 1, n):
                xj, yj = pts[j]
                d = math.sqrt((xi - xj) ** 2 + (yi - yj) ** 2)
                costs[i, j] = d
                costs[j, i] = d
        return cls(n=n, costs=costs, coords=tuple(pts))

    @classmethod
    def from_matrix(cls, costs) -> "TspInstance":
        c = np.asarray(costs, dtype=np.float64)
        return cls(n=c.shape[0], costs=c)

    def check_coords_consistent(self, rel_tol: float = 1e-12) -> bool:
        """True when stored costs match pairwise Euclidean distances."""
        if self.coords is None:
            return True
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                xi, yi = self.coords[i]
                xj, yj = self.coords[j]
                d = math.sqrt((xi - xj) ** 2 + (yi - yj) ** 2)
                if not math.isclose(d, self.costs[i, j], rel_tol=rel_tol, abs_tol=0.0):
                    return False
        return True


@dataclass(frozen=True)
class Molecule:
    """A permutation of 1..n with its cached tour cost (the mass)."""

    perm: tuple
    mass: float

    @classmethod
    def from_perm(cls, perm: Sequence[int], instance: TspInstance) -> "Molecule":
        p = tuple(int(v) for v in perm)
        return cls(perm=p, mass=tour_cost(p, instance))

    @property
    def n(self) -> int:
        return len(self.perm)


def validate_permutation(seq: Sequence[int], n: int) -> bool:
    """True iff seq has length n and contains each of 1..n exactly once."""
    if len(seq) != n:
        return False
    seen = [False] * (n + 1)
    for v in seq:
        if not isinstance(v, (int, np.integer)) or v < 1 or v > n or seen[v]:
            return False
        seen[v] = True
    return True


def tour_cost(perm: Sequence[int], instance: TspInstance) -> float:
    """Closed Hamiltonian tour cost: the wrap edge plus consecutive edges.

    The wrap edge is added first and the remaining edges in position order,
    so the pure and compiled engines sum in the same order and agree bitwise.
    """
    n = instance.n
    if len(perm) != n:
        raise InvalidInputError(f"permutation length {len(perm)} does not match n={n}")
    if not validate_permutation(perm, n):
        raise InvalidInputError(f"not a permutation of 1..{n}: {tuple(perm)!r}")
    g = instance._padded
    total = g[perm[n - 1], perm[0]]
    for i in range(n - 1):
        total += g[perm[i], perm[i + 1]]
    return float(total)


def random_molecule(n: int, instance: TspInstance, rng: RandomStream) -> Molecule:
    """Uniformly random permutation of 1..n, mass computed on the spot."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    if n != instance.n:
        raise InvalidInputError(f"n={n} does not match instance n={instance.n}")
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return Molecule.from_perm(perm, instance)


# ---------------------------------------------------------------------------
# Instance file format (whitespace-delimited plain text)
#
#   line 1:       n
#   lines 2..n+1: "<id> <x> <y>"  with id = 1..n in order      (coordinate form)
#              or n reals per line                              (matrix form)
#
# The form is auto-detected from the token count of line 2.
# ---------------------------------------------------------------------------


def write_instance(instance: TspInstance, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{instance.n}\n")
        if instance.coords is not None:
            for i, (x, y) in enumerate(instance.coords, start=1):
                fh.write(f"{i} {x!r} {y!r}\n")
        else:
            for row in instance.costs:
                fh.write(" ".join(repr(float(v)) for v in row) + "\n")


def read_instance(path) -> TspInstance:
    with open(path) as fh:
        raw = fh.read().splitlines()
    lines = [(no, line.split()) for no, line in enumerate(raw, start=1) if line.strip()]
    if not lines:
        raise InstanceFormatError(path, 1, "empty instance file")
    no, tokens = lines[0]
    if len(tokens) != 1:
        raise InstanceFormatError(path, no, f"expected a single city count, got {len(tokens)} tokens")
    try:
        n = int(tokens[0])
    except ValueError:
        raise InstanceFormatError(path, no, f"city count is not an integer: {tokens[0]!r}") from None
    if n < 2:
        raise InstanceFormatError(path, no, f"need at least 2 cities, got {n}")
    body = lines[1:]
    if len(body) != n:
        raise InstanceFormatError(
            path, lines[-1][0], f"expected {n} data lines, found {len(body)}"
        )
    width = len(body[0][1])
    if width == 3 and n != 3:
        return _parse_coord_form(path, n, body)
    if width == n and n == 3:
        # 3 tokens is ambiguous for n=3: ids in column one disambiguate.
        first = body[0][1][0]
        if first == "1":
            return _parse_coord_form(path, n, body)
        return _parse_matrix_form(path, n, body)
    if width == 3:
        return _parse_coord_form(path, n, body)
    if width == n:
        return _parse_matrix_form(path, n, body)
    raise InstanceFormatError(
        path, body[0][0], f"expected 3 tokens (coordinate form) or {n} (matrix form), got {width}"
    )


def _parse_coord_form(path, n, body) -> TspInstance:
    points = []
    seen = set()
    for expected, (no, tokens) in enumerate(body, start=1):
        if len(tokens) != 3:
            raise InstanceFormatError(path, no, f"expected 'id x y', got {len(tokens)} tokens")
        try:
            cid = int(tokens[0])
            x, y = float(tokens[1]), float(tokens[2])
        except ValueError:
            raise InstanceFormatError(path, no, f"malformed coordinate line: {' '.join(tokens)!r}") from None
        if cid in seen:
            raise InstanceFormatError(path, no, f"duplicate city id {cid}")
        if cid != expected:
            raise InstanceFormatError(path, no, f"city ids must be 1..{n} in order; expected {expected}, got {cid}")
        seen.add(cid)
        points.append((x, y))
    return TspInstance.from_coords(points)


def _parse_matrix_form(path, n, body) -> TspInstance:
    rows = []
    for no, tokens in body:
        if len(tokens) != n:
            raise InstanceFormatError(path, no, f"expected {n} matrix entries, got {len(tokens)}")
        try:
            rows.append([float(t) for t in tokens])
        except ValueError:
            raise InstanceFormatError(path, no, f"malformed matrix line: {' '.join(tokens)!r}") from None
    costs = np.array(rows, dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            if costs[i, j] != costs[j, i]:
                raise InstanceFormatError(
                    path, body[j][0],
                    f"asymmetric costs: entry ({j + 1},{i + 1})={costs[j, i]!r} "
                    f"but ({i + 1},{j + 1})={costs[i, j]!r}",
                )
        if costs[i, i] != 0.0:
            raise InstanceFormatError(path, body[i][0], f"nonzero diagonal entry at city {i + 1}")
    return TspInstance.from_matrix(costs)
