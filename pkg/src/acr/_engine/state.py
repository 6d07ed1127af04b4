"""Array-backed reactor state shared by the pure and compiled engines.

Molecules live in flat slot-indexed arrays (structure-of-arrays); the grid
is a row-major int array mapping cells to slots. Both engines mutate these
arrays in place and must consume random draws in exactly the same order,
so a run is bit-identical whichever engine executes it.

Direction codes (row 1 is the top of the grid, so N decreases the row):
0 = stay, 1 = N, 2 = NE, 3 = E, 4 = SE, 5 = S, 6 = SW, 7 = W, 8 = NW.
"""

from __future__ import annotations

import numpy as np

DIR_STAY, DIR_N, DIR_NE, DIR_E, DIR_SE, DIR_S, DIR_SW, DIR_W, DIR_NW = range(9)

DIR_ROW_OFF = (0, -1, -1, 0, 1, 1, 1, 0, -1)
DIR_COL_OFF = (0, 0, 1, 1, 1, 0, -1, -1, -1)

FIVE_POINT_CODES = (DIR_STAY, DIR_N, DIR_E, DIR_S, DIR_W)
NINE_POINT_CODES = tuple(range(9))

UPWARD_CODES = (DIR_NW, DIR_N, DIR_NE)
DOWNWARD_CODES = (DIR_SW, DIR_S, DIR_SE)
LATERAL_CODES = (DIR_W, DIR_STAY, DIR_E)

# Sweep states for one collision pass.
SW_UNSEEN = 0    # not processed yet (or a stay-direction resident): may be struck
SW_MOVING = 1    # reserved an empty target cell
SW_PAIRED = 2    # party to a pair collision
SW_WALLED = 3    # recorded a wall collision
SW_BLOCKED = 4   # wanted to move but the target was taken: may still be struck

ENT_PAIR = 1
ENT_WALL = 2


class GridState:
    """Mutable state of one 2D reactor (single-owner, sequential use)."""

    def __init__(self, n, i_dim, j_dim, stencil_size, eps_mass, decay_probability,
                 gpad, order_cells, cell_rank):
        cap = i_dim * j_dim
        self.n = n
        self.i_dim = i_dim
        self.j_dim = j_dim
        self.stencil_size = stencil_size          # 5 or 9
        self.eps_mass = eps_mass
        self.decay_probability = decay_probability
        self.gpad = gpad                          # (n+1, n+1) float64 padded costs
        self.gpad_rows = gpad.tolist()            # fast exact lookups for the pure engine
        self.order_cells = order_cells            # rank -> flat cell, int64[cap]
        self.cell_rank = cell_rank                # flat cell -> rank, int64[cap]

        self.cell_mol = np.full(cap, -1, dtype=np.int32)
        self.pos = np.zeros(cap, dtype=np.int32)
        self.dirs = np.zeros(cap, dtype=np.int8)
        self.mass = np.zeros(cap, dtype=np.float64)
        self.perms = np.zeros((cap, n), dtype=np.int32)
        self.count = 0
        self.empty_cells = cap

        # Scratch for one collision pass (reused every epoch).
        self.sweep_state = np.zeros(cap, dtype=np.int8)
        self.reserved_by = np.full(cap, -1, dtype=np.int32)
        self.move_target = np.zeros(cap, dtype=np.int32)
        self.move_order = np.zeros(cap, dtype=np.int32)
        self.move_count = 0
        self.ent_kind = np.zeros(cap, dtype=np.int8)
        self.ent_a = np.zeros(cap, dtype=np.int32)
        self.ent_b = np.zeros(cap, dtype=np.int32)
        self.ent_cell = np.zeros(cap, dtype=np.int32)
        self.ent_count = 0
        self.inv_scratch = np.zeros(n + 1, dtype=np.int32)
        self.mask_scratch = np.zeros(n, dtype=np.uint8)

    @property
    def capacity(self):
        return self.i_dim * self.j_dim

    def add_molecule(self, perm, mass, direction, cell):
        """Place a new molecule; returns its slot."""
        slot = self.count
        self.perms[slot, :] = perm
        self.mass[slot] = mass
        self.dirs[slot] = direction
        self.pos[slot] = cell
        self.cell_mol[cell] = slot
        self.count += 1
        self.empty_cells -= 1
        return slot

    def population_stats(self):
        """(best_slot, best, mean, worst) over live slots, sequential sum."""
        if self.count == 0:
            return -1, 0.0, 0.0, 0.0
        m = self.mass
        best_slot = 0
        best = worst = float(m[0])
        total = float(m[0])
        for s in range(1, self.count):
            v = float(m[s])
            total += v
            if v < best:
                best = v
                best_slot = s
            if v > worst:
                worst = v
        return best_slot, best, total / self.count, worst


class SoupState:
    """Mutable state of one topology-less reactor population."""

    def __init__(self, n, capacity, pair_fraction, unary_probability,
                 decay_probability, gpad):
        # One epoch appends at most capacity products before truncation.
        buf = 2 * capacity + 2
        self.n = n
        self.capacity = capacity
        self.pair_fraction = pair_fraction
        self.unary_probability = unary_probability
        self.decay_probability = decay_probability
        self.gpad = gpad
        self.gpad_rows = gpad.tolist()
        self.perms = np.zeros((buf, n), dtype=np.int32)
        self.mass = np.zeros(buf, dtype=np.float64)
        self.count = 0
        self.pick_scratch = np.zeros(buf, dtype=np.int32)
        self.keep_scratch = np.zeros(buf, dtype=np.uint8)
        self.inv_scratch = np.zeros(n + 1, dtype=np.int32)
        self.mask_scratch = np.zeros(n, dtype=np.uint8)

    def population_stats(self):
        if self.count == 0:
            return -1, 0.0, 0.0, 0.0
        m = self.mass
        best_slot = 0
        best = worst = float(m[0])
        total = float(m[0])
        for s in range(1, self.count):
            v = float(m[s])
            total += v
            if v < best:
                best = v
                best_slot = s
            if v > worst:
                worst = v
        return best_slot, best, total / self.count, worst
