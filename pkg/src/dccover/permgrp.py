"""Permutation groups on integer points: orders, orbits, automorphism oracle.

Permutations are image arrays: perm[x] is the image of point x.  Products
apply left to right, so mult(p, q)[x] == q[p[x]], matching the right-action
convention used by the cover machinery.  Arrays are numpy int32 internally;
plain lists are accepted everywhere.
"""

from __future__ import annotations

import time
from math import lcm

import numpy as np


def as_perm(seq, degree: int | None = None) -> np.ndarray:
    """Validate and convert a permutation to an int32 image array."""
    arr = np.asarray(seq, dtype=np.int32)
    if arr.ndim != 1:
        raise ValueError("permutation must be one-dimensional")
    n = len(arr)
    if degree is not None and n != degree:
        raise ValueError(f"expected degree {degree}, got {n}")
    seen = np.zeros(n, dtype=bool)
    if n and (arr.min() < 0 or arr.max() >= n):
        raise ValueError("permutation images out of range")
    seen[arr] = True
    if not seen.all():
        raise ValueError("not a bijection")
    return arr


def perm_identity(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.int32)


def perm_mult(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Apply p, then q."""
    return q[p]


def perm_inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty(len(p), dtype=np.int32)
    inv[p] = np.arange(len(p), dtype=np.int32)
    return inv


def perm_order(p: np.ndarray) -> int:
    """Order of the permutation: lcm of cycle lengths."""
    n = len(p)
    seen = np.zeros(n, dtype=bool)
    out = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = int(p[x])
            length += 1
        out = lcm(out, length)
    return out


class _Level:
    """One stabilizer-chain level: base point, generators, transversal.

    The transversal maps each orbit point x to a group element carrying the
    base point to x.  Orbit and transversal only ever grow, so Schreier
    products computed earlier stay valid.
    """

    def __init__(self, base: int, degree: int):
        self.base = base
        self.degree = degree
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [base]
        self.trans: dict[int, np.ndarray] = {base: perm_identity(degree)}
        self._expand_done: list[int] = []
        self.schreier_done: list[int] = []

    def add_gen(self, g: np.ndarray) -> None:
        self.gens.append(g)
        self._expand_done.append(0)
        self.schreier_done.append(0)
        self._expand()

    def _expand(self) -> None:
        moved = True
        while moved:
            moved = False
            for gi, g in enumerate(self.gens):
                while self._expand_done[gi] < len(self.orbit):
                    x = self.orbit[self._expand_done[gi]]
                    self._expand_done[gi] += 1
                    y = int(g[x])
                    if y not in self.trans:
                        self.trans[y] = perm_mult(self.trans[x], g)
                        self.orbit.append(y)
                        moved = True


class PermGroup:
    """Group generated by permutations, with a lazy stabilizer chain."""

    def __init__(self, generators, degree: int | None = None):
        gens = [np.asarray(g, dtype=np.int32) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required when no generators are given")
            degree = len(gens[0])
        self.degree = degree
        self.gens = [as_perm(g, degree) for g in gens]
        self._levels: list[_Level] | None = None

    def orbit(self, point: int) -> list[int]:
        """Orbit of a point, ascending."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range")
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.gens:
                    y = int(g[x])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        """All orbits, each ascending, ordered by smallest element."""
        out = []
        left = np.ones(self.degree, dtype=bool)
        while left.any():
            start = int(np.argmax(left))
            orb = self.orbit(start)
            out.append(orb)
            left[orb] = False
        return out

    def order(self) -> int:
        self._build()
        total = 1
        for lvl in self._levels:
            total *= len(lvl.orbit)
        return total

    def contains(self, perm) -> bool:
        p = as_perm(perm, self.degree)
        self._build()
        residue = self._sift(p, 0)[0]
        return residue is None

    # -- stabilizer chain ---------------------------------------------------

    def _build(self) -> None:
        if self._levels is not None:
            return
        self._levels = []
        self._id = perm_identity(self.degree)
        for g in self.gens:
            self._add(g)
        self._complete()

    def _sift(self, p: np.ndarray, start: int):
        """Reduce p through the chain; (None, _) when it reaches identity."""
        for li in range(start, len(self._levels)):
            lvl = self._levels[li]
            x = int(p[lvl.base])
            if x not in lvl.trans:
                return p, li
            p = perm_mult(p, perm_inverse(lvl.trans[x]))
        if np.array_equal(p, self._id):
            return None, len(self._levels)
        return p, len(self._levels)

    def _add(self, g: np.ndarray) -> bool:
        residue, li = self._sift(g, 0)
        if residue is None:
            return False
        if li == len(self._levels):
            moved = int(np.nonzero(residue != self._id)[0][0])
            self._levels.append(_Level(moved, self.degree))
        # A strong generator fixing the first li base points belongs to every
        # stabilizer level up to li: it can still move non-base orbit points.
        for j in range(li + 1):
            self._levels[j].add_gen(residue)
        return True

    def _complete(self) -> None:
        """Process every Schreier generator until the chain is closed."""
        while True:
            progressed = False
            li = 0
            while li < len(self._levels):
                lvl = self._levels[li]
                for gi in range(len(lvl.gens)):
                    while lvl.schreier_done[gi] < len(lvl.orbit):
                        idx = lvl.schreier_done[gi]
                        lvl.schreier_done[gi] += 1
                        x = lvl.orbit[idx]
                        s = lvl.gens[gi]
                        u = lvl.trans[x]
                        carried = perm_mult(u, s)
                        y = int(s[x])
                        sch = perm_mult(carried, perm_inverse(lvl.trans[y]))
                        if np.array_equal(sch, self._id):
                            continue
                        residue, drop = self._sift(sch, li + 1)
                        if residue is not None:
                            if drop == len(self._levels):
                                moved = int(np.nonzero(residue != self._id)[0][0])
                                self._levels.append(_Level(moved, self.degree))
                            for j in range(drop + 1):
                                self._levels[j].add_gen(residue)
                            progressed = True
                li += 1
            if not progressed:
                break


def orbit_count(gens, degree: int) -> int:
    return len(PermGroup(gens, degree).orbits())


class NotAnAutomorphism(ValueError):
    pass


def _check_automorphism(adj: list[list[int]], perm: np.ndarray) -> None:
    sets = [set(nbrs) for nbrs in adj]
    for u, nbrs in enumerate(adj):
        iu = int(perm[u])
        for v in nbrs:
            if int(perm[v]) not in sets[iu]:
                raise NotAnAutomorphism(f"edge ({u},{v}) is not preserved")


def transitivity_profile(group, cover) -> dict:
    """Orbit counts of a vertex group on vertices, edges and arcs of a graph.

    Accepts a PermGroup or a plain generator list; the graph provides
    adjacency().  Raises NotAnAutomorphism when a generator breaks an edge.
    """
    adj = cover.adjacency() if hasattr(cover, "adjacency") else cover
    degree = len(adj)
    gens = group.gens if isinstance(group, PermGroup) else [
        as_perm(g, degree) for g in group
    ]
    for g in gens:
        _check_automorphism(adj, g)
    arcs = [(u, v) for u in range(degree) for v in adj[u]]
    arc_index = {a: i for i, a in enumerate(arcs)}
    arc_gens = []
    for g in gens:
        arc_gens.append([arc_index[(int(g[u]), int(g[v]))] for (u, v) in arcs])
    edges = sorted({(min(u, v), max(u, v)) for u, v in arcs})
    edge_index = {e: i for i, e in enumerate(edges)}
    edge_gens = []
    for g in gens:
        img = []
        for (u, v) in edges:
            iu, iv = int(g[u]), int(g[v])
            img.append(edge_index[(min(iu, iv), max(iu, iv))])
        edge_gens.append(img)
    v_orbits = len(PermGroup(gens, degree).orbits()) if gens else degree
    e_orbits = len(PermGroup(edge_gens, len(edges)).orbits()) if gens else len(edges)
    a_orbits = len(PermGroup(arc_gens, len(arcs)).orbits()) if gens else len(arcs)
    return {
        "vertex_orbits": v_orbits,
        "edge_orbits": e_orbits,
        "arc_orbits": a_orbits,
        "vertex_transitive": v_orbits == 1,
        "edge_transitive": e_orbits == 1,
        "arc_transitive": a_orbits == 1,
    }


# -- full automorphism group via individualization and refinement -----------


class OracleLimit(RuntimeError):
    pass


class _Refiner:
    """Equitable-partition machinery shared by the search for one graph."""

    def __init__(self, adj: list[list[int]]):
        self.adj = adj
        self.n = len(adj)

    def refine(self, cells: list[list[int]], worklist: list[list[int]]):
        """Split cells by neighbor counts until equitable; returns new cells."""
        cells = [list(c) for c in cells]
        cell_of = {}
        for ci, c in enumerate(cells):
            for v in c:
                cell_of[v] = ci
        queue = [list(c) for c in worklist]
        while queue:
            splitter = queue.pop()
            counts = {}
            for w in splitter:
                for u in self.adj[w]:
                    counts[u] = counts.get(u, 0) + 1
            touched_cells = {}
            for u, c in counts.items():
                touched_cells.setdefault(cell_of[u], set()).add(u)
            for ci in sorted(touched_cells):
                cell = cells[ci]
                if len(cell) == 1:
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(counts.get(v, 0), []).append(v)
                if len(groups) == 1:
                    continue
                ordered = [groups[k] for k in sorted(groups)]
                cells[ci] = ordered[0]
                for extra in ordered[1:]:
                    cells.append(extra)
                    nci = len(cells) - 1
                    for v in extra:
                        cell_of[v] = nci
                    queue.append(extra)
                queue.append(ordered[0])
        # Cell order is inherited from the split history, which depends only
        # on positions and count values, so it is isomorphism-equivariant.
        return cells

    def invariant(self, cells) -> tuple:
        """Isomorphism-invariant signature of an equitable ordered partition."""
        sig = []
        index = {}
        for cj, cell in enumerate(cells):
            for v in cell:
                index[v] = cj
        for cell in cells:
            rep = cell[0]
            row = [0] * len(cells)
            for u in self.adj[rep]:
                row[index[u]] += 1
            sig.append((len(cell), tuple(row)))
        return tuple(sig)


def _leaf_perm(cells, n) -> np.ndarray:
    """Labeling sending vertex cells[i][0] to position i."""
    lab = np.empty(n, dtype=np.int32)
    for pos, cell in enumerate(cells):
        lab[cell[0]] = pos
    return lab


def _relabeled_edges(adj, lab) -> tuple:
    out = []
    for u, nbrs in enumerate(adj):
        lu = int(lab[u])
        for v in nbrs:
            lv = int(lab[v])
            if lu < lv:
                out.append((lu, lv))
    out.sort()
    return tuple(out)


class _AutSearch:
    def __init__(self, adj, deadline: float | None):
        self.adj = adj
        self.n = len(adj)
        self.ref = _Refiner(adj)
        self.deadline = deadline
        self.gens: list[np.ndarray] = []
        self.first_inv: list[tuple] = []
        self.first_leaf = None
        self.first_edges = None
        self.best_inv: list[tuple] = []
        self.best_leaf = None
        self.best_edges = None

    def run(self):
        cells = self.ref.refine([list(range(self.n))], [list(range(self.n))])
        self._dfs(cells, [], [], True, "EQ")
        return self.gens, self.best_edges

    def _tick(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise OracleLimit("automorphism search exceeded its time budget")

    def _dfs(self, cells, prefix, inv_path, on_first, best_cmp):
        self._tick()
        inv = self.ref.invariant(cells)
        inv_path = inv_path + [inv]
        depth = len(inv_path) - 1
        if on_first and self.first_leaf is not None:
            if depth >= len(self.first_inv) or self.first_inv[depth] != inv:
                on_first = False
        if best_cmp == "EQ" and self.best_leaf is not None:
            if depth >= len(self.best_inv):
                best_cmp = "GT"
            elif inv > self.best_inv[depth]:
                best_cmp = "GT"
            elif inv < self.best_inv[depth]:
                best_cmp = "LT"
        if self.best_leaf is not None and best_cmp == "LT" and not on_first:
            return
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            self._leaf(cells, inv_path)
            return
        tried: list[int] = []
        for v in list(target):
            if self._pruned_by_orbit(v, tried, prefix):
                continue
            tried.append(v)
            child = self._individualize(cells, target, v)
            self._dfs(child, prefix + [v], inv_path, on_first, best_cmp)

    def _individualize(self, cells, target, v):
        new_cells = []
        rest = [w for w in target if w != v]
        for cell in cells:
            if cell is target:
                new_cells.append([v])
                new_cells.append(rest)
            else:
                new_cells.append(list(cell))
        return self.ref.refine(new_cells, [[v]])

    def _pruned_by_orbit(self, v, tried, prefix) -> bool:
        if not tried or not self.gens:
            return False
        fixed = [g for g in self.gens if all(int(g[x]) == x for x in prefix)]
        if not fixed:
            return False
        seen = set(tried)
        frontier = list(tried)
        while frontier:
            x = frontier.pop()
            for g in fixed:
                y = int(g[x])
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return False

    def _leaf(self, cells, inv_path):
        lab = _leaf_perm(cells, self.n)
        edges = _relabeled_edges(self.adj, lab)
        if self.first_leaf is None:
            self.first_inv = list(inv_path)
            self.first_leaf = lab
            self.first_edges = edges
            self.best_inv = list(inv_path)
            self.best_leaf = lab
            self.best_edges = edges
            return
        if edges == self.first_edges:
            self._record(self.first_leaf, lab)
        key = (inv_path, list(edges))
        best_key = (self.best_inv, list(self.best_edges))
        if key > best_key:
            self.best_inv = list(inv_path)
            self.best_leaf = lab
            self.best_edges = edges
        elif inv_path == self.best_inv and edges == self.best_edges:
            self._record(self.best_leaf, lab)

    def _record(self, lab_a, lab_b):
        """Automorphism sending each vertex of labeling a to its twin in b."""
        inv_b = perm_inverse(lab_b)
        g = inv_b[lab_a]
        if np.array_equal(g, np.arange(self.n)):
            return
        for known in self.gens:
            if np.array_equal(known, g):
                return
        self.gens.append(g.astype(np.int32))


DEFAULT_ORACLE_LIMIT = 256


def automorphism_group(
    graph, limit: int = DEFAULT_ORACLE_LIMIT, time_budget: float | None = None
) -> PermGroup:
    """Full automorphism group, structure-blind, via backtracking refinement."""
    adj = graph.adjacency() if hasattr(graph, "adjacency") else graph
    n = len(adj)
    if n > limit:
        raise OracleLimit(f"graph has {n} vertices, above the oracle limit {limit}")
    deadline = None if time_budget is None else time.monotonic() + time_budget
    gens, _ = _AutSearch(adj, deadline).run()
    for g in gens:
        _check_automorphism(adj, g)
    if not gens:
        return PermGroup([], n)
    return PermGroup(gens, n)


def canonical_form(
    graph, limit: int = DEFAULT_ORACLE_LIMIT, time_budget: float | None = None
) -> tuple:
    """Canonical edge list: equal for two graphs exactly when isomorphic."""
    adj = graph.adjacency() if hasattr(graph, "adjacency") else graph
    n = len(adj)
    if n > limit:
        raise OracleLimit(f"graph has {n} vertices, above the oracle limit {limit}")
    deadline = None if time_budget is None else time.monotonic() + time_budget
    _, edges = _AutSearch(adj, deadline).run()
    return (n, edges)


def are_isomorphic(graph_a, graph_b, limit: int = DEFAULT_ORACLE_LIMIT) -> bool:
    adj_a = graph_a.adjacency() if hasattr(graph_a, "adjacency") else graph_a
    adj_b = graph_b.adjacency() if hasattr(graph_b, "adjacency") else graph_b
    if len(adj_a) != len(adj_b):
        return False
    if sorted(map(len, adj_a)) != sorted(map(len, adj_b)):
        return False
    return canonical_form(adj_a, limit) == canonical_form(adj_b, limit)
