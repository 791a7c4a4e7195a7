"""Interaction graphs with distances, balls and effective-dimension bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .pauli import PauliString

UNREACHABLE = np.iinfo(np.int32).max


@dataclass(frozen=True)
class DimensionParams:
    """Claimed polynomial ball-growth constants: |B_r(v)| <= C1 r^D and
    |B_r(v)| - |B_{r-1}(v)| <= C2 r^{D-1} for r >= 1."""

    D: int
    C1: float
    C2: float


@dataclass(frozen=True)
class DimensionReport:
    holds: bool
    witnesses: list = field(default_factory=list)


class InteractionGraph:
    """Finite graph with a precomputed all-pairs shortest-path table.

    Distances are computed once by BFS from every vertex; probe and
    region machinery queries them heavily afterwards.
    """

    def __init__(self, n_vertices: int, edges, dim_params: DimensionParams | None = None,
                 name: str = "custom"):
        self.n = int(n_vertices)
        if self.n <= 0:
            raise ValueError("graph needs at least one vertex")
        self.name = name
        adj = [[] for _ in range(self.n)]
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v or (u, v) in seen:
                continue
            seen.add((u, v))
            seen.add((v, u))
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency = [tuple(sorted(a)) for a in adj]
        self.edges = tuple(sorted((u, v) for u, v in seen if u < v))
        self.dist = self._all_pairs_bfs()
        finite = self.dist[self.dist < UNREACHABLE]
        self.diameter = int(finite.max()) if finite.size else 0
        self.dim_params = dim_params

    def _all_pairs_bfs(self) -> np.ndarray:
        dist = np.full((self.n, self.n), UNREACHABLE, dtype=np.int32)
        for s in range(self.n):
            dist[s, s] = 0
            frontier = [s]
            d = 0
            while frontier:
                d += 1
                nxt = []
                for u in frontier:
                    for v in self.adjacency[u]:
                        if dist[s, v] == UNREACHABLE:
                            dist[s, v] = d
                            nxt.append(v)
                frontier = nxt
        return dist

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise ValueError(f"unknown vertex {v}")

    def ball(self, v: int, r: int) -> frozenset[int]:
        """B_r(v) = vertices within graph distance r of v."""
        self._check_vertex(v)
        if r < 0:
            raise ValueError("radius must be nonnegative")
        return frozenset(np.flatnonzero(self.dist[v] <= r).tolist())

    def enlarge(self, vertices, r: int) -> frozenset[int]:
        """Union of balls of radius r around a nonempty vertex set."""
        vs = sorted(set(int(v) for v in vertices))
        if not vs:
            raise ValueError("enlarge of an empty set")
        for v in vs:
            self._check_vertex(v)
        if r < 0:
            raise ValueError("radius must be nonnegative")
        d = self.dist[vs].min(axis=0)
        return frozenset(np.flatnonzero(d <= r).tolist())

    def check_dimension(self, params: DimensionParams | None = None) -> DimensionReport:
        """Exhaustively verify the ball-growth inequalities for all (v, r >= 1)."""
        p = params or self.dim_params
        if p is None:
            raise ValueError("no dimension parameters set")
        witnesses = []
        for v in range(self.n):
            prev = 1
            for r in range(1, self.diameter + 1):
                size = int((self.dist[v] <= r).sum())
                if size > p.C1 * r ** p.D:
                    witnesses.append((v, r, "ball", size))
                if size - prev > p.C2 * r ** (p.D - 1):
                    witnesses.append((v, r, "shell", size - prev))
                prev = size
        return DimensionReport(holds=not witnesses, witnesses=witnesses)

    def geometric_diameter(self, p: PauliString) -> int:
        """Max pairwise graph distance over the support of p; 0 for weight <= 1."""
        if p.n != self.n:
            raise ValueError("Pauli length does not match vertex count")
        supp = sorted(p.support())
        if len(supp) <= 1:
            return 0
        sub = self.dist[np.ix_(supp, supp)]
        return int(sub.max())

    def __repr__(self):
        return f"InteractionGraph({self.name}, n={self.n}, edges={len(self.edges)})"


def path_graph(n: int) -> InteractionGraph:
    return InteractionGraph(n, [(i, i + 1) for i in range(n - 1)],
                            dim_params=DimensionParams(1, 3.0, 2.0), name=f"path{n}")


def ring_graph(n: int) -> InteractionGraph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return InteractionGraph(n, edges, dim_params=DimensionParams(1, 3.0, 2.0), name=f"ring{n}")


def grid_graph(width: int, height: int) -> InteractionGraph:
    """2D grid, vertex (r, c) -> index r*width + c."""
    edges = []
    for r in range(height):
        for c in range(width):
            v = r * width + c
            if c + 1 < width:
                edges.append((v, v + 1))
            if r + 1 < height:
                edges.append((v, v + width))
    return InteractionGraph(width * height, edges,
                            dim_params=DimensionParams(2, 9.0, 18.0),
                            name=f"grid{width}x{height}")


def graph_from_config(cfg) -> InteractionGraph:
    """Build a graph from a config block.

    Accepts either ``{"generator": "path"|"ring"|"grid WxH", "n": ...}`` or an
    explicit ``{"n": ..., "edges": [[u, v], ...]}`` block; an optional
    ``dim_params`` entry ``[D, C1, C2]`` overrides the generator default.
    """
    if isinstance(cfg, str):
        cfg = {"generator": cfg}
    gen = cfg.get("generator")
    if gen:
        parts = gen.split()
        kind = parts[0]
        if kind == "path":
            g = path_graph(int(cfg["n"]))
        elif kind == "ring":
            g = ring_graph(int(cfg["n"]))
        elif kind == "grid":
            w, h = parts[1].lower().split("x")
            g = grid_graph(int(w), int(h))
        else:
            raise ValueError(f"unknown graph generator {gen!r}")
    else:
        g = InteractionGraph(int(cfg["n"]), cfg.get("edges", []))
    if "dim_params" in cfg:
        D, C1, C2 = cfg["dim_params"]
        g.dim_params = DimensionParams(int(D), float(C1), float(C2))
    return g
