"""Finite-torus realization: edge configuration space, star and plaquette
operators, Hamiltonian, ground states.

Geometry conventions (all arithmetic is periodic):
  - vertices and faces are indexed y*Lx + x; the face (x, y) has its
    south-west corner at vertex (x, y)
  - edge 2*(y*Lx + x) + d with d = 0 pointing east from (x, y) and d = 1
    pointing north from (x, y)
  - configurations are flat mixed-radix indices over |G|^E with the digit of
    edge e at stride |G|^(E-1-e)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import backend
from .groups import FiniteGroup

__all__ = [
    "MAX_CONFIGURATIONS",
    "MemoryGuardError",
    "TorusLattice",
    "Site",
    "StateVector",
    "LocalOperator",
    "EdgeMatrixOperator",
    "IdentityOperator",
    "apply_star",
    "apply_plaquette",
    "apply_star_average",
    "apply_plaquette_projector",
    "apply_projectors",
    "hamiltonian_apply",
    "ground_state",
    "ground_space_dim",
    "translate",
    "random_state",
    "random_local_observable",
    "dump_state",
    "load_state",
]

MAX_CONFIGURATIONS = 2 ** 26
STATE_MAGIC = b"QDBLSTV1"


class MemoryGuardError(RuntimeError):
    """Raised when |G|^E exceeds the configuration budget."""

    def __init__(self, required: int, limit: int = MAX_CONFIGURATIONS):
        self.required = required
        self.limit = limit
        super().__init__(
            f"state vector needs {required} configurations, budget is {limit}")


@dataclass(frozen=True)
class Site:
    """A vertex together with an adjacent face."""

    vertex: int
    face: int


class TorusLattice:
    """Square-lattice torus with oriented edges (east/north)."""

    def __init__(self, Lx: int, Ly: int):
        if Lx < 2 or Ly < 2:
            raise ValueError(f"Torus must be at least 2x2, got {Lx}x{Ly}.")
        self.Lx, self.Ly = Lx, Ly
        self.num_vertices = Lx * Ly
        self.num_faces = Lx * Ly
        self.num_edges = 2 * Lx * Ly

    # -- indexing ------------------------------------------------------
    def vertex(self, x: int, y: int) -> int:
        return (y % self.Ly) * self.Lx + (x % self.Lx)

    def face(self, x: int, y: int) -> int:
        return (y % self.Ly) * self.Lx + (x % self.Lx)

    def edge(self, x: int, y: int, d: int) -> int:
        return 2 * ((y % self.Ly) * self.Lx + (x % self.Lx)) + d

    def vertex_xy(self, v: int) -> tuple[int, int]:
        return v % self.Lx, v // self.Lx

    def edge_xyd(self, e: int) -> tuple[int, int, int]:
        d = e % 2
        cell = e // 2
        return cell % self.Lx, cell // self.Lx, d

    # -- incidence -----------------------------------------------------
    def edge_endpoints(self, e: int) -> tuple[int, int]:
        """(tail, head) with east edges pointing right, north edges up."""
        x, y, d = self.edge_xyd(e)
        if d == 0:
            return self.vertex(x, y), self.vertex(x + 1, y)
        return self.vertex(x, y), self.vertex(x, y + 1)

    def edge_flanks(self, e: int) -> tuple[int, int]:
        """(left face, right face) looking along the edge orientation."""
        x, y, d = self.edge_xyd(e)
        if d == 0:
            return self.face(x, y), self.face(x, y - 1)
        return self.face(x - 1, y), self.face(x, y)

    def star_edges(self, v: int) -> list[tuple[int, bool]]:
        """The four edges at a vertex as (edge, points_away_from_v)."""
        x, y = self.vertex_xy(v)
        return [
            (self.edge(x, y, 0), True),        # east, outgoing
            (self.edge(x, y, 1), True),        # north, outgoing
            (self.edge(x - 1, y, 0), False),   # west, incoming
            (self.edge(x, y - 1, 1), False),   # south, incoming
        ]

    def face_corners(self, f: int) -> list[int]:
        """Corners counter-clockwise starting at the south-west one."""
        x, y = f % self.Lx, f // self.Lx
        return [self.vertex(x, y), self.vertex(x + 1, y),
                self.vertex(x + 1, y + 1), self.vertex(x, y + 1)]

    def face_boundary_ccw(self, f: int) -> list[tuple[int, bool]]:
        """Boundary edges counter-clockwise from the SW corner as
        (edge, invert); invert means the edge opposes the traversal."""
        x, y = f % self.Lx, f // self.Lx
        return [
            (self.edge(x, y, 0), False),       # bottom, along
            (self.edge(x + 1, y, 1), False),   # right, along
            (self.edge(x, y + 1, 0), True),    # top, against
            (self.edge(x, y, 1), True),        # left, against
        ]

    def boundary_from_site(self, s: Site) -> list[tuple[int, bool]]:
        """Face boundary counter-clockwise starting at the site's vertex."""
        corners = self.face_corners(s.face)
        if s.vertex not in corners:
            raise ValueError(f"{s} is not a site: vertex not on the face.")
        k = corners.index(s.vertex)
        edges = self.face_boundary_ccw(s.face)
        return edges[k:] + edges[:k]

    def faces_at_vertex(self, v: int) -> list[int]:
        x, y = self.vertex_xy(v)
        return [self.face(x, y), self.face(x - 1, y),
                self.face(x - 1, y - 1), self.face(x, y - 1)]

    def sites(self) -> list[Site]:
        return [Site(v, f) for v in range(self.num_vertices)
                for f in self.faces_at_vertex(v)]

    def site(self, v: int, f: int) -> Site:
        if f not in self.faces_at_vertex(v):
            raise ValueError(f"Face {f} is not adjacent to vertex {v}.")
        return Site(v, f)

    def __repr__(self) -> str:
        return f"TorusLattice({self.Lx}x{self.Ly})"


class StateVector:
    """Dense amplitudes over edge configurations G^E, flat mixed-radix."""

    def __init__(self, lattice: TorusLattice, group: FiniteGroup,
                 data: np.ndarray | None = None):
        self.lattice = lattice
        self.group = group
        self.size = group.order ** lattice.num_edges
        if self.size > MAX_CONFIGURATIONS:
            raise MemoryGuardError(self.size)
        self.strides = (group.order ** np.arange(
            lattice.num_edges - 1, -1, -1)).astype(np.int64)
        if data is None:
            data = np.zeros(self.size, dtype=np.complex128)
        if data.shape != (self.size,):
            raise ValueError(f"Amplitude array must have shape ({self.size},).")
        self.data = data

    # -- constructors ----------------------------------------------------
    @classmethod
    def basis_state(cls, lattice: TorusLattice, group: FiniteGroup,
                    config: Sequence[int] | None = None) -> "StateVector":
        psi = cls(lattice, group)
        if config is None:
            idx = 0  # all edges in the identity configuration
        else:
            idx = int(np.dot(np.asarray(config, dtype=np.int64), psi.strides))
        psi.data[idx] = 1.0
        return psi

    def copy(self) -> "StateVector":
        return StateVector(self.lattice, self.group, self.data.copy())

    def like(self, data: np.ndarray) -> "StateVector":
        return StateVector(self.lattice, self.group, data)

    # -- linear algebra ---------------------------------------------------
    def dot(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.data, other.data))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.data))

    def normalized(self) -> "StateVector":
        n = self.norm
        if n == 0:
            raise ValueError("Cannot normalize the zero vector.")
        return self.like(self.data / n)

    def __add__(self, other: "StateVector") -> "StateVector":
        return self.like(self.data + other.data)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self.like(self.data - other.data)

    def __mul__(self, scalar: complex) -> "StateVector":
        return self.like(self.data * scalar)

    __rmul__ = __mul__

    def expectation(self, op: "LocalOperator") -> complex:
        return self.dot(op.apply(self))

    def edge_digits(self, edge: int) -> np.ndarray:
        """Group digit of one edge for every configuration (test helper)."""
        return (np.arange(self.size) // self.strides[edge]) % self.group.order


def random_state(lattice: TorusLattice, group: FiniteGroup, seed: int = 0) -> StateVector:
    rng = np.random.default_rng(seed)
    size = group.order ** lattice.num_edges
    if size > MAX_CONFIGURATIONS:
        raise MemoryGuardError(size)
    data = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    psi = StateVector(lattice, group, data)
    return psi.normalized()


# ---------------------------------------------------------------------------
# local operators

class LocalOperator:
    """Matrix-free operator with a declared edge support."""

    support: frozenset[int] = frozenset()

    def apply(self, psi: StateVector) -> StateVector:
        raise NotImplementedError

    def dagger(self) -> "LocalOperator":
        raise NotImplementedError

    def __matmul__(self, other: "LocalOperator") -> "LocalOperator":
        return ProductOperator((self, other))

    def __add__(self, other: "LocalOperator") -> "LocalOperator":
        return SumOperator((self, other), (1.0, 1.0))

    def __sub__(self, other: "LocalOperator") -> "LocalOperator":
        return SumOperator((self, other), (1.0, -1.0))

    def __mul__(self, scalar: complex) -> "LocalOperator":
        return SumOperator((self,), (scalar,))

    __rmul__ = __mul__


class IdentityOperator(LocalOperator):
    def apply(self, psi: StateVector) -> StateVector:
        return psi.copy()

    def dagger(self) -> "IdentityOperator":
        return self


class ProductOperator(LocalOperator):
    """Lazy composition; factors applied right to left."""

    def __init__(self, factors: tuple[LocalOperator, ...]):
        self.factors = factors
        self.support = frozenset().union(*(f.support for f in factors))

    def apply(self, psi: StateVector) -> StateVector:
        for f in reversed(self.factors):
            psi = f.apply(psi)
        return psi

    def dagger(self) -> "ProductOperator":
        return ProductOperator(tuple(f.dagger() for f in reversed(self.factors)))


class SumOperator(LocalOperator):
    def __init__(self, terms: tuple[LocalOperator, ...], coeffs: tuple[complex, ...]):
        self.terms = terms
        self.coeffs = coeffs
        self.support = frozenset().union(*(t.support for t in terms))

    def apply(self, psi: StateVector) -> StateVector:
        out = np.zeros_like(psi.data)
        for c, t in zip(self.coeffs, self.terms):
            out += c * t.apply(psi).data
        return psi.like(out)

    def dagger(self) -> "SumOperator":
        return SumOperator(tuple(t.dagger() for t in self.terms),
                           tuple(np.conj(c) for c in self.coeffs))


class EdgeMatrixOperator(LocalOperator):
    """Dense matrix on an ordered tuple of edges, identity elsewhere."""

    def __init__(self, edges: Sequence[int], matrix: np.ndarray, group_order: int):
        self.edges = tuple(edges)
        self.support = frozenset(self.edges)
        self.n = group_order
        k = len(self.edges)
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (self.n ** k, self.n ** k):
            raise ValueError(f"Matrix must be {self.n**k} x {self.n**k}.")
        self.matrix = matrix

    def apply(self, psi: StateVector) -> StateVector:
        E = psi.lattice.num_edges
        k = len(self.edges)
        tensor = psi.data.reshape((self.n,) * E)
        M = self.matrix.reshape((self.n,) * (2 * k))
        out = np.tensordot(M, tensor, axes=(tuple(range(k, 2 * k)), self.edges))
        out = np.moveaxis(out, tuple(range(k)), self.edges)
        return psi.like(np.ascontiguousarray(out).reshape(-1))

    def dagger(self) -> "EdgeMatrixOperator":
        return EdgeMatrixOperator(self.edges, self.matrix.conj().T, self.n)


def random_local_observable(lattice: TorusLattice, group: FiniteGroup,
                            edges: Sequence[int], seed: int = 0,
                            hermitian: bool = False) -> EdgeMatrixOperator:
    rng = np.random.default_rng(seed)
    dim = group.order ** len(edges)
    M = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    if hermitian:
        M = M + M.conj().T
    return EdgeMatrixOperator(edges, M / np.sqrt(dim), group.order)


# ---------------------------------------------------------------------------
# star and plaquette operators

def _star_tables(psi: StateVector, v: int, g: int):
    G = psi.group
    strides, perms = [], []
    for e, outgoing in psi.lattice.star_edges(v):
        strides.append(psi.strides[e])
        if outgoing:
            perms.append(G.cayley[g, :])            # z -> g z
        else:
            perms.append(G.cayley[:, G.invert(g)])  # z -> z g^-1
    return (np.array(strides, dtype=np.int64),
            np.ascontiguousarray(np.stack(perms).astype(np.int64)))


def apply_star(s: Site, g: int, psi: StateVector) -> StateVector:
    """A_s^g: left-multiply outgoing edges by g, right-divide incoming ones."""
    out = np.empty_like(psi.data)
    strides, perms = _star_tables(psi, s.vertex, g)
    backend.apply_edge_perms(psi.data, out, strides, perms, psi.group.order)
    return psi.like(out)


def apply_plaquette(s: Site, h: int, psi: StateVector) -> StateVector:
    """B_s^h: project onto flux h around the face, counter-clockwise from
    the site's vertex."""
    boundary = psi.lattice.boundary_from_site(s)
    strides = np.array([psi.strides[e] for e, _ in boundary], dtype=np.int64)
    invert = np.array([inv for _, inv in boundary], dtype=np.int8)
    out = np.empty_like(psi.data)
    backend.plaquette_project(psi.data, out, strides, invert, h,
                              psi.group.cayley, psi.group.inv, psi.group.order)
    return psi.like(out)


def apply_star_average(s: Site, psi: StateVector) -> StateVector:
    """A_s = |G|^-1 sum_g A_s^g."""
    total = np.zeros_like(psi.data)
    for g in psi.group.elements():
        total += apply_star(s, g, psi).data
    return psi.like(total / psi.group.order)


def apply_plaquette_projector(s: Site, psi: StateVector) -> StateVector:
    """B_s = B_s^e."""
    return apply_plaquette(s, psi.group.identity, psi)


def apply_projectors(s: Site, psi: StateVector) -> StateVector:
    """A_s B_s (the two commute at a site)."""
    return apply_star_average(s, apply_plaquette_projector(s, psi))


class _StarOp(LocalOperator):
    def __init__(self, lattice, group, s, g):
        self.lattice, self.group, self.s, self.g = lattice, group, s, g
        self.support = frozenset(e for e, _ in lattice.star_edges(s.vertex))

    def apply(self, psi):
        return apply_star(self.s, self.g, psi)

    def dagger(self):
        # (A_s^g)^* = A_s^{g^-1}
        return _StarOp(self.lattice, self.group, self.s, self.group.invert(self.g))


def star_operator(lattice: TorusLattice, group: FiniteGroup, s: Site, g: int) -> LocalOperator:
    return _StarOp(lattice, group, s, g)


class _PlaquetteOp(LocalOperator):
    def __init__(self, lattice, group, s, h):
        self.lattice, self.group, self.s, self.h = lattice, group, s, h
        self.support = frozenset(e for e, _ in lattice.boundary_from_site(s))

    def apply(self, psi):
        return apply_plaquette(self.s, self.h, psi)

    def dagger(self):
        return self  # projector


def plaquette_operator(lattice: TorusLattice, group: FiniteGroup, s: Site, h: int) -> LocalOperator:
    return _PlaquetteOp(lattice, group, s, h)


# ---------------------------------------------------------------------------
# Hamiltonian and ground states

def hamiltonian_apply(psi: StateVector) -> StateVector:
    """H = -sum_v A_v - sum_f B_f, applied matrix-free."""
    lat = psi.lattice
    total = np.zeros_like(psi.data)
    for v in range(lat.num_vertices):
        s = Site(v, lat.faces_at_vertex(v)[0])
        total -= apply_star_average(s, psi).data
    for f in range(lat.num_faces):
        s = Site(lat.face_corners(f)[0], f)
        total -= apply_plaquette_projector(s, psi).data
    return psi.like(total)


def _project_ground(psi: StateVector) -> StateVector:
    lat = psi.lattice
    for f in range(lat.num_faces):
        psi = apply_plaquette_projector(Site(lat.face_corners(f)[0], f), psi)
    for v in range(lat.num_vertices):
        psi = apply_star_average(Site(v, lat.faces_at_vertex(v)[0]), psi)
    return psi


def ground_state(lattice: TorusLattice, group: FiniteGroup) -> StateVector:
    """Normalized projection of the all-identity configuration, which already
    satisfies every plaquette constraint."""
    psi = StateVector.basis_state(lattice, group)
    psi = _project_ground(psi)
    if psi.norm < 1e-14:
        raise RuntimeError("Ground-state projection annihilated the seed state "
                           "(operator convention bug).")
    return psi.normalized()


def ground_space_dim(lattice: TorusLattice, group: FiniteGroup, seed: int = 0) -> int:
    """Rank of the joint +1 eigenprojector of all A_v, B_f, from the Gram
    matrix of projected random states (grown until the rank stops saturating)."""
    vecs: list[np.ndarray] = []
    k = 0
    while True:
        batch = 8 if not vecs else 4
        for _ in range(batch):
            psi = random_state(lattice, group, seed=seed + 7 * k + 1)
            vecs.append(_project_ground(psi).data)
            k += 1
        gram = np.array([[np.vdot(a, b) for b in vecs] for a in vecs])
        evals = np.linalg.eigvalsh(gram)
        rank = int(np.sum(evals > 1e-8 * max(evals.max(), 1e-30)))
        if rank < len(vecs):
            return rank
        if len(vecs) > 128:
            raise RuntimeError("Ground space dimension did not stabilize.")


def translate(psi: StateVector, dx: int, dy: int) -> StateVector:
    """Lattice translation acting on configurations (test utility)."""
    lat, n = psi.lattice, psi.group.order
    idx = np.arange(psi.size, dtype=np.int64)
    new_idx = np.zeros_like(idx)
    for e in range(lat.num_edges):
        x, y, d = lat.edge_xyd(e)
        target = lat.edge(x + dx, y + dy, d)
        digits = (idx // psi.strides[e]) % n
        new_idx += digits * psi.strides[target]
    out = np.empty_like(psi.data)
    out[new_idx] = psi.data
    return psi.like(out)


# ---------------------------------------------------------------------------
# persistence

def dump_state(psi: StateVector, path: str) -> None:
    """Raw little-endian complex64 dump with an 8-byte magic header."""
    with open(path, "wb") as fh:
        fh.write(STATE_MAGIC)
        fh.write(psi.data.astype("<c8").tobytes())


def load_state(path: str, lattice: TorusLattice, group: FiniteGroup) -> StateVector:
    with open(path, "rb") as fh:
        magic = fh.read(8)
        if magic != STATE_MAGIC:
            raise ValueError(f"Bad magic {magic!r}, expected {STATE_MAGIC!r}.")
        data = np.frombuffer(fh.read(), dtype="<c8").astype(np.complex128)
    psi = StateVector(lattice, group)
    if data.shape != (psi.size,):
        raise ValueError(f"State has {data.shape[0]} amplitudes, lattice needs {psi.size}.")
    psi.data = data
    return psi
