"""Finite group engine: Cayley-table groups, classes, centralizers, unitary irreps.

All elements are 0-based indices; element 0 is always the identity. Groups are
desk scale (order <= 24), so exhaustive loops are the norm and everything is
validated eagerly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "FiniteGroup",
    "ConjugacyClass",
    "Subgroup",
    "UnitaryIrrep",
    "build_group",
    "conjugacy_classes",
    "centralizer",
    "factorize",
    "irreps",
    "exact_irreps",
]

MAX_ORDER = 24

_ATOL = 1e-10


class GroupConstructionError(ValueError):
    """Raised when a group spec or table is ill-formed."""


class FiniteGroup:
    """Finite group given by its Cayley table.

    Attributes
    ----------
    order : group order
    cayley : (order, order) int array, ``cayley[a, b] = a*b``
    inv : (order,) int array of inverses
    identity : always 0
    names : display string per element
    name : display name of the group itself
    """

    def __init__(self, cayley: np.ndarray, names: Sequence[str], name: str = "G",
                 kind: str = "table"):
        cayley = np.asarray(cayley, dtype=np.int64)
        if cayley.ndim != 2 or cayley.shape[0] != cayley.shape[1]:
            raise GroupConstructionError(f"Cayley table must be square, got {cayley.shape}.")
        self.order = int(cayley.shape[0])
        if self.order > MAX_ORDER:
            raise GroupConstructionError(
                f"Group order {self.order} exceeds supported maximum {MAX_ORDER}.")
        self.cayley = cayley
        self.identity = 0
        self.name = name
        self.kind = kind
        self.names = list(names)
        if len(self.names) != self.order:
            raise GroupConstructionError("names length does not match group order.")
        self.inv = self._compute_inverses()
        self._validate()
        self.cayley.setflags(write=False)
        self.inv.setflags(write=False)

    def _compute_inverses(self) -> np.ndarray:
        inv = np.full(self.order, -1, dtype=np.int64)
        for a in range(self.order):
            hits = np.flatnonzero(self.cayley[a] == self.identity)
            if len(hits) != 1:
                raise GroupConstructionError(f"Element {a} has {len(hits)} right inverses.")
            inv[a] = hits[0]
        return inv

    def _validate(self) -> None:
        n = self.order
        if self.cayley.min() < 0 or self.cayley.max() >= n:
            raise GroupConstructionError("Cayley entries out of range.")
        if not np.array_equal(self.cayley[0], np.arange(n)) or \
           not np.array_equal(self.cayley[:, 0], np.arange(n)):
            raise GroupConstructionError("Element 0 is not a two-sided identity.")
        # exhaustive associativity: (ab)c == a(bc), vectorized over all triples
        ab_c = self.cayley[self.cayley, :]           # [a,b,c] -> (ab)c
        a_bc = self.cayley[:, self.cayley]           # [a,b,c] -> a(bc)
        if not np.array_equal(ab_c, a_bc):
            bad = np.argwhere(ab_c != a_bc)[0]
            raise GroupConstructionError(f"Non-associative triple {tuple(bad)}.")
        for a in range(n):
            if self.cayley[self.inv[a], a] != self.identity:
                raise GroupConstructionError(f"Inverse table broken at element {a}.")

    # tiny arithmetic helpers, used everywhere
    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def invert(self, a: int) -> int:
        return int(self.inv[a])

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return int(self.cayley[self.cayley[g, x], self.inv[g]])

    def prod(self, elems: Sequence[int]) -> int:
        out = self.identity
        for x in elems:
            out = int(self.cayley[out, x])
        return out

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugacy class with its chosen transversal.

    ``elements[i] = transversal[i] * representative * transversal[i]^{-1}``,
    elements are sorted ascending, the representative is the minimal element
    and ``transversal[0]`` is the identity.
    """

    group: FiniteGroup
    representative: int
    elements: tuple[int, ...]
    transversal: tuple[int, ...]
    name: str

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, element: int) -> int:
        return self.elements.index(element)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``parent`` together with its own group structure.

    ``members`` are sorted parent indices; ``group`` is the subgroup reindexed
    to 0..|H|-1 (so member ``members[i]`` is subgroup element ``i``).
    """

    parent: FiniteGroup
    members: tuple[int, ...]
    group: FiniteGroup = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.members)

    def to_sub(self, parent_element: int) -> int:
        i = np.searchsorted(self.members, parent_element)
        if i >= len(self.members) or self.members[i] != parent_element:
            raise ValueError(f"Element {parent_element} is not in the subgroup.")
        return int(i)

    def to_parent(self, sub_element: int) -> int:
        return self.members[sub_element]

    def contains(self, parent_element: int) -> bool:
        i = np.searchsorted(self.members, parent_element)
        return i < len(self.members) and self.members[i] == parent_element


@dataclass(frozen=True)
class UnitaryIrrep:
    """Explicit unitary irreducible representation of a finite group.

    ``matrices[g]`` is the dim x dim unitary of element ``g`` (group-local
    indices if the group is a reindexed subgroup).
    """

    group: FiniteGroup
    dim: int
    matrices: np.ndarray  # (order, dim, dim) complex
    name: str

    def character(self, g: int) -> complex:
        return complex(np.trace(self.matrices[g]))

    @property
    def characters(self) -> np.ndarray:
        return np.trace(self.matrices, axis1=1, axis2=2)

    @property
    def is_trivial(self) -> bool:
        return self.dim == 1 and np.allclose(self.matrices, 1.0, atol=_ATOL)


# ---------------------------------------------------------------------------
# construction

def _group_from_elements(elems: list[tuple[int, ...]], names: list[str],
                         name: str, kind: str) -> FiniteGroup:
    """Cayley table for a list of permutations closed under composition."""
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    cayley = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            pq = tuple(p[q[x]] for x in range(len(p)))
            if pq not in index:
                raise GroupConstructionError("Element list is not closed under products.")
            cayley[i, j] = index[pq]
    return FiniteGroup(cayley, names, name=name, kind=kind)


def _perm_cycles_name(p: tuple[int, ...]) -> str:
    """Cycle notation with 1-based points, '()' for the identity."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) if parts else "e"


def _closure(generators: list[tuple[int, ...]], npoints: int) -> list[tuple[int, ...]]:
    identity = tuple(range(npoints))
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for gen in generators:
                q = tuple(gen[p[x]] for x in range(npoints))
                if q not in seen:
                    seen.add(q)
                    elems.append(q)
                    nxt.append(q)
                    if len(elems) > MAX_ORDER:
                        raise GroupConstructionError(
                            f"Generated group exceeds maximum order {MAX_ORDER}.")
        frontier = nxt
    return elems


def _cyclic(n: int) -> FiniteGroup:
    cayley = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    names = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return FiniteGroup(cayley, names, name=f"Z{n}", kind="cyclic")


def _symmetric(n: int) -> FiniteGroup:
    if n > 4:
        raise GroupConstructionError(f"S{n} not supported (order {math.factorial(n)} > {MAX_ORDER}).")
    from itertools import permutations
    elems = sorted(permutations(range(max(n, 1))))
    names = [_perm_cycles_name(p) for p in elems]
    return _group_from_elements(list(elems), names, name=f"S{n}", kind="symmetric")


def _dihedral(n: int) -> FiniteGroup:
    if 2 * n > MAX_ORDER:
        raise GroupConstructionError(f"D{n} has order {2*n} > {MAX_ORDER}.")
    if n < 3:
        raise GroupConstructionError("Dihedral preset needs n >= 3.")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    # explicit ordering e, r, .., r^{n-1}, s, rs, .., r^{n-1}s
    def power(p, k):
        q = tuple(range(n))
        for _ in range(k):
            q = tuple(p[q[x]] for x in range(n))
        return q
    elems, names = [], []
    for k in range(n):
        elems.append(power(rot, k))
        names.append("e" if k == 0 else ("r" if k == 1 else f"r{k}"))
    for k in range(n):
        rk = elems[k]
        elems.append(tuple(rk[ref[x]] for x in range(n)))
        names.append("s" if k == 0 else ("rs" if k == 1 else f"r{k}s"))
    return _group_from_elements(elems, names, name=f"D{n}", kind="dihedral")


def _quaternion8() -> FiniteGroup:
    # elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign) words
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # multiplication on units: table over axis symbols with signs
    base = {"1": 0, "i": 1, "j": 2, "k": 3}
    sign = [1, -1, 1, -1, 1, -1, 1, -1]
    axis = [0, 0, 1, 1, 2, 2, 3, 3]
    unit_mul = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    def enc(ax, sg):
        return 2 * [0, 1, 2, 3].index(ax) + (0 if sg > 0 else 1)
    cayley = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            ax, sg = unit_mul[(axis[a], axis[b])]
            cayley[a, b] = enc(ax, sg * sign[a] * sign[b])
    return FiniteGroup(cayley, names, name="Q8", kind="quaternion")


_PRESET_RE = re.compile(r"^([ZSDQ])(\d+)$")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_permutation_lines(text: str) -> FiniteGroup:
    """Group generated by permutations in cycle notation, one per line."""
    gens = []
    maxpoint = 0
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        cycles = _CYCLE_RE.findall(line)
        if not cycles or _CYCLE_RE.sub("", line).strip():
            raise GroupConstructionError(f"Cannot parse cycle notation {line!r}.")
        parsed = []
        for cyc in cycles:
            points = [int(tok) for tok in cyc.split()]
            if any(p < 1 for p in points) or len(set(points)) != len(points):
                raise GroupConstructionError(f"Bad cycle ({cyc}).")
            parsed.append(points)
            maxpoint = max(maxpoint, max(points, default=0))
        gens.append(parsed)
    if maxpoint > 8:
        raise GroupConstructionError(f"Permutations act on {maxpoint} > 8 points.")
    if not gens:
        raise GroupConstructionError("No generators given.")
    perms = []
    for parsed in gens:
        p = list(range(maxpoint))
        for cyc in parsed:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                p[a - 1] = b - 1
        perms.append(tuple(p))
    elems = _closure(perms, maxpoint)
    # identity-first BFS order is deterministic for fixed generator input
    names = [_perm_cycles_name(p) for p in elems]
    return _group_from_elements(elems, names, name="perm-group", kind="permutation")


def build_group(spec: str) -> FiniteGroup:
    """Build a group from a preset name (``Z<n>``, ``S<n>``, ``D<n>``, ``Q8``)
    or from permutation generators in cycle notation (one per line)."""
    spec = spec.strip()
    m = _PRESET_RE.match(spec)
    if m:
        family, n = m.group(1), int(m.group(2))
        if family == "Z":
            if n < 1 or n > MAX_ORDER:
                raise GroupConstructionError(f"Z{n} outside supported range.")
            return _cyclic(n)
        if family == "S":
            if n < 1:
                raise GroupConstructionError("S<n> needs n >= 1.")
            return _symmetric(n)
        if family == "D":
            return _dihedral(n)
        if family == "Q":
            if n != 8:
                raise GroupConstructionError("Only the quaternion group Q8 is supported.")
            return _quaternion8()
    if "(" in spec:
        return _parse_permutation_lines(spec)
    raise GroupConstructionError(f"Unknown group spec {spec!r}.")


# ---------------------------------------------------------------------------
# classes, centralizers, factorization

_CYCLE_TYPE_NAMES = {
    (2,): "transposition",
    (2, 2): "double-transposition",
    (3,): "3-cycle",
    (4,): "4-cycle",
}


def _class_display_name(G: FiniteGroup, rep: int, elements: tuple[int, ...]) -> str:
    if G.kind in ("symmetric", "permutation"):
        name = G.names[rep]
        if name == "e":
            return "e"
        lens = tuple(sorted(len(c.split()) for c in _CYCLE_RE.findall(name)))
        if lens in _CYCLE_TYPE_NAMES:
            return _CYCLE_TYPE_NAMES[lens]
    return G.names[rep]


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """All conjugacy classes, ordered by minimal element; deterministic
    transversal with the identity conjugating the representative to itself."""
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for r in range(G.order):
        if seen[r]:
            continue
        orbit = sorted({G.conj(g, r) for g in range(G.order)})
        for x in orbit:
            seen[x] = True
        transversal = []
        for c in orbit:
            q = next(g for g in range(G.order) if G.conj(g, r) == c)
            transversal.append(q)
        classes.append(ConjugacyClass(
            group=G, representative=r, elements=tuple(orbit),
            transversal=tuple(transversal),
            name=_class_display_name(G, r, tuple(orbit))))
    return classes


def centralizer(G: FiniteGroup, r: int) -> Subgroup:
    """Subgroup of all elements commuting with ``r``."""
    members = tuple(int(g) for g in range(G.order)
                    if G.cayley[g, r] == G.cayley[r, g])
    idx = {m: i for i, m in enumerate(members)}
    n = len(members)
    cayley = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            p = G.mul(a, b)
            if p not in idx:
                raise GroupConstructionError("Centralizer is not closed (table bug).")
            cayley[i, j] = idx[p]
    sub = FiniteGroup(cayley, [G.names[m] for m in members],
                      name=f"Z_{G.name}({G.names[r]})", kind="subgroup")
    return Subgroup(parent=G, members=members, group=sub)


def factorize(G: FiniteGroup, cls: ConjugacyClass, g: int) -> tuple[int, int]:
    """Unique factorization ``g = q_i * n`` with ``n`` in the centralizer of
    the class representative; returns ``(i, n)`` (0-based class position)."""
    r = cls.representative
    c = G.conj(g, r)
    i = cls.index_of(c)
    n = G.mul(G.invert(cls.transversal[i]), g)
    return i, n


# ---------------------------------------------------------------------------
# irreducible representations

def _class_algebra_characters(G: FiniteGroup, classes: list[ConjugacyClass]) -> np.ndarray:
    """Character table (rows = irreps, cols = classes) via numeric
    diagonalization of the class-algebra structure constants."""
    k = len(classes)
    class_of = np.empty(G.order, dtype=np.int64)
    for ci, cls in enumerate(classes):
        for x in cls.elements:
            class_of[x] = ci
    sizes = np.array([cls.size for cls in classes], dtype=np.int64)
    A = np.zeros((k, k, k))
    for i, Ci in enumerate(classes):
        for j, Cj in enumerate(classes):
            for x in Ci.elements:
                prods = class_of[G.cayley[x, list(Cj.elements)]]
                np.add.at(A[i, j], prods, 1.0)
    A /= sizes[None, None, :]  # a_{ijm} counts pairs landing on a fixed element of C_m

    ident_class = class_of[G.identity]
    rng = np.random.default_rng(20240601)
    for _ in range(16):
        t = rng.standard_normal(k)
        T = np.tensordot(t, A, axes=(0, 0))
        _, vecs = np.linalg.eig(T)
        omegas = []
        ok = True
        for col in range(k):
            v = vecs[:, col]
            if abs(v[ident_class]) < 1e-12:
                ok = False
                break
            v = v / v[ident_class]
            # must be a simultaneous eigenvector of every class matrix
            for i in range(k):
                if np.linalg.norm(A[i] @ v - v[i] * v) > 1e-8 * max(1.0, np.linalg.norm(v)):
                    ok = False
                    break
            if not ok:
                break
            omegas.append(v)
        if not ok:
            continue
        table = []
        for v in omegas:
            denom = np.sum(np.abs(v) ** 2 / sizes)
            d = np.sqrt(G.order / denom)
            d_int = int(round(d.real))
            if abs(d - d_int) > 1e-6 or d_int < 1:
                ok = False
                break
            chi = d_int * v / sizes
            table.append(chi)
        if not ok:
            continue
        table = np.array(table)
        # dedupe (defensive; eigenvectors of distinct irreps are distinct)
        if len({tuple(np.round(row, 6)) for row in table}) != k:
            continue
        return _sorted_character_table(table, ident_class)
    raise RuntimeError(
        f"Class-algebra diagonalization failed to converge for {G.name}.")


def _sorted_character_table(table: np.ndarray, ident_class: int) -> np.ndarray:
    def key(row):
        d = round(row[ident_class].real)
        vals = tuple((round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0) for z in row)
        return (d, vals)
    order = sorted(range(len(table)), key=lambda i: key(table[i]))
    # trivial irrep (all ones) first
    order.sort(key=lambda i: 0 if np.allclose(table[i], 1.0, atol=1e-8) else 1)
    return table[order]


def _isotypic_matrices(G: FiniteGroup, chi_elem: np.ndarray, d: int) -> np.ndarray:
    """Explicit unitaries for one irrep: project the left regular
    representation onto the isotypic block, then split off a single copy."""
    n = G.order
    P = np.zeros((n, n), dtype=complex)
    ar = np.arange(n)
    for g in range(n):
        P[G.cayley[g, :], ar] += (d / n) * np.conj(chi_elem[g])
    evals, evecs = np.linalg.eigh(P)
    W = evecs[:, evals > 0.5]
    if W.shape[1] != d * d:
        raise RuntimeError(
            f"Isotypic block for a dim-{d} irrep of {G.name} has rank {W.shape[1]}, "
            f"expected {d*d}.")
    # restricted representation, d copies of the target irrep
    R = np.empty((n, d * d, d * d), dtype=complex)
    for g in range(n):
        L = np.zeros((n, n))
        L[G.cayley[g, :], ar] = 1.0
        R[g] = W.conj().T @ L @ W
    rng = np.random.default_rng(771 + d)
    for _ in range(8):
        Y = rng.standard_normal((d * d, d * d)) + 1j * rng.standard_normal((d * d, d * d))
        Y = Y + Y.conj().T
        X = sum(R[g] @ Y @ R[g].conj().T for g in range(n)) / n
        xvals, xvecs = np.linalg.eigh(X)
        # group eigenvalues; a generic commutant element has d eigenvalues of
        # multiplicity d each (copies of the irrep)
        groups = []
        start = 0
        for i in range(1, d * d + 1):
            if i == d * d or xvals[i] - xvals[i - 1] > 1e-6:
                groups.append((start, i))
                start = i
        block = next(((a, b) for a, b in groups if b - a == d), None)
        if block is None:
            continue
        B = xvecs[:, block[0]:block[1]]
        B, _ = np.linalg.qr(B)  # Gram-Schmidt orthonormalization
        mats = np.einsum("ij,gjk,kl->gil", B.conj().T, R, B)
        if np.max(np.abs(np.einsum("gij,gkj->gik", mats, mats.conj())
                         - np.eye(d))) < 1e-9:
            return mats
    raise RuntimeError(
        f"Failed to split a multiplicity-free copy of a dim-{d} irrep of {G.name}.")


def _irrep_name(dim: int, index_within_dim: int, trivial: bool) -> str:
    if trivial:
        return "triv"
    return f"{dim}d-{index_within_dim}"


def irreps(H: FiniteGroup) -> list[UnitaryIrrep]:
    """Complete list of unitary irreps up to equivalence, trivial first, then
    sorted by (dimension, character values)."""
    if H.order > MAX_ORDER:
        raise ValueError(f"irreps supports order <= {MAX_ORDER}, got {H.order}.")
    classes = conjugacy_classes(H)
    class_of = np.empty(H.order, dtype=np.int64)
    for ci, cls in enumerate(classes):
        for x in cls.elements:
            class_of[x] = ci
    table = _class_algebra_characters(H, classes)
    ident_class = class_of[H.identity]
    out: list[UnitaryIrrep] = []
    per_dim_count: dict[int, int] = {}
    for row in table:
        chi_elem = row[class_of]
        d = int(round(row[ident_class].real))
        if d == 1:
            mats = chi_elem.reshape(H.order, 1, 1).astype(complex)
        else:
            mats = _isotypic_matrices(H, chi_elem, d)
        trivial = bool(np.allclose(chi_elem, 1.0, atol=1e-8))
        idx = per_dim_count.get(d, 0)
        per_dim_count[d] = idx + 1
        rep = UnitaryIrrep(group=H, dim=d, matrices=mats,
                           name=_irrep_name(d, idx, trivial))
        _check_irrep(rep)
        out.append(rep)
    if sum(r.dim ** 2 for r in out) != H.order:
        raise RuntimeError(f"Irrep dimensions inconsistent for {H.name}.")
    return out


def _check_irrep(rep: UnitaryIrrep) -> None:
    G, mats = rep.group, rep.matrices
    eye = np.eye(rep.dim)
    for g in range(G.order):
        if np.linalg.norm(mats[g] @ mats[g].conj().T - eye) > _ATOL:
            raise RuntimeError(f"Irrep {rep.name} of {G.name}: matrix {g} not unitary.")
    for g in range(G.order):
        gh = mats[g] @ mats
        target = mats[G.cayley[g]]
        if np.max(np.abs(gh - target)) > _ATOL:
            raise RuntimeError(f"Irrep {rep.name} of {G.name}: homomorphism fails at {g}.")
    norm = np.sum(np.abs(rep.characters) ** 2) / G.order
    if abs(norm - 1.0) > 1e-8:
        raise RuntimeError(f"Irrep {rep.name} of {G.name} is not irreducible (norm {norm}).")


# ---------------------------------------------------------------------------
# curated exact irreps (independent oracles for the numeric path)

def exact_irreps(G: FiniteGroup) -> list[UnitaryIrrep] | None:
    """Hand-written irreps for Z_n, S3 and Z2; None for other groups."""
    if G.kind == "cyclic":
        n = G.order
        out = []
        for k in range(n):
            m = np.exp(2j * np.pi * k * np.arange(n) / n).reshape(n, 1, 1)
            out.append(UnitaryIrrep(G, 1, m.astype(complex),
                                    "triv" if k == 0 else f"1d-{k - 1}"))
        return out
    if G.name == "S3" and G.kind == "symmetric":
        trans = G.names.index("(1 2)")
        cyc = G.names.index("(1 2 3)")
        # 2-dim standard rep: rotation for the 3-cycle, reflection for (1 2)
        rot = np.array([[np.cos(2 * np.pi / 3), -np.sin(2 * np.pi / 3)],
                        [np.sin(2 * np.pi / 3), np.cos(2 * np.pi / 3)]])
        ref = np.array([[1.0, 0.0], [0.0, -1.0]])
        gen = {trans: ref, cyc: rot}
        mats2 = _generate_rep_matrices(G, gen, 2)
        sgn = np.array([_perm_sign(G.names[g]) for g in range(6)], dtype=complex)
        out = [
            UnitaryIrrep(G, 1, np.ones((6, 1, 1), dtype=complex), "triv"),
            UnitaryIrrep(G, 1, sgn.reshape(6, 1, 1), "sign"),
            UnitaryIrrep(G, 2, mats2.astype(complex), "2d-0"),
        ]
        return out
    return None


def _perm_sign(cycname: str) -> float:
    if cycname == "e":
        return 1.0
    sign = 1.0
    for cyc in _CYCLE_RE.findall(cycname):
        sign *= (-1.0) ** (len(cyc.split()) - 1)
    return sign


def _generate_rep_matrices(G: FiniteGroup, gen_mats: dict[int, np.ndarray],
                           dim: int) -> np.ndarray:
    """Extend matrices on generators to the whole group by BFS words."""
    mats: dict[int, np.ndarray] = {G.identity: np.eye(dim)}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g, M in gen_mats.items():
                b = G.mul(g, a)
                if b not in mats:
                    mats[b] = M @ mats[a]
                    nxt.append(b)
        frontier = nxt
    if len(mats) != G.order:
        raise ValueError("Generators do not generate the group.")
    return np.stack([mats[g] for g in range(G.order)])
