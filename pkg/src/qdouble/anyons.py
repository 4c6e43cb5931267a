"""Representation theory of the quantum double D(G).

Anyons are pairs (C, rho) of a conjugacy class and a unitary irrep of the
centralizer of its representative.  D(G) acts on basis elements (delta_h (x) g);
everything downstream (fusion, braiding, S/T matrices) is computed from the
explicit unitary actions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .groups import (
    ConjugacyClass,
    FiniteGroup,
    Subgroup,
    UnitaryIrrep,
    centralizer,
    conjugacy_classes,
    irreps,
)

__all__ = [
    "AnyonLabel",
    "DoubleIrrep",
    "FusionTable",
    "SMatrix",
    "TMatrix",
    "AnyonModel",
    "anyon_model",
    "enumerate_anyons",
    "double_irrep",
    "fusion_table",
    "r_braiding",
    "monodromy",
    "s_matrix",
    "t_matrix",
    "verlinde_check",
    "modularity_check",
    "export_model",
]


@dataclass(frozen=True)
class AnyonLabel:
    """One anyon: conjugacy class plus centralizer irrep."""

    group: FiniteGroup = field(repr=False)
    class_index: int
    irrep_index: int
    cls: ConjugacyClass = field(repr=False)
    zg: Subgroup = field(repr=False)
    rho: UnitaryIrrep = field(repr=False)
    name: str

    @property
    def dim(self) -> int:
        return self.cls.size * self.rho.dim

    @property
    def is_vacuum(self) -> bool:
        return self.cls.size == 1 and self.cls.representative == self.group.identity \
            and self.rho.is_trivial

    def rho_parent(self, parent_element: int) -> np.ndarray:
        """rho evaluated on a parent-group element (must centralize the rep)."""
        return self.rho.matrices[self.zg.to_sub(parent_element)]

    def twist(self) -> complex:
        """Ribbon eigenvalue chi_rho(r) / dim(rho)."""
        r_sub = self.zg.to_sub(self.cls.representative)
        return complex(self.rho.character(r_sub)) / self.rho.dim


class DoubleIrrep:
    """Explicit unitary action of every D(G) basis element (delta_h (x) g)
    on span{|c_i> (x) |v_j>}.

    (delta_h (x) g) |c_i, v> = [h == g c_i g^-1] |g c_i g^-1> (x) rho(q_i'^-1 g q_i) v
    """

    def __init__(self, label: AnyonLabel):
        self.label = label
        G = label.group
        cls = label.cls
        drho = label.rho.dim
        self.dim = cls.size * drho
        n = G.order
        action = np.zeros((n, n, self.dim, self.dim), dtype=complex)
        for g in range(n):
            for i, ci in enumerate(cls.elements):
                ci_new = G.conj(g, ci)
                i2 = cls.index_of(ci_new)
                arg = G.prod([G.invert(cls.transversal[i2]), g, cls.transversal[i]])
                if not label.zg.contains(arg):
                    raise RuntimeError(
                        f"Internal inconsistency for {label.name}: rho-argument "
                        f"{G.names[arg]} is not in the centralizer.")
                block = label.rho_parent(arg)
                r0, c0 = i2 * drho, i * drho
                action[ci_new, g, r0:r0 + drho, c0:c0 + drho] = block
        self.action = action
        self._check_algebra()

    def matrix(self, h: int, g: int) -> np.ndarray:
        """pi(delta_h (x) g)."""
        return self.action[h, g]

    def group_action(self, g: int) -> np.ndarray:
        """pi(1 (x) g) = sum_h pi(delta_h (x) g); unitary."""
        return self.action[:, g].sum(axis=0)

    def flux_projector(self, h: int) -> np.ndarray:
        """pi(delta_h (x) e)."""
        return self.action[h, self.label.group.identity]

    @property
    def characters(self) -> np.ndarray:
        """chi(h, g) = tr pi(delta_h (x) g), nonzero only on commuting pairs."""
        return np.einsum("hgii->hg", self.action)

    def _check_algebra(self) -> None:
        # (delta_h (x) g)(delta_h' (x) g') = [h == g h' g^-1] (delta_h (x) g g')
        G = self.label.group
        n = G.order
        rng = np.random.default_rng(7)
        samples = rng.integers(0, n, size=(min(64, n * n), 4))
        for h, g, h2, g2 in samples:
            lhs = self.action[h, g] @ self.action[h2, g2]
            rhs = self.action[h, G.cayley[g, g2]] if G.conj(g, h2) == h \
                else np.zeros_like(lhs)
            if np.max(np.abs(lhs - rhs)) > 1e-10:
                raise RuntimeError(
                    f"D(G) algebra relations fail for {self.label.name}.")


@dataclass
class FusionTable:
    """Integer fusion multiplicities N[i, j, k] over the anyon list."""

    labels: list[AnyonLabel]
    N: np.ndarray  # (m, m, m) int64

    @property
    def num_labels(self) -> int:
        return len(self.labels)

    def conjugate(self, i: int) -> int:
        hits = np.flatnonzero(self.N[i, :, 0] == 1)
        if len(hits) != 1:
            raise RuntimeError(f"Label {i} has {len(hits)} conjugates.")
        return int(hits[0])


@dataclass
class SMatrix:
    """Monodromy traces S_ij = tr(eps_ij eps_ji), raw and 1/|G|-normalized."""

    labels: list[AnyonLabel]
    raw: np.ndarray
    normalized: np.ndarray
    D: int


@dataclass
class TMatrix:
    labels: list[AnyonLabel]
    twists: np.ndarray  # diagonal entries

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.twists)


class AnyonModel:
    """All anyon data of one D(G), built lazily and cached."""

    def __init__(self, G: FiniteGroup):
        self.group = G
        self.classes = conjugacy_classes(G)
        self.labels: list[AnyonLabel] = []
        for ci, cls in enumerate(self.classes):
            zg = centralizer(G, cls.representative)
            for ri, rho in enumerate(irreps(zg.group)):
                self.labels.append(AnyonLabel(
                    group=G, class_index=ci, irrep_index=ri, cls=cls, zg=zg,
                    rho=rho, name=_label_name(cls, ci, ri, rho)))
        # vacuum first, then lexicographic by (class rep, irrep index); the
        # enumeration above already produces exactly that order
        assert self.labels[0].is_vacuum
        self._reps: dict[int, DoubleIrrep] = {}
        self._fusion: FusionTable | None = None
        self._smatrix: SMatrix | None = None

    # -- labels ------------------------------------------------------------
    @property
    def dims(self) -> np.ndarray:
        return np.array([lab.dim for lab in self.labels], dtype=np.int64)

    def label_index(self, label: AnyonLabel) -> int:
        return next(i for i, lab in enumerate(self.labels)
                    if (lab.class_index, lab.irrep_index)
                    == (label.class_index, label.irrep_index))

    def rep(self, i: int) -> DoubleIrrep:
        if i not in self._reps:
            self._reps[i] = DoubleIrrep(self.labels[i])
        return self._reps[i]

    # -- fusion ------------------------------------------------------------
    def fusion(self) -> FusionTable:
        if self._fusion is None:
            self._fusion = self._compute_fusion()
        return self._fusion

    def _compute_fusion(self) -> FusionTable:
        G = self.group
        n = G.order
        m = len(self.labels)
        chars = [self.rep(i).characters for i in range(m)]
        N = np.zeros((m, m, m), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                conv = np.zeros((n, n), dtype=complex)
                for h1 in range(n):
                    # coproduct: chi_{i(x)j}(h, g) = sum_{h1 h2 = h} chi_i(h1,g) chi_j(h2,g)
                    conv[G.cayley[h1], :] += chars[i][h1][None, :] * chars[j]
                for k in range(m):
                    val = np.sum(conv * np.conj(chars[k])) / n
                    if abs(val.imag) > 1e-6 or abs(val.real - round(val.real)) > 1e-6:
                        raise RuntimeError(
                            f"Non-integer fusion multiplicity N[{i},{j},{k}] = {val}; "
                            "double irrep construction is inconsistent.")
                    N[i, j, k] = int(round(val.real))
        return FusionTable(labels=self.labels, N=N)

    # -- braiding ----------------------------------------------------------
    def tensor_action(self, i: int, j: int, h: int, g: int) -> np.ndarray:
        """Coproduct action of (delta_h (x) g) on V_i (x) V_j."""
        G = self.group
        A, B = self.rep(i).action, self.rep(j).action
        out = np.zeros((A.shape[2] * B.shape[2],) * 2, dtype=complex)
        for h1 in range(G.order):
            h2 = G.mul(G.invert(h1), h)
            if np.any(A[h1, g]) and np.any(B[h2, g]):
                out += np.kron(A[h1, g], B[h2, g])
        return out

    def braiding(self, i: int, j: int, check: bool = True) -> np.ndarray:
        """eps_{i,j}: V_i (x) V_j -> V_j (x) V_i, swap after the R-action with
        R = sum_h (delta_h (x) e) (x) (1 (x) h)."""
        G = self.group
        di, dj = self.labels[i].dim, self.labels[j].dim
        Ra = np.zeros((di * dj, di * dj), dtype=complex)
        ident = G.identity
        repi, repj = self.rep(i), self.rep(j)
        for h in range(G.order):
            Ra += np.kron(repi.action[h, ident], repj.group_action(h))
        eps = _swap_matrix(di, dj) @ Ra
        if check:
            err = 0.0
            for h in range(G.order):
                for g in range(G.order):
                    lhs = eps @ self.tensor_action(i, j, h, g)
                    rhs = self.tensor_action(j, i, h, g) @ eps
                    err = max(err, float(np.max(np.abs(lhs - rhs))))
            if err > 1e-8:
                raise RuntimeError(
                    f"Braiding eps[{i},{j}] is not an intertwiner (residual {err:.2e}).")
        return eps

    def monodromy(self, i: int, j: int) -> np.ndarray:
        """eps_{j,i} eps_{i,j} on V_i (x) V_j."""
        return self.braiding(j, i, check=False) @ self.braiding(i, j, check=False)

    def smatrix(self) -> SMatrix:
        if self._smatrix is None:
            m = len(self.labels)
            raw = np.zeros((m, m), dtype=complex)
            for i in range(m):
                for j in range(i, m):
                    raw[i, j] = raw[j, i] = np.trace(self.monodromy(i, j))
            self._smatrix = SMatrix(labels=self.labels, raw=raw,
                                    normalized=raw / self.group.order,
                                    D=self.group.order)
        return self._smatrix

    def tmatrix(self) -> TMatrix:
        twists = np.array([lab.twist() for lab in self.labels])
        if np.max(np.abs(np.abs(twists) - 1.0)) > 1e-10:
            raise RuntimeError("Non-unimodular twist; irrep data is inconsistent.")
        return TMatrix(labels=self.labels, twists=twists)


_MODEL_CACHE: dict[bytes, AnyonModel] = {}


def anyon_model(G: FiniteGroup) -> AnyonModel:
    key = G.cayley.tobytes()
    if key not in _MODEL_CACHE:
        _MODEL_CACHE[key] = AnyonModel(G)
    return _MODEL_CACHE[key]


def _label_name(cls: ConjugacyClass, class_index: int, irrep_index: int,
                rho: UnitaryIrrep) -> str:
    flux = class_index != 0
    charge = irrep_index != 0
    if not flux and not charge:
        return "vacuum"
    if not flux:
        return f"charge:{irrep_index}"
    if not charge:
        return f"flux:{cls.name}"
    return f"dyon:{cls.name}:{irrep_index}"


def _swap_matrix(da: int, db: int) -> np.ndarray:
    P = np.zeros((da * db, da * db))
    for a in range(da):
        for b in range(db):
            P[b * da + a, a * db + b] = 1.0
    return P


# ---------------------------------------------------------------------------
# module-level operations (thin wrappers over the cached model)

def enumerate_anyons(G: FiniteGroup) -> list[AnyonLabel]:
    """All anyon labels of D(G), vacuum first."""
    return anyon_model(G).labels


def double_irrep(label: AnyonLabel) -> DoubleIrrep:
    model = anyon_model(label.group)
    return model.rep(model.label_index(label))


def fusion_table(G: FiniteGroup) -> FusionTable:
    return anyon_model(G).fusion()


def r_braiding(a: AnyonLabel, b: AnyonLabel) -> np.ndarray:
    model = anyon_model(a.group)
    return model.braiding(model.label_index(a), model.label_index(b))


def monodromy(a: AnyonLabel, b: AnyonLabel) -> np.ndarray:
    model = anyon_model(a.group)
    return model.monodromy(model.label_index(a), model.label_index(b))


def s_matrix(G: FiniteGroup) -> SMatrix:
    return anyon_model(G).smatrix()


def t_matrix(G: FiniteGroup) -> TMatrix:
    return anyon_model(G).tmatrix()


@dataclass
class VerlindeReport:
    max_residual: float
    printed_form_residual: float


def verlinde_check(S: SMatrix, table: FusionTable) -> VerlindeReport:
    """Residual of the standard Verlinde rule, plus (for documentation) the
    residual of the formula exactly as printed in the source text."""
    Sn = S.normalized
    m = len(S.labels)
    rhs = np.einsum("ir,jr,kr->ijk", Sn, Sn, np.conj(Sn) / Sn[0][None, :])
    standard = float(np.max(np.abs(table.N - rhs)))
    printed = np.einsum("jr,kr->jk", Sn, np.conj(Sn) / (Sn[0] ** 2)[None, :])
    printed_rhs = Sn[:, :, None] * printed[None, :, :]
    printed_res = float(np.max(np.abs(table.N - printed_rhs)))
    return VerlindeReport(max_residual=standard, printed_form_residual=printed_res)


@dataclass
class ModularityReport:
    modular: bool
    invertible: bool
    condition_number: float
    unitarity_residual: float
    transparent_labels: list[str]

    @property
    def verdict(self) -> str:
        return "modular" if self.modular else "degenerate"


def modularity_check(S: SMatrix, restrict: Sequence[int] | None = None) -> ModularityReport:
    """Invertibility + unitarity of S and the braided-center criterion: a
    nontrivial label transparent to every other label breaks modularity.

    ``restrict`` runs the test on a sub-block (e.g. the chargeon sector),
    where transparency is judged only against the restricted labels.
    """
    idx = list(range(len(S.labels))) if restrict is None else list(restrict)
    raw = S.raw[np.ix_(idx, idx)]
    dims = np.array([S.labels[i].dim for i in idx], dtype=float)
    cond = float(np.linalg.cond(raw))
    invertible = cond < 1e8
    sub_norm = S.normalized[np.ix_(idx, idx)]
    unit_res = float(np.max(np.abs(sub_norm @ sub_norm.conj().T - np.eye(len(idx)))))
    transparent = []
    for a in range(len(idx)):
        if S.labels[idx[a]].is_vacuum:
            continue
        if np.max(np.abs(raw[a] - dims[a] * dims)) < 1e-8:
            transparent.append(S.labels[idx[a]].name)
    modular = invertible and not transparent
    if restrict is None:
        modular = modular and unit_res < 1e-8
    return ModularityReport(modular=modular, invertible=invertible,
                            condition_number=cond, unitarity_residual=unit_res,
                            transparent_labels=transparent)


# ---------------------------------------------------------------------------
# export

def _complex_pairs(arr: np.ndarray) -> list:
    rounded = np.round(np.asarray(arr, dtype=complex), 12) + 0.0
    if rounded.ndim == 1:
        return [[float(z.real), float(z.imag)] for z in rounded]
    return [_complex_pairs(row) for row in rounded]


def model_payload(G: FiniteGroup) -> dict:
    """Machine-readable anyon model (labels, dims, fusion, S, T, D)."""
    model = anyon_model(G)
    S = model.smatrix()
    T = model.tmatrix()
    return {
        "group": {"name": G.name, "order": G.order},
        "labels": [lab.name for lab in model.labels],
        "dims": [int(d) for d in model.dims],
        "fusion": model.fusion().N.tolist(),
        "S": _complex_pairs(S.normalized),
        "T": _complex_pairs(T.twists),
        "D": G.order,
    }


def export_model(G: FiniteGroup, path: str) -> None:
    payload = model_payload(G)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
