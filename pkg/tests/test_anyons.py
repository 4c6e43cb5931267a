"""D(G) anyon data tests: labels, double irreps, fusion, braiding, S/T."""

import numpy as np
import pytest

from qdouble.groups import build_group, conjugacy_classes, centralizer, irreps
from qdouble.anyons import (
    anyon_model,
    double_irrep,
    enumerate_anyons,
    fusion_table,
    modularity_check,
    monodromy,
    r_braiding,
    s_matrix,
    t_matrix,
    verlinde_check,
)

Z2_S_EXPECTED = 0.5 * np.array([
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
], dtype=float)


def test_z2_has_four_anyons():
    labels = enumerate_anyons(build_group("Z2"))
    assert len(labels) == 4
    assert labels[0].name == "vacuum"
    assert [lab.name for lab in labels] == ["vacuum", "charge:1", "flux:g", "dyon:g:1"]


def test_s3_labels_and_dims():
    G = build_group("S3")
    labels = enumerate_anyons(G)
    assert len(labels) == 8
    assert [lab.dim for lab in labels] == [1, 1, 2, 3, 3, 2, 2, 2]
    # independent bookkeeping: |C| * dim(rho) over classes with their centralizers
    expected = []
    for cls in conjugacy_classes(G):
        zg = centralizer(G, cls.representative)
        for rho in irreps(zg.group):
            expected.append(cls.size * rho.dim)
    assert [lab.dim for lab in labels] == expected


def test_trivial_group_has_single_vacuum():
    labels = enumerate_anyons(build_group("Z1"))
    assert len(labels) == 1 and labels[0].is_vacuum


@pytest.mark.parametrize("spec", ["Z2", "Z3", "Z4", "S3", "D4", "Q8"])
def test_total_quantum_dimension(spec):
    G = build_group(spec)
    dims = anyon_model(G).dims
    assert int(np.sum(dims ** 2)) == G.order ** 2  # exact integer identity


def test_vacuum_double_irrep_is_trivial():
    G = build_group("S3")
    rep = double_irrep(enumerate_anyons(G)[0])
    assert rep.dim == 1
    for h in range(G.order):
        for g in range(G.order):
            expect = 1.0 if h == G.identity else 0.0
            assert abs(rep.matrix(h, g)[0, 0] - expect) < 1e-14


def test_z2_dyon_irrep_flux_and_charge():
    G = build_group("Z2")
    dyon = enumerate_anyons(G)[3]
    rep = double_irrep(dyon)
    assert rep.dim == 1
    # flux g: only the delta_g component acts; charge sigma: sign of the group action
    assert abs(rep.matrix(1, 0)[0, 0] - 1.0) < 1e-14
    assert abs(rep.matrix(1, 1)[0, 0] + 1.0) < 1e-14
    assert abs(rep.matrix(0, 0)[0, 0]) < 1e-14


@pytest.mark.parametrize("spec", ["Z3", "S3"])
def test_double_irrep_star_plaquette_relations(spec):
    """Images of A^g-type and B^h-type elements satisfy the site algebra."""
    G = build_group(spec)
    model = anyon_model(G)
    for i in range(len(model.labels)):
        rep = model.rep(i)
        A = [rep.group_action(g) for g in range(G.order)]
        B = [rep.flux_projector(h) for h in range(G.order)]
        for g in range(G.order):
            assert np.allclose(A[g] @ A[g].conj().T, np.eye(rep.dim), atol=1e-10)
            for h in range(G.order):
                assert np.allclose(A[g] @ A[h], A[G.mul(g, h)], atol=1e-10)
                assert np.allclose(A[g] @ B[h], B[G.conj(g, h)] @ A[g], atol=1e-10)
                delta = B[h] if g == h else np.zeros_like(B[h])
                assert np.allclose(B[g] @ B[h], delta, atol=1e-12)


def test_double_irrep_dimensions_s3_fluxes():
    G = build_group("S3")
    labels = enumerate_anyons(G)
    three_cycle = [lab for lab in labels if lab.class_index == 2]
    assert [lab.dim for lab in three_cycle] == [2, 2, 2]  # |C|=2, dim(rho)=1


# ---------------------------------------------------------------------------
# fusion

def test_z2_fusion_is_group_law():
    G = build_group("Z2")
    table = fusion_table(G)
    # labels are (omega, c) pairs over Z2 x Z2; fusion must be the product group law
    outcome = np.argmax(table.N, axis=2)
    assert table.N.sum() == 16  # abelian: single outcome each
    charge, flux, dyon = 1, 2, 3
    assert outcome[charge, flux] == dyon        # (sigma,e) x (iota,g) = (sigma,g)
    assert outcome[dyon, dyon] == 0             # (sigma,g) x (sigma,g) = (iota,e)
    assert np.array_equal(outcome, outcome.T)


def _abelian_coords(model):
    """(character value on the generator, group element) per label."""
    return [(complex(lab.rho.matrices[lab.zg.to_sub(1)][0, 0]),
             lab.cls.representative) for lab in model.labels]


def test_abelian_fusion_rule_z4():
    G = build_group("Z4")
    model = anyon_model(G)
    table = model.fusion()
    coords = _abelian_coords(model)
    # (w1,c1)(w2,c2) = (w1w2, c1c2)
    for i, (w1, c1) in enumerate(coords):
        for j, (w2, c2) in enumerate(coords):
            k = next(k for k, (w, c) in enumerate(coords)
                     if abs(w - w1 * w2) < 1e-9 and c == G.mul(c1, c2))
            assert table.N[i, j, k] == 1
            assert table.N[i, j].sum() == 1


def test_s3_chargeon_fusion_matches_group_reps():
    """E (x) E = 1 + sgn + E for the 2-dim chargeon, from S3 character theory."""
    G = build_group("S3")
    model = anyon_model(G)
    table = model.fusion()
    E = 2  # charge:2 is the 2-dim chargeon
    row = table.N[E, E]
    expect = np.zeros(8, dtype=int)
    expect[0] = expect[1] = expect[2] = 1
    assert np.array_equal(row, expect)
    # independent S3 oracle: chi_E^2 decomposes as 1 + sign + E
    chi_E = np.array([2, 0, 0, -1, -1, 0], dtype=float)  # lex order of S3 elements
    chi_1 = np.ones(6)
    chi_s = np.array([1, -1, -1, 1, 1, -1], dtype=float)
    for chi, mult in [(chi_1, 1), (chi_s, 1), (chi_E, 1)]:
        assert abs(np.dot(chi_E * chi_E, chi) / 6 - mult) < 1e-12


@pytest.mark.parametrize("spec", ["Z2", "Z4", "S3"])
def test_fusion_table_axioms(spec):
    G = build_group(spec)
    table = fusion_table(G)
    N = table.N
    m = table.num_labels
    assert np.array_equal(N, np.transpose(N, (1, 0, 2)))  # commutativity
    assert np.array_equal(N[0], np.eye(m, dtype=np.int64))  # vacuum is the unit
    # Frobenius reciprocity: N_ij^0 = delta_{j, conj(i)}
    for i in range(m):
        ibar = table.conjugate(i)
        expect = np.zeros(m, dtype=np.int64)
        expect[ibar] = 1
        assert np.array_equal(N[i, :, 0], expect)
    # associativity
    lhs = np.einsum("ijm,mkl->ijkl", N, N)
    rhs = np.einsum("jkm,iml->ijkl", N, N)
    assert np.array_equal(lhs, rhs)


def test_abelian_conjugate_is_inverse_pair():
    G = build_group("Z4")
    model = anyon_model(G)
    table = model.fusion()
    coords = _abelian_coords(model)
    for i, (w, c) in enumerate(coords):
        ibar = table.conjugate(i)
        wbar, cbar = coords[ibar]
        assert cbar == G.invert(c)                  # conjugate of (w,c) is ...
        assert abs(wbar - np.conj(w)) < 1e-9        # ... (wbar, c^-1)
        assert table.N[i, ibar, 0] == 1


def tensor_decomposition_multiplicity(model, i, j, k):
    """Independent fusion oracle: dimension of the intertwiner space
    Hom(V_k, V_i (x) V_j) via an SVD nullspace."""
    G = model.group
    di = model.labels[i].dim * model.labels[j].dim
    dk = model.labels[k].dim
    rows = []
    for h in range(G.order):
        for g in range(G.order):
            big = model.tensor_action(i, j, h, g)
            small = model.rep(k).matrix(h, g)
            # T with big @ T = T @ small: (big (x) I - I (x) small^T) vec(T) = 0
            rows.append(np.kron(big, np.eye(dk)) - np.kron(np.eye(di), small.T))
    stack = np.concatenate(rows, axis=0)
    svals = np.linalg.svd(stack, compute_uv=False)
    return int(np.sum(svals < 1e-8))


def test_fusion_cross_oracle_s3():
    """Character-based fusion equals explicit tensor decomposition on D(S3)."""
    G = build_group("S3")
    model = anyon_model(G)
    N = model.fusion().N
    rng = np.random.default_rng(0)
    triples = {(1, 1, 0), (2, 2, 2), (3, 3, 5), (3, 4, 0), (5, 6, 7)}
    while len(triples) < 12:
        triples.add(tuple(rng.integers(0, 8, size=3)))
    for i, j, k in sorted(triples):
        assert N[i, j, k] == tensor_decomposition_multiplicity(model, i, j, k)


# ---------------------------------------------------------------------------
# braiding and modular data

def test_braiding_vacuum_is_swap():
    G = build_group("S3")
    labels = enumerate_anyons(G)
    for other in (labels[0], labels[3]):
        eps = r_braiding(labels[0], other)
        assert np.allclose(eps, np.eye(other.dim), atol=1e-12)


@pytest.mark.parametrize("spec", ["Z2", "Z3", "S3"])
def test_braiding_is_intertwiner_everywhere(spec):
    # r_braiding itself raises if the intertwiner residual exceeds 1e-8
    labels = enumerate_anyons(build_group(spec))
    for a in labels:
        for b in labels:
            r_braiding(a, b)


def test_z2_full_monodromies():
    G = build_group("Z2")
    labels = enumerate_anyons(G)
    charge, flux = labels[1], labels[2]
    em = monodromy(charge, flux)
    assert np.allclose(em, -np.eye(1), atol=1e-12)  # e around m
    assert np.allclose(monodromy(charge, charge), np.eye(1), atol=1e-12)


def test_z2_s_matrix_frozen():
    S = s_matrix(build_group("Z2"))
    assert np.max(np.abs(S.normalized - Z2_S_EXPECTED)) < 1e-12
    assert S.D == 2


@pytest.mark.parametrize("spec", ["Z2", "Z3", "S3"])
def test_s_matrix_first_row_and_symmetry(spec):
    G = build_group(spec)
    model = anyon_model(G)
    S = model.smatrix()
    dims = model.dims
    assert np.max(np.abs(S.normalized[0] - dims / G.order)) < 1e-10
    assert np.max(np.abs(S.raw - S.raw.T)) < 1e-10


def test_twists():
    G = build_group("Z2")
    T = t_matrix(G)
    assert abs(T.twists[0] - 1) < 1e-12          # vacuum
    assert abs(T.twists[1] - 1) < 1e-12          # chargeons are bosonic
    assert abs(T.twists[3] + 1) < 1e-12          # the fermionic dyon
    G3 = build_group("S3")
    T3 = t_matrix(G3)
    for lab, tw in zip(T3.labels, T3.twists):
        assert abs(abs(tw) - 1.0) < 1e-10
        if lab.class_index == 0:
            assert abs(tw - 1.0) < 1e-12


@pytest.mark.parametrize("spec,tol", [("Z2", 1e-10), ("S3", 1e-8)])
def test_verlinde_standard_form(spec, tol):
    G = build_group(spec)
    report = verlinde_check(s_matrix(G), fusion_table(G))
    assert report.max_residual < tol
    # the formula exactly as printed in the source text does not hold;
    # its residual is recorded for documentation
    assert report.printed_form_residual > 0.5


def test_verlinde_vacuum_row():
    G = build_group("S3")
    table = fusion_table(G)
    assert np.array_equal(table.N[0], np.eye(8, dtype=np.int64))


@pytest.mark.parametrize("spec", ["Z2", "S3"])
def test_modularity_true(spec):
    report = modularity_check(s_matrix(build_group(spec)))
    assert report.modular
    assert report.unitarity_residual < 1e-8
    assert not report.transparent_labels


def test_chargeon_subsector_is_degenerate():
    G = build_group("S3")
    model = anyon_model(G)
    chargeons = [i for i, lab in enumerate(model.labels) if lab.class_index == 0]
    report = modularity_check(model.smatrix(), restrict=chargeons)
    assert not report.modular
    assert report.transparent_labels  # chargeons braid trivially among themselves


def _projective_residual(A, B):
    lam = np.trace(B.conj().T @ A) / np.trace(B.conj().T @ B)
    return abs(lam), float(np.max(np.abs(A - lam * B)))


@pytest.mark.parametrize("spec", ["Z2", "S3"])
def test_modular_relation_projective_self_dual(spec):
    """(ST)^3 is proportional to S^2 within 1e-8 (all labels self-dual here)."""
    G = build_group(spec)
    Sn = s_matrix(G).normalized
    T = np.diag(t_matrix(G).twists)
    lhs = np.linalg.matrix_power(Sn @ T, 3)
    mod, res = _projective_residual(lhs, Sn @ Sn)
    assert abs(mod - 1.0) < 1e-8 and res < 1e-8


@pytest.mark.parametrize("spec", ["Z2", "Z3", "Z4", "S3"])
def test_modular_relation_with_charge_conjugation(spec):
    """For labels that are not self-dual the monodromy-trace S generates the
    modular relation only after the standard dualization S'[a,b] = S[abar,b]."""
    G = build_group(spec)
    model = anyon_model(G)
    Sn = model.smatrix().normalized
    table = model.fusion()
    m = len(model.labels)
    C = np.zeros((m, m))
    for i in range(m):
        C[i, table.conjugate(i)] = 1.0
    Smod = C @ Sn
    T = np.diag(model.tmatrix().twists)
    lhs = np.linalg.matrix_power(Smod @ T, 3)
    mod, res = _projective_residual(lhs, Smod @ Smod)
    assert abs(mod - 1.0) < 1e-8 and res < 1e-8
    assert np.max(np.abs(Smod @ Smod - C)) < 1e-8  # S'^2 is charge conjugation
