"""Torus lattice tests: star/plaquette algebra, Hamiltonian, ground states."""

import numpy as np
import pytest

from qdouble.groups import build_group
from qdouble.lattice import (
    MemoryGuardError,
    Site,
    StateVector,
    TorusLattice,
    apply_plaquette,
    apply_plaquette_projector,
    apply_projectors,
    apply_star,
    apply_star_average,
    dump_state,
    ground_space_dim,
    ground_state,
    hamiltonian_apply,
    load_state,
    random_local_observable,
    random_state,
    translate,
)


@pytest.fixture(scope="module")
def z2_setup():
    G = build_group("Z2")
    lat = TorusLattice(3, 3)
    return G, lat, random_state(lat, G, seed=1)


@pytest.fixture(scope="module")
def s3_setup():
    G = build_group("S3")
    lat = TorusLattice(2, 2)
    return G, lat, random_state(lat, G, seed=2)


def test_lattice_bookkeeping():
    lat = TorusLattice(3, 4)
    assert lat.num_vertices == lat.num_faces == 12
    assert lat.num_edges == 24
    # every edge has two incident vertices and two flanking faces
    for e in range(lat.num_edges):
        t, h = lat.edge_endpoints(e)
        l, r = lat.edge_flanks(e)
        assert t != h and l != r
    # each vertex has 4 star edges, each face 4 boundary edges
    for v in range(12):
        assert len(lat.star_edges(v)) == 4
    for f in range(12):
        assert len({e for e, _ in lat.face_boundary_ccw(f)}) == 4


@pytest.mark.parametrize("setup", ["z2_setup", "s3_setup"])
def test_star_relations(setup, request):
    G, lat, psi = request.getfixturevalue(setup)
    s = Site(0, 0)
    for g in G.elements():
        for h in G.elements():
            lhs = apply_star(s, g, apply_star(s, h, psi))
            rhs = apply_star(s, G.mul(g, h), psi)
            assert np.array_equal(lhs.data, rhs.data)  # permutations: exact
    # (A^g)^dagger = A^{g^-1} via inner products
    phi = random_state(lat, G, seed=9)
    for g in G.elements():
        a = phi.dot(apply_star(s, g, psi))
        b = apply_star(s, G.invert(g), phi).dot(psi)
        assert abs(a - b) < 1e-14


@pytest.mark.parametrize("setup", ["z2_setup", "s3_setup"])
def test_plaquette_relations(setup, request):
    G, lat, psi = request.getfixturevalue(setup)
    s = Site(0, 0)
    total = np.zeros_like(psi.data)
    for h in G.elements():
        total += apply_plaquette(s, h, psi).data
    assert np.array_equal(total, psi.data)  # projectors resolve the identity
    for g in G.elements():
        for h in G.elements():
            lhs = apply_plaquette(s, g, apply_plaquette(s, h, psi))
            expect = apply_plaquette(s, h, psi).data if g == h else 0 * psi.data
            assert np.array_equal(lhs.data, expect)


@pytest.mark.parametrize("setup", ["z2_setup", "s3_setup"])
def test_star_plaquette_commutation(setup, request):
    G, lat, psi = request.getfixturevalue(setup)
    s = Site(0, 0)
    for g in G.elements():
        for h in G.elements():
            lhs = apply_star(s, g, apply_plaquette(s, h, psi))
            rhs = apply_plaquette(s, G.conj(g, h), apply_star(s, g, psi))
            assert np.max(np.abs(lhs.data - rhs.data)) < 1e-14


@pytest.mark.parametrize("setup", ["z2_setup", "s3_setup"])
def test_distinct_sites_commute(setup, request):
    G, lat, psi = request.getfixturevalue(setup)
    s1 = Site(0, 0)
    v2 = lat.vertex(1, 1)
    s2 = Site(v2, lat.faces_at_vertex(v2)[0])
    g, h = 1, G.order - 1
    a = apply_star(s1, g, apply_star(s2, h, psi))
    b = apply_star(s2, h, apply_star(s1, g, psi))
    assert np.array_equal(a.data, b.data)
    a = apply_star(s1, g, apply_plaquette(s2, h, psi))
    b = apply_plaquette(s2, h, apply_star(s1, g, psi))
    assert np.max(np.abs(a.data - b.data)) < 1e-14


@pytest.mark.parametrize("setup", ["z2_setup", "s3_setup"])
def test_projectors(setup, request):
    G, lat, psi = request.getfixturevalue(setup)
    s = Site(0, 0)
    once = apply_star_average(s, psi)
    assert np.max(np.abs(apply_star_average(s, once).data - once.data)) < 1e-12
    bonce = apply_plaquette_projector(s, psi)
    assert np.array_equal(apply_plaquette_projector(s, bonce).data, bonce.data)
    # [A_s, B_s] = 0 at the same site
    ab = apply_star_average(s, apply_plaquette_projector(s, psi))
    ba = apply_plaquette_projector(s, apply_star_average(s, psi))
    assert np.max(np.abs(ab.data - ba.data)) < 1e-12
    assert np.max(np.abs(apply_projectors(s, psi).data - ab.data)) < 1e-12


def test_locality_disjoint_observables(z2_setup):
    G, lat, psi = z2_setup
    A = random_local_observable(lat, G, [0, 1], seed=3)
    B = random_local_observable(lat, G, [8, 9], seed=4)
    ab = A.apply(B.apply(psi))
    ba = B.apply(A.apply(psi))
    assert np.max(np.abs(ab.data - ba.data)) < 1e-12


def test_local_operator_identity_outside_support(s3_setup):
    G, lat, psi = s3_setup
    A = random_local_observable(lat, G, [2], seed=5)
    # conjugating a far observable by A's action preserves expectations
    B = random_local_observable(lat, G, [5], seed=6, hermitian=True)
    lhs = A.apply(B.apply(psi))
    rhs = B.apply(A.apply(psi))
    assert np.max(np.abs(lhs.data - rhs.data)) < 1e-12


@pytest.mark.parametrize("spec,size", [("Z2", (2, 2)), ("Z2", (3, 3)), ("S3", (2, 2))])
def test_ground_state_constraints(spec, size):
    G = build_group(spec)
    lat = TorusLattice(*size)
    gs = ground_state(lat, G)
    assert abs(gs.norm - 1.0) < 1e-12
    for v in range(lat.num_vertices):
        for f in lat.faces_at_vertex(v):
            s = Site(v, f)
            assert abs(gs.dot(apply_star_average(s, gs)) - 1) < 1e-12
            assert abs(gs.dot(apply_plaquette_projector(s, gs)) - 1) < 1e-12


def test_ground_state_is_h_eigenstate(z2_setup):
    G, lat, _ = z2_setup
    gs = ground_state(lat, G)
    hgs = hamiltonian_apply(gs)
    expect = -2 * lat.Lx * lat.Ly
    assert np.max(np.abs(hgs.data - expect * gs.data)) < 1e-12


def test_hamiltonian_self_adjoint(s3_setup):
    G, lat, psi = s3_setup
    phi = random_state(lat, G, seed=8)
    a = phi.dot(hamiltonian_apply(psi))
    b = hamiltonian_apply(phi).dot(psi)
    assert abs(a - b) < 1e-10


def test_excitations_at_ribbon_endpoints():
    from qdouble.ribbons import RibbonOperator, ribbon_between

    G = build_group("Z2")
    lat = TorusLattice(3, 3)
    gs = ground_state(lat, G)
    s1 = Site(lat.vertex(0, 0), lat.face(0, 0))
    s2 = Site(lat.vertex(1, 1), lat.face(1, 1))
    rib = ribbon_between(lat, s1, s2)
    st = RibbonOperator(rib, G, 1, 0).apply(gs).normalized()
    # constraint violations exactly at the two endpoint sites
    for v in range(lat.num_vertices):
        e = st.dot(apply_star_average(Site(v, lat.faces_at_vertex(v)[0]), st)).real
        if v in (s1.vertex, s2.vertex):
            assert abs(e - 1 / G.order) < 1e-12  # star violated
        else:
            assert abs(e - 1) < 1e-12
    for f in range(lat.num_faces):
        s = Site(lat.face_corners(f)[0], f)
        e = st.dot(apply_plaquette_projector(s, st)).real
        if f in (s1.face, s2.face):
            assert abs(e) < 1e-12  # flux pair created
        else:
            assert abs(e - 1) < 1e-12
    # energy expectation shows the gap
    energy = st.dot(hamiltonian_apply(st)).real
    assert energy > -2 * lat.Lx * lat.Ly + 1


@pytest.mark.parametrize("spec,size,dim", [
    ("Z2", (2, 2), 4),
    ("Z2", (3, 3), 4),   # size-independent
    ("S3", (2, 2), 8),   # equals the D(S3) anyon count
])
def test_ground_space_dimension(spec, size, dim):
    G = build_group(spec)
    assert ground_space_dim(TorusLattice(*size), G) == dim


def test_translation_invariance():
    G = build_group("S3")
    lat = TorusLattice(2, 2)
    gs = ground_state(lat, G)
    for dx, dy in [(1, 0), (0, 1)]:
        moved = translate(gs, dx, dy)
        overlap = gs.dot(moved)
        assert abs(abs(overlap) - 1.0) < 1e-12  # equal up to a global phase


def test_localizable_shadow():
    """Expectations of observables far from an excitation agree with the
    ground state (finite-scale shadow of the selection criterion)."""
    from qdouble.ribbons import RibbonOperator, ribbon_between

    G = build_group("Z2")
    lat = TorusLattice(3, 3)
    gs = ground_state(lat, G)
    s1 = Site(lat.vertex(0, 0), lat.face(0, 0))
    s2 = Site(lat.vertex(1, 0), lat.face(0, 0))
    rib = ribbon_between(lat, s1, s2)
    excited = RibbonOperator(rib, G, 1, 1).apply(gs)
    if excited.norm < 1e-12:
        excited = RibbonOperator(rib, G, 1, 0).apply(gs)
    excited = excited.normalized()
    touched = set(rib.edges)
    for v in (s1.vertex, s2.vertex):
        touched |= {e for e, _ in lat.star_edges(v)}
    far_edges = [e for e in range(lat.num_edges) if e not in touched][:2]
    A = random_local_observable(lat, G, far_edges, seed=12, hermitian=True)
    a = gs.dot(A.apply(gs)).real
    b = excited.dot(A.apply(excited)).real
    assert abs(a - b) < 1e-10


def test_memory_guard():
    G = build_group("S4")
    lat = TorusLattice(3, 3)
    with pytest.raises(MemoryGuardError) as err:
        StateVector(lat, G)
    assert err.value.required == 24 ** 18
    assert err.value.limit == 2 ** 26


def test_state_dump_roundtrip(tmp_path):
    G = build_group("Z2")
    lat = TorusLattice(2, 2)
    psi = random_state(lat, G, seed=3)
    path = tmp_path / "state.qdbl"
    dump_state(psi, str(path))
    raw = path.read_bytes()
    assert raw[:8] == b"QDBLSTV1"
    assert len(raw) == 8 + psi.size * 8  # complex64 payload
    back = load_state(str(path), lat, G)
    assert np.max(np.abs(back.data - psi.data)) < 1e-6  # float32 precision
