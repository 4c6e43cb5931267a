# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels for the torus state-vector simulator.

Every function walks the full configuration array once; configurations are
flat mixed-radix indices with digit e = (idx // strides[e]) % n.  The pure
numpy fallback in ``_kernels_py`` implements identical signatures.
"""

def apply_edge_perms(const double complex[::1] psi, double complex[::1] out,
                     const long[::1] strides, const long[:, ::1] perms, long n):
    """Simultaneous digit permutations on a set of edges (star operators)."""
    cdef Py_ssize_t N = psi.shape[0]
    cdef Py_ssize_t k = strides.shape[0]
    cdef Py_ssize_t idx, e
    cdef long z, delta, stride
    for idx in range(N):
        delta = 0
        for e in range(k):
            stride = strides[e]
            z = (idx // stride) % n
            delta += (perms[e, z] - z) * stride
        out[idx + delta] = psi[idx]


def plaquette_project(const double complex[::1] psi, double complex[::1] out,
                      const long[::1] strides, const signed char[::1] invert,
                      long h, const long[:, ::1] cayley, const long[::1] inv,
                      long n):
    """Projector onto configurations whose oriented boundary product equals h."""
    cdef Py_ssize_t N = psi.shape[0]
    cdef Py_ssize_t k = strides.shape[0]
    cdef Py_ssize_t idx, e
    cdef long z, flux
    for idx in range(N):
        flux = 0  # identity
        for e in range(k):
            z = (idx // strides[e]) % n
            if invert[e]:
                z = inv[z]
            flux = cayley[flux, z]
        out[idx] = psi[idx] if flux == h else 0.0


def ribbon_apply(const double complex[::1] psi, double complex[::1] out,
                 long h, long g, const signed char[::1] kinds,
                 const long[::1] strides, const signed char[::1] flags,
                 const long[:, ::1] cayley, const long[::1] inv, long n):
    """Ribbon operator F^{h,g}: walk the triangles, conjugating h by the
    accumulated direct product and projecting the total onto g.

    kinds: 0 = direct triangle (projector leg), 1 = dual triangle (multiply).
    flags: direct -> 1 reads the inverse edge value; dual -> 1 multiplies the
    crossed edge from the right by m^{-1} instead of from the left by m.
    """
    cdef Py_ssize_t N = psi.shape[0]
    cdef Py_ssize_t k = strides.shape[0]
    cdef Py_ssize_t idx, t
    cdef long acc, z, m, newz, delta, stride
    for idx in range(N):
        acc = 0
        delta = 0
        for t in range(k):
            stride = strides[t]
            z = (idx // stride) % n
            if kinds[t] == 0:
                if flags[t]:
                    z = inv[z]
                acc = cayley[acc, z]
            else:
                m = cayley[cayley[inv[acc], h], acc]
                if flags[t]:
                    newz = cayley[z, inv[m]]
                else:
                    newz = cayley[m, z]
                delta += (newz - z) * stride
        if acc == g:
            out[idx + delta] = out[idx + delta] + psi[idx]
