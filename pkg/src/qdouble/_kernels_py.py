"""Pure numpy fallback for the compiled kernels in ``_kernels.pyx``.

Signatures match the compiled module exactly; see there for the conventions.
"""

from __future__ import annotations

import numpy as np


def apply_edge_perms(psi, out, strides, perms, n):
    idx = np.arange(psi.shape[0], dtype=np.int64)
    delta = np.zeros_like(idx)
    for e in range(len(strides)):
        z = (idx // strides[e]) % n
        delta += (perms[e][z] - z) * strides[e]
    out[idx + delta] = psi


def plaquette_project(psi, out, strides, invert, h, cayley, inv, n):
    idx = np.arange(psi.shape[0], dtype=np.int64)
    flux = np.zeros_like(idx)
    for e in range(len(strides)):
        z = (idx // strides[e]) % n
        if invert[e]:
            z = inv[z]
        flux = cayley[flux, z]
    np.multiply(psi, flux == h, out=out)


def ribbon_apply(psi, out, h, g, kinds, strides, flags, cayley, inv, n):
    idx = np.arange(psi.shape[0], dtype=np.int64)
    acc = np.zeros_like(idx)
    delta = np.zeros_like(idx)
    for t in range(len(kinds)):
        z = (idx // strides[t]) % n
        if kinds[t] == 0:
            if flags[t]:
                z = inv[z]
            acc = cayley[acc, z]
        else:
            m = cayley[cayley[inv[acc], h], acc]
            newz = cayley[z, inv[m]] if flags[t] else cayley[m, z]
            delta += (newz - z) * strides[t]
    mask = acc == g
    # target indices are distinct (partial permutation), so fancy += is safe
    out[idx[mask] + delta[mask]] += psi[mask]
