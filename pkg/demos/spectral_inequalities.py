"""Eigenvalues against singular values and entropy numbers.

Weyl domination, the sqrt(2) eigenvalue bound from covering estimates, the
factor-14 Hilbert bracket quantity, and two power limits: the spectral
radius from norms of powers, and individual eigenvalue moduli from singular
values of powers.
"""

import numpy as np

from snumbers.entropy import entropy_upper_cover_sequence, padded_upper
from snumbers.operators import diagonal_operator, operator
from snumbers.spectral import (
    carl_check,
    eigen_sequence,
    koenig_limit_check,
    spectral_radius,
    weyl_check,
)

if __name__ == "__main__":
    rng = np.random.default_rng(5)
    M = rng.standard_normal((4, 4))
    T = operator(M, 2.0, 2.0)

    rep = weyl_check(T)
    lam = eigen_sequence(T).moduli
    sig = np.linalg.svd(M, compute_uv=False)
    print("Weyl domination on a random 4x4")
    print("  |lambda|:", np.round(lam, 4))
    print("  sigma:   ", np.round(sig, 4))
    prods = [e for e in rep.entries if e.name == "weyl-product"]
    for e in prods:
        print(f"  product {e.detail}: {e.lhs:10.6f} <= {e.rhs:10.6f}  "
              f"margin {e.margin:.6f}")

    print()
    D = diagonal_operator([1.8, 0.9, 0.4])
    covers = entropy_upper_cover_sequence(D, 5, cloud=4000, seed=2)
    uppers = [padded_upper(b, 2.0) for b in covers]
    crep = carl_check(D, uppers, k_max=5)
    corr = [e for e in crep.entries if e.name == "carl-corollary"]
    print("sqrt(2) eigenvalue bound from covering estimates, diag(1.8,.9,.4)")
    for e in corr:
        print(f"  {e.detail}: |lambda| {e.lhs:.4f} <= sqrt2*cover {e.rhs:.4f}")

    print()
    J = operator(np.array([[1.0, 1.0], [0.0, 1.0]]), 2.0, 2.0)
    v, schedule = spectral_radius(J, max_power=64, return_schedule=True)
    print("spectral radius of the 2x2 Jordan block (true value 1)")
    for (m, est) in schedule:
        print(f"  m={m:3d}  ||J^m||^(1/m) = {est:.8f}")
    print("  convergence is slow -- the defective eigenvalue costs m^(1/m)")

    print()
    K = operator(np.array([[2.0, 1.0], [0.0, 1.0]]), 2.0, 2.0)
    print("power roots of singular values -> eigenvalue moduli, [[2,1],[0,1]]")
    for idx in (1, 2):
        rep = koenig_limit_check(K, idx, k_schedule=(1, 4, 16, 64))
        tgt = rep.extras["target"]
        trail = "  ".join(f"k={k}: {e:.5f}" for (k, e) in rep.extras["estimates"])
        print(f"  index {idx} (target {tgt}):  {trail}")
        print(f"    final relative error {rep.extras['rel_error']:.5f}")
