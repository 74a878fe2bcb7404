"""Curves in hyperbolic space from one complex spectral value.

On the vacuum the construction gives a geodesic (cosh x, 0, 0, -sinh x);
on the soliton it gives a curve whose eta matrix stays Hermitian with
determinant one.

    python3 demos/hyperbolic_curve.py
"""
import numpy as np

from starmcf.curve_geometry import sym_curve_h3
from starmcf.gp_dynamics import grid_from_function, nls_to_gp, soliton_exact

lam = (1 - 1j) / 2
vac = grid_from_function(lambda x, t: 0j * x, 64, 11, 1.0, length=4.0, x0=-2.0, sigma=1)
gamma = sym_curve_h3(vac, lam)
x = gamma.x(gamma.nt - 1)
ref = np.stack([np.cosh(x), 0 * x, 0 * x, -np.sinh(x)], -1)
print(f"vacuum geodesic error    {np.max(np.abs(gamma.samples[-1] - ref)):.2e}")

L = 16 * np.pi
v = grid_from_function(lambda x, t: soliton_exact(1.0, x, t), 256, 200, 1.0, length=L, x0=-L / 2)
gamma, diag = sym_curve_h3(nls_to_gp(v, 1), lam, return_diagnostics=True)
print(f"hermiticity defect       {diag['hermiticity_defect']:.2e}")
print(f"det defect               {diag['det_defect']:.2e}")
print(f"Lorentz norm defect      {gamma.norm_defect():.2e}")
print(f"x0 range                 {gamma.samples[..., 0].min():.3f} .. {gamma.samples[..., 0].max():.3e}")
