import matplotlib.pyplot as plt
import numpy as np

import models.perturbation.ghz_like as ghz_like
import models.perturbation.sweep as sweep
import utils.global_types as global_types
import utils.plots as plots

xi_max = 3
n_grid = 61
xi_grid = xi_max * np.array(range(n_grid)) / (n_grid - 1)

path = [ghz_like.TriplesPerturbation(xi, [0, 0, 0]) for xi in xi_grid]

# base = global_types.Base.PLUS
base = global_types.Base.MINUS

# show = 'sweep'
show = 'spectrum'

records = sweep.sweep(base, path)

if show == 'sweep':
    plots.plot_sweep(records)
elif show == 'spectrum':
    spectra = np.array([np.sort(r.b_eigenvalues.real) for r in records])
    expected = np.array([np.sort(ghz_like.expected_spectrum(base, p).real)
                         for p in path])
    plt.plot(xi_grid, expected, 'k')
    plt.plot(xi_grid, spectra, 'or', markersize=3)
    plt.plot(xi_grid, [abs(r.j) for r in records], 'b')
    plt.xlabel('xi')
    plt.ylabel('Eigenvalues of B / |J|')
    plt.grid(True)
    plt.show()
