import matplotlib.pyplot as plt
import numpy as np


def plot_sweep(records, show=True):
    """|J|, rank of N and the B-spectrum along a perturbation sweep,
    against Re Q^2."""

    plt.rcParams.update({"font.size": 10})

    q2 = np.array([r.q_squared.real for r in records])
    order = np.argsort(q2)
    q2 = q2[order]

    f1, ax1 = plt.subplots(3, 1, sharex=True)
    f1.suptitle("Perturbation sweep")

    # Septic invariant
    ax1[0].plot(q2, [abs(records[k].j) for k in order], 'r')
    ax1[0].set_ylabel("|J|")
    ax1[0].grid(True)

    # Rank
    ax1[1].plot(q2, [records[k].rank_n for k in order], 'ob', markersize=3)
    ax1[1].set_ylabel("rank N")
    ax1[1].set_ylim(-0.5, 7.5)
    ax1[1].grid(True)

    # Spectrum of B
    spectra = np.array([np.sort_complex(records[k].b_eigenvalues)
                        for k in order])
    if spectra.size:
        ax1[2].plot(q2, spectra.real, '.k', markersize=2)
    ax1[2].set_ylabel("Re eig B")
    ax1[2].set_xlabel("Re Q^2")
    ax1[2].grid(True)

    if show:
        plt.show()
    return f1
