"""Chaos game with four hyperbolic generators.

Random products of the four squeezing maps drive the squeezed-state
parameter toward the boundary circle.  At small squeezing the angular
distribution stays dense; at beta = 0.75 a Cantor-like gap structure
appears on the circle (compare the empty-bin fractions below, and the
log-scale angular histograms).
"""

import os

import numpy as np

from qblob import WalkConfig, angular_histogram, density_grid, \
    hyperbolic_family, radial_histogram, run_chaos_game
from qblob.formats import tone_map, write_histogram_csv, write_pgm, write_points_csv

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

STEPS = 10 ** 6
BINS = 1024

clouds = {}
for beta in (0.1, 0.75):
    cfg = WalkConfig(generators=hyperbolic_family(beta), steps=STEPS, seed=1,
                     burn_in=0)
    cloud = run_chaos_game(cfg)
    clouds[beta] = cloud
    counts = angular_histogram(cloud, BINS)
    radial = radial_histogram(cloud, 100)
    print(f"beta = {beta}: {len(cloud)} points, {cloud.clamp_count} boundary "
          f"clamps, empty angular bins {np.mean(counts == 0):.1%}, "
          f"outermost 1% radius holds {radial[-1] / radial.sum():.1%} of mass")

    grid, _ = density_grid(cloud, 768)
    write_pgm(os.path.join(OUT, f"cloud_beta{beta}.pgm"),
              tone_map(grid[::-1, :], log=True))
    write_histogram_csv(os.path.join(OUT, f"angles_beta{beta}.csv"), counts)
    write_points_csv(os.path.join(OUT, f"points_beta{beta}.csv"), cloud)
    print(f"  wrote cloud_beta{beta}.pgm, angles_beta{beta}.csv, "
          f"points_beta{beta}.csv")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(2, 2, figsize=(11, 9))
    for col, beta in enumerate((0.1, 0.75)):
        pts = clouds[beta].points[:: max(1, STEPS // 200000)]
        axes[0, col].plot(pts.real, pts.imag, ",", color="navy", alpha=0.4)
        axes[0, col].set_aspect("equal")
        axes[0, col].set_title(f"chaos game, beta = {beta}")
        counts = angular_histogram(clouds[beta], BINS)
        axes[1, col].semilogy(np.linspace(-np.pi, np.pi, BINS, endpoint=False),
                              np.maximum(counts, 0.5), lw=0.6)
        axes[1, col].set_title("angular histogram (log scale)")
        axes[1, col].set_xlabel("arg z")
    png = os.path.join(OUT, "hyperbolic_walks.png")
    fig.savefig(png, dpi=150, bbox_inches="tight")
    print(f"wrote {png}")
except ImportError:
    print("matplotlib not available; skipped the PNG figure")
