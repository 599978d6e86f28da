"""Deformation of the polar grid by disk maps.

A hyperbolic map (two boundary fixed points at +-i) pulls the Euclidean
polar grid toward its fixed points while preserving the hyperbolic
geometry of the disk; a strong parabolic shear (single fixed point at 1)
bends the horizontal diameter into a circular arc through that point.
"""

import os

import numpy as np

from qblob import deform_grid, disk_map, hyperbolic_generator, parabolic_generator
from qblob.formats import write_polylines_csv

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

cases = [
    ("hyperbolic_07", hyperbolic_generator(0.7, 1)[1]),
    ("parabolic_5", parabolic_generator(5.0, 1)[1]),
]

for name, element in cases:
    curves = deform_grid(element, radial_lines=16, circles=10,
                         samples_per_curve=256)
    path = os.path.join(OUT, f"deform_{name}.csv")
    write_polylines_csv(path, curves)
    print(f"{name}: wrote {len(curves)} curves to {path}")

# the image of the diameter -1 < x < 1 under the parabolic shear
_, par = parabolic_generator(5.0, 1)
xs = np.linspace(-0.999, 0.999, 65)
arc = np.array([disk_map(par, x) for x in xs])
print(f"diameter image endpoints: {arc[0]:.4f} .. {arc[-1]:.4f} "
      f"(fixed point of the shear: {disk_map(par, 1.0):.1f})")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 2, figsize=(10, 5))
    for ax, (name, element) in zip(axes, cases):
        for kind, zs in deform_grid(element, 16, 10, 256):
            ax.plot(zs.real, zs.imag, "b-", lw=0.5)
        circle = np.exp(1j * np.linspace(0, 2 * np.pi, 256))
        ax.plot(circle.real, circle.imag, "k-", lw=1)
        ax.set_aspect("equal")
        ax.set_title(name)
    axes[1].plot(arc.real, arc.imag, "r-", lw=2)
    png = os.path.join(OUT, "deformations.png")
    fig.savefig(png, dpi=150, bbox_inches="tight")
    print(f"wrote {png}")
except ImportError:
    print("matplotlib not available; skipped the PNG figure")
