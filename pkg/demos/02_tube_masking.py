"""Tube patchification and tube masking.

A clip becomes a grid of spatiotemporal tubes (8x8 pixels x 2 frames by
default); masking hides whole spatial positions across ALL timesteps, so a
masked location can never be filled in by copying a neighboring frame —
predicting it requires understanding the motion. The visualization shades the
masked tubes on a frame.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fils.synthgen import SceneSpec, render_clip
from fils.tubes import PatchSpec, sample_tube_mask, tubeify, untubeify

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

clip = render_clip(
    SceneSpec(shape="circle", color="cyan", motion="down", speed=2.0,
              start=(32.0, 18.0), size=16.0),
    seed=11,
)
spec = PatchSpec(spatial=8, temporal=2)
grid = tubeify(clip.pixels, spec)
dims = spec.grid_dims(*clip.pixels.shape[:3])
print(f"{clip.pixels.shape} pixels -> {grid.tokens.shape[0]} tokens of "
      f"{grid.tokens.shape[1]} values each, grid {dims}")
print(f"tube round-trip is exact: {np.allclose(untubeify(grid, spec), clip.pixels)}")

rng = np.random.default_rng(0)
mask = sample_tube_mask(dims, ratio=0.9, rng=rng)
print(f"mask hides {mask.masked_count}/{dims[1] * dims[2]} spatial tubes "
      f"({mask.masked_count / (dims[1] * dims[2]):.0%}) at every timestep")

counts = np.zeros(dims[1:])
for _ in range(2000):
    counts += sample_tube_mask(dims, 0.9, rng).masked_spatial
print(f"over 2000 draws each position is hidden {counts.min():.0f}-{counts.max():.0f} "
      f"times (uniform expectation {2000 * mask.masked_count / counts.size:.0f})")

fig, axes = plt.subplots(1, 3, figsize=(9.5, 3.2))
axes[0].imshow(clip.pixels[0])
axes[0].set_title("frame t=0", fontsize=9)
shade = np.kron(mask.masked_spatial, np.ones((8, 8)))
for ax, t in ((axes[1], 0), (axes[2], 15)):
    ax.imshow(clip.pixels[t])
    ax.imshow(shade, cmap="gray_r", alpha=0.75, vmin=0, vmax=1)
    ax.set_title(f"same tube mask at t={t}", fontsize=9)
for ax in axes:
    ax.axis("off")
fig.suptitle("90% of spatial positions hidden, constant across time", fontsize=10)
fig.tight_layout()
path = OUT / "tube_mask.png"
fig.savefig(path, dpi=110)
print(f"visualization: {path}")
