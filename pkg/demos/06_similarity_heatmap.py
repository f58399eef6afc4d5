"""Where does the model think the caption is happening?

Each spatial patch's features are projected into the caption embedding space;
cosine similarity against a caption gives an 8x8 heatmap. With a pretrained
checkpoint the mass should sit on the object, and swapping in a caption that
names a different color/shape should move or flatten it.

Uses the acceptance suite's memoized checkpoint when present (see demo 05),
falling back to the mini run from demo 05 (run that first otherwise).
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import torch

torch.set_num_threads(1)

sys.path.insert(0, str(Path(__file__).parent))
from _mini import OUT

from fils.action_area import mask_to_patches
from fils.evaluate import similarity_heatmap
from fils.models import load_checkpoint
from fils.synthgen import load_clip

candidates = [
    (Path("runs/acceptance/fils_s0/final.pt"), Path("runs/acceptance/data")),
    (OUT / "mini_run" / "final.pt", OUT / "mini_corpus"),
]
for checkpoint, data in candidates:
    if checkpoint.exists() and (data / "val" / "manifest.json").exists():
        break
else:
    sys.exit("no checkpoint found — run demos/05_pretrain_and_probe.py (or the "
             "acceptance suite) first")

print(f"checkpoint: {checkpoint}")
model, meta = load_checkpoint(checkpoint)

clips = []
for i in range(64):
    clip = load_clip(data / "val" / f"clip_{i:05d}.npz")
    if "still" not in clip.caption:
        clips.append(clip)
    if len(clips) == 3:
        break

OUT.mkdir(exist_ok=True)
fig, axes = plt.subplots(len(clips), 3, figsize=(8.6, 2.8 * len(clips)))
for row, clip in zip(axes, clips):
    counter = "the red square moves left"
    if counter == clip.caption:
        counter = "the blue circle moves up"
    own = similarity_heatmap(model, clip)
    other = similarity_heatmap(model, clip, caption=counter)
    truth = mask_to_patches(clip.motion_mask, own.shape)
    grid = np.zeros(own.shape, dtype=bool)
    for y, x in truth:
        grid[y, x] = True
    print(f"{clip.caption!r}: own-caption heat inside object patches "
          f"{own[grid].mean():.2f} vs outside {own[~grid].mean():.2f}")
    row[0].imshow(clip.pixels[8])
    row[0].set_title(clip.caption, fontsize=8)
    row[1].imshow(own, cmap="inferno", vmin=0, vmax=1)
    row[1].set_title("own caption", fontsize=8)
    row[2].imshow(other, cmap="inferno", vmin=0, vmax=1)
    row[2].set_title(f"counterfactual:\n{counter}", fontsize=8)
    for ax in row:
        ax.set_xticks([]), ax.set_yticks([])
fig.tight_layout()
path = OUT / "similarity_heatmaps.png"
fig.savefig(path, dpi=110)
print(f"panel: {path}")
