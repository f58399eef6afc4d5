"""The full pipeline: self-supervised pretraining, then a frozen-feature probe.

Pretraining never sees a label — it aligns masked-prediction features with
captions over detected motion areas. The probe then trains only a linear
classifier on frozen features to predict the eight motion classes, compared
against the identical architecture with random (untrained) weights.

Representation quality needs training scale: if the acceptance suite's
memoized run exists under runs/acceptance/ (built by `pytest
tests/test_acceptance.py`, ~7 min for the first fils run), this demo probes
that checkpoint and shows a ~25-point gap. Otherwise it runs a ~1-minute
mini pipeline end to end, where the gap is within noise — same code, scale
is the only difference.
"""

import sys
from pathlib import Path

import torch

torch.set_num_threads(1)

sys.path.insert(0, str(Path(__file__).parent))
from _mini import mini_train_config

from fils.config import TrainConfig
from fils.data import load_split
from fils.evaluate import extract_features, probe_features
from fils.models import build_model, load_checkpoint
from fils.train import model_config_from, pretrain

acceptance_run = Path("runs/acceptance/fils_s0/final.pt")
acceptance_data = Path("runs/acceptance/data/val/manifest.json")

if acceptance_run.exists() and acceptance_data.exists():
    print(f"using the acceptance suite's memoized run: {acceptance_run}")
    cfg = TrainConfig(data_dir="runs/acceptance/data")
    final = acceptance_run
else:
    print("no memoized acceptance run found; running the mini pipeline "
          "(~1 minute — expect a gap within noise at this scale)")
    cfg = mini_train_config()
    final = pretrain(cfg)
    print(f"checkpoint: {final}")

train = load_split(cfg.data_dir, "train")
val = load_split(cfg.data_dir, "val")
pretrained, _ = load_checkpoint(final)
random_init = build_model(model_config_from(cfg, *train.frame_shape), seed=0)

results = {}
for name, model in (("pretrained", pretrained), ("random init", random_init)):
    result = probe_features(
        extract_features(model, train), train.labels,
        extract_features(model, val), val.labels,
    )
    results[name] = result.top1
    print(f"\n{name} frozen-feature probe: top-1 {result.top1:.1f}% on {result.n_val} val clips")
    print(result.table())

gap = results["pretrained"] - results["random init"]
print(f"\npretraining is worth {gap:+.1f} points here")
