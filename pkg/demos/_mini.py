"""Shared helpers for the training demos: a small corpus and a small model.

The corpus (64 train + 32 val clips of 16x64x64) renders once into demos/out/
and is reused by the overfit, pretraining, and heatmap demos. The model is a
32-dim, 2-block encoder — big enough to learn the toy task's structure, small
enough that every demo finishes in about a minute on one CPU core.
"""

from pathlib import Path

from fils.config import TrainConfig
from fils.synthgen import DatasetConfig, generate_dataset

OUT = Path(__file__).parent / "out"
CORPUS = OUT / "mini_corpus"


def mini_corpus() -> Path:
    if not (CORPUS / "val" / "manifest.json").exists():
        print("rendering the demo corpus (64+32 clips) ...")
        generate_dataset(
            DatasetConfig(train_clips=64, val_clips=32, frames=16,
                          height=64, width=64, seed=7),
            CORPUS,
        )
    return CORPUS


def mini_train_config(**overrides) -> TrainConfig:
    base = dict(
        data_dir=str(mini_corpus()),
        run_dir=str(OUT / "mini_run"),
        epochs=24,
        batch_size=16,
        embed_dim=32,
        depth=2,
        heads=2,
        mlp_ratio=2.0,
        predictor_depth=1,
        text_dim=16,
        text_depth=1,
        proj_hidden=32,
        lr_peak=1e-3,
        lr_end=1e-4,
        log_every=8,
        seed=0,
    )
    base.update(overrides)
    return TrainConfig(**base)
