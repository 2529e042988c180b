"""Train the reweighting detector on base classes, then adapt it to novel classes with k shots.

Run: python demos/03_base_train_and_adapt.py [base_iterations] [k]
The defaults (600 iterations, k=5) take a few minutes on one CPU core and
give a rough model; the full desk schedule is 5000 iterations.
"""

import sys

import torch

from fsrw.config import ExperimentConfig
from fsrw.data import synth_generate
from fsrw.episodes import preset_split
from fsrw.evaluation import analyze_vectors
from fsrw.train import base_codebook, base_train, evaluate_model, finetune

torch.set_num_threads(1)
iterations = int(sys.argv[1]) if len(sys.argv) > 1 else 600
k = int(sys.argv[2]) if len(sys.argv) > 2 else 5

cfg = ExperimentConfig()
cfg.train.base.iterations = iterations
cfg.train.base.schedule = [(0, 1e-3), (min(100, iterations // 4), 1e-2)]
cfg.data.n_train, cfg.data.n_test = 1000, 150
ds = synth_generate(cfg.data)
train, test = ds.subset("train"), ds.subset("test")
split = preset_split(1)

model, record = base_train(cfg, train, split)
print(f"base training: {iterations} iterations in {record.wall_clock:.0f}s, "
      f"loss {record.losses[0]['total']:.2f} -> {record.summary()['final_loss_mean20']:.2f}")
codebook = base_codebook(model, train, split.base_ids, shots=10)
print(f"base mAP: {100 * evaluate_model(model, test, split, codebook, classes=split.base_ids)['base'].map:.1f}")

model, codebook, record, fset = finetune(cfg, model, train, split, k)
reports = evaluate_model(model, test, split, codebook)
print(f"after {k}-shot fine-tuning: base mAP {100 * reports['base'].map:.1f}, "
      f"novel mAP {100 * reports['novel'].map:.1f}")
print(reports["novel"].table())

# Channels whose codebook value varies most across classes carry the class identity.
va = analyze_vectors(codebook.per_shot, codebook.vectors, train.class_names)
print("highest-variance channels:", va.variances[:5].round(4).tolist())
