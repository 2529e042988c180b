"""Generate the shapes benchmark, pick a class split and look at what training sees.

Run: python demos/02_synthetic_data_and_episodes.py [out_dir]
Writes a small dataset (index.json plus PNGs) to out_dir, default ./demo_data.
"""

import sys

from fsrw.config import DataConfig
from fsrw.data import synth_generate
from fsrw.episodes import base_episode_sampler, build_finetune_set, preset_split

out_dir = sys.argv[1] if len(sys.argv) > 1 else "demo_data"
ds = synth_generate(DataConfig(n_train=200, n_test=40))
print(f"{len(ds)} images; classes: {', '.join(ds.class_names)}")
print("boxes per class:", dict(zip(ds.class_names, ds.class_counts().tolist())))
ds.save(out_dir)
print(f"saved to {out_dir}/")

split = preset_split(1)
print("novel classes:", [ds.class_names[c] for c in split.novel_ids])

# A base-training episode: one masked support image per base class plus query images.
train = ds.subset("train")
task = base_episode_sampler(train, split, batch_size=4, master_seed=0).episode(0)
for s in task.support:
    print(f"  support {train.class_names[s.class_id]:<16} mask covers {int(s.mask.sum())} pixels")
for q in task.query:
    print(f"  query image {train.records[q.index].image_id}: {len(q.boxes)} supervised, {len(q.ignore)} ignored")

# The fine-tuning set holds exactly k boxes of every class.
for k in (1, 5, 10):
    fs = build_finetune_set(train, split, k)
    print(f"k={k}: {len(fs.queries)} images, boxes per class {set(fs.box_counts().values())}")
