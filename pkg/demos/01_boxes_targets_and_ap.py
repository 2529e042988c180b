"""Walk through the geometry and scoring pieces on hand-made boxes.

Run: python demos/01_boxes_targets_and_ap.py
"""

import numpy as np

from fsrw.evaluation import evaluate
from fsrw.geometry import Box, Detection, GridSpec, decode_boxes, encode_targets, iou, nms

# Two overlapping boxes in normalized center form.
a = Box(0.40, 0.50, 0.30, 0.30, class_id=0)
b = Box(0.50, 0.50, 0.30, 0.30, class_id=0)
print(f"IoU of the two boxes: {iou(a, b):.3f}")

# An 8x8 grid with three anchor shapes, measured in cells.
grid = GridSpec(8, ((0.8, 1.0), (2.0, 1.8), (3.5, 3.2)))
targets = encode_targets([a, Box(0.8, 0.2, 0.1, 0.15, class_id=1)], grid)
print("positive (row, col, anchor) slots:", targets.positive_indices())
print("slot counts:", targets.counts())

# Writing the encoded targets back as raw predictions recovers the boxes.
raw = np.zeros((8, 8, 3, 4))
raw[..., :2] = targets.logit_xy
raw[..., 2:] = targets.twh
decoded = decode_boxes(raw, grid)
for y, x, k in targets.positive_indices():
    print(f"slot {(y, x, k)} decodes to", np.round(decoded[y, x, k], 4))

# Non-maximum suppression keeps the stronger of two overlapping same-class boxes.
dets = [Detection(a, 0, 0.9), Detection(b, 0, 0.6), Detection(Box(0.8, 0.8, 0.1, 0.1, 1), 1, 0.4)]
kept = nms(dets, 0.45)
print(f"NMS keeps {len(kept)} of {len(dets)} detections:", [round(d.score, 2) for d in kept])

# Score the survivors against ground truth on one image.
report = evaluate([kept], [[a, Box(0.8, 0.8, 0.1, 0.1, 1)]], class_ids=[0, 1], class_names=["left", "corner"])
print(report.table())
