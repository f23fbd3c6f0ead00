"""Build one batch for each pretext task and look at its label statistics.

Run: python demos/02_pretext_tasks.py
"""
import numpy as np
import torch

from sslbench import pretext as pt
from sslbench.synthetic import glyph_classes, make_glyph_dataset

rng = np.random.default_rng(0)
pixels, labels = make_glyph_dataset(64, seed=0, side=96)
images = pixels.astype(np.float32) / 255
print(f"{len(images)} glyph images of classes {glyph_classes()[:3]}...")

# Rotation: four copies per image, one per quarter turn.
rot = pt.make_rotation_batch(images[:, :64, :64])
print("rotation   inputs", rot.inputs.shape, "label counts", np.bincount(rot.targets).tolist())

# Patch pipeline: 3x3 grid of standardized patches, some in grayscale.
geom = pt.PatchGeometry.for_input_side(96)
grid = pt.extract_patch_grid(images[0], geom, True, rng)
print(f"patch grid {grid.patches.shape}, grayscale={grid.grayscale}, "
      f"per-patch mean {np.abs(grid.patches.mean((1, 2, 3))).max():.1e}")

# Relative patch location: 8 neighbour positions around the centre patch.
rel = pt.make_relpatchloc_batch(images[:4], geom, rng, pairs_per_image=200)
print("relpatch   label freq", np.round(np.bincount(rel.targets, minlength=8) / len(rel.targets), 3))

# Jigsaw draws its targets from a fixed, seeded set of permutations.
perms = pt.generate_permutation_set(seed=0, count=100)
print(f"jigsaw     {len(perms.perms)} permutations, min Hamming distance {perms.min_hamming}")

# Exemplar: copies of the same image share an id; the triplet loss pulls them together.
ids = np.repeat(np.arange(4), 8)
emb = torch.randn(32, 16)
tight = torch.as_tensor(np.repeat(np.eye(4, 16) * 5, 8, axis=0), dtype=torch.float32)
print(f"triplet    random embeddings {pt.triplet_loss(emb, ids).item():.3f}, "
      f"clustered {pt.triplet_loss(tight, ids).item():.3f}")
