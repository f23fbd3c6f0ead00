"""Run a miniature benchmark grid end to end, then run it again.

Two backbones, rotation pretraining plus a random-init baseline, a convex
linear probe on every tap. Takes about five minutes on one core. At this
size the accuracies stay close to chance; the point is the workflow. See
demos/04_desk_results.py for a grid large enough to show a learning signal.

Run: python demos/03_tiny_grid.py [out_dir]
"""
import sys
import tempfile
from pathlib import Path

from sslbench import bench
from sslbench.bench import DatasetBinding, GridConfig
from sslbench.modelzoo import TAP_NAMES, ModelSpec
from sslbench.pretext import PretextSpec
from sslbench.trainer import TrainSchedule

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp()) / "tiny"
config = GridConfig(
    models=[ModelSpec("resnet_v1", 1, input_side=32), ModelSpec("resnet_v2", 1, input_side=32)],
    tasks=[PretextSpec("rotation")],
    datasets=[DatasetBinding("glyphs", synthetic={"n": 2000, "seed": 0}, image_side=32,
                             holdout_size=400)],
    taps=list(TAP_NAMES), random_baseline=True, out_dir=str(out), pretext_val_images=200,
    schedule=TrainSchedule(total_epochs=6, decay_epochs=(4, 5), warmup_epochs=0.5, batch_size=64))
out.mkdir(parents=True, exist_ok=True)
config.save(out / "config.json")

result = bench.run_grid(config, progress=lambda cell: print("cell:", cell.model.label, cell.pretext and cell.pretext.task or bench.RANDOM_INIT))
print(f"\ntrained {result.trained} backbones, wrote {result.new_records} records")

table = bench.emit_main_table(result.records)
print("\n" + table.to_text())
for model, task, k, tap, top1 in bench.emit_layer_curves(result.records):
    print(f"{model:14s} {task:12s} k={k} {tap:10s} {top1:.3f}")

again = bench.run_grid(config)
print(f"\nsecond run: trained {again.trained}, new records {again.new_records}")
print("report files:", [p.name for p in bench.report(result.records, out / "report")])
