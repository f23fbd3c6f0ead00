"""Summarize the desk-scale grids recorded under runs/desk.

Populate them first with
    sslbench grid --config configs/desk_layers.json
    sslbench grid --config configs/desk_probes.json
which takes several hours on one CPU core.

Run: python demos/04_desk_results.py
"""
from pathlib import Path

from sslbench import bench

root = Path(__file__).resolve().parents[1] / "runs" / "desk"
records = bench.Journal(root / "results.jsonl").read()
if not records:
    raise SystemExit(f"no records in {root}; run the desk grids first")
print(f"{len(records)} records\n")

print("convex probe per tap, median over seeds")
for model, task, k, tap, top1 in bench.emit_layer_curves(records):
    print(f"  {task:12s} k={k} {tap:10s} {100 * top1:.1f}")

print("\nSGD probe, final top-1 by first decay epoch")
for (model, task, k, tap, first), curve in bench.emit_schedule_curves(records).items():
    print(f"  {task:12s} k={k} decay@{first:<4d} {100 * curve[-1]:.1f}")

comp = bench.emit_linear_vs_mlp(records)
print(f"\nlinear vs MLP over {len(comp.cells)} cells, Spearman {comp.rank_correlation}")
for cell, lin, mlp in zip(comp.cells, comp.linear, comp.mlp):
    print(f"  {cell[1]:12s} k={cell[2]}  linear {100 * lin:.1f}  mlp {100 * mlp:.1f}")
