"""Walk through the model zoo: widths, taps and the invertible RevNet stacks.

Run: python demos/01_architectures.py
"""
import torch

from sslbench import modelzoo as mz
from sslbench.modelzoo import ModelSpec, build_model

torch.manual_seed(0)

# Pre-logits size grows linearly with the widening factor.
print("family       k=4    k=8   k=12   k=16")
for family in mz.FAMILIES:
    dims = [mz.representation_dim(ModelSpec(family, k)) for k in (4, 8, 12, 16)]
    print(f"{family:10s}" + "".join(f"{d:7d}" for d in dims))

# A small RevNet: every stride-free stack can be run backwards.
model = build_model(ModelSpec("revnet50", 1, input_side=32)).eval()
print(f"\nRevNet50 k=1: {mz.count_parameters(model):,} parameters")
with torch.no_grad():
    for stack, width in zip(model.rev_stacks(), mz.RESIDUAL_WIDTHS):
        x = torch.randn(4, width, 4, 4)
        err = (stack.inverse(stack(x)) - x).abs().max().item()
        print(f"  stack of {len(stack)} units, {width} channels: reconstruction error {err:.1e}")

# Every backbone exposes the same named taps.
taps = mz.extract_taps(model, torch.rand(2, 3, 32, 32))
print("\ntaps:", {name: tuple(v.shape) for name, v in taps.items()})

# The "(-)" variant only differs in the rectifier before pooling.
for relu in (True, False):
    spec = ModelSpec("resnet_v2", 1, final_relu=relu, input_side=32)
    feats = mz.extract_representation(build_model(spec).eval(), "pre_logits", torch.rand(8, 3, 32, 32))
    print(f"{spec.label:18s} min pre-logit {feats.min():+.3f}")
