from __future__ import annotations

from hypothesis import settings

# first calls build cached tables and jit-compile kernels, so wall-clock deadlines are noise
settings.register_profile("chromtree", deadline=None, derandomize=True)
settings.load_profile("chromtree")
