"""Sparse-array beamforming weight synthesis and coherent imaging."""

try:
    from ._coarray_bf import *  # noqa: F401,F403
except ImportError:  # built extension on PYTHONPATH (in-tree builds)
    from _coarray_bf import *  # noqa: F401,F403
