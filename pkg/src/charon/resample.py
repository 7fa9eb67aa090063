"""Fixed-length temporal resampling of skeleton sequences."""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .types import SequenceShape, SkeletonSequence


def resample_bilinear(seq: SkeletonSequence, target_frames: int) -> SkeletonSequence:
    """Resample a sequence to ``target_frames`` by linear interpolation along time.

    Output frame t maps to source position t*(F-1)/(target-1); first and last
    frames are aligned. A matching frame count returns the input unchanged.
    """
    if target_frames < 1:
        raise ValidationError(f"target frame count must be >= 1, got {target_frames}")
    frames = seq.shape.frames
    if target_frames == frames:
        return seq

    if target_frames == 1 or frames == 1:
        positions = np.zeros(target_frames)
    else:
        positions = np.arange(target_frames) * ((frames - 1) / (target_frames - 1))
    lower = np.minimum(positions.astype(np.int64), frames - 1)
    upper = np.minimum(lower + 1, frames - 1)
    weight = (positions - lower).astype(np.float32)
    weight[upper == lower] = 0.0

    w = weight[None, :, None, None]
    values = seq.values
    out = (1.0 - w) * values[:, lower] + w * values[:, upper]
    shape = SequenceShape(seq.shape.coords, target_frames, seq.shape.joints, seq.shape.bodies)
    return SkeletonSequence(shape, out.astype(np.float32))
