"""SKL1 container: a flat little-endian file format for labeled skeleton sequences.

Layout (all integers little-endian):

    bytes 0-3   magic "SKL1"
    u32         version (1)
    u32         sample_count
    u32 x4      C, F, V, B
    u32         reserved (0)            -> 32-byte header
    per sample: u32 label, then C*F*V*B float32 values in [c][t][v][b] order
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import CorruptionError, FormatError, ValidationError
from .types import LabeledSample, SequenceShape, SkeletonSequence

MAGIC = b"SKL1"
VERSION = 1
_HEADER = struct.Struct("<4sIIIIIII")
_LABEL = struct.Struct("<I")


def write_container(samples: list[LabeledSample], path: str | Path) -> None:
    """Write samples to ``path``; all samples must share one shape."""
    path = Path(path)
    if samples:
        shape = samples[0].sequence.shape
        for i, sample in enumerate(samples):
            if sample.sequence.shape != shape:
                raise ValidationError(
                    f"sample {i} has shape {sample.sequence.shape.as_tuple()}, "
                    f"expected {shape.as_tuple()}"
                )
        dims = shape.as_tuple()
    else:
        dims = (0, 0, 0, 0)

    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, VERSION, len(samples), *dims, 0))
        for sample in samples:
            fh.write(_LABEL.pack(sample.label))
            payload = np.ascontiguousarray(sample.sequence.values, dtype="<f4")
            fh.write(payload.tobytes())


def read_container(path: str | Path) -> list[LabeledSample]:
    """Read samples from ``path``, validating magic, size, and finiteness."""
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < _HEADER.size:
        raise FormatError(f"{path}: file too short for an SKL1 header")
    magic, version, count, c, f, v, b, _ = _HEADER.unpack_from(raw, 0)
    if magic != MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise FormatError(f"{path}: unsupported version {version}")

    if count == 0:
        if len(raw) != _HEADER.size:
            raise CorruptionError(f"{path}: trailing bytes after empty container")
        return []

    shape = SequenceShape(c, f, v, b)
    record = _LABEL.size + 4 * shape.element_count
    expected = _HEADER.size + count * record
    if len(raw) < expected:
        raise CorruptionError(
            f"{path}: header declares {count} samples but payload holds "
            f"{(len(raw) - _HEADER.size) // record}"
        )
    if len(raw) > expected:
        raise CorruptionError(f"{path}: {len(raw) - expected} trailing bytes")

    samples = []
    offset = _HEADER.size
    stem = path.stem
    for i in range(count):
        (label,) = _LABEL.unpack_from(raw, offset)
        offset += _LABEL.size
        values = np.frombuffer(raw, dtype="<f4", count=shape.element_count, offset=offset)
        offset += 4 * shape.element_count
        values = values.reshape(shape.as_tuple()).copy()
        if not np.all(np.isfinite(values)):
            raise ValidationError(f"{path}: sample {i} contains non-finite values")
        samples.append(
            LabeledSample(SkeletonSequence(shape, values), int(label), f"{stem}:{i:06d}")
        )
    return samples
