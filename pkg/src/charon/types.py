"""Core domain types: sequence shapes, skeleton sequences, labeled samples, benchmarks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError


@dataclass(frozen=True)
class SequenceShape:
    """Axis sizes of a skeleton sequence tensor, indexed [coord][frame][joint][body]."""

    coords: int
    frames: int
    joints: int
    bodies: int

    def __post_init__(self):
        for name in ("coords", "frames", "joints", "bodies"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 1:
                raise ValidationError(f"{name} must be a positive integer, got {value!r}")

    @property
    def element_count(self) -> int:
        return self.coords * self.frames * self.joints * self.bodies

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.coords, self.frames, self.joints, self.bodies)


@dataclass
class SkeletonSequence:
    """A joint-coordinate tensor of shape (coords, frames, joints, bodies), float32.

    All values must be finite; the array dims must match ``shape``.
    """

    shape: SequenceShape
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float32)
        if values.shape != self.shape.as_tuple():
            raise ValidationError(
                f"tensor shape {values.shape} does not match declared {self.shape.as_tuple()}"
            )
        if not np.all(np.isfinite(values)):
            raise ValidationError("sequence contains non-finite values")
        self.values = values

    @classmethod
    def from_values(cls, values: np.ndarray) -> "SkeletonSequence":
        values = np.asarray(values, dtype=np.float32)
        if values.ndim != 4:
            raise ValidationError(f"expected a 4-d tensor (C,F,V,B), got ndim={values.ndim}")
        return cls(SequenceShape(*values.shape), values)


@dataclass
class LabeledSample:
    """A skeleton sequence together with its 0-based class id."""

    sequence: SkeletonSequence
    label: int
    sample_id: str = ""

    def __post_init__(self):
        if self.label < 0:
            raise ValidationError(f"label must be >= 0, got {self.label}")


@dataclass
class BenchmarkSpec:
    """A class-incremental benchmark: an ordered split of class ids into disjoint tasks."""

    total_classes: int
    tasks: list[list[int]]
    fixed_length: int = 120
    class_order: list[int] = field(default_factory=list)

    def __post_init__(self):
        if self.total_classes < 1:
            raise ValidationError("total_classes must be >= 1")
        if self.fixed_length < 1:
            raise ValidationError("fixed_length must be >= 1")
        if not self.tasks:
            raise ValidationError("benchmark must define at least one task")
        seen: set[int] = set()
        for i, task in enumerate(self.tasks):
            if not task:
                raise ValidationError(f"task {i} is empty")
            ids = set(task)
            if len(ids) != len(task):
                raise ValidationError(f"task {i} repeats a class id")
            if ids & seen:
                raise ValidationError(f"task {i} overlaps a previous task: {sorted(ids & seen)}")
            out_of_range = [c for c in ids if c < 0 or c >= self.total_classes]
            if out_of_range:
                raise ValidationError(f"task {i} has class ids outside [0, {self.total_classes}): {out_of_range}")
            seen |= ids
        if not self.class_order:
            self.class_order = [c for task in self.tasks for c in task]

    @classmethod
    def from_class_order(
        cls,
        total_classes: int,
        tasks_count: int,
        classes_per_task: int,
        class_order: list[int],
        fixed_length: int = 120,
    ) -> "BenchmarkSpec":
        """Build the task list by chunking ``class_order`` into consecutive groups."""
        if tasks_count * classes_per_task != len(class_order):
            raise ValidationError(
                f"class_order has {len(class_order)} entries but "
                f"{tasks_count} tasks x {classes_per_task} classes were declared"
            )
        tasks = [
            list(class_order[i * classes_per_task : (i + 1) * classes_per_task])
            for i in range(tasks_count)
        ]
        return cls(total_classes, tasks, fixed_length, list(class_order))

    @property
    def task_count(self) -> int:
        return len(self.tasks)

    def as_joint(self) -> "BenchmarkSpec":
        """Collapse all tasks into a single joint-training task."""
        return BenchmarkSpec(
            self.total_classes,
            [list(self.class_order)],
            self.fixed_length,
            list(self.class_order),
        )
