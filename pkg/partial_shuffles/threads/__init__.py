"""Worker pool for subtree sweeps"""
from .task import Task
from .sweep_runner import SweepRunner

__all__ = [
    "Task",
    "SweepRunner",
]
