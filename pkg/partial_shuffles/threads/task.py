"""스윕 작업 단위"""
from typing import Any, Callable


class Task:
    def __init__(self, task_code: Callable[..., Any], *args, name: str = "task"):
        self.task_code = task_code
        self.args = args
        self.name = name

    def run(self) -> Any:
        result = self.task_code(*self.args)
        self.task_code = None
        self.args = None
        return result

    def __repr__(self) -> str:
        return f"Task({self.name})"
