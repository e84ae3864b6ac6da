"""
SweepRunner - 독립적인 부분 트리를 워커에 나눠 실행

- 기본은 ThreadPoolExecutor (가벼운 작업, 모두 같은 프로세스의 트레이서에 기록)
- processes=True 면 ProcessPoolExecutor. 열거처럼 CPU만 쓰는 작업은 GIL 때문에
  스레드로는 빨라지지 않는다. 이때 Task 의 함수와 인자는 pickle 가능해야 한다.
- 결과는 항상 제출 순서대로 돌려줌 (병합이 워커 수와 무관하게 결정적)
"""
import threading
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any, List, Sequence

from ..common.errors import InvalidParamsError
from ..profiling import MeasureTime, set_thread_name
from .task import Task


class SweepRunner:
    def __init__(self, workers: int = 1, category: str = "sweep", processes: bool = False):
        if workers < 1:
            raise InvalidParamsError(f"workers must be positive, got {workers}")
        self.workers = workers
        self.category = category
        self.processes = processes

    def _run_one(self, task: Task) -> Any:
        set_thread_name(threading.current_thread().name)
        with MeasureTime(task.name, self.category):
            return task.run()

    def _executor(self) -> Executor:
        if self.processes:
            return ProcessPoolExecutor(max_workers=self.workers)
        return ThreadPoolExecutor(max_workers=self.workers, thread_name_prefix="SweepWorker")

    def run_all(self, tasks: Sequence[Task]) -> List[Any]:
        """모든 Task를 실행하고 제출 순서대로 결과 리스트를 반환"""
        if self.workers == 1 or len(tasks) <= 1:
            return [self._run_one(task) for task in tasks]

        with MeasureTime(f"{len(tasks)} tasks on {self.workers} workers", self.category,
                         {"processes": self.processes}):
            with self._executor() as executor:
                if self.processes:
                    futures = [executor.submit(task.run) for task in tasks]
                else:
                    futures = [executor.submit(self._run_one, task) for task in tasks]
                return [future.result() for future in futures]
