import threading
import time

import pytest

from partial_shuffles.common import InvalidParamsError
from partial_shuffles.threads import SweepRunner, Task


def _slow_square(x):
    # 늦게 끝나는 작업이 먼저 제출되어도 결과 순서는 제출 순서
    time.sleep(0.01 * (5 - x))
    return x * x


def test_results_in_submission_order():
    tasks = [Task(_slow_square, x, name=f"square {x}") for x in range(5)]
    assert SweepRunner(workers=3).run_all(tasks) == [0, 1, 4, 9, 16]


def test_single_worker_runs_inline():
    seen = []
    tasks = [Task(lambda: seen.append(threading.current_thread().name)) for _ in range(2)]
    SweepRunner(workers=1).run_all(tasks)
    assert seen == [threading.current_thread().name] * 2


def test_rejects_zero_workers():
    with pytest.raises(InvalidParamsError):
        SweepRunner(workers=0)


def test_task_releases_arguments():
    task = Task(max, 3, 7, name="max")
    assert task.run() == 7
    assert task.args is None
    assert repr(task) == "Task(max)"


def test_process_pool_keeps_submission_order():
    tasks = [Task(pow, 2, x, name=f"pow {x}") for x in range(6)]
    assert SweepRunner(workers=2, processes=True).run_all(tasks) == [1, 2, 4, 8, 16, 32]
