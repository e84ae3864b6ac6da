"""
스윕/열거 구간 프로파일러 (Chrome Trace Event JSON)

구간은 끝날 때 한 번에 완료 이벤트("X", 시작 시각 + 길이)로 남기고,
열거 결과 같은 수치는 카운터 이벤트("C")로 남긴다.
CLI 의 --trace FILE 이 켤 때만 기록한다.

    with MeasureTime("count_size", "enumeration", {"n": 9}) as span:
        total = ...
        span.annotate(count=total)
"""
import atexit
import json
import logging
import threading
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

PROCESS_ID = 1
PROCESS_NAME = "partial_shuffles"


def _now_us() -> float:
    return time.perf_counter() * 1_000_000


@dataclass(frozen=True)
class SpanEvent:
    name: str
    category: str
    phase: str  # X = 완료 구간, C = 카운터
    start_us: float
    thread_id: int
    duration_us: Optional[float] = None
    args: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        event: Dict[str, Any] = {
            "name": self.name,
            "cat": self.category,
            "ph": self.phase,
            "ts": round(self.start_us, 3),
            "pid": PROCESS_ID,
            "tid": self.thread_id,
        }
        if self.duration_us is not None:
            event["dur"] = round(self.duration_us, 3)
        if self.args:
            event["args"] = self.args
        return event


class Tracer:
    """프로세스 전체에서 하나. get() 으로 얻는다"""

    _instance: Optional["Tracer"] = None
    _instance_lock = threading.Lock()

    def __init__(self):
        self._lock = threading.Lock()
        self._events: List[SpanEvent] = []
        self._thread_names: Dict[int, str] = {}
        self._origin_us = _now_us()
        self._exit_hook = False
        self.enabled = False
        self.output_file: Optional[str] = None

    @classmethod
    def get(cls) -> "Tracer":
        with cls._instance_lock:
            if cls._instance is None:
                cls._instance = cls()
            return cls._instance

    def enable(self, output_file: str):
        with self._lock:
            self._events.clear()
            self._origin_us = _now_us()
            self.output_file = output_file
            self.enabled = True
            if not self._exit_hook:
                atexit.register(self.finish)
                self._exit_hook = True

    def name_thread(self, name: str):
        with self._lock:
            self._thread_names[threading.get_ident()] = name

    def record_span(self, name: str, category: str, start_us: float, args: Dict[str, Any]):
        if not self.enabled:
            return
        end_us = _now_us()
        self._append(SpanEvent(
            name, category, "X", start_us - self._origin_us, threading.get_ident(),
            duration_us=end_us - start_us, args=dict(args),
        ))

    def record_counter(self, name: str, category: str, values: Dict[str, int]):
        """값들은 정수여야 chrome://tracing 이 그래프로 그린다"""
        if not self.enabled:
            return
        self._append(SpanEvent(
            name, category, "C", _now_us() - self._origin_us, threading.get_ident(), args=dict(values),
        ))

    def _append(self, event: SpanEvent):
        with self._lock:
            self._events.append(event)

    def snapshot(self) -> Dict[str, Any]:
        with self._lock:
            names = [
                {"name": "thread_name", "ph": "M", "pid": PROCESS_ID, "tid": tid, "args": {"name": label}}
                for tid, label in sorted(self._thread_names.items())
            ]
            process = {"name": "process_name", "ph": "M", "pid": PROCESS_ID, "args": {"name": PROCESS_NAME}}
            return {
                "traceEvents": [process] + names + [event.to_dict() for event in self._events],
                "displayTimeUnit": "ms",
            }

    def finish(self):
        """기록을 끝내고 파일로 쓴다. 켜져 있지 않으면 아무것도 안 함"""
        if not self.enabled or self.output_file is None:
            return
        trace = self.snapshot()
        self.enabled = False
        with open(self.output_file, "w", encoding="utf-8") as f:
            json.dump(trace, f)
        logger.info("wrote %d trace events to %s", len(trace["traceEvents"]), self.output_file)


class MeasureTime:
    """with 블록 하나를 완료 구간 이벤트 하나로 기록"""

    def __init__(self, name: str, category: str = "sweep", args: Optional[Dict[str, Any]] = None):
        self.name = name
        self.category = category
        self.args: Dict[str, Any] = dict(args or {})
        self._start_us = 0.0

    def annotate(self, **values: Any):
        """구간이 끝날 때 함께 남길 결과값"""
        self.args.update(values)

    def __enter__(self) -> "MeasureTime":
        self._start_us = _now_us()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is not None:
            self.args["error"] = exc_type.__name__
        Tracer.get().record_span(self.name, self.category, self._start_us, self.args)
        return False


def set_thread_name(name: str):
    Tracer.get().name_thread(name)
