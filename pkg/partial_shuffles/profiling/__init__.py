from .measure_time import MeasureTime, Tracer, set_thread_name

__all__ = ["MeasureTime", "Tracer", "set_thread_name"]
