"""라이브러리 전체에서 쓰는 예외 계층"""


class ShuffleError(Exception):
    """partial_shuffles의 모든 예외의 부모"""


class InvalidParamsError(ShuffleError, ValueError):
    """(a, b), m, k 같은 파라미터가 정의역을 벗어남"""


class InvalidInputError(ShuffleError, ValueError):
    """순열/수열/페그 입력이 정의 조건을 만족하지 않음"""


class CountOverflowError(ShuffleError, OverflowError):
    """개수가 부호 없는 64비트 범위를 넘음"""


class NoStabilizationError(ShuffleError):
    """주어진 창에서 고차 차분이 0으로 수렴하지 않음 (n_max가 작거나 다항식이 아님)"""


class IntervalViolationError(ShuffleError):
    """연관 원소 집합이 연속 구간이 아님 - 구간 보조정리가 깨진 경우"""
