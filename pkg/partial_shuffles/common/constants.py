# 데스크 규모 한계 (이 값을 넘으면 CLI에서 --force 필요)
MAX_SWEEP_N = 8
MAX_CLASS_N = 10
MAX_COUNT_N = 11
MAX_DELTA_COUNT_N = 14
MAX_PEG_N = 15
MAX_EXTREMAL_N = 10

# 워커
DEFAULT_WORKERS = 1
# 열거 트리를 워커당 이만큼의 작업으로 나눔
TASKS_PER_WORKER = 4

# 정확한 개수는 부호 없는 64비트 범위 안에 있어야 함
U64_MAX = (1 << 64) - 1

# 다항식 피팅
HOLDOUT_POINTS = 3

# 길이 k 이하일 때만 유계 수열을 모두 돌려줌
WITNESS_LIMIT = 8
