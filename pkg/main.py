#!/usr/bin/env python3
"""
Partial shuffles - 부분 셔플 회피 클래스 실험 도구
사용법: python main.py <command> [options]
예시: python main.py smap --perm 582916743 --a 3 --b 1
"""
import sys

from partial_shuffles.cli import main

if __name__ == "__main__":
    sys.exit(main())
