#!/usr/bin/env python3
import sys

from src.cli import main


if __name__ == "__main__":
    # Python 버전 체크
    if sys.version_info < (3, 8):
        print("Python 3.8 or newer is required.")
        sys.exit(1)

    sys.exit(main(sys.argv[1:]))
