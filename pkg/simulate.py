#!/usr/bin/env python
"""Command-line entry point of the naive T cell repertoire simulator."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))


def main():
    """Run a simulator command."""
    from apps.cli.main import main as run
    return run()


if __name__ == '__main__':
    sys.exit(main())
