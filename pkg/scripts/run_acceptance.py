#!/usr/bin/env python3
"""Run the acceptance suite and show one verdict line per criterion."""

import sys
from pathlib import Path

import pytest

if __name__ == "__main__":
    acceptance = Path(__file__).resolve().parents[1] / "tests" / "test_acceptance.py"
    sys.exit(pytest.main([str(acceptance), "-q", "-s", *sys.argv[1:]]))
