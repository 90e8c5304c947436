#!/usr/bin/env python3
"""Run the acceptance gate and print one pass/fail line per criterion.

Thin wrapper over pytest so the lines from tests/test_acceptance.py appear
inline (-s) along with the verdict summary.
"""

import sys

import pytest

if __name__ == "__main__":
    sys.exit(pytest.main(["tests/test_acceptance.py", "-v", "-s"] + sys.argv[1:]))
