#!/usr/bin/env python
"""
Runs the `evac` command line from a source checkout:

    scripts/evac.py verify --format rst

"""
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from disk_evac.cli import main


if __name__ == '__main__':
    sys.exit(main())
