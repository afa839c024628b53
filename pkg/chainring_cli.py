#!/usr/bin/env python3
"""
Command-line interface for chainring.
"""

import os
import sys

# Make the src layout importable when run from a checkout
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
