#!/usr/bin/env python3
"""
Command-line runner for the Riordan toolkit.

    python riordan_cli.py involution "general:3,2"
    python riordan_cli.py oeis-check A081696 --against "diagsums (c, x*c^3)" --terms 10
    python riordan_cli.py verify-paper
"""
import os
import sys

# Make the 'src' package importable when run from a checkout.
ROOT_DIR = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, ROOT_DIR)

# Load environment variables before settings are read
from dotenv import load_dotenv  # noqa: E402

load_dotenv()

from src.cli.main import main  # noqa: E402
from src.utils.logger import main_logger  # noqa: E402

if __name__ == "__main__":
    main_logger.debug(f"riordan_cli started from {ROOT_DIR}")
    sys.exit(main())
