#!/usr/bin/env python3
"""
MaxwIST command-line launcher

Examples:
    python run_maxwist.py gen --family prism --out data/prism.txt
    python run_maxwist.py solve --algo cubic --input data/prism.txt
    python run_maxwist.py bench --sizes 1000,2000,4000
"""

import logging
import sys

from src.cli.maxwist_cli import main

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

if __name__ == "__main__":
    sys.exit(main())
