import os
import sys

# Allow running pytest straight from a checkout, before `pip install -e .`.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
