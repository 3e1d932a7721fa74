import os
import sys

# allow running the tests from a fresh checkout without installing
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "src"))
