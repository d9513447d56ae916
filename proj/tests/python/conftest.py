import os
import sys

# Lets the suite run against an uninstalled build tree.
_build = os.environ.get("GAPCUBE_PYTHONPATH")
if _build:
    sys.path.insert(0, _build)
