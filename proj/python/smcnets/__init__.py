from pathlib import Path

from ._smcnets import *  # noqa: F401,F403
from ._smcnets import load_theory

THEORIES = Path(__file__).parent / "theories"


def fixture(name):
    """Load one of the bundled theories, e.g. ``fixture("lambda.smc")``."""
    return load_theory(str(THEORIES / name))
