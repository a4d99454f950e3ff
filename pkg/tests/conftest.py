import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest


@pytest.fixture(autouse=True)
def _strict_validation():
    """Run every structural validity check while tests execute."""
    from ratmeasure import config

    old = config.VALIDATE
    config.VALIDATE = True
    yield
    config.VALIDATE = old
