import json
import os

import hypothesis
import numpy as np
import pytest

from tests.helpers import su2

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=40, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def write_rep(tmp_path):
    def write(name, n, terms):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps({
            "n": n,
            "terms": [{"partition": list(lam), "mult": m} for lam, m in terms.items()],
        }))
        return str(path)
    return write


@pytest.fixture
def su2_main_pair():
    """2 iota_2 against iota_1 + iota_2 + iota_3."""
    return su2((2, 2)), su2((1, 1), (2, 1), (3, 1))
