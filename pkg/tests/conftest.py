import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from helpers import SURD_TOWER  # noqa: E402

from invsurf.distinguished import construct_distinguished, seventh_idempotent  # noqa: E402


@pytest.fixture(scope="session")
def surd_gamma():
    K = SURD_TOWER
    s2, s3, s5 = K.gen(0), K.gen(1), K.gen(2)
    z = K.zero
    return [[s2, s3, z], [z, s3, s5], [s2, z, s5]]


@pytest.fixture(scope="session")
def surd(surd_gamma):
    df = construct_distinguished(surd_gamma)
    seventh_idempotent(df, keep_intermediates=True)
    return df


@pytest.fixture(scope="session")
def surd_lines(surd):
    return [list(v) for v in surd.idempotents] + [list(surd.seventh)]
