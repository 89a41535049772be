import pytest

from ringlab import build_ring

# Specs used by name across the suite; building each carrier once per
# session keeps the cached unit tables and idempotent lists shared.
_SPECS = {}


@pytest.fixture(scope="session")
def rings():
    def get(spec: str):
        if spec not in _SPECS:
            _SPECS[spec] = build_ring(spec)
        return _SPECS[spec]

    return get
