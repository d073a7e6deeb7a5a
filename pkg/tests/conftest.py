from __future__ import annotations

import pytest

from ineqcert.catalog import load_builtin
from ineqcert.certify import default_config, verify_inequality, verify_monotone


@pytest.fixture(scope="session")
def catalog():
    return load_builtin()


@pytest.fixture(scope="session")
def all_certificates(catalog):
    """One certification run over the full catalog, shared by the suite."""
    cfg = default_config()
    certs = {}
    for rid, rec in catalog.records.items():
        certs[rid] = verify_inequality(rec, cfg)
    for rid, rec in catalog.monotones.items():
        certs[rid] = verify_monotone(rec, cfg)
    return certs
