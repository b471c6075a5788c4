from types import SimpleNamespace

import pytest

from minproj.catalog import paper_cases
from minproj.projections import face_dimension, projection_constant


@pytest.fixture(scope="session")
def analyzed():
    """Every named case fully analyzed once per session: the suite leans on
    these repeatedly and the analyses are pure."""
    out = {}
    for case in paper_cases():
        report = projection_constant(case.space, case.subspace)
        face_dim, implicit = face_dimension(case.space, case.subspace, report)
        out[case.name] = SimpleNamespace(
            case=case, report=report, face_dim=face_dim, implicit=implicit)
    return out
