import pytest

from innofuse import build_evidence_table
from innofuse.demo import demo_document
from innofuse.survey import assessments_by_group


@pytest.fixture(scope="session")
def demo_doc():
    return demo_document()


@pytest.fixture(scope="session")
def demo_bodies(demo_doc):
    """Bodies A (120 experts), B (80) and C (50) of the bundled document."""
    return [
        build_evidence_table(assessments, group)
        for group, assessments in assessments_by_group(demo_doc, 0, 0)
    ]
