import pytest

from fermatrl import LayeredMedium, paper_alt, paper_default


@pytest.fixture
def paper_medium():
    return LayeredMedium((1.0, 1.3, 1.6), 50, 50, (0, 0), (150, 50))


@pytest.fixture
def alt_medium():
    return LayeredMedium((3.0, 1.0, 2.0), 50, 50, (0, 0), (150, 50))


@pytest.fixture
def flat_medium():
    return LayeredMedium((1.0, 1.0, 1.0), 50, 50, (0, 0), (150, 0))


@pytest.fixture
def quiet_config(tmp_path):
    """Bundled config writing into a temp dir; callers override what they need."""

    def make(alt=False, **sections):
        outputs = {"directory": str(tmp_path / "run"), **sections.pop("outputs", {})}
        factory = paper_alt if alt else paper_default
        return factory(outputs=outputs, **sections)

    return make


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
