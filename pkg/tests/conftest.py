import os
import tempfile

# Must run before anything imports app.config.
_LEDGER_DIR = tempfile.mkdtemp(prefix="hilbert-ledger-")
os.environ["DATABASE_URL"] = f"sqlite:///{os.path.join(_LEDGER_DIR, 'ledger.db')}"
os.environ["RATE_LIMIT_MAX_REQUESTS"] = "100000"

import pytest
from fastapi.testclient import TestClient

from app.services.grading import BicharacterTable, GradedAlphabet, Generator
from app.services.series import TruncatedSeries


@pytest.fixture(scope="session")
def client():
    from app.main import app

    with TestClient(app) as c:
        yield c


@pytest.fixture
def db_session():
    from app.database import SessionLocal, init_db

    init_db()
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


@pytest.fixture
def series():
    """series(1, 2, 3, n=5) -> 1 + 2t + 3t² truncated at t^5."""
    def make(*coefficients: int, n: int) -> TruncatedSeries:
        return TruncatedSeries.from_coefficients(coefficients, n)
    return make


@pytest.fixture
def z2_squared_alphabet() -> GradedAlphabet:
    table = BicharacterTable(group=(2, 2), gamma_on_generators=((-1, -1), (-1, 1)))
    return GradedAlphabet(
        generators=(
            Generator(label="a", degree=(1, 0)),
            Generator(label="b", degree=(0, 1)),
            Generator(label="c", degree=(1, 1)),
        ),
        table=table,
    )
