"""SQLAlchemy ORM models for the verification ledger."""

from datetime import datetime
from sqlalchemy import Boolean, Column, DateTime, Float, ForeignKey, Integer, JSON, String, Text
from sqlalchemy.orm import relationship
from app.database import Base


class VerificationRun(Base):
    """One execution of a verification suite. Rows are append-only."""
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, index=True)
    suite = Column(String(50), nullable=False, index=True)
    seed = Column(Integer, nullable=True)  # only seeded suites
    parameters = Column(JSON, nullable=False)
    passed = Column(Boolean, nullable=False)
    check_count = Column(Integer, nullable=False, default=0)
    failed_count = Column(Integer, nullable=False, default=0)
    duration_ms = Column(Float, nullable=True)
    created_at = Column(DateTime, default=datetime.utcnow)

    checks = relationship("VerificationCheck", back_populates="run", cascade="all, delete-orphan")

    def __repr__(self):
        return f"<VerificationRun(suite={self.suite}, passed={self.passed})>"


class VerificationCheck(Base):
    """A single expected/actual comparison inside a run."""
    __tablename__ = "verification_checks"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("verification_runs.id"), nullable=False)
    label = Column(String(255), nullable=False)
    expected = Column(Text, nullable=False)
    actual = Column(Text, nullable=False)
    passed = Column(Boolean, nullable=False)

    run = relationship("VerificationRun", back_populates="checks")

    def __repr__(self):
        return f"<VerificationCheck({self.label}: {'ok' if self.passed else 'FAIL'})>"
