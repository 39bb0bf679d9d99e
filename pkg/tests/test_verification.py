from pytest import approx

from disk_rigidity import verification
from disk_rigidity.exceptions import PreconditionError
from disk_rigidity.models import Status
from disk_rigidity.sampling import disk_samples
from disk_rigidity.verification import (
    CHECKS, CORPUS, Outcome, VerifyCheck, herglotz_corpus, run_verification,
)


def test_row_ids_are_unique():
    ids = [check.row_id for check in CHECKS]
    assert len(ids) == len(set(ids))
    assert {"ex1.th2.i", "lem2.printed", "inclusion", "mobius.assoc"} <= set(ids)


def test_corpus_maps_parse(corpus):
    assert set(corpus) == set(CORPUS)


def test_herglotz_corpus_has_nonnegative_real_part():
    points = disk_samples(50, seed=1)
    for p in herglotz_corpus(3, n=5):
        assert all(complex(p(complex(z))).real >= 0 for z in points)


def test_selected_rows():
    rows = {row.row_id: row for row in run_verification(seed=42, only=["ex1.jet", "mobius.assoc", "lem2.printed"])}
    # rows follow registration order, not the order of `only`
    assert list(rows) == ["ex1.jet", "lem2.printed", "mobius.assoc"]
    assert rows["ex1.jet"].certified is Status.PASS
    assert rows["ex1.jet"].printed is None
    assert rows["mobius.assoc"].certified is Status.PASS
    printed = rows["lem2.printed"]
    assert printed.certified is Status.PASS
    assert printed.printed is Status.FAIL
    assert printed.witness == approx(0.5)


def test_inclusion_row_counts_equal_radii():
    (row,) = run_verification(seed=42, only=["inclusion"])
    assert row.certified is Status.PASS
    assert row.printed is None
    assert row.detail == "contained in 50/50, radii equal in 50/50"


def test_errors_fail_the_row(monkeypatch):
    def broken(seed):
        raise PreconditionError("alpha must be positive")

    checks = [VerifyCheck("broken", "raises", broken), VerifyCheck("fine", "passes", lambda seed: Outcome(True))]
    monkeypatch.setattr(verification, "CHECKS", checks)
    rows = run_verification(seed=0)
    assert [row.certified for row in rows] == [Status.FAIL, Status.PASS]
    assert "PreconditionError" in rows[0].detail


def test_reciprocal_and_decomposition_rows():
    assert verification.RECIPROCAL_CORPUS == ("1-z", "(1-z)/(2-z)", "0.5*(1-z^2)")
    rows = run_verification(seed=42, only=["lem2.certified", "lem3.decompose"])
    assert [row.certified for row in rows] == [Status.PASS, Status.PASS]
    assert rows[0].detail == "3 functions"
