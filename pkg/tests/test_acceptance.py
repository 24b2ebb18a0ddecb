"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import pytest

from ssg.verify import ALL_CRITERIA, summarize


@pytest.mark.parametrize("number", sorted(ALL_CRITERIA))
def test_criterion(number, capsys):
    title, fn = ALL_CRITERIA[number]
    ok, failed = summarize(fn())
    with capsys.disabled():
        print(f"\ncriterion {number} ({title}): {'PASS' if ok else 'FAIL'}")
    assert ok, "; ".join(f"{ch.label}: {ch.detail}" for ch in failed)
