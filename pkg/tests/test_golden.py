"""Stored-report tests: full JSON bytes are pinned for a family of
signed-prime radical extensions and one prime-power radicand."""

import pathlib

import pytest

from genusfields.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"
JOBS = sorted(job.stem for job in GOLDEN.glob("*.job"))


@pytest.mark.parametrize("name", JOBS)
def test_golden_report_bytes(name, tmp_path):
    job = GOLDEN / f"{name}.job"
    expected = (GOLDEN / f"{name}.json").read_bytes()
    dest = tmp_path / "out.json"
    assert main(["compare", "--format", "json", "--infinite",
                 "--output", str(dest), str(job)]) == 0
    assert dest.read_bytes() == expected


def test_golden_inventory():
    assert len(JOBS) >= 5
    assert {"signed_prime_q5_l2_T", "signed_prime_q7_l2_T",
            "signed_prime_q13_l2_T", "signed_prime_q13_l3_T"} <= set(JOBS)
