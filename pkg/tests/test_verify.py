import pytest

from tdlab import (
    complete,
    cycle_complement,
    g4k,
    path,
    run_criterion,
    to_graph6,
    verify_paper,
)


def test_run_criterion_validates_inputs():
    with pytest.raises(ValueError):
        run_criterion(0)
    with pytest.raises(ValueError):
        run_criterion(11)
    with pytest.raises(ValueError):
        run_criterion(1, level="medium")


def test_result_line_format():
    r = run_criterion(8, "quick")
    assert r.cid == 8 and r.passed
    assert r.line().startswith("[PASS] criterion 8: ")
    assert " -- " in r.line()
    assert r.seconds >= 0


def test_criterion_8_accepts_an_extra_stream(tmp_path):
    stream = tmp_path / "eight.g6"
    graphs = [g4k(2), cycle_complement(8), complete(8), path(8)]
    stream.write_text("\n".join(to_graph6(g) for g in graphs) + "\n")
    r = run_criterion(8, "full", n8_stream=str(stream))
    assert r.passed
    assert "plus n=8 stream" in r.detail


def test_verify_paper_quick_passes():
    results = verify_paper("quick")
    assert [r.cid for r in results] == list(range(1, 11))
    assert all(r.passed for r in results)
