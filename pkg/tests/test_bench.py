import pytest

from rpq import engines
from rpq.bench import CSV_HEADER, fit_exponent, make_instance, run_grid


def test_fit_exact_powers():
    assert fit_exponent([(10, 100), (20, 400), (40, 1600)]) == pytest.approx(2.0, abs=1e-9)
    assert fit_exponent([(10, 10), (20, 20), (40, 40)]) == pytest.approx(1.0, abs=1e-9)
    assert fit_exponent([(10, 31.6), (20, 89.4), (40, 252.9)]) == pytest.approx(1.5, abs=0.01)


@pytest.mark.parametrize("points", [
    [(10, 1), (20, 2)],
    [(10, 1), (20, 0), (40, 3)],
    [(10, 1), (10, 2), (40, 3)],
])
def test_fit_errors(points):
    with pytest.raises(ValueError):
        fit_exponent(points)


def test_path_grid():
    sizes = [100, 200, 400]
    report = run_grid(["path"], sizes, ["ospg", "pg"], "b*c")
    pg = report.series("path", "pg", "bfs_edge_visits")
    assert [s for s, _ in pg] == sizes
    assert all(3.5 < b / a < 4.5 for (_, a), (_, b) in zip(pg, pg[1:]))
    assert [v for _, v in report.series("path", "ospg", "step1_edge_checks")] == [0, 0, 0]
    assert {r.out for r in report.rows} == {0}
    assert report.fit("path", "pg", "total_work") == pytest.approx(2.0, abs=0.1)


def test_empty_engine_list():
    assert len(run_grid(["path"], [10], [], "b*c")) == 0


def test_unknown_engine_rejected():
    with pytest.raises(ValueError):
        run_grid(["path"], [10], ["nope"], "b*c")


def test_errors_are_rows(monkeypatch):
    def broken(g, q):
        raise RuntimeError("boom")

    monkeypatch.setitem(engines.ENGINES, "broken", broken)
    report = run_grid(["path", "nosuch"], [5], ["broken", "ospg"], "b*c")
    errs = report.errors
    assert {(r.family, r.engine) for r in errs} == {
        ("path", "broken"), ("nosuch", "broken"), ("nosuch", "ospg")}
    assert any(r.engine == "ospg" and r.counter_name == "total_work" for r in report.rows)


def test_csv_shape_and_determinism():
    a = run_grid(["random"], [6, 8], ["ospg", "pg"], "ab*c")
    b = run_grid(["random"], [6, 8], ["ospg", "pg"], "ab*c")
    text = a.to_csv()
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    strip = lambda r: [(x.family, x.size, x.engine, x.out, x.counter_name, x.value) for x in r.rows]
    assert strip(a) == strip(b)


def test_make_instance_unknown():
    with pytest.raises(ValueError):
        make_instance("nosuch", 3)
