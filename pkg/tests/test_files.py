import pytest

from uat.errors import ParseError
from uat.files import bundled_files, load_ideal, load_points, parse_ideal_text, parse_points_text


def test_bundled_files_load():
    names = bundled_files(".ideal")
    assert "circle_qi.ideal" in names
    for n in names:
        spec = load_ideal(n)
        I = spec.ideal()
        for p in spec.point_values():
            assert all(g.evaluate(p).is_zero() for g in I.basis), (n, p)
    for n in bundled_files(".pts"):
        assert load_points(n).points


def test_round_trip():
    spec = load_ideal("circle_qi.ideal")
    again = parse_ideal_text(spec.to_text())
    assert again.to_json() == spec.to_json()


@pytest.mark.parametrize("text,line", [
    ("field: QQ\nvars: X\nideal: X^^2\n", 3),
    ("field: QQ\nvars: X\nfoo: 1\n", 3),
    ("field: QQ\n# no vars\nideal: X\n", 1),
    ("field: QQ\nvars: X\nvars: Y\n", 3),
    ("field: GF(4)\nvars: X\n", 1),
    ("field: QQ\nvars: X\npoint: 1, 2\n", 3),
    ("vars: X\nfield: QQ[i]/(i^2+1)[j]/(j^2+1)[k]/(k^2+1)[l]/(l^2+1)\n", 2),
])
def test_malformed_files_report_lines(text, line):
    with pytest.raises(ParseError) as info:
        parse_ideal_text(text, "bad.ideal", max_tower_depth=3)
    assert info.value.line == line
    assert "bad.ideal" in str(info.value)


def test_points_file():
    pts = parse_points_text("field: GF(5)\n0, 1\n1, 1 # comment\n")
    assert len(pts.points) == 2
    with pytest.raises(ParseError):
        parse_points_text("field: QQ\n0\n1, 2\n")
