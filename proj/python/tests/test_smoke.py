import json

import pytest

import mcover


def test_basic_construction_cover():
    c = mcover.build_basic(3, 1)
    assert c.vertex_count == 12
    assert c.edge_count == 64
    assert c.is_spanning()
    assert c.color_of([8, 1, 4]) == 3
    size, refs = c.min_cover_exact()
    assert size == 2
    covered = set()
    comps = c.components()
    for color, serial in refs:
        covered.update(comps[color - 1][serial - 1])
    assert covered == set(range(12))
    assert c.no_cover_of_size(1)


def test_general_construction_and_extractor():
    c = mcover.build_general(3, 2, 6)
    assert c.min_cover_exact()[0] == mcover.bound_formula(3, 2, 6) == 3
    out = c.constructive_cover()
    assert len(out["cover"]) <= out["bound"] == 3
    assert out["trace"]


def test_sharp_is_not_spanning():
    c = mcover.build_nonspanning_sharp(3, 4, [4, 2, 2])
    assert not c.is_spanning()
    assert c.min_cover_exact()[0] == 4
    assert c.dual(allow_nonspanning=True)["tau"] == 4


def test_dual_and_round_trip():
    c = mcover.random_spanning_coloring(3, 1, [3, 3, 3], 5, seed=4)
    d = c.dual()
    assert d["tau"] == c.min_cover_exact()[0]
    assert d["r_wise_intersection"]
    text = c.instance_text(explicit=True)
    again = mcover.parse_instance(text)
    assert again.instance_text(explicit=True) == text
    assert mcover.instance_digest(text).startswith("sha256:")


def test_errors():
    with pytest.raises(mcover.InputError):
        mcover.build_basic(2, 1)
    with pytest.raises(ValueError):
        mcover.parse_instance("not an instance")
    with pytest.raises(mcover.ResourceError):
        mcover.build_basic(3, 2).min_cover_exact(component_limit=5)


def test_search_report():
    cfg = {"suites": ["statement", "large-t"], "r": 3, "ell": 1, "k": [4], "sizes": [[2, 2, 2]], "count": 10}
    report = json.loads(mcover.run_search(json.dumps(cfg)))
    assert report["violations"] == 0
    assert len(report["instances"]) == 10
