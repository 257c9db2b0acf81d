import pytest

import plsurf


def test_path_reduce_cancels_backtracking():
    out = plsurf.path_reduce({"dim": 2, "word": [["1/1", "0/1"], ["-1/1", "0/1"]]})
    assert out["word"] == []
    assert out["format"] == "path"


def test_segment_signature():
    out = plsurf.path_sig({"dim": 2, "word": [["1", "0"]]}, level=2)
    assert out["signature"] == {"": "1/1", "1": "1/1", "11": "1/2"}


def test_tetrahedron_current():
    tet = plsurf.gen_example("tetrahedron")
    out = plsurf.surface_sig(tet, weight=3)
    assert out["gamma"]["α=(1,0,0);(2,3)"] in ("1/6", "-1/6")


def test_decisions():
    assert plsurf.thin_equiv(plsurf.gen_example("fold"))["verdict"] == "equal"
    report = plsurf.thin_equiv(plsurf.gen_example("tetrahedron"))
    assert report["verdict"] == "not_equal"
    assert report["witness"]["kind"] == "face"


def test_triangulate():
    out = plsurf.triangulate(plsurf.gen_example("peiffer"))
    assert out["compatible"] is True


def test_errors():
    with pytest.raises(plsurf.PlsurfError) as info:
        plsurf.path_reduce({"dim": 2, "word": [["1/0", "0"]]})
    assert info.value.code == 2
    with pytest.raises(plsurf.PlsurfError):
        plsurf.gen_example("no-such-example")
