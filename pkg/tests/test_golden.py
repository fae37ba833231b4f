from conftest import GOLDEN
from levidecomp.fileio import render_paths
from levidecomp.gallai import decompose_k2
from levidecomp.graphs import build_complete, build_levi
from levidecomp.paths import subdivide_path
from levidecomp.walecki import walecki


def test_l1_4_2_induction_paths():
    d, _ = decompose_k2(4)
    text = render_paths(build_levi(4, 2).graph, d)
    assert text == (GOLDEN / "l1_4_2_induction.txt").read_text()


def test_k6_zigzag_paths():
    text = render_paths(build_complete(6), walecki(6).decomposition)
    assert text == (GOLDEN / "k6_walecki.txt").read_text()
    assert text.splitlines()[1] == "P2: 2, 3, 1, 4, 6, 5"


def test_k6_first_path_subdivided():
    g = build_levi(6, 2).graph
    path = [g.id_of(lab) for lab in subdivide_path(walecki(6).label_paths[0])]
    assert render_paths(g, [path]) == (GOLDEN / "k6_p1_subdivided.txt").read_text()
