import json

import pytest

import loopss


def test_snf_invariant_factors():
    U, D, V = loopss.snf([[2, 0], [0, 3]])
    assert [D[0][0], D[1][1]] == [1, 6]


def test_kernel_basis():
    basis = loopss.kernel_basis([[1, 1]])
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + v[1] == 0 and abs(v[0]) == 1


def test_homology_of_pair_torsion():
    group = loopss.homology_of_pair([[2]], [[0]])
    assert group.rank == 0 and group.torsion == [2]


def test_sphere2_stable_page():
    page = loopss.infinity_page(loopss.sphere_model(2), 8)
    assert page.infinity
    cell = page.cell(-2, 2)
    assert cell["rank"] == 0 and cell["torsion"] == [2]
    assert cell["basis"] == ["a^1*u^2"]
    assert page.cell(0, 1) is None


def test_cpn2_json_cell():
    model = loopss.cpn_model(2)
    page = loopss.infinity_page(model, 12)
    data = json.loads(loopss.emit_json(page, model))
    cells = {(c["s"], c["t"]): c for c in data["cells"]}
    assert cells[(-4, 4)]["torsion"] == [3]
    assert data["r"] == 5


def test_verify_and_ziller():
    ok, message = loopss.verify(loopss.sphere_model(5), "theorem2", 28)
    assert ok, message
    assert loopss.ziller_reference(2, 4).torsion == [3]
    assert loopss.ziller_reference(2, 3).torsion == []


def test_assemble_matches_ziller():
    page = loopss.infinity_page(loopss.cpn_model(2), 14)
    group = loopss.assemble_total_degree(page, 0)  # H_4(L CP^2)
    assert group.rank == 1 and group.torsion == [3]


def test_extension_report():
    page = loopss.infinity_page(loopss.sphere_model(2), 10)
    report = loopss.extension_report(page, 2)
    assert report["ambiguous"] and len(report["pieces"]) == 2


def test_circle_piece():
    piece = loopss.circle_piece(0)
    assert not piece["zero"] and "countable" in piece["description"]
    assert loopss.circle_piece(1)["zero"]


def test_custom_model_parse_error():
    with pytest.raises(ValueError):
        loopss.parse_model("dim 2\nbase a (-2,0) exterior\nrel 0 b^2\n")
