import json

import pytest

from k0hom.cstar import InvalidHomError, analyze
from k0hom.intlin import IntMatrix
from k0hom.workspace import (
    WorkspaceError,
    analysis_document,
    machine_dumps,
    matrix_from_document,
    matrix_to_document,
    parse_matrix_text,
    parse_workspace,
)

GOOD = {
    "algebras": {"A": [2, 3, 4], "B": [5, 4]},
    "homs": {
        "phi": {"source": "A", "target": "B", "matrix": [[1, 1, 0], [0, 0, 1]]}
    },
}


def write(tmp_path, doc):
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


class TestParseWorkspace:
    def test_valid(self, tmp_path):
        ws = parse_workspace(write(tmp_path, GOOD))
        assert ws.algebras["A"].blocks == (2, 3, 4)
        phi = ws.homs["phi"]
        assert phi.source_name == "A" and phi.target_name == "B"
        assert phi.hom.slack == (0, 0)

    def test_malformed_json_with_position(self, tmp_path):
        path = tmp_path / "ws.json"
        path.write_text('{"algebras": {', encoding="utf-8")
        with pytest.raises(WorkspaceError, match="line 1"):
            parse_workspace(path)

    def test_empty_algebras_rejected(self, tmp_path):
        with pytest.raises(WorkspaceError, match="algebras"):
            parse_workspace(write(tmp_path, {"algebras": {}, "homs": {}}))

    def test_unresolved_name(self, tmp_path):
        doc = {
            "algebras": {"A": [2]},
            "homs": {"phi": {"source": "A", "target": "C", "matrix": [[1]]}},
        }
        with pytest.raises(WorkspaceError, match="'C'"):
            parse_workspace(write(tmp_path, doc))

    def test_dimension_mismatch(self, tmp_path):
        doc = {
            "algebras": {"A": [2, 3], "B": [9]},
            "homs": {"phi": {"source": "A", "target": "B", "matrix": [[1]]}},
        }
        with pytest.raises(WorkspaceError, match="1x1"):
            parse_workspace(write(tmp_path, doc))

    def test_infeasible_hom_names_row(self, tmp_path):
        doc = {
            "algebras": {"A": [2, 3, 4], "B": [5, 4]},
            "homs": {
                "phi": {"source": "A", "target": "B", "matrix": [[1, 1, 1], [0, 0, 1]]}
            },
        }
        with pytest.raises(InvalidHomError, match="row 0"):
            parse_workspace(write(tmp_path, doc))

    def test_string_integers_accepted(self, tmp_path):
        doc = {
            "algebras": {"A": ["2"], "B": ["2"]},
            "homs": {"id": {"source": "A", "target": "B", "matrix": [["1"]]}},
        }
        ws = parse_workspace(write(tmp_path, doc))
        assert ws.homs["id"].hom.matrix.to_rows() == [[1]]


class TestParseMatrixText:
    def test_semicolon_rows(self):
        m = parse_matrix_text("3 3; 2 0; 0 5")
        assert m.to_rows() == [[3, 3], [2, 0], [0, 5]]

    def test_commas_and_newlines(self):
        assert parse_matrix_text("1, 2\n3, 4").to_rows() == [[1, 2], [3, 4]]

    def test_json_form(self):
        assert parse_matrix_text("[[1, -2], [0, 7]]").to_rows() == [[1, -2], [0, 7]]

    def test_bad_token(self):
        with pytest.raises(WorkspaceError):
            parse_matrix_text("1 x; 2 3")

    def test_ragged(self):
        with pytest.raises(WorkspaceError):
            parse_matrix_text("1 2; 3")

    def test_empty(self):
        with pytest.raises(WorkspaceError):
            parse_matrix_text("   ")


class TestMachineDocuments:
    def test_matrix_round_trip(self):
        m = IntMatrix.from_rows([[10**30, -1], [0, 7]])
        doc = matrix_to_document(m)
        assert doc == [["1" + "0" * 30, "-1"], ["0", "7"]]
        assert matrix_from_document(doc) == m

    def test_document_serialization_idempotent(self, tmp_path):
        ws = parse_workspace(write(tmp_path, GOOD))
        entry = ws.homs["phi"]
        report = analyze(entry.hom)
        doc = analysis_document(
            entry.name, entry.source_name, entry.target_name, entry.hom, report
        )
        text = machine_dumps(doc)
        assert machine_dumps(json.loads(text)) == text

    def test_every_report_field_present(self, tmp_path):
        ws = parse_workspace(write(tmp_path, GOOD))
        entry = ws.homs["phi"]
        report = analyze(entry.hom)
        doc = analysis_document(
            entry.name, entry.source_name, entry.target_name, entry.hom, report
        )
        analysis = doc["analysis"]
        for key in (
            "phi_injective",
            "phi_surjective",
            "phi_unital",
            "k0_injective",
            "k0_surjective",
            "k0_unital",
            "cokernel_torsion_free",
            "torsion_criterion",
            "minor_gcd",
            "left_inverse",
            "invariant_factors",
            "entry_gcd",
            "column_gcds",
            "notes",
        ):
            assert key in analysis
