import io
import json

import pytest

from homext.atlas import (
    AtlasRecord,
    atlas_records,
    corpus_upto,
    existing_ids,
    graphs_of_size,
    read_atlas,
    record_for,
    write_atlas,
)
from homext.cli import main
from homext.formats import from_graph6, parse_text
from homext.generators import complete, independent
from homext.graphs import GraphError


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_class_counts(self, n, count):
        assert len(graphs_of_size(n)) == count

    def test_corpus_ids_stable(self):
        corpus = corpus_upto(3)
        assert [gid for gid, _ in corpus] == [
            "n1g000", "n2g000", "n2g001",
            "n3g000", "n3g001", "n3g002", "n3g003",
        ]

    def test_cap(self):
        with pytest.raises(GraphError):
            graphs_of_size(8)


class TestAtlasRecords:
    def test_single_vertex_all_holds(self):
        records = list(atlas_records(1))
        assert len(records) == 1
        assert all(cell["status"] == "holds" for cell in records[0].vector.values())

    def test_record_round_trip(self):
        rec = record_for("x", complete(3))
        assert AtlasRecord.from_json(rec.to_json()) == rec

    def test_write_read_and_resume(self):
        buf = io.StringIO()
        write_atlas(atlas_records(2), buf)
        text = buf.getvalue()
        records = read_atlas(text.splitlines())
        assert [r.graph_id for r in records] == ["n1g000", "n2g000", "n2g001"]
        assert existing_ids(text.splitlines()) == {"n1g000", "n2g000", "n2g001"}

    def test_determinism(self):
        a, b = io.StringIO(), io.StringIO()
        write_atlas(atlas_records(3), a)
        write_atlas(atlas_records(3), b)
        assert a.getvalue() == b.getvalue()

    def test_vector_payload_is_json(self):
        rec = record_for("x", independent(3))
        payload = json.loads(rec.to_json())
        assert payload["vector"]["HA"]["status"] == "fails"
        assert "witness" in payload["vector"]["HA"]


class TestCli:
    def test_generate_text(self, capsys):
        assert main(["generate", "comp", "2", "2"]) == 0
        out = capsys.readouterr().out
        assert parse_text(out).m == 2

    def test_generate_graph6_file(self, tmp_path):
        target = tmp_path / "g.g6"
        assert main(["generate", "k", "4", "--format", "graph6", "-o", str(target)]) == 0
        assert from_graph6(target.read_text().strip()) == complete(4)

    def test_generate_oracle_needs_truncation(self, capsys):
        assert main(["generate", "rs", "3"]) == 2
        assert "truncate" in capsys.readouterr().err

    def test_classify_file(self, tmp_path, capsys):
        target = tmp_path / "g.txt"
        main(["generate", "k", "5", "-o", str(target)])
        assert main(["classify", str(target)]) == 0
        out = capsys.readouterr().out
        assert out.count("HOLDS") == 18

    def test_classify_gen_witness(self, capsys):
        assert main(["classify", "--gen", "i", "5"]) == 0
        out = capsys.readouterr().out
        assert "FAIL X=H Y=A" in out and "map=" in out

    def test_classify_path_witness(self, tmp_path, capsys):
        p4 = tmp_path / "p4.txt"
        p4.write_text("4 3\n0 1\n1 2\n2 3\n\n")
        assert main(["classify", str(p4)]) == 0
        out = capsys.readouterr().out
        assert "FAIL X=M Y=H map=" in out

    def test_atlas_determinism_and_resume(self, tmp_path, capsys):
        out1, out2 = tmp_path / "a1.jsonl", tmp_path / "a2.jsonl"
        assert main(["atlas", "--max-n", "3", "-o", str(out1)]) == 0
        assert main(["atlas", "--max-n", "3", "-o", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        # resuming a complete file appends nothing
        before = out1.read_bytes()
        assert main(["atlas", "--max-n", "3", "-o", str(out1), "--resume"]) == 0
        assert out1.read_bytes() == before

    def test_age_command(self, capsys):
        assert main(["age", "--gen", "k", "4", "--k", "2"]) == 0
        out = capsys.readouterr().out
        assert "kk=Y" in out

    def test_check_property(self, capsys):
        assert main(["check", "delta", "--gen", "k", "6", "--k", "3"]) == 0
        assert main(["check", "delta", "--gen", "i", "3", "--k", "2"]) == 1

    def test_check_criterion(self, capsys):
        assert main(["check", "HH", "--gen", "comp", "2", "3", "--k", "3"]) == 0

    def test_bad_input_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("not a graph\n")
        assert main(["classify", str(bad)]) == 2

    def test_verify_poset_small(self, tmp_path, capsys):
        claims = tmp_path / "claims.txt"
        claims.write_text(
            "equality A B finite n<=3\n"
            "monotone - - finite n<=3\n"
            "bottom-echo HA complete finite n<=3\n"
        )
        assert main(["verify-poset", str(claims)]) == 0
        out = capsys.readouterr().out
        assert "3/3 claims passed" in out

    def test_verify_poset_failure_exit(self, tmp_path, capsys):
        claims = tmp_path / "claims.txt"
        claims.write_text("bottom-echo HH complete finite n<=2\n")
        assert main(["verify-poset", str(claims)]) == 1
