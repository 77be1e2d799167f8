import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from hypersurface_monodromy.algebra_core import Cyclotomic
from hypersurface_monodromy.cli import SCHEMA_VERSION, decode_scalar, encode, run

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def result(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["command"] == argv[0]
    return doc["result"]


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


Z3 = {"order": 3, "coeffs": ["0", "1"]}


class TestCommands:
    def test_hodge(self):
        assert result("hodge", "--d", "4", "--n", "2")["values"] == [1, 19, 1]

    def test_betti(self):
        assert result("betti", "--d", "3", "--n", "3") == 10

    def test_euler(self):
        assert result("euler", "--d", "4", "--n", "2") == 24

    def test_hodge_cover_and_eigensig(self):
        assert result("hodge-cover", "--d", "3", "--n", "2", "--k", "3", "--i", "1")["values"] == [0, 4, 1, 0]
        assert result("eigensig", "--d", "3", "--n", "2", "--k", "3", "--i", "1") == [1, 4]

    def test_signature_and_rank(self):
        assert result("signature", "--d", "4", "--n", "2") == [2, 19]
        assert result("rank", "--d", "4", "--n", "2") == {"real": 2, "complex": 10}

    def test_lattice_count(self):
        assert result("lattice-count", "--dmax", "2", "--nvars", "4", "--k", "4") == 19

    def test_suspend_check(self):
        out = result("suspend-check", "--two-d", "4", "--n", "2")
        assert out["holds"] and out["suspension"]["values"] == [0, 3, 3, 0]

    def test_classify_json(self):
        out = result("classify", "--d", "3", "--n", "2", "--format", "json")
        assert out["verdict"] == "KernelLarge"
        assert out["gprime_type"]["real_form"] == "su(1,4)"

    def test_classify_text(self):
        code, out, _ = call("classify", "--d", "3", "--n", "1", "--format", "text")
        assert code == 0 and "KernelFinite" in out

    def test_nodal(self):
        out = result("nodal", "--k", "3", "--n", "1")
        assert out["order"] == 3
        assert [p["lambda"] for p in out["eigenpairs"]] == [encode(Cyclotomic.zeta(3)), encode(Cyclotomic.zeta(3, 2))]

    def test_join(self):
        assert result("join", "--k1", "3", "--k2", "4")["order"] == 12

    def test_suspend_lattice(self, tmp_path):
        steps = result("suspend-lattice", "--k", "3", "--times", "2")["steps"]
        assert steps[0]["det"] == encode(Cyclotomic.rational(1))
        assert steps[1]["gram"] == [[encode(Cyclotomic.rational(x)) for x in r] for r in [[-2, 1], [1, -2]]]
        path = write(tmp_path, "lat.json", {"gram": [[0, 1], [-1, 0]], "fiber_dim": 1})
        steps = result("suspend-lattice", "--input", path)["steps"]
        assert steps[0]["fiber_dim"] == 2

    def test_reflect(self, tmp_path):
        path = write(tmp_path, "r.json", {"form": [[1, 0], [0, 1]], "delta": [1, 0], "lambda": Z3,
                                          "epsilon": 1, "vector": [1, 1]})
        out = result("reflect", "--input", path)
        assert out["unitary"]
        assert out["image"] == [encode(Cyclotomic.zeta(3)), encode(Cyclotomic.rational(1))]

    def test_group_closure(self, tmp_path):
        path = write(tmp_path, "g.json", {"form": [[1, 0], [0, 1]],
                                          "generators": [[[Z3, 0], [0, 1]], [[1, 0], [0, Z3]]]})
        out = result("group-closure", "--input", path, "--cap", "100")
        assert out == {"finite": True, "size": 9, "order": 9, "cap": 100}

    def test_dichotomy(self):
        assert result("dichotomy", "--lambda-order", "3", "--h12", "0", "--signature", "2,0") == \
            {"kind": "FiniteWitness", "order": 9}
        out = result("dichotomy", "--lambda-order", "3", "--h12", "2", "--signature", "1,1", "--cap", "300")
        assert out == {"kind": "GrowthEvidence", "count": 301, "cap": 300}
        out = result("dichotomy", "--lambda-order", "3", "--h12", json.dumps({"order": 3, "coeffs": ["0", "1/2"]}),
                     "--signature", "2,0", "--cap", "300")
        assert out["kind"] in ("FiniteWitness", "GrowthEvidence")

    def test_product_obstruction(self):
        out = result("product-obstruction", "--d", "3", "--k", "3")
        assert out == {"holds": True, "max_order": 6, "discriminant_degree": 32}


class TestTable:
    def test_golden_csv(self):
        code, out, _ = call("table", "--d-max", "6", "--n-max", "4", "--format", "csv")
        assert code == 0
        assert out == (GOLDEN / "table_d6_n4.csv").read_text()

    def test_small_sweep(self):
        rows = result("table", "--d-max", "3", "--n-max", "1")["rows"]
        assert len(rows) == 4
        assert {(r["d"], r["n"]): r["verdict"] for r in rows}[(3, 1)] == "KernelFinite"

    def test_quadrics(self):
        rows = result("table", "--d-max", "2", "--n-max", "3")["rows"]
        assert {r["verdict"] for r in rows} == {"PhiFinite"}

    def test_empty_sweep(self):
        code, out, _ = call("table", "--d-max", "1", "--n-max", "2", "--format", "csv")
        assert code == 0
        assert out.strip() == "d,n,B,r,s,rank_R,rank_C,g_type,k,i,gprime_type,verdict"
        assert result("table", "--d-max", "1", "--n-max", "2")["rows"] == []


class TestErrors:
    @pytest.mark.parametrize("argv", [
        ["bogus"],
        ["betti", "--d", "3"],
        ["betti", "--d", "x", "--n", "1"],
        ["betti", "--d", "1", "--n", "1"],
        ["signature", "--d", "3", "--n", "3"],
        ["eigensig", "--d", "4", "--n", "1", "--k", "2", "--i", "1"],
        ["hodge-cover", "--d", "5", "--n", "1", "--k", "2", "--i", "1"],
        ["product-obstruction", "--d", "4", "--k", "2"],
        ["dichotomy", "--lambda-order", "3", "--signature", "1,1"],
        ["dichotomy", "--lambda-order", "3", "--signature", "one"],
        ["reflect", "--input", "/nonexistent.json"],
        ["suspend-lattice"],
    ])
    def test_usage_errors(self, argv):
        code, out, err = call(*argv)
        assert code == 2
        assert out == ""
        assert err

    def test_bad_json_input(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, out, _ = call("group-closure", "--input", str(path))
        assert code == 2 and out == ""
        path = write(tmp_path, "missing.json", {"form": [[1]]})
        assert call("group-closure", "--input", path)[0] == 2

    def test_non_unitary_generator(self, tmp_path):
        path = write(tmp_path, "g.json", {"form": [[1]], "generators": [[[2]]]})
        assert call("group-closure", "--input", path)[0] == 2

    def test_internal_inconsistency_exit_code(self, monkeypatch):
        from hypersurface_monodromy import hodge_theory
        from hypersurface_monodromy.errors import InternalInconsistency

        def broken(d, n):
            raise InternalInconsistency("forced")

        monkeypatch.setattr(hodge_theory, "primitive_betti", broken)
        code, out, err = call("betti", "--d", "3", "--n", "1")
        assert code == 1 and out == "" and "forced" in err


class TestSerialization:
    @pytest.mark.parametrize("argv", [
        ["hodge", "--d", "4", "--n", "2"],
        ["classify", "--d", "4", "--n", "2"],
        ["classify", "--d", "3", "--n", "0"],
        ["nodal", "--k", "4", "--n", "2"],
        ["table", "--d-max", "4", "--n-max", "2"],
    ])
    def test_round_trip(self, argv):
        code, out, _ = call(*argv)
        assert code == 0
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out

    def test_deterministic(self):
        assert call("classify", "--d", "5", "--n", "1") == call("classify", "--d", "5", "--n", "1")

    @pytest.mark.parametrize("value", [Cyclotomic.zeta(12, 5) * 3 - Cyclotomic.zeta(4), Cyclotomic.rational(-7),
                                       Cyclotomic.zeta(6).embed(12)])
    def test_scalar_round_trip(self, value):
        enc = encode(value)
        assert decode_scalar(json.loads(json.dumps(enc))) == value

    def test_scalar_uses_minimal_field(self):
        assert encode(Cyclotomic.zeta(4).embed(12)) == {"order": 4, "coeffs": ["0/1", "1/1"]}

    def test_bad_scalars(self):
        from hypersurface_monodromy.cli import UsageError
        for raw in [True, "x/y", {"order": 0, "coeffs": []}, [1]]:
            with pytest.raises(UsageError):
                decode_scalar(raw)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypersurface_monodromy", "betti", "--d", "4", "--n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == 6
