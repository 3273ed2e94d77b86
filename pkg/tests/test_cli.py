import json
import subprocess
import sys

import pytest

from homtwist import catalog
from homtwist.cli import main
from homtwist.document import Document, parse, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def docs(tmp_path):
    def write(name, structures=None):
        path = tmp_path / f"{name}.json"
        path.write_text(serialize(Document(structures or catalog.example(name))))
        return str(path)

    return write


def test_check_catalog_bundle(capsys, docs):
    code, out, _ = run(capsys, "check", docs("z2-graded-bundle"), "--oracle")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] is True
    assert all(e["oracle_agrees"] for e in report["entries"])
    assert {e["component"] for e in report["entries"]} == {"host", "coalg", "coaction", "bundle"}
    keys = [(e["structure"], e["axiom_name"], e["component"]) for e in report["entries"]]
    assert keys == sorted(keys)


def test_check_mutated_bundle(capsys, docs):
    code, out, _ = run(capsys, "check", docs("z2-mutated-bundle"))
    assert code == 1
    failed = [e for e in json.loads(out)["entries"] if not e["holds"]]
    assert [e["checker"] for e in failed] == ["check_bundle_axiom"]
    assert failed[0]["residual_nonzero_entries"] == [[3, 0, "1"]]


def test_check_axiom_selection(capsys, docs):
    path = docs("z2-mutated-bundle")
    code, out, _ = run(capsys, "check", path, "--axioms", "comultiplicativity,hom_coassociativity")
    assert code == 0
    assert {e["axiom_name"] for e in json.loads(out)["entries"]} == {"comultiplicativity", "hom_coassociativity"}
    code, _, err = run(capsys, "check", path, "--axioms", "counitality")
    assert code == 2 and "counitality" in err


def test_malformed_rational_exits_2(capsys, tmp_path, docs):
    path = docs("z2-graded-bundle")
    text = open(path).read().replace('"1"', '"1/0"', 1)
    bad = tmp_path / "bad.json"
    bad.write_text(text)
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "BadRational" in err


def test_input_errors_exit_2(capsys, tmp_path, docs):
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check", docs("z2-graded-bundle"), "--structure", "nope")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "induce", docs("z2-graded-bundle"), "--op", "cube", "--structure", "x")[0] == 2
    assert run(capsys, "example", "no-such-example")[0] == 2


def test_oracle_divergence_exits_3(capsys, docs, monkeypatch):
    import homtwist.cli as cli
    from homtwist.structures import CheckReport
    from homtwist.tensor import identity

    def lying_oracle(axiom, *args):
        return CheckReport.compare(axiom, identity(1), identity(1))

    monkeypatch.setattr(cli, "oracle_evaluate", lying_oracle)
    assert run(capsys, "check", docs("z2-graded-bundle"), "--oracle")[0] == 3


def test_deform_sign(capsys, tmp_path, docs):
    src = docs("z2-deformation-input")
    out = str(tmp_path / "deformed.json")
    code, _, _ = run(capsys, "deform", src, "--bundle", "bundle", "--alpha-h", "id2", "--alpha-c", "sign", "--out", out)
    assert code == 0
    assert run(capsys, "check", out, "--oracle")[0] == 0


def test_deform_swap_fails(capsys, docs):
    code, out, err = run(
        capsys, "deform", docs("z2-deformation-input"), "--bundle", "bundle", "--alpha-h", "id2", "--alpha-c", "swap"
    )
    assert code == 1 and out == ""
    assert "CompatibilityFailure" in err and "coaction_compatibility" in err


def test_deform_by_identity_reproduces_input(capsys, docs):
    code, out, _ = run(
        capsys, "deform", docs("z2-deformation-input"), "--bundle", "bundle", "--alpha-h", "id2", "--alpha-c", "id2"
    )
    assert code == 0
    assert out == serialize(Document({"bundle": catalog.example("z2-deformation-input")["bundle"]}))


def test_deform_wrong_kind_exits_2(capsys, docs):
    code, _, _ = run(
        capsys, "deform", docs("z2-deformation-input"), "--bundle", "sign", "--alpha-h", "id2", "--alpha-c", "id2"
    )
    assert code == 2


def test_induce_characterize(capsys, docs):
    code, out, _ = run(capsys, "induce", docs("z2-graded-bundle"), "--op", "characterize", "--structure", "z2-graded-bundle")
    assert code == 0
    assert json.loads(out) == {"structure": "z2-graded-bundle", "axiom_holds": True, "morphism_holds": True, "agree": True}
    code, out, _ = run(capsys, "induce", docs("z2-mutated-bundle"), "--op", "characterize", "--structure", "z2-mutated-bundle")
    assert code == 0 and json.loads(out)["axiom_holds"] is False


def test_induce_tensor_on_dim_one_host(capsys, docs):
    name = "trivial-group-comatrix-2"
    code, out, _ = run(capsys, "induce", docs(name), "--op", "tensor", "--structure", name)
    assert code == 0
    doc = parse(out)
    product = doc.get(f"{name}_tensor").comodule
    assert product.host_dim == 1 and product.m_dim == 16
    assert all(product.delta[i, j] == (i == j) for i in range(16) for j in range(16))


def test_induce_tilde_round_trips_through_check(capsys, tmp_path, docs):
    out = str(tmp_path / "tilde.json")
    assert run(capsys, "induce", docs("z3-graded-bundle"), "--op", "tilde", "--structure", "z3-graded-bundle", "--out", out)[0] == 0
    assert run(capsys, "check", out, "--oracle")[0] == 0


def test_example_list_and_write(capsys, tmp_path):
    code, out, _ = run(capsys, "example", "--list")
    assert code == 0 and out.split() == catalog.example_names()
    path = str(tmp_path / "z2.json")
    assert run(capsys, "example", "z2-graded-bundle", "--out", path)[0] == 0
    assert run(capsys, "check", path)[0] == 0


def test_console_output_is_deterministic(tmp_path, docs):
    path = docs("z3-graded-bundle")
    cmd = [sys.executable, "-m", "homtwist.cli", "check", path, "--oracle"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
