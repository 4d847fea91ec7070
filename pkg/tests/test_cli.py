"""The braidcryst command line front end."""

import json

import pytest

from braidcryst.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_nf_identity_word(capsys):
    code, out, _ = run(capsys, "--n", "3", "--json", "nf", "-1 2 -1 2 -1 2")
    assert code == 0
    data = json.loads(out)
    assert data["perm"] == [1, 2, 3]
    assert all(c == 0 for c in data["vec"].values()) or data["vec"] == {}


def test_nf_empty_word(capsys):
    code, out, _ = run(capsys, "--n", "3", "--json", "nf", "")
    assert code == 0
    assert json.loads(out)["perm"] == [1, 2, 3]


def test_nf_text_output(capsys):
    code, out, _ = run(capsys, "--n", "3", "nf", "1 1")
    assert code == 0
    assert "|" in out


def test_order_of_delta_word(capsys):
    code, word, _ = run(capsys, "--n", "7", "delta", "--blocks", "7", "--emit-word")
    assert code == 0
    assert word == "6 5 4 -3 -2 -1"
    code, out, _ = run(capsys, "--n", "7", "order", word)
    assert code == 0
    assert out == "7"


def test_order_infinite(capsys):
    code, out, _ = run(capsys, "--n", "3", "order", "1")
    assert code == 0
    assert out == "infinite"
    code, out, _ = run(capsys, "--n", "3", "--json", "order", "1")
    assert json.loads(out) == {"order": None}


def test_element_json_round_trip(capsys):
    _, gj, _ = run(capsys, "--n", "4", "--json", "nf", "1 2 3")
    _, hj, _ = run(capsys, "--json", "inv", gj)
    _, prod, _ = run(capsys, "--json", "mul", gj, hj)
    data = json.loads(prod)
    assert data["perm"] == [1, 2, 3, 4]
    assert all(c == 0 for c in data["vec"].values())


def test_mixed_json_and_word_input(capsys):
    _, gj, _ = run(capsys, "--n", "3", "--json", "nf", "2 -1")
    code, out, _ = run(capsys, "--n", "3", "--json", "mul", gj, "2 -1")
    assert code == 0
    assert json.loads(out)["perm"] == json.loads(run(capsys, "--n", "3", "--json", "nf", "2 -1 2 -1")[1])["perm"]


def test_pow(capsys):
    code, out, _ = run(capsys, "--n", "3", "--json", "pow", "2 -1", "3")
    assert code == 0
    assert json.loads(out)["perm"] == [1, 2, 3]


def test_alpha_and_orbits(capsys):
    code, out, _ = run(capsys, "--n", "7", "--json", "alpha", "--k", "3")
    assert code == 0
    assert json.loads(out)["perm"][:3] == [3, 1, 2]
    code, out, _ = run(capsys, "--n", "7", "--json", "orbits", "--blocks", "3,3")
    assert code == 0
    table = json.loads(out)
    assert sum(len(o) for o in table) == 21
    # same table computed from the element itself
    _, word, _ = run(capsys, "--n", "7", "delta", "--blocks", "3,3", "--emit-word")
    code, out2, _ = run(capsys, "--n", "7", "--json", "orbits", word)
    assert json.loads(out2) == table


def test_orbits_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["--n", "5", "orbits"])
    assert info.value.code == 2


def test_conjugate_test_and_conjugator(capsys):
    code, out, _ = run(capsys, "--n", "5", "--json", "conjugate-test", "2 -1", "4 -3")
    assert code == 0
    data = json.loads(out)
    assert data["conjugate"] is True
    assert data["witness"] is not None
    code, out, _ = run(capsys, "--n", "5", "--json", "conjugator", "4 -3")
    assert code == 0
    data = json.loads(out)
    assert data["blocks"]
    code, out, _ = run(capsys, "--n", "5", "conjugate-test", "2 -1", "1 1")
    assert code == 0
    assert out.startswith("not conjugate")


def test_torsion_witness_command(capsys):
    code, out, _ = run(capsys, "--n", "5", "--json", "torsion-witness", "(1,2,3)")
    assert code == 0
    assert json.loads(out)["witness"] is not None
    code, out, _ = run(capsys, "--n", "5", "--json", "torsion-witness", "(1,2)")
    assert code == 0
    assert json.loads(out)["witness"] is None


def test_count_classes_command(capsys):
    code, out, _ = run(capsys, "--n", "7", "count-classes", "--k", "3")
    assert code == 0 and out == "2"
    code, out, _ = run(capsys, "--n", "10", "--json", "count-classes", "--k", "21")
    assert json.loads(out) == {"classes": 1}


def test_holonomy_command(capsys):
    code, out, _ = run(capsys, "--n", "3", "--json", "holonomy", "(1,2)")
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert data["det"] == -1


def test_bieberbach_command(capsys):
    code, out, _ = run(capsys, "--n", "4", "--json", "bieberbach", "(1,2,3,4)", "(1,3)")
    assert code == 0
    data = json.loads(out)
    assert data == {"order": 8, "bieberbach": True}
    code, out, _ = run(capsys, "--n", "3", "--json", "bieberbach", "(1,2,3)")
    assert json.loads(out) == {"order": 3, "bieberbach": False}


def test_b3_catalog_command(capsys):
    code, out, _ = run(capsys, "--json", "b3-catalog")
    assert code == 0
    report = json.loads(out)
    assert [s["name"] for s in report["subgroups"]] == [
        "trivial",
        "three_cycle",
        "transposition",
        "symmetric",
    ]
    assert report["bieberbach_example"]["torsion_free"] is True
    assert report["torsion_example"]["torsion_free"] is False


def test_frobenius_verify_command(capsys):
    code, out, _ = run(capsys, "--json", "frobenius", "verify")
    assert code == 0
    data = json.loads(out)
    assert data["subgroup_order"] == 21
    assert all(rec["holds"] for rec in data["certificate"])


def test_frobenius_family_command(capsys):
    code, out, _ = run(capsys, "--json", "frobenius", "family")
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 6
    assert len(data["kernel"]) == 6


def test_frobenius_family_sampling_is_seeded(capsys):
    a = run(capsys, "--json", "--seed", "5", "frobenius", "family", "--sample", "3")
    b = run(capsys, "--json", "--seed", "5", "frobenius", "family", "--sample", "3")
    assert a == b
    c = run(capsys, "--json", "--seed", "6", "frobenius", "family", "--sample", "3")
    assert json.loads(a[1])["samples"] != json.loads(c[1])["samples"]


def test_frobenius_conjugator_command(capsys):
    code, out, _ = run(
        capsys, "--json", "frobenius", "conjugator", "--r", "1,0,0,0,0,0"
    )
    assert code == 0
    data = json.loads(out)
    assert "theta" in data and "offset" in data


def test_frobenius_conjugator_requires_r():
    with pytest.raises(SystemExit) as info:
        main(["frobenius", "conjugator"])
    assert info.value.code == 2


def test_abelian_realization_command(capsys):
    code, out, _ = run(
        capsys, "--n", "8", "--json", "abelian-realization", "--blocks", "3,5"
    )
    assert code == 0
    data = json.loads(out)
    assert [g["order"] for g in data["generators"]] == [3, 5]


def test_domain_error_exit_code(capsys):
    # letter out of range for n
    code, out, err = run(capsys, "--n", "3", "nf", "5")
    assert code == 1
    assert "error" in err
    # offset off the family surface
    code, _, err = run(
        capsys, "--json", "frobenius", "verify", "--offset-json", "{}"
    )
    assert code == 1
    assert "error" in err


def test_usage_error_exit_code():
    # word input without --n
    with pytest.raises(SystemExit) as info:
        main(["nf", "1 2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_conflicting_n_is_a_domain_error(capsys):
    _, gj, _ = run(capsys, "--n", "4", "--json", "nf", "1")
    code, _, err = run(capsys, "--n", "5", "nf", gj)
    assert code == 1
    assert "conflicts" in err
