import json

import pytest

from forgottenmonoid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommands:
    def test_classes_n3(self, capsys):
        code, out, _ = run(capsys, "classes", "--n", "3")
        assert code == 0
        assert out.splitlines() == [
            "3,0,1n  canonical=1,2,3  size=1",
            "3,1,1n  canonical=1,3,2  size=2",
            "3,2,n1  canonical=2,3,1  size=2",
            "3,3,n1  canonical=3,2,1  size=1",
        ]

    def test_classes_n2(self, capsys):
        code, out, _ = run(capsys, "classes", "--n", "2")
        assert code == 0
        assert out.splitlines() == [
            "2,0,1n  canonical=1,2  size=1",
            "2,1,n1  canonical=2,1  size=1",
        ]

    def test_classes_n4_has_eight_records(self, capsys):
        code, out, _ = run(capsys, "classes", "--n", "4", "--json")
        payload = json.loads(out)
        assert code == 0
        assert len(payload["classes"]) == 8
        sizes = [record["size"] for record in payload["classes"]]
        assert sum(sizes) == 24

    def test_classes_large_n_drops_sizes(self, capsys):
        code, out, _ = run(capsys, "classes", "--n", "12", "--json")
        payload = json.loads(out)
        assert code == 0
        assert len(payload["classes"]) == 112
        assert all("size" not in record for record in payload["classes"])

    def test_class_of(self, capsys):
        code, out, _ = run(capsys, "class-of", "12543")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "key: 5,3,1n"
        assert lines[1] == "canonical: 1,2,5,4,3"
        assert lines[2] == "size: 15"

    def test_canonical(self, capsys):
        code, out, _ = run(capsys, "canonical", "--key", "8,10,n1")
        assert code == 0
        assert out.splitlines()[0] == "canonical: 2,3,4,5,8,7,6,1"

    def test_insert(self, capsys):
        code, out, _ = run(capsys, "insert", "136542", "0")
        assert code == 0
        assert out.splitlines()[0] == "result: 2,4,7,6,5,3,1"

    def test_ribbons_by_key(self, capsys):
        code, out, _ = run(capsys, "ribbons", "--key", "8,10,n1")
        assert code == 0
        assert out.strip() == "r[1,1,5,1] + r[3,4,1]"

    def test_ribbons_by_perm(self, capsys):
        code, out, _ = run(capsys, "ribbons", "--perm", "12543")
        assert code == 0
        assert out.strip() == "r[1,1,3] + r[3,2]"

    def test_ribbons_with_vars_matches_class_sum(self, capsys):
        from forgottenmonoid.forgotten import ClassKey
        from forgottenmonoid.qsym import TruncatedPolynomial, class_qsym_sum

        code, out, _ = run(capsys, "ribbons", "--key", "5,3,1n", "--vars", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["vars"] == 5
        rebuilt = TruncatedPolynomial.from_json_dict(payload["sum"])
        assert rebuilt == class_qsym_sum(ClassKey(5, 3, True), 5)

    def test_ribbons_requires_one_input(self, capsys):
        code, _, err = run(capsys, "ribbons")
        assert code == 3
        assert "exactly one" in err

    def test_phi_and_ns(self, capsys):
        assert run(capsys, "phi", "132")[1].strip() == "3,1,2"
        assert run(capsys, "ns", "132")[1].strip() == "2,3,1"

    def test_commute(self, capsys):
        code, out, _ = run(capsys, "commute", "2", "3", "--alphabet", "4", "--json")
        assert code == 0
        assert json.loads(out)["commutes"] is True

    def test_verify_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "insertion", "--max-n", "5")
        assert code == 0
        assert "2/2 checks passed" in out
        assert out.count("[PASS]") == 2

    def test_verify_json(self, capsys):
        code, out, _ = run(capsys, "verify", "foata", "--max-n", "4", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["passed"] is True
        assert {check["name"] for check in payload["checks"]} == {
            "foata_core", "ns_properties", "ns_image",
        }


class TestExitCodes:
    def test_parse_error_is_2(self, capsys):
        code, _, err = run(capsys, "class-of", "1,1,2")
        assert code == 2
        assert "parse error" in err

    def test_domain_error_is_3(self, capsys):
        code, _, err = run(capsys, "insert", "13452", "0")
        assert code == 3
        assert "domain error" in err

    def test_closure_cap_is_domain_error(self, capsys):
        code, _, err = run(capsys, "class-of", "1,2,3,4,5,6,7,8,9,10")
        assert code == 3
        assert "--force" in err

    def test_commute_cap(self, capsys):
        code, _, err = run(capsys, "commute", "2", "3", "--alphabet", "6")
        assert code == 3

    def test_key_out_of_range_is_domain_error(self, capsys):
        code, _, err = run(capsys, "canonical", "--key", "5,9,1n")
        assert code == 3

    def test_bad_key_text_is_parse_error(self, capsys):
        code, _, err = run(capsys, "canonical", "--key", "5,3")
        assert code == 2

    def test_unknown_suite_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["verify", "nonsense"])
        assert info.value.code == 2


class TestJsonRoundTrips:
    def test_class_of_payload_round_trips(self, capsys):
        _, out, _ = run(capsys, "class-of", "3142", "--json")
        payload = json.loads(out)
        assert json.dumps(payload) == out.strip()
        assert payload["key"] == {"n": 4, "inv": 3, "oneBeforeN": True}
        assert payload["canonical"] == [1, 4, 3, 2]

    def test_ribbons_payload_round_trips(self, capsys):
        _, out, _ = run(capsys, "ribbons", "--key", "8,10,1n", "--json")
        payload = json.loads(out)
        assert json.dumps(payload) == out.strip()
        assert [1, 1, 1, 1, 4] in payload["compositions"]

    def test_text_key_round_trips(self, capsys):
        _, out, _ = run(capsys, "class-of", "12543")
        key_text = out.splitlines()[0].split(": ")[1]
        code, out2, _ = run(capsys, "canonical", "--key", key_text)
        assert code == 0
        assert out2.splitlines()[0] == "canonical: 1,2,5,4,3"
