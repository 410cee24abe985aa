"""End-to-end command tests, run in process against the installed console entry."""

import json
import pathlib

import pytest

from prufer.cli import main
from prufer.orders import equation_order, order_to_dict
from prufer.poly import RationalPolynomial

ORDERS = pathlib.Path(__file__).resolve().parent.parent / "orders"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def order_path(name):
    return str(ORDERS / f"{name}.json")


def test_analyze_yes_golden_json(capsys):
    code, out, err = run(capsys, "analyze", order_path("z_i"), "--json")
    assert code == 0
    assert err == ""
    assert out == (
        '{"verdict": "YES", "reason": "ALL_COMPONENTS_MAXIMAL", '
        '"witness": {"primitive": ["0", "1"], "min_poly": "1 + X^2", '
        '"idempotents": [["1", "0"]], "components": [{"factor": "1 + X^2", '
        '"dim": 2, "basis": [["1", "0"], ["0", "1"]]}]}, '
        '"citation": "product-of-maximal-orders"}\n'
    )


def test_analyze_json_deterministic(capsys):
    first = run(capsys, "analyze", order_path("z_golden"), "--json")
    second = run(capsys, "analyze", order_path("z_golden"), "--json")
    assert first == second


def test_analyze_yes_text(capsys):
    code, out, _ = run(capsys, "analyze", order_path("z_i"))
    assert code == 0
    assert out.splitlines()[0] == "verdict: YES"
    assert out.endswith("verified: true\n")


def test_analyze_no_text(capsys):
    code, out, _ = run(capsys, "analyze", order_path("m2z"))
    assert code == 3
    assert out == (
        "verdict: NO\n"
        "reason: NONCOMMUTATIVE\n"
        'witness: {"x": ["1", "0", "0", "0"], "y": ["0", "1", "0", "0"]}\n'
        "citation: commutators-obstruct-integral-closure\n"
        "verified: true\n"
    )


def test_analyze_missing_file(capsys):
    code, out, err = run(capsys, "analyze", str(ORDERS / "no_such_order.json"))
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_analyze_invalid_json_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "invalid JSON" in err


def test_analyze_indeterminate(capsys, tmp_path):
    p = 1000000000000000003
    q = 1000000000000000009
    order = equation_order(RationalPolynomial((-p * q, 0, 1)))
    doc = tmp_path / "semiprime.json"
    doc.write_text(json.dumps(order_to_dict(order)), encoding="utf-8")
    code, out, err = run(capsys, "analyze", str(doc))
    assert code == 4
    assert out == ""
    assert "DISC_FACTORIZATION_FAILED" in err


def test_usage_error_is_exit_2(capsys):
    code, _, err = run(capsys)
    assert code == 2
    assert "usage" in err


def test_member_at_point_true(capsys):
    code, out, _ = run(
        capsys, "member", order_path("m2z"), "--poly", "1/2*X", "--at", "0,2,2,2", "--json"
    )
    assert code == 0
    assert out == (
        '{"poly": "1/2*X", "at": ["0", "2", "2", "2"], "member": true, '
        '"value": ["0", "1", "1", "1"]}\n'
    )


def test_member_at_point_false(capsys):
    code, out, _ = run(
        capsys, "member", order_path("m2z"), "--poly", "1/2*X", "--at", "0,4,1,2", "--json"
    )
    assert code == 0
    assert out == (
        '{"poly": "1/2*X", "at": ["0", "4", "1", "2"], "member": false, '
        '"value": ["0", "2", "1/2", "1"]}\n'
    )


def test_member_all_residues(capsys):
    code, out, _ = run(
        capsys,
        "member",
        order_path("z_i"),
        "--poly",
        "-1/2*X^2 + 1/2*X^4",
        "--all",
        "--json",
    )
    assert code == 0
    assert out == (
        '{"poly": "-1/2*X^2 + 1/2*X^4", "member": true, "denominator": 2, '
        '"residues": 4}\n'
    )


def test_member_all_budget_exhausted(capsys):
    code, out, err = run(
        capsys,
        "member",
        order_path("z_i"),
        "--poly",
        "-1/2*X^2 + 1/2*X^4",
        "--all",
        "--budget",
        "2",
    )
    assert code == 4
    assert out == ""
    assert "BUDGET_EXCEEDED" in err


def test_member_bad_coordinates(capsys):
    code, _, err = run(
        capsys, "member", order_path("z_i"), "--poly", "X", "--at", "1,oops"
    )
    assert code == 1
    assert "MALFORMED_INPUT" in err


def test_minpoly_golden(capsys):
    code, out, _ = run(capsys, "minpoly", order_path("z_golden"), "--at", "0,1", "--json")
    assert code == 0
    assert out == '{"at": ["0", "1"], "min_poly": "-1 - X + X^2"}\n'


def test_pointwise_golden(capsys):
    code, out, _ = run(capsys, "pointwise", order_path("m2z"), "--at", "0,4,1,2", "--json")
    assert code == 0
    assert out == (
        '{"at": ["0", "4", "1", "2"], "closed": false, '
        '"witness": ["0", "2", "1/2", "1"], "kind": "escaping", "subalgebra_dim": 2}\n'
    )


def test_maximal_order_golden(capsys):
    code, out, _ = run(capsys, "maximal-order", order_path("z_3i"), "--json")
    assert code == 0
    assert out == (
        '{"index": 3, "disc_input": -36, "disc_maximal": -4, '
        '"basis": [["1", "0"], ["0", "1/3"]]}\n'
    )


@pytest.mark.parametrize(
    "name, prime, expected",
    [
        ("z_i", 5, '{"prime": 5, "pairs": [[1, 1], [1, 1]], "E": [1], "F": [1], "s": 1, "r": 5}\n'),
        ("z_i", 2, '{"prime": 2, "pairs": [[2, 1]], "E": [2], "F": [1], "s": 2, "r": 2}\n'),
        ("z_golden", 3, '{"prime": 3, "pairs": [[1, 2]], "E": [1], "F": [2], "s": 1, "r": 9}\n'),
    ],
)
def test_ramify_golden(capsys, name, prime, expected):
    code, out, _ = run(capsys, "ramify", order_path(name), "--prime", str(prime), "--json")
    assert code == 0
    assert out == expected


def test_ramify_rejects_composite(capsys):
    code, _, err = run(capsys, "ramify", order_path("z_i"), "--prime", "6")
    assert code == 1
    assert "MALFORMED_INPUT" in err


def test_ramify_not_maximal(capsys):
    code, _, err = run(capsys, "ramify", order_path("z_sqrt5"), "--prime", "2")
    assert code == 1
    assert "NOT_MAXIMAL" in err


def test_transform_single(capsys):
    code, out, _ = run(
        capsys, "transform", "--prime", "3", "--ef", "1,1", "--poly", "X", "--json"
    )
    assert code == 0
    assert out == '{"poly": "X", "prime": 3, "pair": [1, 1], "transform": "-1/3*X + 1/3*X^3"}\n'


def test_transform_sequence(capsys):
    code, out, _ = run(
        capsys,
        "transform",
        "--prime",
        "2",
        "--ef",
        "1,1",
        "--poly",
        "X",
        "--sequence",
        "2",
        "--json",
    )
    assert code == 0
    assert out == (
        '{"poly": "X", "prime": 2, "pair": [1, 1], "sequence": '
        '["X", "-1/2*X + 1/2*X^2", "1/4*X - 1/8*X^2 - 1/4*X^3 + 1/8*X^4"]}\n'
    )


def test_transform_bad_pair(capsys):
    code, _, err = run(capsys, "transform", "--prime", "2", "--ef", "0,1", "--poly", "X")
    assert code == 1
    assert "MALFORMED_INPUT" in err


def test_hurwitz_lemma_pass(capsys):
    code, out, _ = run(capsys, "hurwitz", "lemma42", "--n", "2", "--json")
    assert code == 0
    assert out == '{"n": 2, "pass": true}\n'


def test_hurwitz_lemma_n1_violations(capsys):
    code, out, _ = run(capsys, "hurwitz", "lemma42", "--n", "1", "--json")
    assert code == 0
    expected = [[a, b, c, d] for a in (1, 3) for b in (1, 3) for c in (1, 3) for d in (1, 3)]
    assert json.loads(out) == {"n": 1, "violations": expected}


def test_hurwitz_closure_golden(capsys):
    code, out, _ = run(
        capsys, "hurwitz", "closure", "--samples", "2000", "--seed", "1", "--json"
    )
    assert code == 0
    assert out == (
        '{"samples": 2000, "seed": 1, "integral": 491, "member": 491, '
        '"counterexamples": []}\n'
    )


def test_hurwitz_check_names(capsys):
    code, out, _ = run(capsys, "hurwitz", "check", "--json")
    assert code == 0
    doc = json.loads(out)
    assert [c["name"] for c in doc["checks"]] == [
        "unit-is-member",
        "unit-is-integral",
        "unit-quadratic",
        "odd-grid-members",
        "norms-2-integral",
    ]
    assert all(c["pass"] for c in doc["checks"])


def test_examples_all_pass(capsys):
    code, out, _ = run(capsys, "examples")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 11
    assert all(line.startswith("PASS") for line in lines)
