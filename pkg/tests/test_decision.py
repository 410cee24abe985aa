import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from prufer.decision import PrueferCertificate, decide_pruefer, verify_certificate
from prufer.errors import IndeterminateError, MalformedCertificateError
from prufer.orders import element, equation_order, load_order, product_order
from prufer.poly import RationalPolynomial


def P(*coeffs):
    return RationalPolynomial(coeffs)


EXPECTED = {
    "m2z": ("NO", "NONCOMMUTATIVE"),
    "hurwitz": ("NO", "NONCOMMUTATIVE"),
    "z_x_mod_x2": ("NO", "NOT_REDUCED"),
    "z_sqrt5": ("NO", "COMPONENT_NOT_MAXIMAL"),
    "z_3i": ("NO", "COMPONENT_NOT_MAXIMAL"),
    "z_i": ("YES", "ALL_COMPONENTS_MAXIMAL"),
    "z_golden": ("YES", "ALL_COMPONENTS_MAXIMAL"),
    "zxz": ("YES", "ALL_COMPONENTS_MAXIMAL"),
    "z": ("YES", "ALL_COMPONENTS_MAXIMAL"),
    "cubic_index2": ("YES", "ALL_COMPONENTS_MAXIMAL"),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_corpus_verdicts(corpus, name):
    cert = decide_pruefer(corpus[name])
    assert (cert.verdict, cert.reason) == EXPECTED[name]
    assert verify_certificate(corpus[name], cert)


def test_sqrt5_witness_is_golden_ratio(z_sqrt5):
    cert = decide_pruefer(z_sqrt5)
    assert cert.witness["element"] == ["1/2", "1/2"]
    assert cert.witness["min_poly"] == "-1 - X + X^2"


def test_z3i_witness_is_i(corpus):
    cert = decide_pruefer(corpus["z_3i"])
    assert cert.witness["element"] == ["0", "1/3"]
    assert cert.witness["min_poly"] == "1 + X^2"


def test_noncommutative_witness_pair(m2z):
    cert = decide_pruefer(m2z)
    assert set(cert.witness) == {"x", "y"}
    assert cert.citation == "commutators-obstruct-integral-closure"


def test_not_reduced_witness(corpus):
    cert = decide_pruefer(corpus["z_x_mod_x2"])
    assert set(cert.witness) == {"element", "power"}


def test_product_with_gaussians_is_pruefer(corpus):
    order = product_order(corpus["z"], corpus["z_i"])
    cert = decide_pruefer(order)
    assert cert.verdict == "YES"
    assert verify_certificate(order, cert)
    assert len(cert.witness["components"]) == 2


def test_product_with_sqrt5_is_not(corpus):
    order = product_order(corpus["z"], corpus["z_sqrt5"])
    cert = decide_pruefer(order)
    assert (cert.verdict, cert.reason) == ("NO", "COMPONENT_NOT_MAXIMAL")
    assert cert.witness["element"] == ["0", "1/2", "1/2"]
    assert verify_certificate(order, cert)


def test_idempotent_escape_detected():
    order = equation_order(P(3, -4, 1))  # Z[X]/((X-1)(X-3))
    cert = decide_pruefer(order)
    assert (cert.verdict, cert.reason) == ("NO", "IDEMPOTENT_ESCAPES")
    assert cert.witness["min_poly"] == "-X + X^2"
    assert verify_certificate(order, cert)


def test_yes_certificate_shape(z_i):
    cert = decide_pruefer(z_i)
    assert set(cert.witness) == {"primitive", "min_poly", "idempotents", "components"}
    comp = cert.witness["components"][0]
    assert comp["dim"] == 2
    assert comp["factor"] == "1 + X^2"


GOLDEN_ZI = (
    '{"verdict": "YES", "reason": "ALL_COMPONENTS_MAXIMAL", '
    '"witness": {"primitive": ["0", "1"], "min_poly": "1 + X^2", '
    '"idempotents": [["1", "0"]], "components": [{"factor": "1 + X^2", '
    '"dim": 2, "basis": [["1", "0"], ["0", "1"]]}]}, '
    '"citation": "product-of-maximal-orders"}'
)


def test_certificate_json_golden(z_i):
    cert = decide_pruefer(z_i)
    assert cert.to_json() == GOLDEN_ZI


def test_certificate_json_round_trip(corpus):
    for order in corpus.values():
        cert = decide_pruefer(order)
        again = PrueferCertificate.from_json(cert.to_json())
        assert again == cert


def test_certificate_dict_key_order(m2z):
    cert = decide_pruefer(m2z)
    assert list(cert.to_dict()) == ["verdict", "reason", "witness", "citation"]


def test_from_dict_rejects_missing_key():
    doc = json.loads(GOLDEN_ZI)
    del doc["citation"]
    with pytest.raises(MalformedCertificateError):
        PrueferCertificate.from_dict(doc)


def test_from_dict_rejects_extra_key():
    doc = json.loads(GOLDEN_ZI)
    doc["note"] = "tampered"
    with pytest.raises(MalformedCertificateError):
        PrueferCertificate.from_dict(doc)


def test_from_dict_rejects_mismatched_reason():
    doc = json.loads(GOLDEN_ZI)
    doc["verdict"] = "NO"
    with pytest.raises(MalformedCertificateError):
        PrueferCertificate.from_dict(doc)


def test_from_dict_rejects_empty_citation():
    doc = json.loads(GOLDEN_ZI)
    doc["citation"] = ""
    with pytest.raises(MalformedCertificateError):
        PrueferCertificate.from_dict(doc)


def test_verify_rejects_tampered_component_basis(z_i):
    doc = json.loads(GOLDEN_ZI)
    doc["witness"]["components"][0]["basis"] = [["1", "0"], ["0", "2"]]
    cert = PrueferCertificate.from_dict(doc)
    assert not verify_certificate(z_i, cert)


def test_verify_rejects_tampered_primitive(z_i):
    doc = json.loads(GOLDEN_ZI)
    doc["witness"]["primitive"] = ["1", "0"]  # not a root of X^2 + 1
    cert = PrueferCertificate.from_dict(doc)
    assert not verify_certificate(z_i, cert)


def test_verify_rejects_integral_witness(z_sqrt5):
    cert = decide_pruefer(z_sqrt5)
    doc = cert.to_dict()
    doc["witness"]["element"] = ["1", "0"]  # inside the order, proves nothing
    tampered = PrueferCertificate.from_dict(doc)
    assert not verify_certificate(z_sqrt5, tampered)


def test_verify_rejects_commuting_pair(m2z, corpus):
    cert = decide_pruefer(m2z)
    doc = cert.to_dict()
    doc["witness"]["y"] = doc["witness"]["x"]
    tampered = PrueferCertificate.from_dict(doc)
    assert not verify_certificate(m2z, tampered)


def test_verify_against_wrong_order(z_i, z_golden):
    cert = decide_pruefer(z_i)
    assert not verify_certificate(z_golden, cert)


def test_indeterminate_disc_factorization():
    p = 1000000000000000003
    q = 1000000000000000009
    order = equation_order(P(-p * q, 0, 1))
    with pytest.raises(IndeterminateError) as exc:
        decide_pruefer(order)
    assert exc.value.reason == "DISC_FACTORIZATION_FAILED"


def test_indeterminate_degree_cap():
    coeffs = [-2] + [0] * 32 + [1]  # X^33 - 2
    order = equation_order(RationalPolynomial(coeffs))
    with pytest.raises(IndeterminateError) as exc:
        decide_pruefer(order)
    assert exc.value.reason == "DEGREE_CAP"


def test_certificate_validates_on_construction():
    with pytest.raises(MalformedCertificateError):
        PrueferCertificate(
            verdict="YES",
            reason="NONCOMMUTATIVE",
            witness={},
            citation="product-of-maximal-orders",
        )


quadratics = st.tuples(
    st.integers(min_value=-6, max_value=6), st.integers(min_value=-6, max_value=6)
).map(lambda ab: RationalPolynomial((ab[0], ab[1], 1)))


@given(quadratics)
def test_certificate_soundness_randomized(f):
    order = equation_order(f)
    try:
        cert = decide_pruefer(order)
    except IndeterminateError:
        assume(False)
        return
    assert verify_certificate(order, cert)
    again = PrueferCertificate.from_json(cert.to_json())
    assert verify_certificate(order, again)
