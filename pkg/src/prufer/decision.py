"""The top-level decision: is Int_Q(A) a Prüfer domain?

For an order A over Z the answer is yes exactly when A is isomorphic to a
finite product of rings of integers of number fields.  ``decide_pruefer``
walks the obstruction ladder (noncommutativity, nilpotents, idempotents
escaping the lattice, a component below its maximal order) and emits a
``PrueferCertificate`` whose witness can be re-checked by
``verify_certificate`` using only independent primitives: nobody has to
trust the decision pipeline to trust the verdict.

Certificates serialize to JSON with a fixed field order (verdict, reason,
witness, citation) so output files are byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .closure import (
    discriminant,
    factor_int,
    is_integrally_closed_order,
    p_radical,
    ring_of_multipliers,
)
from .errors import (
    BudgetExceededError,
    DiscFactorizationError,
    FactorDegreeError,
    IndeterminateError,
    MalformedCertificateError,
    MalformedInputError,
    NotApplicableError,
    PruferError,
    SearchExhaustedError,
)
from .factor import poly_factor
from .lattice import hnf_reduce
from .linalg import solve_right
from .orders import (
    NOT_REDUCED,
    UNDECIDED_SEMISIMPLE,
    AlgebraElement,
    ZOrder,
    evaluate_poly,
    is_commutative,
    is_reduced,
    minimal_polynomial,
    mul,
    power,
)
from .poly import RationalPolynomial
from .splitting import component_order, decompose, idempotents_in_order

VERDICT_YES = "YES"
VERDICT_NO = "NO"

REASON_NONCOMMUTATIVE = "NONCOMMUTATIVE"
REASON_NOT_REDUCED = "NOT_REDUCED"
REASON_IDEMPOTENT_ESCAPES = "IDEMPOTENT_ESCAPES"
REASON_COMPONENT_NOT_MAXIMAL = "COMPONENT_NOT_MAXIMAL"
REASON_ALL_MAXIMAL = "ALL_COMPONENTS_MAXIMAL"

NO_REASONS = (
    REASON_NONCOMMUTATIVE,
    REASON_NOT_REDUCED,
    REASON_IDEMPOTENT_ESCAPES,
    REASON_COMPONENT_NOT_MAXIMAL,
)

# Self-describing rule identifiers; the verifier knows how to re-check each.
_CITATIONS = {
    REASON_NONCOMMUTATIVE: "commutators-obstruct-integral-closure",
    REASON_NOT_REDUCED: "nilpotents-obstruct-integral-closure",
    REASON_IDEMPOTENT_ESCAPES: "integral-idempotent-outside-order",
    REASON_COMPONENT_NOT_MAXIMAL: "component-not-integrally-closed",
    REASON_ALL_MAXIMAL: "product-of-maximal-orders",
}


@dataclass(frozen=True)
class PrueferCertificate:
    verdict: str
    reason: str
    witness: dict
    citation: str

    def __post_init__(self):
        if self.verdict not in (VERDICT_YES, VERDICT_NO):
            raise MalformedCertificateError(f"MALFORMED_CERTIFICATE: bad verdict {self.verdict!r}")
        if self.verdict == VERDICT_YES:
            if self.reason != REASON_ALL_MAXIMAL:
                raise MalformedCertificateError(
                    f"MALFORMED_CERTIFICATE: YES verdict with reason {self.reason!r}"
                )
        elif self.reason not in NO_REASONS:
            raise MalformedCertificateError(
                f"MALFORMED_CERTIFICATE: NO verdict with reason {self.reason!r}"
            )
        if not isinstance(self.witness, dict):
            raise MalformedCertificateError("MALFORMED_CERTIFICATE: witness must be an object")
        if not isinstance(self.citation, str) or not self.citation:
            raise MalformedCertificateError("MALFORMED_CERTIFICATE: citation must be a nonempty string")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": self.witness,
            "citation": self.citation,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "PrueferCertificate":
        if not isinstance(data, dict):
            raise MalformedCertificateError("MALFORMED_CERTIFICATE: not an object")
        expected = {"verdict", "reason", "witness", "citation"}
        if set(data) != expected:
            raise MalformedCertificateError(
                f"MALFORMED_CERTIFICATE: fields {sorted(data)} do not match {sorted(expected)}"
            )
        return cls(
            verdict=data["verdict"],
            reason=data["reason"],
            witness=data["witness"],
            citation=data["citation"],
        )

    @classmethod
    def from_json(cls, text: str) -> "PrueferCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificateError(f"MALFORMED_CERTIFICATE: invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def _coords_json(x: AlgebraElement) -> list[str]:
    return [str(c) for c in x.coords]


def _row_json(row: Sequence[Fraction]) -> list[str]:
    return [str(c) for c in row]


def _parse_coords(raw, dim: int) -> AlgebraElement:
    if not isinstance(raw, list) or len(raw) != dim:
        raise MalformedCertificateError(f"MALFORMED_CERTIFICATE: expected {dim} coordinates")
    out = []
    for c in raw:
        if not isinstance(c, str):
            raise MalformedCertificateError("MALFORMED_CERTIFICATE: coordinates must be strings")
        try:
            out.append(Fraction(c))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedCertificateError(f"MALFORMED_CERTIFICATE: bad coordinate {c!r}") from exc
    return AlgebraElement(tuple(out))


def _parse_poly(raw) -> RationalPolynomial:
    if not isinstance(raw, str):
        raise MalformedCertificateError("MALFORMED_CERTIFICATE: polynomial must be a string")
    try:
        return RationalPolynomial.parse(raw)
    except MalformedInputError as exc:
        raise MalformedCertificateError(f"MALFORMED_CERTIFICATE: bad polynomial {raw!r}") from exc


def _field(witness: dict, key: str):
    if key not in witness:
        raise MalformedCertificateError(f"MALFORMED_CERTIFICATE: witness missing {key!r}")
    return witness[key]


_INDETERMINATE_TAGS = (
    (DiscFactorizationError, "DISC_FACTORIZATION_FAILED"),
    (BudgetExceededError, "BUDGET_EXCEEDED"),
    (FactorDegreeError, "DEGREE_CAP"),
    (SearchExhaustedError, "SEARCH_EXHAUSTED"),
)
_INDETERMINATE_TYPES = tuple(klass for klass, _ in _INDETERMINATE_TAGS)


def decide_pruefer(order: ZOrder) -> PrueferCertificate:
    """Decide whether Int_Q(A) is Prüfer, with a re-checkable certificate.

    Obstructions are tested cheapest first; resource exhaustion raises
    IndeterminateError instead of guessing a verdict.
    """
    try:
        return _decide(order)
    except _INDETERMINATE_TYPES as exc:
        for klass, tag in _INDETERMINATE_TAGS:
            if isinstance(exc, klass):
                raise IndeterminateError(tag, exc) from exc
        raise  # unreachable


def _decide(order: ZOrder) -> PrueferCertificate:
    commutative, pair = is_commutative(order)
    if not commutative:
        x, y = pair
        witness = {"x": _coords_json(x), "y": _coords_json(y)}
        return PrueferCertificate(
            VERDICT_NO, REASON_NONCOMMUTATIVE, witness, _CITATIONS[REASON_NONCOMMUTATIVE]
        )

    red = is_reduced(order)
    if red.status == NOT_REDUCED:
        witness = {"element": _coords_json(red.witness), "power": red.nilpotency}
        return PrueferCertificate(
            VERDICT_NO, REASON_NOT_REDUCED, witness, _CITATIONS[REASON_NOT_REDUCED]
        )
    if red.status == UNDECIDED_SEMISIMPLE:
        raise PruferError("internal: semisimple-undecided on a commutative order")

    dec = decompose(order)
    inside, escaping = idempotents_in_order(order, dec)
    if not inside:
        mu = minimal_polynomial(order, escaping)
        witness = {"element": _coords_json(escaping), "min_poly": str(mu)}
        return PrueferCertificate(
            VERDICT_NO, REASON_IDEMPOTENT_ESCAPES, witness, _CITATIONS[REASON_IDEMPOTENT_ESCAPES]
        )

    components = []
    for i in range(dec.count):
        comp = component_order(order, dec, i)
        closed, bad = is_integrally_closed_order(comp.order)
        if not closed:
            pulled = comp.to_ambient(bad.coords)
            mu = minimal_polynomial(order, pulled)
            witness = {
                "element": _coords_json(pulled),
                "min_poly": str(mu),
                "component": i,
            }
            return PrueferCertificate(
                VERDICT_NO,
                REASON_COMPONENT_NOT_MAXIMAL,
                witness,
                _CITATIONS[REASON_COMPONENT_NOT_MAXIMAL],
            )
        components.append(comp)

    witness = {
        "primitive": _coords_json(dec.primitive),
        "min_poly": str(dec.min_poly),
        "idempotents": [_coords_json(e) for e in dec.idempotents],
        "components": [
            {
                "factor": str(g),
                "dim": g.degree,
                "basis": [_row_json(row) for row in comp.basis_in_ambient],
            }
            for g, comp in zip(dec.factors, components)
        ],
    }
    return PrueferCertificate(
        VERDICT_YES, REASON_ALL_MAXIMAL, witness, _CITATIONS[REASON_ALL_MAXIMAL]
    )


def verify_certificate(order: ZOrder, cert: PrueferCertificate) -> bool:
    """Re-check a certificate against the order with independent primitives.

    Structural defects in the certificate raise MalformedCertificateError;
    a well-formed certificate whose claims do not hold returns False.
    """
    witness = cert.witness
    if cert.verdict == VERDICT_NO:
        if cert.reason == REASON_NONCOMMUTATIVE:
            x = _parse_coords(_field(witness, "x"), order.dim)
            y = _parse_coords(_field(witness, "y"), order.dim)
            return mul(order, x, y) != mul(order, y, x)
        if cert.reason == REASON_NOT_REDUCED:
            a = _parse_coords(_field(witness, "element"), order.dim)
            k = _field(witness, "power")
            if not isinstance(k, int) or k < 2:
                raise MalformedCertificateError("MALFORMED_CERTIFICATE: bad nilpotency power")
            if a.is_zero or not a.is_integral_vector:
                return False
            return power(order, a, k).is_zero
        # IDEMPOTENT_ESCAPES and COMPONENT_NOT_MAXIMAL share the witness
        # shape: an element integral over Z but outside the lattice.
        b = _parse_coords(_field(witness, "element"), order.dim)
        if b.is_integral_vector:
            return False
        mu = minimal_polynomial(order, b)
        return mu.is_monic and mu.has_integer_coefficients
    return _verify_yes(order, witness)


def _verify_yes(order: ZOrder, witness: dict) -> bool:
    n = order.dim
    primitive = _parse_coords(_field(witness, "primitive"), n)
    mu = _parse_poly(_field(witness, "min_poly"))
    raw_idems = _field(witness, "idempotents")
    raw_comps = _field(witness, "components")
    if not isinstance(raw_idems, list) or not isinstance(raw_comps, list):
        raise MalformedCertificateError("MALFORMED_CERTIFICATE: idempotents/components must be lists")
    if len(raw_idems) != len(raw_comps) or not raw_comps:
        raise MalformedCertificateError("MALFORMED_CERTIFICATE: component/idempotent count mismatch")

    idems = [_parse_coords(raw, n) for raw in raw_idems]
    factors = []
    bases = []
    for raw in raw_comps:
        if not isinstance(raw, dict):
            raise MalformedCertificateError("MALFORMED_CERTIFICATE: component must be an object")
        g = _parse_poly(_field(raw, "factor"))
        d = _field(raw, "dim")
        rows_raw = _field(raw, "basis")
        if not isinstance(d, int) or not isinstance(rows_raw, list):
            raise MalformedCertificateError("MALFORMED_CERTIFICATE: bad component shape")
        rows = [_parse_coords(r, n) for r in rows_raw]
        factors.append(g)
        bases.append(rows)

    # The primitive element must generate the whole algebra and factor as claimed.
    if mu.degree != n or not mu.is_monic:
        return False
    if not evaluate_poly(order, mu, primitive).is_zero:
        return False
    expected = poly_factor(mu)
    if any(e != 1 for _, e in expected):
        return False
    if sorted(g.sort_key() for g in factors) != [g.sort_key() for g, _ in expected]:
        return False

    # Orthogonal idempotent system inside A summing to 1.
    for e in idems:
        if not e.is_integral_vector:
            return False
    total = order.zero()
    for i, ei in enumerate(idems):
        total = total + ei
        for j, ej in enumerate(idems):
            product = mul(order, ei, ej)
            target = ei if i == j else order.zero()
            if product != target:
                return False
    if total != order.identity():
        return False

    # The component bases must consist of lattice vectors and tile A exactly.
    stacked = []
    for g, rows in zip(factors, bases):
        if len(rows) != g.degree:
            return False
        for row in rows:
            if not row.is_integral_vector:
                return False
            stacked.append([int(c) for c in row.coords])
    if len(stacked) != n:
        return False
    lat = hnf_reduce(stacked, ambient_dim=n)
    if lat.rank != n or abs(lat.determinant()) != 1:
        return False

    # Each component must close under multiplication, be a ring with identity
    # the claimed idempotent, and be round-2 stable at every prime whose
    # square divides its discriminant.
    try:
        for ei, g, rows in zip(idems, factors, bases):
            if not _component_is_maximal(order, ei, g, rows):
                return False
    except DiscFactorizationError:
        raise
    except (NotApplicableError, MalformedInputError, PruferError):
        return False
    return True


def _component_is_maximal(
    order: ZOrder,
    ei: AlgebraElement,
    g: RationalPolynomial,
    rows: Sequence[AlgebraElement],
) -> bool:
    d = g.degree
    cols = [[rows[r].coords[i] for r in range(d)] for i in range(order.dim)]

    def in_basis(vec: AlgebraElement) -> tuple[int, ...] | None:
        sol = solve_right(cols, list(vec.coords))
        if sol is None or any(c.denominator != 1 for c in sol):
            return None
        return tuple(int(c) for c in sol)

    one_coords = in_basis(ei)
    if one_coords is None:
        return False
    table = []
    for r in range(d):
        row_entries = []
        for s in range(d):
            coords = in_basis(mul(order, rows[r], rows[s]))
            if coords is None:
                return False
            row_entries.append(coords)
        table.append(tuple(row_entries))
    component = ZOrder(dim=d, table=tuple(table), one=one_coords)

    disc = discriminant(component)
    if disc == 0:
        return False
    for p, v in sorted(factor_int(abs(disc)).items()):
        if v < 2:
            continue
        radical = p_radical(component, p)
        grown = ring_of_multipliers(component, radical)
        if grown.index != 1:
            return False
    return True
