import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fricke.polyring import (
    ONE,
    R_ONE,
    ZERO,
    ZETA,
    Poly3,
    RingElem,
    X,
    Y,
    Z,
    bit,
    dense_index,
    dense_size,
    evaluate,
    from_dense,
    from_json,
    lift,
    norms,
    parse_poly,
    ring_mul,
    to_dense,
    to_dict,
    to_json,
    to_text,
    z_slice,
)

COMM = X**2 + Y**2 + Z**2 - X * Y * Z - 2
P61 = (1 << 61) - 1

exps = st.tuples(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
polys = st.dictionaries(exps, st.integers(-(10**6), 10**6), max_size=12).map(Poly3)


def naive_eval(f, x0, y0, z0):
    return sum(c * x0**i * y0**j * z0**k for (i, j, k), c in f.terms.items())


class TestArithmetic:
    def test_examples(self):
        assert (X**2 - 2) * (Y**2 - 2) == X**2 * Y**2 - 2 * X**2 - 2 * Y**2 + 4
        f = X * Y - Z
        assert f + (-f) == ZERO
        assert f * ONE == f

    def test_no_zero_terms_stored(self):
        f = Poly3({(1, 0, 0): 0, (0, 0, 0): 3})
        assert dict(f.terms) == {(0, 0, 0): 3}
        assert (X - X).support == 0

    @given(polys, polys, polys)
    def test_ring_axioms(self, f, g, h):
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) - g == f

    @given(polys, polys)
    def test_degree_of_product(self, f, g):
        if f and g:
            assert (f * g).degree == f.degree + g.degree

    def test_int_mixing(self):
        assert 3 - X == -(X - 3)
        assert 2 * X == X + X
        assert Poly3.const(5) == 5


class TestRing:
    def test_zeta_squared(self):
        assert ring_mul(ZETA, ZETA) == RingElem(Poly3.const(-1), Z)

    def test_subring(self):
        assert ring_mul(lift(X), lift(Y)) == lift(X * Y)

    def test_zeta_unit(self):
        inv = RingElem(Z, Poly3.const(-1))  # z - zeta
        assert ring_mul(ZETA, inv) == R_ONE

    @given(polys, polys)
    def test_normal_form_round_trip(self, p, q):
        u = RingElem(p, q)
        inv = RingElem(Z, Poly3.const(-1))
        assert ring_mul(ring_mul(u, ZETA), inv) == u


class TestEvaluate:
    def test_examples(self):
        assert evaluate(Z, 5, 7, 11) == 11
        assert evaluate(COMM, 0, 0, 0) == -2
        assert evaluate(X * Y - Z, 3, 4, 5) == 7

    @given(polys, polys, st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
    def test_homomorphism(self, f, g, a, b, c):
        assert evaluate(f, a, b, c) == naive_eval(f, a, b, c)
        assert evaluate(f * g, a, b, c) == evaluate(f, a, b, c) * evaluate(g, a, b, c)

    @given(polys, polys)
    def test_modular_homomorphism(self, f, g):
        rng = random.Random(0)
        pt = [rng.randrange(P61) for _ in range(3)]
        lhs = evaluate(f * g, *pt, modulus=P61)
        assert lhs == evaluate(f, *pt, modulus=P61) * evaluate(g, *pt, modulus=P61) % P61
        assert evaluate(f, *pt, modulus=P61) == naive_eval(f, *pt) % P61


class TestSlicesAndNorms:
    def test_z_slices(self):
        assert z_slice(COMM, 1) == -(X * Y)
        assert z_slice(COMM, 2) == ONE
        assert z_slice(COMM, 7) == ZERO

    @given(polys)
    def test_slices_reassemble(self, f):
        total = ZERO
        for k in range(12):
            total = total + z_slice(f, k) * Z**k
        assert total == f

    def test_commutator_norms(self):
        r = norms(COMM)
        assert (r.degree, r.l1, r.linf, r.support, r.bit1, r.bitinf) == (3, 6, 2, 5, 6, 2)

    def test_zero_norms(self):
        r = norms(ZERO)
        assert (r.l1, r.linf, r.support, r.bit1, r.bitinf) == (0, 0, 0, 0, 0)
        assert r.degree < 0

    def test_chebyshev_norms(self):
        r = norms(X**4 - 4 * X**2 + 2)
        assert (r.l1, r.linf, r.support) == (7, 4, 3)

    def test_bit(self):
        assert [bit(m) for m in (0, 1, -1, 2, -7, 8)] == [0, 1, 1, 2, 3, 4]

    @given(polys)
    def test_norm_invariants(self, f):
        r = norms(f)
        assert r.support == f.support
        assert r.linf <= r.l1 and r.bitinf <= r.bit1


class TestDense:
    def test_layout_is_a_bijection(self):
        cap = 6
        seen = sorted(
            dense_index(i, j, d - i - j) for d in range(cap + 1) for i in range(d + 1) for j in range(d - i + 1)
        )
        assert seen == list(range(dense_size(cap)))

    def test_layout_order(self):
        assert dense_index(0, 0, 0) == 0
        assert [dense_index(*e) for e in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]] == [1, 2, 3]

    @given(polys)
    def test_round_trip(self, f):
        cap = max(f.degree, 0)
        assert from_dense(to_dense(f, cap), cap) == f

    def test_cap_overflow(self):
        with pytest.raises(OverflowError):
            to_dense(X**5, 4)


class TestSerialisation:
    def test_text_examples(self):
        assert to_text(Poly3.const(2)) == "2"
        assert to_text(X * Y - Z) == "x*y - z"
        assert to_text(ZERO) == "0"
        assert to_text(-3 * X**2 * Z + 1) == "-3*x^2*z + 1"

    def test_commutator_text_follows_ordering_rule(self):
        # degree 3 first, then degree 2 in descending (i,j,k) order
        assert to_text(COMM) == "-x*y*z + x^2 + y^2 + z^2 - 2"

    @given(polys)
    def test_text_round_trip(self, f):
        assert parse_poly(to_text(f)) == f

    @given(polys)
    def test_json_round_trip(self, f):
        assert from_json(to_json(f)) == f

    def test_json_schema(self):
        jsonschema = pytest.importorskip("jsonschema")
        schema = {
            "type": "object",
            "required": ["terms", "degree", "support", "l1", "linf", "bit1"],
            "properties": {
                "terms": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["i", "j", "k", "c"],
                        "properties": {
                            "i": {"type": "integer"},
                            "j": {"type": "integer"},
                            "k": {"type": "integer"},
                            "c": {"type": "string", "pattern": "^-?[0-9]+$"},
                        },
                    },
                },
                "degree": {"type": "integer"},
                "support": {"type": "integer"},
                "l1": {"type": "string"},
                "linf": {"type": "string"},
                "bit1": {"type": "integer"},
            },
        }
        data = json.loads(to_json(COMM * 10**30))
        jsonschema.validate(data, schema)
        assert [(t["i"], t["j"], t["k"]) for t in data["terms"]] == [
            (1, 1, 1), (2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 0, 0)
        ]
        assert to_dict(COMM)["l1"] == "6"
