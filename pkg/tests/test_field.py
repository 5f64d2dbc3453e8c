import random
from itertools import product

import pytest

from repair_lab.fieldmath import (
    FieldContext,
    coset_weight,
    poly_add,
    poly_deg,
    poly_eval,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_trim,
    support,
    weight,
)

GF4 = FieldContext(2, 2)  # x^2 + x + 1; 2 encodes the modulus root w
GF8 = FieldContext(2, 3)  # x^3 + x + 1
GF9 = FieldContext(3, 2)


# ---- construction and validation ------------------------------------------------


def test_default_modulus_gf4():
    assert GF4.modulus == (1, 1, 1)
    assert GF4.order == 4
    assert GF4.basis == (1, 2)


def test_dual_basis_gf4():
    # working basis {1, w} pairs with {w^2, 1} under the trace form
    assert GF4.dual_basis == (3, 1)


def test_degree_one_extension_is_trivial():
    ctx = FieldContext(2, 1)
    assert ctx.basis == (1,)
    assert ctx.dual_basis == (1,)
    assert ctx.trace(1) == 1


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError, match="irreducible"):
        FieldContext(2, 2, modulus=[1, 0, 1])  # (x+1)^2


def test_nonprime_q_rejected():
    with pytest.raises(ValueError):
        FieldContext(4, 2)
    with pytest.raises(ValueError):
        FieldContext(6, 2)


def test_bad_ell_rejected():
    with pytest.raises(ValueError):
        FieldContext(2, 0)


def test_missing_builtin_modulus():
    with pytest.raises(ValueError, match="supply"):
        FieldContext(5, 13)


def test_modulus_shape_checks():
    with pytest.raises(ValueError, match="degree"):
        FieldContext(2, 3, modulus=[1, 1, 1])
    with pytest.raises(ValueError, match="monic"):
        FieldContext(3, 2, modulus=[1, 0, 2])


def test_dependent_basis_rejected():
    with pytest.raises(ValueError, match="dependent"):
        FieldContext(2, 3, basis=[1, 2, 3])  # 3 = 1 + 2


def test_describe_format():
    assert FieldContext(2, 3).describe() == "q=2 ell=3 modulus=[1,1,0,1]"


# ---- arithmetic --------------------------------------------------------------


def test_gf4_multiplication_table_row():
    # w * w = w + 1
    assert GF4.mul(2, 2) == 3
    assert GF4.mul(2, 3) == 1
    assert GF4.mul(3, 3) == 2


@pytest.mark.parametrize("ctx", [GF4, GF8, GF9], ids=["gf4", "gf8", "gf9"])
def test_inverse_everywhere(ctx):
    for a in range(1, ctx.order):
        assert ctx.mul(a, ctx.inv(a)) == 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        GF8.inv(0)
    with pytest.raises(ZeroDivisionError):
        GF8.div(3, 0)


@pytest.mark.parametrize("ctx", [GF8, GF9], ids=["gf8", "gf9"])
def test_field_axioms_spot(ctx):
    rng = random.Random(2)
    for _ in range(50):
        a, b, c = (rng.randrange(ctx.order) for _ in range(3))
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))
        assert ctx.add(a, ctx.neg(a)) == 0


def test_power_and_order():
    for a in range(1, GF8.order):
        assert GF8.power(a, GF8.order - 1) == 1
    assert GF9.power(0, 0) == 1
    assert GF9.power(5, 1) == 5


def test_frobenius_is_identity_at_full_power():
    for a in range(GF8.order):
        assert GF8.frobenius(a, 3) == a


def test_frobenius_is_additive():
    rng = random.Random(3)
    for _ in range(40):
        a, b = rng.randrange(GF9.order), rng.randrange(GF9.order)
        assert GF9.frobenius(GF9.add(a, b)) == GF9.add(
            GF9.frobenius(a), GF9.frobenius(b)
        )
        assert GF9.frobenius(GF9.mul(a, b)) == GF9.mul(
            GF9.frobenius(a), GF9.frobenius(b)
        )


def test_digits_roundtrip():
    for ctx in (GF8, GF9):
        for a in range(ctx.order):
            d = ctx.digits(a)
            assert len(d) == ctx.ell
            assert all(0 <= x < ctx.q for x in d)
            assert ctx.from_digits(d) == a


# ---- trace ------------------------------------------------------------------


def test_trace_frozen_values():
    assert GF4.trace(2) == 1  # w + w^2 = 1
    assert GF4.trace(0) == 0
    assert GF8.trace(1) == 1  # three copies of 1 over GF(2)


@pytest.mark.parametrize("ctx", [GF4, GF8, GF9], ids=["gf4", "gf8", "gf9"])
def test_trace_lands_in_subfield_and_is_linear(ctx):
    for a in range(ctx.order):
        assert 0 <= ctx.trace(a) < ctx.q
        assert ctx.trace(ctx.frobenius(a)) == ctx.trace(a)
    rng = random.Random(4)
    for _ in range(30):
        a, b = rng.randrange(ctx.order), rng.randrange(ctx.order)
        c = rng.randrange(ctx.q)
        assert ctx.trace(ctx.add(a, b)) == (ctx.trace(a) + ctx.trace(b)) % ctx.q
        assert ctx.trace(ctx.mul(c, a)) == (c * ctx.trace(a)) % ctx.q


# ---- bases and coordinates ---------------------------------------------------


@pytest.mark.parametrize(
    "ctx",
    [GF4, GF8, GF9, FieldContext(5, 2), FieldContext(2, 3, basis=[1, 2, 6])],
    ids=["gf4", "gf8", "gf9", "gf25", "gf8-custom-basis"],
)
def test_dual_basis_pairing(ctx):
    for i, b in enumerate(ctx.basis):
        for j, g in enumerate(ctx.dual_basis):
            assert ctx.trace(ctx.mul(b, g)) == (1 if i == j else 0)


def test_basis_coords_of_basis_elements():
    for ctx in (GF8, GF9):
        for i, b in enumerate(ctx.basis):
            coords = ctx.basis_coords(b)
            assert coords == tuple(1 if t == i else 0 for t in range(ctx.ell))
        for j, g in enumerate(ctx.dual_basis):
            coords = ctx.dual_coords(g)
            assert coords == tuple(1 if t == j else 0 for t in range(ctx.ell))


def test_basis_coords_frozen_gf4():
    # w^2 = 1 + w in the working basis {1, w}
    assert GF4.basis_coords(3) == (1, 1)


@pytest.mark.parametrize(
    "ctx",
    [FieldContext(2, 4), FieldContext(3, 3), FieldContext(2, 3, basis=[1, 2, 6])],
    ids=["gf16", "gf27", "gf8-custom-basis"],
)
def test_coordinate_map_is_a_bijection(ctx):
    seen = set()
    for a in range(ctx.order):
        coords = ctx.basis_coords(a)
        assert ctx.from_basis_coords(coords) == a
        seen.add(coords)
    assert len(seen) == ctx.order


def test_coordinate_map_is_linear():
    rng = random.Random(5)
    ctx = GF9
    for _ in range(40):
        a, b = rng.randrange(ctx.order), rng.randrange(ctx.order)
        c = rng.randrange(ctx.q)
        pa, pb = ctx.basis_coords(a), ctx.basis_coords(b)
        assert ctx.basis_coords(ctx.add(a, b)) == tuple(
            (x + y) % ctx.q for x, y in zip(pa, pb)
        )
        assert ctx.basis_coords(ctx.mul(c, a)) == tuple((c * x) % ctx.q for x in pa)


def test_large_field_without_tables():
    # past the table limit everything falls back to direct polynomial arithmetic
    ctx = FieldContext(5, 8)
    assert ctx.order == 5**8
    rng = random.Random(6)
    for _ in range(5):
        a = rng.randrange(1, ctx.order)
        assert ctx.mul(a, ctx.inv(a)) == 1
        assert ctx.trace(ctx.frobenius(a)) == ctx.trace(a)
        assert ctx.from_basis_coords(ctx.basis_coords(a)) == a
    # duality spot-checked on a corner of the pairing matrix
    assert ctx.trace(ctx.mul(ctx.basis[0], ctx.dual_basis[0])) == 1
    assert ctx.trace(ctx.mul(ctx.basis[0], ctx.dual_basis[7])) == 0


# ---- subfield vectors and coset weight ------------------------------------------


def test_support_and_weight():
    assert support([0, 1, 0, 2]) == [1, 3]
    assert weight([0, 1, 0, 2]) == 2
    assert support([]) == []


def _coset_brute_force(rows, y, q):
    k = len(rows)
    m = len(rows[0])
    y = y or [0] * m
    total = 0
    for coeffs in product(range(q), repeat=k):
        v = [
            (y[j] + sum(c * rows[i][j] for i, c in enumerate(coeffs))) % q
            for j in range(m)
        ]
        total += sum(1 for x in v if x)
    return total


def test_coset_weight_frozen_examples():
    assert coset_weight([[1, 1, 0]], None, 2) == (2, 2)
    assert coset_weight([[1, 1, 0]], [0, 0, 1], 2) == (2, 4)
    # full space of dimension ell: every coordinate nonzero in q^(ell-1)(q-1) vectors
    eye4 = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert coset_weight(eye4, None, 2) == (4, 4 * 2**3)
    eye3 = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert coset_weight(eye3, None, 3) == (3, 3 * 9 * 2)


def test_coset_weight_none_equals_zero_vector():
    rows = [[1, 0, 2, 0], [0, 1, 1, 0]]
    assert coset_weight(rows, None, 3) == coset_weight(rows, [0, 0, 0, 0], 3)


@pytest.mark.parametrize("q", [2, 3])
def test_coset_weight_matches_enumeration(q):
    rng = random.Random(q * 17)
    done = 0
    while done < 40:
        k = rng.randrange(1, 5)
        m = rng.randrange(k, 9)
        rows = [[rng.randrange(q) for _ in range(m)] for _ in range(k)]
        try:
            y = [rng.randrange(q) for _ in range(m)]
            supp, total = coset_weight(rows, y, q)
        except ValueError:
            continue  # dependent rows; draw again
        done += 1
        assert supp == len({j for row in rows for j, v in enumerate(row) if v})
        assert total == _coset_brute_force(rows, y, q)


def test_coset_weight_rejects_dependent_rows():
    with pytest.raises(ValueError, match="independent"):
        coset_weight([[1, 1, 0], [1, 1, 0]], None, 2)


# ---- polynomial helpers ------------------------------------------------------


def test_poly_trim_and_deg():
    assert poly_trim([1, 0, 2, 0, 0]) == [1, 0, 2]
    assert poly_trim([0, 0]) == []
    assert poly_deg([]) == -1
    assert poly_deg([0]) == -1
    assert poly_deg([5]) == 0
    assert poly_deg([0, 0, 3]) == 2


def test_poly_eval_matches_power_sum():
    rng = random.Random(8)
    for _ in range(20):
        coeffs = [rng.randrange(GF8.order) for _ in range(5)]
        x = rng.randrange(GF8.order)
        direct = 0
        for d, c in enumerate(coeffs):
            direct = GF8.add(direct, GF8.mul(c, GF8.power(x, d)))
        assert poly_eval(GF8, coeffs, x) == direct


def test_poly_ring_operations():
    rng = random.Random(9)
    for _ in range(20):
        a = [rng.randrange(GF9.order) for _ in range(rng.randrange(1, 5))]
        b = [rng.randrange(GF9.order) for _ in range(rng.randrange(1, 5))]
        x = rng.randrange(GF9.order)
        assert poly_eval(GF9, poly_add(GF9, a, b), x) == GF9.add(
            poly_eval(GF9, a, x), poly_eval(GF9, b, x)
        )
        assert poly_eval(GF9, poly_mul(GF9, a, b), x) == GF9.mul(
            poly_eval(GF9, a, x), poly_eval(GF9, b, x)
        )
        c = rng.randrange(GF9.order)
        assert poly_eval(GF9, poly_scale(GF9, c, a), x) == GF9.mul(
            c, poly_eval(GF9, a, x)
        )


def test_poly_mul_degrees():
    assert poly_mul(GF8, [], [1, 2]) == []
    out = poly_mul(GF8, [0, 1], [0, 1])  # x * x
    assert out == [0, 0, 1]


def test_poly_shift_is_substitution():
    rng = random.Random(10)
    for ctx in (GF8, GF9):
        for _ in range(20):
            coeffs = [rng.randrange(ctx.order) for _ in range(rng.randrange(1, 6))]
            c = rng.randrange(ctx.order)
            shifted = poly_shift(ctx, coeffs, c)
            assert poly_deg(shifted) == poly_deg(coeffs)
            for _ in range(5):
                x = rng.randrange(ctx.order)
                assert poly_eval(ctx, shifted, x) == poly_eval(
                    ctx, coeffs, ctx.add(x, c)
                )


def test_poly_shift_by_zero_is_identity():
    assert poly_shift(GF8, [3, 1, 4], 0) == [3, 1, 4]
