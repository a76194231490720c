import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planar2.gf2r import (CapabilityError, DomainError, UsageError, build_field,
                          is_irreducible_gf2, primitive_elements)

from oracles import Naive, irreducible_by_trial_division, smallest_irreducible


@pytest.mark.parametrize("r", range(1, 13))
def test_modulus_is_smallest_irreducible(r):
    ctx = build_field(r)
    if r == 1:
        assert ctx.modulus == 0b11
    else:
        assert ctx.modulus == smallest_irreducible(r)
    assert irreducible_by_trial_division(ctx.modulus)


def test_known_moduli():
    assert build_field(2).modulus == 0b111
    assert build_field(4).modulus == 0b10011
    ctx = build_field(1)
    assert (ctx.modulus, ctx.gen, ctx.q) == (0b11, 1, 2)


def test_ben_or_matches_trial_division():
    for f in range(2, 1 << 11):
        assert is_irreducible_gf2(f) == irreducible_by_trial_division(f), f


@pytest.mark.parametrize("r", range(2, 11))
def test_generator_is_smallest_primitive(r):
    ctx = build_field(r)
    naive = Naive(r)
    assert naive.order(ctx.gen) == ctx.order
    assert all(naive.order(x) < ctx.order for x in range(1, ctx.gen))


@pytest.mark.parametrize("r", [1, 3, 5, 8, 12])
def test_log_table_inverts_exp(r):
    ctx = build_field(r)
    for x in range(1, ctx.q):
        assert ctx.pow(ctx.gen, ctx.dlog(x)) == x


def test_degree_out_of_range():
    with pytest.raises(UsageError):
        build_field(0)
    with pytest.raises(UsageError):
        build_field(33)


def test_no_table_above_cap():
    ctx = build_field(9, table_cap=100)
    assert not ctx.has_table
    with pytest.raises(CapabilityError):
        ctx.dlog(3)
    ref = build_field(9)
    for x, y in [(3, 400), (511, 511), (2, 256), (17, 0)]:
        assert ctx.mul(x, y) == ref.mul(x, y)
        assert ctx.pow(x, 77) == ref.pow(x, 77)
    xs = np.arange(512)
    assert np.array_equal(ctx.vmul(xs, xs[::-1]), ref.vmul(xs, xs[::-1]))
    assert np.array_equal(ctx.vpow(xs, 5), ref.vpow(xs, 5))


def test_small_examples():
    f4 = build_field(2)
    w = 2
    assert f4.mul(w, w) == 3
    assert f4.trace(w) == 1
    f8 = build_field(3)
    assert all(f8.pow(x, 7) == 1 for x in range(1, 8))
    f16 = build_field(4)
    assert f16.partial_trace(1, 2) == 0
    assert f16.in_subfield(f16.pow(f16.gen, 5), 2)
    f64 = build_field(6)
    assert not f64.is_kth_power(f64.gen, 3)
    assert f64.pow(f64.gen, 21) != 1


def test_domain_errors():
    ctx = build_field(4)
    with pytest.raises(DomainError):
        ctx.inv(0)
    with pytest.raises(DomainError):
        ctx.is_kth_power(0, 3)
    with pytest.raises(DomainError):
        ctx.dlog(0)
    with pytest.raises(UsageError):
        ctx.in_subfield(3, 3)
    with pytest.raises(UsageError):
        ctx.mul(16, 1)
    with pytest.raises(UsageError):
        ctx.partial_trace(1, 5)


def test_pow_conventions():
    ctx = build_field(4)
    assert ctx.pow(0, 0) == 1
    assert ctx.pow(0, 5) == 0
    x = 7
    assert ctx.mul(ctx.pow(x, -3), ctx.pow(x, 3)) == 1
    assert ctx.pow(x, 15 + 4) == ctx.pow(x, 4)


@pytest.mark.parametrize("r", range(1, 7))
def test_field_axioms_exhaustive(r):
    ctx = build_field(r)
    naive = Naive(r, ctx.modulus)
    q = ctx.q
    for x, y in itertools.product(range(q), repeat=2):
        assert ctx.mul(x, y) == naive.mul(x, y) == ctx.mul(y, x)
    for x in range(1, q):
        assert ctx.mul(x, ctx.inv(x)) == 1


@pytest.mark.parametrize("r", [7, 8])
def test_field_axioms_exhaustive_vectorized(r):
    ctx = build_field(r)
    naive = Naive(r, ctx.modulus)
    x, y = np.meshgrid(ctx.elements(), ctx.elements(), indexing="ij")
    prod = ctx.vmul(x, y)
    assert np.array_equal(prod, prod.T)
    assert np.array_equal(prod, ctx._vmul_bits(x, y))
    for a, b in [(3, 100), (ctx.q - 1, 65), (17, 17)]:
        assert prod[a, b] == naive.mul(a, b)
    # associativity and distributivity over all triples with x fixed per row
    for a in range(ctx.q):
        left = prod[a][prod]                       # a * (x * y)
        right = prod[prod[a][:, None], y]          # (a * x) * y
        assert np.array_equal(left, right)
        assert np.array_equal(prod[a][x ^ y], prod[a][x] ^ prod[a][y])


@settings(max_examples=300, deadline=None)
@given(st.integers(9, 16), st.data())
def test_field_axioms_random(r, data):
    ctx = build_field(r)
    el = st.integers(0, ctx.q - 1)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    m = ctx.mul
    assert m(x, m(y, z)) == m(m(x, y), z)
    assert m(x, y ^ z) == m(x, y) ^ m(x, z)
    assert m(x, y) == ctx._mul_bits(x, y)
    if x:
        assert m(x, ctx.inv(x)) == 1


@pytest.mark.parametrize("r", range(1, 9))
def test_frobenius_additive(r):
    ctx = build_field(r)
    x, y = np.meshgrid(ctx.elements(), ctx.elements(), indexing="ij")
    assert np.array_equal(ctx.vpow(x ^ y, 2), ctx.vpow(x, 2) ^ ctx.vpow(y, 2))


@pytest.mark.parametrize("r", range(1, 11))
def test_trace_properties(r):
    ctx = build_field(r)
    tr = [ctx.trace(x) for x in range(ctx.q)]
    assert set(tr) <= {0, 1}
    assert tr.count(0) == ctx.q // 2
    for x, y in [(1, ctx.q - 1), (3, 5), (ctx.gen, ctx.q // 2)]:
        x, y = x % ctx.q, y % ctx.q
        assert tr[x ^ y] == tr[x] ^ tr[y]


@pytest.mark.parametrize("r", [2, 4, 6, 8, 10])
def test_norm_lands_in_half_field(r):
    ctx = build_field(r)
    j = r // 2
    for a in range(1, ctx.q):
        assert ctx.in_subfield(ctx.pow(a, (1 << j) + 1), j)


@pytest.mark.parametrize("r", [4, 6, 8])
def test_kth_power_agrees_with_dlog(r):
    ctx = build_field(r)
    for k in range(1, ctx.order + 1):
        h = math.gcd(k, ctx.order)
        for x in range(1, ctx.q):
            assert ctx.is_kth_power(x, k) == (ctx.dlog(x) % h == 0)


def test_every_element_a_cube_in_gf8():
    ctx = build_field(3)
    assert all(ctx.is_kth_power(x, 3) for x in range(1, 8))
    assert all(build_field(r).is_kth_power(1, k) for r in (2, 5) for k in (1, 3, 7))


def test_alternate_generator():
    base = build_field(6)
    gens = primitive_elements(base)
    assert gens[0] == base.gen and len(gens) == 36
    other = build_field(6, gen=gens[-1])
    assert other.modulus == base.modulus
    for x in range(1, 64):
        assert other.pow(other.gen, other.dlog(x)) == x
    with pytest.raises(UsageError):
        build_field(6, gen=1)
