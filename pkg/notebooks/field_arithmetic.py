"""
Arithmetic in GF(2^r)
=====================

Elements are plain integers whose bits are polynomial coefficients.  A field
context fixes the modulus (the smallest irreducible of degree r) and a
generator, and carries exp/log tables when the field is small enough.
"""

import numpy as np

from planar2 import build_field
from planar2.gf2r import poly_str

ctx = build_field(8)
print("modulus:", poly_str(ctx.modulus), " generator:", ctx.gen)

# scalar operations
x, y = 0x53, 0xCA
print("x*y =", ctx.mul(x, y), " x^-1 =", ctx.inv(x), " x*x^-1 =", ctx.mul(x, ctx.inv(x)))

# the absolute trace takes values in GF(2), and half the field has trace 0
traces = [ctx.trace(z) for z in ctx.elements().tolist()]
print("trace-zero elements:", traces.count(0))

# vectorized multiplication gives the whole table at once
xs = ctx.elements()
table = ctx.vmul(xs[:, None], xs[None, :])
print("table is symmetric:", np.array_equal(table, table.T))

# squaring is additive (the Frobenius map)
print("Frobenius additive:",
      np.array_equal(ctx.vpow(xs ^ 0x1D, 2), ctx.vpow(xs, 2) ^ ctx.vpow(0x1D, 2)))

# a (Q-1)th power test through the discrete log
Q = 4
six = build_field(6)
cubes = [a for a in range(1, 64) if six.is_kth_power(a, Q - 1)]
print(len(cubes), "cubes in GF(64)*, e.g.", cubes[:6])
