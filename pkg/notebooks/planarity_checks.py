"""
Deciding planarity of a*x^t
===========================

The monomial c -> a*c^t is planar when every difference map
c -> F(c+d) + F(c) + d*c is a bijection.  Scaling reduces all d to d = 1
at the cost of a coset of coefficients, and for t = 2^i + 2^j each map is
GF(2)-linear, so a rank computation settles it.
"""

from planar2 import build_field
from planar2.planarity import (MonomialSpec, QuadraticImage, coset_degree, decide,
                               is_planar_table, monomial_table)

ctx = build_field(6)
t = 20                                   # 4 + 16
a = ctx.pow(ctx.gen, 3)                  # a cube but not a 9th power

# every method gives the same answer
spec = MonomialSpec(6, t, a)
for method in ("definition", "lemma_mono", "lemma_mono2", "matrix_rank"):
    print(f"{method:12s}", decide(spec, method, ctx).planar)

# a failing case comes with a witness that can be re-checked by hand
bad = decide(MonomialSpec(6, t, 1), "definition", ctx)
print("a = 1 planar:", bad.planar, "witness:", bad.witness)

# the verdict only depends on dlog(a) mod g
g = coset_degree(t, 6)
print("coset degree:", g)
img = QuadraticImage(ctx, 2, 4)
print("planar cosets:", img.planar_cosets(), " planar coefficients:", int(img.planar_mask().sum()))

# the definition on every coefficient agrees
n = sum(is_planar_table(monomial_table(ctx, t, b), ctx).planar for b in range(1, 64))
print("definition count:", n)
