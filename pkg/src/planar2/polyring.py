"""Dense univariate polynomials over a :class:`~planar2.gf2r.FieldCtx`."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2r import FieldCtx, UsageError


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Coefficients low-to-high; the zero polynomial has no coefficients."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))
        self.ctx.check(*self.coeffs)

    @classmethod
    def from_coeffs(cls, ctx: FieldCtx, coeffs: Sequence[int]) -> "Poly":
        return cls(ctx, tuple(coeffs))

    @classmethod
    def monomial(cls, ctx: FieldCtx, n: int, c: int = 1) -> "Poly":
        return cls(ctx, (0,) * n + (c,))

    @property
    def degree(self) -> float | int:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Poly") -> "Poly":
        return p_add(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return p_mul(self, other)

    def __call__(self, x: int) -> int:
        return p_eval(self, x)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(reversed(terms)) + ")"


def _same_ctx(f: Poly, g: Poly) -> FieldCtx:
    if f.ctx is not g.ctx and f.ctx.descriptor() != g.ctx.descriptor():
        raise UsageError("polynomials over different fields")
    return f.ctx


def p_add(f: Poly, g: Poly) -> Poly:
    ctx = _same_ctx(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return Poly(ctx, tuple(f.coeff(i) ^ g.coeff(i) for i in range(n)))


def p_mul(f: Poly, g: Poly) -> Poly:
    ctx = _same_ctx(f, g)
    if f.is_zero() or g.is_zero():
        return Poly(ctx, ())
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] ^= ctx.mul(a, b)
    return Poly(ctx, tuple(out))


def p_scale(f: Poly, c: int) -> Poly:
    return Poly(f.ctx, tuple(f.ctx.mul(a, c) for a in f.coeffs))


def p_eval(f: Poly, x: int) -> int:
    ctx = f.ctx
    ctx.check(x)
    acc = 0
    for c in reversed(f.coeffs):
        acc = ctx.mul(acc, x) ^ c
    return acc


def p_compose_xcube(f: Poly) -> Poly:
    """f(x^3)."""
    out = [0] * (3 * len(f.coeffs))
    for i, c in enumerate(f.coeffs):
        out[3 * i] = c
    return Poly(f.ctx, tuple(out))


def p_from_roots(ctx: FieldCtx, roots: Iterable[int]) -> Poly:
    """prod (x + root), monic."""
    out = Poly(ctx, (1,))
    for rt in roots:
        out = p_mul(out, Poly(ctx, (rt, 1)))
    return out


def conjugates(ctx: FieldCtx, x: int, m: int) -> list[int]:
    """Distinct images of x under y -> y^(2^m), starting with x."""
    if m < 1 or ctx.r % m:
        raise UsageError(f"{m} does not divide {ctx.r}")
    out = [x]
    y = ctx.pow(x, 1 << m)
    while y != x:
        out.append(y)
        y = ctx.pow(y, 1 << m)
    return out


def min_poly_over_subfield(ctx: FieldCtx, x: int, m: int) -> Poly:
    """Minimal polynomial of x over the subfield GF(2^m)."""
    return p_from_roots(ctx, conjugates(ctx, x, m))


def g_cubic(ctx: FieldCtx, b: int) -> Poly:
    """x^3 + (b^2 + b) x^2 + x + 1."""
    return Poly(ctx, (1, 1, ctx.mul(b, b) ^ b, 1))
