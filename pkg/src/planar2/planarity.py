"""Planarity of functions and monomials over GF(2^r).

A function F is planar when every difference map ``c -> F(c+d) + F(c) + d*c``
(d != 0) is a bijection.  For monomials ``a*c^t`` the dependence on ``a`` goes
only through the coset ``a^-1 * (F_q^*)^g`` with ``g = gcd(t-2, q-1)``, and for
``t = 2^i + 2^j`` the difference maps are affine, so bijectivity reduces to a
kernel computation or to disjointness of an image set from one coset.

Every checker returns a :class:`PlanarityVerdict`; non-planar verdicts carry a
witness that :func:`check_witness` re-verifies by plain field arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf2r import FieldCtx, UsageError, build_field

METHODS = ("definition", "lemma_mono", "lemma_mono2", "matrix_rank")

_ROW_BUDGET = 1 << 22  # elements per vectorized block


@dataclass(frozen=True)
class MonomialSpec:
    """The map ``c -> a * c^t`` on GF(2^r)."""

    r: int
    t: int
    a: int
    split: tuple[int, int] | None = None

    def __post_init__(self):
        if self.r < 1:
            raise UsageError("r must be positive")
        if self.t < 1:
            raise UsageError("exponent must be positive")
        if not 0 < self.a < (1 << self.r):
            raise UsageError(f"coefficient {self.a} is not a nonzero element of GF(2^{self.r})")
        if self.split is not None:
            i, j = self.split
            if not 0 <= i < j < self.r or (1 << i) + (1 << j) != self.t:
                raise UsageError(f"split {self.split} does not give t = {self.t}")

    @property
    def t_reduced(self) -> int:
        """t reduced into [1, q-1]; c^t and c^t_reduced agree on all of F_q."""
        return reduce_exponent(self.t, self.r)

    @property
    def pair(self) -> tuple[int, int] | None:
        return self.split or two_bit_split(self.t_reduced)


@dataclass
class PlanarityVerdict:
    planar: bool
    method: str
    witness: dict | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise UsageError(f"unknown method {self.method!r}")
        if self.planar != (self.witness is None):
            raise ValueError("witness must be present exactly when the verdict is non-planar")

    def to_dict(self) -> dict:
        return {"planar": self.planar, "method": self.method, "witness": self.witness}

    @classmethod
    def from_dict(cls, d: dict) -> "PlanarityVerdict":
        return cls(d["planar"], d["method"], d["witness"])


def reduce_exponent(t: int, r: int) -> int:
    n = (1 << r) - 1
    return (t - 1) % n + 1


def two_bit_split(t: int) -> tuple[int, int] | None:
    if bin(t).count("1") != 2:
        return None
    i = (t & -t).bit_length() - 1
    j = t.bit_length() - 1
    return i, j


def coset_degree(t: int, r: int) -> int:
    """g with (F_q^*)^(t-2) = (F_q^*)^g.

    For t = 2 this is gcd(0, q-1) = q-1, the trivial subgroup, so the coset of
    a^-1 collapses to the single point a^-1 as it should.
    """
    n = (1 << r) - 1
    return math.gcd((reduce_exponent(t, r) - 2) % n, n)


# --- small helpers ----------------------------------------------------------

def monomial_table(ctx: FieldCtx, t: int, a: int) -> np.ndarray:
    return ctx.vmul(a, ctx.vpow(ctx.elements(), t))


def difference_table(ctx: FieldCtx, t: int) -> np.ndarray:
    """(c+1)^t + c^t for every c."""
    c = ctx.elements()
    return ctx.vpow(c ^ 1, t) ^ ctx.vpow(c, t)


def gap_values(ctx: FieldCtx, i: int, j: int, x) -> np.ndarray:
    """x^(2^i - 1) + x^(2^j - 1)."""
    return ctx.vpow(x, (1 << i) - 1) ^ ctx.vpow(x, (1 << j) - 1)


def _first_collision(vals: np.ndarray) -> tuple[int, int] | None:
    """Smallest c2 with vals[c2] == vals[c1] for some c1 < c2, as (c1, c2)."""
    order = np.argsort(vals, kind="stable")
    sv = vals[order]
    dup = np.flatnonzero(sv[1:] == sv[:-1]) + 1
    if dup.size == 0:
        return None
    k = dup[np.argmin(order[dup])]
    c2 = int(order[k])
    c1 = int(np.flatnonzero(vals == vals[c2])[0])
    return c1, c2


def _bad_rows(block: np.ndarray) -> np.ndarray:
    s = np.sort(block, axis=1)
    return (s[:, 1:] == s[:, :-1]).any(axis=1)


def _chunks(n: int, q: int):
    """Growing row blocks so a failure near the start is found cheaply."""
    cap = max(1, _ROW_BUDGET // max(q, 1))
    start, size = 0, 1
    while start < n:
        stop = min(n, start + min(size, cap))
        yield start, stop
        start, size = stop, size * 4


def _first_bad_row(rows: np.ndarray, q: int, make_block) -> tuple[int, np.ndarray] | None:
    """Scan ``rows`` in order; return (index, row values) of the first non-bijective row."""
    for lo, hi in _chunks(len(rows), q):
        block = make_block(rows[lo:hi])
        bad = np.flatnonzero(_bad_rows(block))
        if bad.size:
            k = int(bad[0])
            return lo + k, block[k]
    return None


# --- definition -------------------------------------------------------------

def is_planar_table(F, ctx: FieldCtx) -> PlanarityVerdict:
    """Check the definition directly on a full value table ``F[c]``."""
    F = np.asarray(F, dtype=np.int64)
    if F.shape != (ctx.q,):
        raise UsageError(f"table must have {ctx.q} entries, got {F.shape}")
    c = ctx.elements()
    ds = ctx.nonzero()

    def block(d):
        d = d[:, None]
        return F[c[None, :] ^ d] ^ F[None, :] ^ ctx.vmul(d, c[None, :])

    hit = _first_bad_row(ds, ctx.q, block)
    if hit is None:
        return PlanarityVerdict(True, "definition")
    k, vals = hit
    c1, c2 = _first_collision(vals)
    return PlanarityVerdict(False, "definition", {"d": int(ds[k]), "c1": c1, "c2": c2})


# --- linearized maps --------------------------------------------------------

def _rank_kernel(columns: list[int], r: int) -> int | None:
    """Gaussian elimination over GF(2) on column bitmasks.

    Returns None when the columns are independent, otherwise the bitmask of a
    nonzero combination of basis vectors that maps to zero.
    """
    pivots: dict[int, tuple[int, int]] = {}  # leading bit -> (reduced column, combination)
    for k, col in enumerate(columns):
        comb = 1 << k
        while col:
            lead = col.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (col, comb)
                break
            pc, pcomb = pivots[lead]
            col ^= pc
            comb ^= pcomb
        else:
            return comb
    return None


@lru_cache(maxsize=256)
def _frobenius_columns(ctx: FieldCtx, exps: tuple[int, ...]) -> tuple[int, ...]:
    cols = []
    for k in range(ctx.r):
        e = 1 << k
        v = 0
        for p in exps:
            v ^= ctx.pow(e, 1 << p)
        cols.append(v)
    return tuple(cols)


def linearized_bijective(i: int, j: int, s: int, ctx: FieldCtx) -> tuple[bool, int | None]:
    """Is ``c -> c^(2^i) + c^(2^j) + s*c`` a bijection?  Returns (flag, kernel vector)."""
    if not 0 <= i < j < ctx.r:
        raise UsageError(f"need 0 <= i < j < r, got i={i}, j={j}, r={ctx.r}")
    ctx.check(s)
    base = _frobenius_columns(ctx, (i, j))
    cols = [b ^ ctx.mul(s, 1 << k) for k, b in enumerate(base)]
    kernel = _rank_kernel(cols, ctx.r)
    return kernel is None, kernel


def linearized_matrix(i: int, j: int, s: int, ctx: FieldCtx) -> np.ndarray:
    """The r x r GF(2) matrix of ``c -> c^(2^i) + c^(2^j) + s*c`` (column k = image of x^k)."""
    base = _frobenius_columns(ctx, (i, j))
    m = np.zeros((ctx.r, ctx.r), dtype=np.uint8)
    for k, b in enumerate(base):
        col = b ^ ctx.mul(s, 1 << k)
        for row in range(ctx.r):
            m[row, k] = col >> row & 1
    return m


# --- monomials --------------------------------------------------------------

def coset_members(ctx: FieldCtx, base: int, g: int) -> np.ndarray:
    """base * (F_q^*)^g, sorted by encoding."""
    n = ctx.order
    m = np.arange(n // g, dtype=np.int64) * g
    return np.sort(ctx.vmul(base, ctx.vgen_pow(m)))


def is_planar_monomial(spec: MonomialSpec, ctx: FieldCtx | None = None, *,
                       fast: bool = True) -> PlanarityVerdict:
    """Decide planarity of ``a*c^t`` through the coset reduction.

    For each s in ``a^-1 * (F_q^*)^g`` the map ``c -> (c+1)^t + c^t + s*c``
    must be bijective.  With ``fast`` the linearized cases (t a sum of at most
    two powers of 2) are decided by a rank computation; otherwise every map is
    checked with an occupancy test.
    """
    ctx = ctx or build_field(spec.r)
    if ctx.r != spec.r:
        raise UsageError("monomial and field disagree on r")
    t = spec.t_reduced
    g = coset_degree(t, ctx.r)
    S = coset_members(ctx, ctx.inv(spec.a), g)
    nbits = bin(t).count("1")

    if fast and nbits == 1:
        # difference map is c -> 1 + s*c, invertible for every s != 0
        return PlanarityVerdict(True, "matrix_rank")
    if fast and nbits == 2:
        i, j = two_bit_split(t)
        for s in S.tolist():
            ok, kernel = linearized_bijective(i, j, s, ctx)
            if not ok:
                return PlanarityVerdict(False, "matrix_rank", {"s": s, "kernel": kernel})
        return PlanarityVerdict(True, "matrix_rank")

    fail = first_failing_map(ctx, difference_table(ctx, t), S)
    if fail is None:
        return PlanarityVerdict(True, "lemma_mono")
    return PlanarityVerdict(False, "lemma_mono", fail)


def first_failing_map(ctx: FieldCtx, D: np.ndarray, S: np.ndarray) -> dict | None:
    """First s in S (in the given order) for which ``c -> D[c] + s*c`` collides."""
    c = ctx.elements()
    hit = _first_bad_row(S, ctx.q, lambda s: D[None, :] ^ ctx.vmul(s[:, None], c[None, :]))
    if hit is None:
        return None
    k, vals = hit
    c1, c2 = _first_collision(vals)
    return {"s": int(S[k]), "c1": c1, "c2": c2}


class QuadraticImage:
    """The image ``{x^(2^i-1) + x^(2^j-1) : x != 0}`` and the cosets it meets.

    ``hit[k]`` is True when some nonzero image element has discrete log
    congruent to k mod g, g = gcd(2^i + 2^j - 2, q-1).
    """

    def __init__(self, ctx: FieldCtx, i: int, j: int):
        if not 0 <= i < j < ctx.r:
            raise UsageError(f"need 0 <= i < j < r, got i={i}, j={j}, r={ctx.r}")
        self.ctx, self.i, self.j = ctx, i, j
        self.t = (1 << i) + (1 << j)
        self.g = math.gcd(self.t - 2, ctx.order)
        x = ctx.nonzero()
        self.values = gap_values(ctx, i, j, x)
        nz = self.values[self.values != 0]
        self.members = np.zeros(ctx.q, dtype=bool)
        self.members[self.values] = True
        self.hit = np.zeros(self.g, dtype=bool)
        self.hit[ctx.vlog(nz) % self.g] = True

    def inverse_coset(self, a: int) -> int:
        """Coset index of a^-1."""
        return (-self.ctx.dlog(a)) % self.g

    def planar_cosets(self) -> list[int]:
        """Coset indices k (coset of a, by dlog a mod g) giving planar a*x^t."""
        return sorted((-k) % self.g for k in np.flatnonzero(~self.hit).tolist())

    def planar_mask(self) -> np.ndarray:
        """Boolean array over encodings: True where a*x^t is planar (index 0 is False)."""
        ctx = self.ctx
        a = ctx.nonzero()
        inv_coset = (-ctx.vlog(a)) % self.g
        mask = np.zeros(ctx.q, dtype=bool)
        mask[1:] = ~self.hit[inv_coset]
        return mask

    def verdict(self, a: int) -> PlanarityVerdict:
        ctx = self.ctx
        ctx.check(a)
        k = self.inverse_coset(a)
        if not self.hit[k]:
            return PlanarityVerdict(True, "lemma_mono2")
        s = ctx.inv(a)
        if not self.members[s]:
            cand = np.flatnonzero(self.members)
            cand = cand[cand != 0]
            s = int(cand[(ctx.vlog(cand) % self.g) == k][0])
        x = int(np.flatnonzero(self.values == s)[0]) + 1
        return PlanarityVerdict(False, "lemma_mono2", {"s": s, "x": x})


def is_planar_quadratic(i: int, j: int, a: int, ctx: FieldCtx) -> PlanarityVerdict:
    if a == 0:
        raise UsageError("coefficient must be nonzero")
    return QuadraticImage(ctx, i, j).verdict(a)


def decide(spec: MonomialSpec, method: str = "auto", ctx: FieldCtx | None = None) -> PlanarityVerdict:
    """Run one named method (``auto`` uses the cheapest applicable)."""
    ctx = ctx or build_field(spec.r)
    t = spec.t_reduced
    if method == "auto":
        return is_planar_monomial(spec, ctx)
    if method == "definition":
        return is_planar_table(monomial_table(ctx, t, spec.a), ctx)
    if method == "lemma_mono":
        return is_planar_monomial(spec, ctx, fast=False)
    pair = spec.pair
    if method == "lemma_mono2":
        if pair is None:
            raise UsageError(f"t = {t} is not of the form 2^i + 2^j")
        return is_planar_quadratic(*pair, spec.a, ctx)
    if method == "matrix_rank":
        if pair is None and bin(t).count("1") != 1:
            raise UsageError(f"t = {t} does not give a linearized difference map")
        return is_planar_monomial(spec, ctx, fast=True)
    raise UsageError(f"unknown method {method!r}")


# --- witness re-verification ------------------------------------------------

def check_witness(verdict: PlanarityVerdict, ctx: FieldCtx, *, t: int | None = None,
                  a: int | None = None, table=None) -> bool:
    """Re-derive a failure witness by direct arithmetic."""
    w = verdict.witness
    if w is None:
        return verdict.planar
    if verdict.method == "definition":
        if table is None:
            table = monomial_table(ctx, t, a)
        F = [int(v) for v in np.asarray(table)]
        d, c1, c2 = w["d"], w["c1"], w["c2"]
        f = lambda c: F[c ^ d] ^ F[c] ^ ctx.mul(d, c)
        return d != 0 and c1 != c2 and f(c1) == f(c2)

    g = coset_degree(t, ctx.r)
    s = w["s"]
    if s == 0 or not ctx.is_kth_power(ctx.mul(a, s), g):
        return False
    if verdict.method == "lemma_mono":
        c1, c2 = w["c1"], w["c2"]
        f = lambda c: ctx.pow(c ^ 1, t) ^ ctx.pow(c, t) ^ ctx.mul(c, s)
        return c1 != c2 and f(c1) == f(c2)
    i, j = two_bit_split(reduce_exponent(t, ctx.r))
    if verdict.method == "lemma_mono2":
        x = w["x"]
        return x != 0 and (ctx.pow(x, (1 << i) - 1) ^ ctx.pow(x, (1 << j) - 1)) == s
    if verdict.method == "matrix_rank":
        x = w["kernel"]
        return x != 0 and (ctx.pow(x, 1 << i) ^ ctx.pow(x, 1 << j) ^ ctx.mul(s, x)) == 0
    return False
