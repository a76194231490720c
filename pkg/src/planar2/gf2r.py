"""Binary extension fields GF(2^r) in the polynomial basis.

Elements are plain Python ints (or numpy integer arrays for the vectorized
helpers): bit ``i`` of the encoding is the coefficient of ``x^i``.  A
:class:`FieldCtx` carries the modulus, a fixed primitive element and, for
fields small enough, exp/log tables that make multiplication and power-residue
tests O(1).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

MAX_DEGREE = 32
TABLE_CAP = 1 << 26


class UsageError(ValueError):
    """Bad parameters: out-of-range degree, foreign element, m not dividing r."""


class CapabilityError(RuntimeError):
    """The requested operation needs a table that was not built."""


class DomainError(ArithmeticError):
    """Zero where a nonzero element is required."""


# --- GF(2)[x] on ints -------------------------------------------------------

def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def pmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def is_irreducible_gf2(f: int) -> bool:
    """Ben-Or test: f of degree n is irreducible iff gcd(x^(2^k) - x, f) = 1, k <= n/2."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    xk = 0b10
    for _ in range(n // 2):
        xk = pmod(clmul(xk, xk), f)
        if pgcd(f, xk ^ 0b10) != 1:
            return False
    return True


def smallest_irreducible(r: int) -> int:
    # odd encodings only: x itself divides anything with zero constant term,
    # and for r = 1 this picks the x + 1 convention
    f = (1 << r) | 1
    while not is_irreducible_gf2(f):
        f += 2
    return f


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def poly_str(f: int) -> str:
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms) or "0"


# --- the field --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldCtx:
    """An immutable GF(2^r).

    ``exp[n] = gen^n`` for ``0 <= n < q - 1`` and ``log[x]`` is the discrete
    log of ``x != 0`` (``log[0]`` is unused).  Both are ``None`` above the
    table cap.
    """

    r: int
    modulus: int
    gen: int
    exp: np.ndarray | None = field(default=None, repr=False)
    log: np.ndarray | None = field(default=None, repr=False)

    @property
    def q(self) -> int:
        return 1 << self.r

    @property
    def order(self) -> int:
        """Order of the multiplicative group, q - 1."""
        return (1 << self.r) - 1

    @property
    def has_table(self) -> bool:
        return self.log is not None

    def descriptor(self) -> dict:
        return {"r": self.r, "modulus_enc": self.modulus, "generator_enc": self.gen}

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def nonzero(self) -> np.ndarray:
        return np.arange(1, self.q, dtype=np.int64)

    def check(self, *xs: int) -> None:
        q = self.q
        for x in xs:
            if not 0 <= x < q:
                raise UsageError(f"encoding {x} is not an element of GF(2^{self.r})")

    # scalar arithmetic

    def add(self, x: int, y: int) -> int:
        self.check(x, y)
        return x ^ y

    def _mul_bits(self, x: int, y: int) -> int:
        r, m = self.r, self.modulus
        out = 0
        while y:
            if y & 1:
                out ^= x
            y >>= 1
            x <<= 1
            if x >> r:
                x ^= m
        return out

    def mul(self, x: int, y: int) -> int:
        self.check(x, y)
        if x == 0 or y == 0:
            return 0
        if self.log is not None:
            return int(self.exp[(int(self.log[x]) + int(self.log[y])) % self.order])
        return self._mul_bits(x, y)

    def pow(self, x: int, n: int) -> int:
        """x^n; n is reduced mod q - 1 for x != 0, and 0^0 = 1."""
        self.check(x)
        if x == 0:
            if n < 0:
                raise DomainError("negative power of 0")
            return 1 if n == 0 else 0
        n %= self.order
        if self.log is not None:
            return int(self.exp[int(self.log[x]) * n % self.order])
        out = 1
        while n:
            if n & 1:
                out = self._mul_bits(out, x)
            x = self._mul_bits(x, x)
            n >>= 1
        return out

    def inv(self, x: int) -> int:
        self.check(x)
        if x == 0:
            raise DomainError("0 has no inverse")
        return self.pow(x, -1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def sqrt(self, x: int) -> int:
        return self.pow(x, 1 << (self.r - 1))

    def partial_trace(self, x: int, j: int) -> int:
        """x + x^2 + ... + x^(2^(j-1))."""
        if not 1 <= j <= self.r:
            raise UsageError(f"partial trace length {j} outside [1, {self.r}]")
        self.check(x)
        out, y = 0, x
        for _ in range(j):
            out ^= y
            y = self.mul(y, y)
        return out

    def trace(self, x: int) -> int:
        return self.partial_trace(x, self.r)

    def is_kth_power(self, x: int, k: int) -> bool:
        if k < 1:
            raise UsageError("k must be positive")
        self.check(x)
        if x == 0:
            raise DomainError("0 is not in the multiplicative group")
        return self.pow(x, self.order // math.gcd(k, self.order)) == 1

    def dlog(self, x: int) -> int:
        if self.log is None:
            raise CapabilityError(f"no log table for GF(2^{self.r})")
        self.check(x)
        if x == 0:
            raise DomainError("dlog(0) is undefined")
        return int(self.log[x])

    def in_subfield(self, x: int, m: int) -> bool:
        if m < 1 or self.r % m:
            raise UsageError(f"{m} does not divide {self.r}")
        self.check(x)
        y = x
        for _ in range(m):
            y = self.mul(y, y)
        return y == x

    def element_order(self, x: int) -> int:
        if x == 0:
            raise DomainError("0 has no multiplicative order")
        n = self.order
        for p in prime_factors(n):
            while n % p == 0 and self.pow(x, n // p) == 1:
                n //= p
        return n

    def cube_roots_of_unity(self) -> list[int]:
        """The primitive cube roots of unity, ascending by encoding (empty if 3 does not divide q - 1)."""
        if self.order % 3:
            return []
        w = self.pow(self.gen, self.order // 3)
        return sorted([w, self.mul(w, w)])

    # vectorized arithmetic (int64 arrays)

    def vmul(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.log is None:
            return self._vmul_bits(x, y)
        lx = self.log[x].astype(np.int64)
        ly = self.log[y].astype(np.int64)
        out = self.exp[(lx + ly) % self.order].astype(np.int64)
        return np.where((x == 0) | (y == 0), 0, out)

    def _vmul_bits(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(x, y)
        x = x.astype(np.int64)
        y = y.astype(np.int64)
        out = np.zeros_like(x)
        for b in range(self.r):
            out ^= np.where((y >> b) & 1 == 1, x, 0)
            x = x << 1
            x ^= ((x >> self.r) & 1) * self.modulus
        return out

    def vpow(self, x, n: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if n == 0:
            return np.ones_like(x)
        if n < 0 and np.any(x == 0):
            raise DomainError("negative power of 0")
        n %= self.order
        if self.log is None:
            out = np.ones_like(x)
            base = x.copy()
            while n:
                if n & 1:
                    out = self._vmul_bits(out, base)
                base = self._vmul_bits(base, base)
                n >>= 1
            return np.where(x == 0, 0, out)
        out = self.exp[(self.log[x].astype(np.int64) * n) % self.order].astype(np.int64)
        return np.where(x == 0, 0, out)

    def vgen_pow(self, n) -> np.ndarray:
        """gen^n for an integer array n (any sign)."""
        n = np.asarray(n, dtype=np.int64) % self.order
        if self.exp is None:
            flat = [self.pow(self.gen, int(k)) for k in n.ravel()]
            return np.array(flat, dtype=np.int64).reshape(n.shape)
        return self.exp[n].astype(np.int64)

    def vlog(self, x) -> np.ndarray:
        if self.log is None:
            raise CapabilityError(f"no log table for GF(2^{self.r})")
        return self.log[np.asarray(x, dtype=np.int64)].astype(np.int64)


def _build_tables(r: int, modulus: int, gen: int) -> tuple[np.ndarray, np.ndarray]:
    q = 1 << r
    n = q - 1
    ctx = FieldCtx(r, modulus, gen)
    block = 1
    exp = np.ones(1, dtype=np.int64)
    step = gen
    # exp[0:2b] = exp[0:b] ++ exp[0:b] * gen^b
    while block < n:
        exp = np.concatenate([exp, ctx._vmul_bits(exp, np.int64(step))])
        step = ctx._mul_bits(step, step)
        block *= 2
    exp = exp[:n]
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(n, dtype=np.int64)
    dtype = np.uint32 if r <= 32 else np.uint64
    exp = exp.astype(dtype)
    log = log.astype(dtype)
    exp.flags.writeable = False
    log.flags.writeable = False
    return exp, log


def is_primitive(r: int, modulus: int, x: int) -> bool:
    if x == 0:
        return False
    ctx = FieldCtx(r, modulus, 1)
    n = ctx.order
    return ctx.pow(x, n) == 1 and all(ctx.pow(x, n // p) != 1 for p in prime_factors(n))


def build_field(r: int, *, gen: int | None = None, max_degree: int = MAX_DEGREE,
                table_cap: int = TABLE_CAP) -> FieldCtx:
    """GF(2^r) with the smallest irreducible modulus and smallest primitive element.

    ``gen`` may name a different primitive element (used to check that results do
    not depend on that choice).  Default-argument fields are cached.
    """
    if not isinstance(r, int) or not 1 <= r <= max_degree:
        raise UsageError(f"field degree must be in [1, {max_degree}], got {r!r}")
    if gen is None and max_degree == MAX_DEGREE and table_cap == TABLE_CAP:
        return _cached_field(r)
    return _make_field(r, gen, table_cap)


@functools.lru_cache(maxsize=None)
def _cached_field(r: int) -> FieldCtx:
    return _make_field(r, None, TABLE_CAP)


def _make_field(r: int, gen: int | None, table_cap: int) -> FieldCtx:
    modulus = smallest_irreducible(r)
    q = 1 << r
    if gen is None:
        gen = next(x for x in range(1, q) if is_primitive(r, modulus, x))
    elif not is_primitive(r, modulus, gen):
        raise UsageError(f"{gen} is not a primitive element of GF(2^{r})")
    if q - 1 <= table_cap:
        exp, log = _build_tables(r, modulus, gen)
        return FieldCtx(r, modulus, gen, exp, log)
    return FieldCtx(r, modulus, gen)


def primitive_elements(ctx: FieldCtx) -> list[int]:
    """All generators of GF(2^r)^*, ascending."""
    n = ctx.order
    return sorted(ctx.pow(ctx.gen, k) for k in range(1, n + 1) if math.gcd(k, n) == 1)
