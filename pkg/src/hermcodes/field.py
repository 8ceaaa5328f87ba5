"""Exact arithmetic in the tower GF(p) <= GF(q) <= GF(q^2), q = p^e.

Elements of GF(q^2) are integer codes in [0, q^2).  The element
``a_0 + a_1*x + ... + a_{2e-1}*x^(2e-1)`` of GF(p)[x]/(modulus) has code
``a_0 + a_1*p + ... + a_{2e-1}*p^(2e-1)``; code 0 is the zero element.
The modulus is the lexicographically smallest monic irreducible polynomial
of degree 2e over GF(p) (smallest integer code of its lower coefficients),
recorded on the context so that every element code is reproducible.

A :class:`FieldCtx` is immutable after construction and safe to share
between workers.  Scalar operations are methods (``add``, ``mul``, ``inv``,
``frob``, ``norm``, ``trace``, ...); the ``v``-prefixed variants operate on
numpy arrays of codes and broadcast, which is what the enumeration loops
use.  Nonzero codes index a discrete-log table for a fixed primitive
element, giving O(1) multiplication; for fields with q^2 <= 256 full
pairwise add/mul tables are built as well.

The intermediate field GF(q) is not modelled separately: it is the fixed
set of the conjugation ``x -> x^q`` inside GF(q^2), exposed as the sorted
code tuple ``base_embed``.
"""

from __future__ import annotations

import numpy as np

from .limits import DENSE_TABLE_LIMIT, TABLE_LIMIT, BudgetExceededError

__all__ = ["FieldCtx", "make_field", "is_prime"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial arithmetic over GF(p) (coefficient lists, ascending, trimmed).
# Only used during context construction; everything afterwards is tables.
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = a[:]
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - df
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - lead * fi) % p
        _trim(a)
        if not a:
            break
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, f, p)


def _poly_powmod(a: list[int], exp: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a[:], f, p)
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        exp >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        inv_lead = pow(b[-1], -1, p)
        bm = [(c * inv_lead) % p for c in b]
        a, b = b, _poly_mod(a, bm, p)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test: f monic of degree m is irreducible over GF(p) iff
    x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1 for prime r | m."""
    m = len(f) - 1
    x = [0, 1]
    if _poly_powmod(x, p**m, f, p) != x:
        return False
    for r in _prime_factors(m):
        u = _poly_powmod(x, p ** (m // r), f, p)
        width = max(len(u), 2)
        uu = u + [0] * (width - len(u))
        xx = x + [0] * (width - 2)
        diff = _trim([(a - b) % p for a, b in zip(uu, xx)])
        if len(_poly_gcd(diff, f, p)) > 1:
            return False
    return True


def _smallest_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Monic irreducible of the given degree with smallest lower-coefficient
    code; returned as the full ascending coefficient tuple (monic)."""
    for code in range(p**degree):
        lower = [(code // p**i) % p for i in range(degree)]
        f = lower + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """Immutable arithmetic context for GF(q) inside GF(q^2).

    Construct via :func:`make_field`.  Attributes:

    p, e, q, q2     -- characteristic, exponent, q = p^e, q2 = q^2
    modulus         -- ascending monic coefficient tuple of the modulus
    exp_table       -- powers of the primitive element, length q2 - 1
    log_table       -- inverse of exp_table on nonzero codes (log[0] = -1)
    generator       -- code of the primitive element used by the tables
    base_embed      -- sorted tuple of the q codes fixed by x -> x^q
    """

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError("e must be a positive integer")
        if p ** (2 * e) > TABLE_LIMIT:
            raise BudgetExceededError(
                f"q^2 = {p}^{2 * e} exceeds the table limit {TABLE_LIMIT}"
            )
        self.p = p
        self.e = e
        self.q = p**e
        self.q2 = self.q**2
        self.modulus = _smallest_irreducible(p, 2 * e)
        self._mod_low = self.modulus[:-1]
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _code_mul(self, a: int, b: int) -> int:
        # Pre-table multiplication through polynomial arithmetic.
        p, e2 = self.p, 2 * self.e
        da = [(a // p**i) % p for i in range(e2)]
        db = [(b // p**i) % p for i in range(e2)]
        prod = _poly_mulmod(_trim(da), _trim(db), list(self.modulus), p)
        return sum(c * p**i for i, c in enumerate(prod))

    def _code_pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self._code_mul(result, base)
            base = self._code_mul(base, base)
            k >>= 1
        return result

    def _find_generator(self) -> int:
        order = self.q2 - 1
        checks = [order // r for r in _prime_factors(order)]
        for g in range(2, self.q2):
            if all(self._code_pow(g, c) != 1 for c in checks):
                return g
        raise AssertionError("no primitive element found")  # unreachable

    def _build_tables(self) -> None:
        q2 = self.q2
        order = q2 - 1
        self.generator = self._find_generator()
        exp = np.empty(order, dtype=np.int64)
        acc = 1
        for i in range(order):
            exp[i] = acc
            acc = self._code_mul(acc, self.generator)
        log = np.full(q2, -1, dtype=np.int64)
        log[exp] = np.arange(order)
        self.exp_table = exp
        self.log_table = log

        codes = np.arange(q2, dtype=np.int64)
        nz = codes[1:]
        frob = np.zeros(q2, dtype=np.int64)
        frob[nz] = exp[(log[nz] * self.q) % order]
        self._frob_t = frob
        inv = np.zeros(q2, dtype=np.int64)
        inv[nz] = exp[(-log[nz]) % order]
        self._inv_t = inv
        self._neg_t = self._digitwise(codes, codes * 0, lambda x, _: (-x) % self.p)
        norm = np.zeros(q2, dtype=np.int64)
        norm[nz] = exp[(log[nz] * (self.q + 1)) % order]
        self._norm_t = norm
        self._trace_t = self.vadd(codes, frob)

        if q2 <= DENSE_TABLE_LIMIT:
            self._add_t = self.vadd(codes[:, None], codes[None, :])
            self._mul_t = self._vmul_logexp(codes[:, None], codes[None, :])
        else:
            self._add_t = None
            self._mul_t = None

        self.base_embed = tuple(int(c) for c in codes[frob == codes])
        self._base_set = frozenset(self.base_embed)
        for t in (self.exp_table, self.log_table, self._frob_t, self._inv_t,
                  self._neg_t, self._norm_t, self._trace_t):
            t.setflags(write=False)
        if self._add_t is not None:
            self._add_t.setflags(write=False)
            self._mul_t.setflags(write=False)

    def _digitwise(self, a, b, op):
        out = np.zeros_like(np.broadcast_arrays(a, b)[0])
        pw = 1
        for _ in range(2 * self.e):
            out += op((a // pw) % self.p, (b // pw) % self.p) * pw
            pw *= self.p
        return out

    def _vmul_logexp(self, a, b):
        la = self.log_table[a]
        lb = self.log_table[b]
        out = self.exp_table[(la + lb) % (self.q2 - 1)]
        return np.where((np.asarray(a) == 0) | (np.asarray(b) == 0), 0, out)

    # -- vectorized operations on arrays of codes ---------------------------

    def vadd(self, a, b):
        if getattr(self, "_add_t", None) is not None:
            return self._add_t[a, b]
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._digitwise(a, b, lambda x, y: (x + y) % self.p)

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vneg(self, a):
        return self._neg_t[a]

    def vmul(self, a, b):
        if self._mul_t is not None:
            return self._mul_t[a, b]
        return self._vmul_logexp(a, b)

    def vfrob(self, a):
        return self._frob_t[a]

    # -- scalar operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.vadd(a, b))

    def sub(self, a: int, b: int) -> int:
        return int(self.vadd(a, self._neg_t[b]))

    def neg(self, a: int) -> int:
        return int(self._neg_t[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.vmul(a, b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._inv_t[a])

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return self.mul(a, int(self._inv_t[b]))

    def pow(self, a: int, k: int) -> int:
        """Square-and-multiply power with integer exponent (negative allowed
        for nonzero a)."""
        if k < 0:
            a, k = self.inv(a), -k
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frob(self, a: int) -> int:
        """Conjugation a -> a^q, an involution fixing exactly GF(q)."""
        return int(self._frob_t[a])

    def conjugation_maps(self, a: int) -> tuple[int, int, int]:
        """(a^q, a^(q+1), a + a^q): conjugate, norm, and trace at once."""
        return int(self._frob_t[a]), int(self._norm_t[a]), int(self._trace_t[a])

    def norm(self, a: int) -> int:
        """Relative norm a -> a^(q+1); lands in GF(q)."""
        return int(self._norm_t[a])

    def trace(self, a: int) -> int:
        """Relative trace a -> a + a^q; lands in GF(q)."""
        return int(self._trace_t[a])

    def in_base_field(self, a: int) -> bool:
        return a in self._base_set

    # -- preimage solvers (exhaustive, smallest-code tie-break) -------------

    def norm_preimage(self, b: int) -> int:
        """Smallest code lam with lam^(q+1) = b, for b in GF(q)*."""
        if b == 0 or not self.in_base_field(b):
            raise ValueError(f"norm preimage requires b in GF(q)*, got {b}")
        for lam in range(1, self.q2):
            if self._norm_t[lam] == b:
                return lam
        raise AssertionError("norm is onto GF(q)*")  # unreachable

    def trace_preimage(self, b: int) -> int:
        """Smallest code lam with lam + lam^q = b, for b in GF(q)."""
        if not self.in_base_field(b):
            raise ValueError(f"trace preimage requires b in GF(q), got {b}")
        for lam in range(self.q2):
            if self._trace_t[lam] == b:
                return lam
        raise AssertionError("trace is onto GF(q)")  # unreachable

    # -- serialization ------------------------------------------------------

    def descriptor(self) -> dict:
        """JSON-serializable context descriptor."""
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def modulus_token(self) -> str:
        """Single-token modulus form for whitespace-separated file headers."""
        return ",".join(str(c) for c in self.modulus)

    def __repr__(self) -> str:  # pragma: no cover
        return f"FieldCtx(GF({self.q}) < GF({self.q2}), modulus={self.modulus})"


def make_field(p: int, e: int) -> FieldCtx:
    """Build the arithmetic context for GF(p^e) inside GF(p^(2e)).

    Raises ValueError for non-prime p and BudgetExceededError when
    p^(2e) exceeds the table limit.
    """
    return FieldCtx(p, e)
