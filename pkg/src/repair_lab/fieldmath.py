"""Arithmetic for the extension field F = GF(q^ell) over its prime subfield B = GF(q).

Elements of F are residues of B[x] modulo a monic irreducible polynomial of degree
ell.  An element with polynomial coordinates (d_0, ..., d_{ell-1}) is encoded as the
plain integer sum(d_i * q**i), so 0 and 1 are the field's zero and one, the integers
0..q-1 are exactly the subfield B, and for q=2 the encoding is the usual bit packing.

A FieldContext fixes q, ell, the modulus, and a working basis of F over B (default:
the polynomial basis 1, x, ..., x^{ell-1}).  The context precomputes discrete
log/antilog and trace tables when the field is small enough; larger fields fall back
to direct polynomial arithmetic.  All arithmetic is exact — no floating point.

Coordinate expansions come in two flavours that are easy to mix up:

- basis_coords(a): coefficients of a in the working basis, computed as traces of a
  against the *dual* basis.  These are the subsymbols a storage node holds.
- dual_coords(a): traces of a against the working basis itself, i.e. the
  coefficients of a in the dual basis.

Contexts are immutable after construction and safe to share across threads.
"""
from __future__ import annotations

from . import linalg

# Largest field for which log/exp and trace tables are precomputed.
_TABLE_LIMIT = 1 << 16

# Lexicographically smallest monic irreducible polynomial per (q, degree),
# coefficients ascending.  Computed once by trial division and frozen here;
# construction re-checks irreducibility anyway.
_DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (2, 0, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 1, 0, 0, 0, 0, 0, 1),
    (3, 9): (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 11): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 1): (0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (5, 5): (1, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (5, 8): (2, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 9): (3, 2, 1, 0, 0, 0, 0, 0, 0, 1),
    (5, 10): (3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 11): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 12): (4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_rem(a: list[int], b: tuple[int, ...], q: int) -> list[int]:
    """Remainder of a modulo the monic polynomial b, coefficients ascending."""
    a = list(a)
    db = len(b) - 1
    for da in range(len(a) - 1, db - 1, -1):
        c = a[da]
        if c:
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - c * b[i]) % q
    return a[:db]


def _check_irreducible(modulus: tuple[int, ...], q: int) -> None:
    """Trial division by every monic polynomial of degree <= deg(modulus)/2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(q**d):
            g, e = [], enc
            for _ in range(d):
                g.append(e % q)
                e //= q
            g.append(1)
            rem = _poly_rem(list(modulus), tuple(g), q)
            if not any(rem):
                raise ValueError(
                    f"modulus {list(modulus)} is divisible by {g}, not irreducible"
                )


class FieldContext:
    """GF(q^ell) with a fixed modulus and working basis.

    Raises ValueError for a non-prime q, a missing default modulus, a reducible or
    non-monic modulus, or a dependent basis.
    """

    def __init__(
        self,
        q: int,
        ell: int,
        modulus: list[int] | tuple[int, ...] | None = None,
        basis: list[int] | tuple[int, ...] | None = None,
    ):
        if not _is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if ell < 1:
            raise ValueError(f"ell must be >= 1, got {ell}")
        self.q = q
        self.ell = ell
        self.order = q**ell
        if modulus is None:
            try:
                modulus = _DEFAULT_MODULI[(q, ell)]
            except KeyError:
                raise ValueError(
                    f"no built-in modulus for q={q}, ell={ell}; supply one explicitly"
                ) from None
        modulus = tuple(int(c) % q for c in modulus)
        if len(modulus) != ell + 1:
            raise ValueError(f"modulus must have degree {ell}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        _check_irreducible(modulus, q)
        self.modulus = modulus

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._trace_table: list[int] | None = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

        if basis is None:
            basis = tuple(q**i for i in range(ell))
        else:
            basis = tuple(int(b) for b in basis)
            if len(basis) != ell:
                raise ValueError(f"basis must have {ell} elements")
            for b in basis:
                self._check_element(b)
            coords = [list(self.digits(b)) for b in basis]
            if linalg.rank(coords, q) != ell:
                raise ValueError("basis elements are linearly dependent over the subfield")
        self.basis = basis
        self.dual_basis = self._compute_dual_basis()

    # ---- element encoding -------------------------------------------------

    def _check_element(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"not a field element: {a!r}")

    def digits(self, a: int) -> tuple[int, ...]:
        """Polynomial coordinates of a, little-endian base-q digits."""
        out = []
        for _ in range(self.ell):
            out.append(a % self.q)
            a //= self.q
        return tuple(out)

    def from_digits(self, digits) -> int:
        a = 0
        for d in reversed(list(digits)):
            a = a * self.q + d % self.q
        return a

    def elements(self) -> range:
        return range(self.order)

    # ---- raw polynomial arithmetic (table-free path) ----------------------

    def _add_raw(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits((x + y) % self.q for x, y in zip(da, db))

    def _mul_raw(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * self.ell - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        rem = _poly_rem([c % self.q for c in conv], self.modulus, self.q)
        return self.from_digits(rem)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    # ---- tables ------------------------------------------------------------

    def _build_tables(self) -> None:
        n = self.order - 1
        if n == 1:
            g = 1
        else:
            factors = []
            m, d = n, 2
            while d * d <= m:
                if m % d == 0:
                    factors.append(d)
                    while m % d == 0:
                        m //= d
                d += 1
            if m > 1:
                factors.append(m)
            g = 0
            for cand in range(2, self.order):
                if all(self._pow_raw(cand, n // p) != 1 for p in factors):
                    g = cand
                    break
        exp = [0] * (2 * n)
        log = [0] * self.order
        acc = 1
        for i in range(n):
            exp[i] = acc
            exp[i + n] = acc
            log[acc] = i
            acc = self._mul_raw(acc, g)
        if acc != 1:
            raise AssertionError("generator search failed")
        self._exp, self._log = exp, log
        # trace via Frobenius orbits: Tr(a) = a + a^q + ... + a^(q^(ell-1))
        table = [0] * self.order
        for a in range(1, self.order):
            t, b = a, a
            for _ in range(self.ell - 1):
                b = exp[(log[b] * self.q) % n] if b else 0
                t = self._add_raw(t, b)
            if t >= self.q:
                raise AssertionError("trace left the subfield")
            table[a] = t
        self._trace_table = table

    # ---- field operations ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        return self.from_digits((-d) % self.q for d in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[self.order - 1 - self._log[a]]
        return self._pow_raw(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        n = self.order - 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % n]
        return self._pow_raw(a, e % n if e >= n else e)

    def frobenius(self, a: int, i: int = 1) -> int:
        """a raised to the q^i power (the i-fold Frobenius automorphism)."""
        i %= self.ell
        if i == 0 or a == 0:
            return a
        if self._log is not None:
            n = self.order - 1
            return self._exp[(self._log[a] * pow(self.q, i, n)) % n]
        b = a
        for _ in range(i):
            b = self._pow_raw(b, self.q)
        return b

    def trace(self, a: int) -> int:
        """Field trace of F down to B, returned as an integer in [0, q)."""
        if self._trace_table is not None:
            return self._trace_table[a]
        t, b = a, a
        for _ in range(self.ell - 1):
            b = self.frobenius(b)
            t = self.add(t, b)
        return t

    # ---- basis expansions ----------------------------------------------------

    def _compute_dual_basis(self) -> tuple[int, ...]:
        # Tr(basis[i] * x^t) over all i, t; the inverse matrix columns give the
        # dual elements' polynomial coordinates.
        m = [
            [self.trace(self.mul(b, self.q**t)) for t in range(self.ell)]
            for b in self.basis
        ]
        c = linalg.inverse(m, self.q)
        dual = tuple(
            self.from_digits(c[t][j] for t in range(self.ell)) for j in range(self.ell)
        )
        for i, b in enumerate(self.basis):
            for j, g in enumerate(dual):
                if self.trace(self.mul(b, g)) != (1 if i == j else 0):
                    raise AssertionError("dual basis construction failed")
        return dual

    def basis_coords(self, a: int) -> tuple[int, ...]:
        """Coefficients of a in the working basis (a node's stored subsymbols)."""
        return tuple(self.trace(self.mul(a, g)) for g in self.dual_basis)

    def dual_coords(self, a: int) -> tuple[int, ...]:
        """Traces of a against the working basis = coefficients in the dual basis."""
        return tuple(self.trace(self.mul(a, b)) for b in self.basis)

    def from_basis_coords(self, coords) -> int:
        a = 0
        for c, b in zip(coords, self.basis):
            a = self.add(a, self.mul(c % self.q, b))
        return a

    def describe(self) -> str:
        """One-line description of the field, e.g. ``q=2 ell=3 modulus=[1,1,0,1]``."""
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"q={self.q} ell={self.ell} modulus=[{coeffs}]"

    def __repr__(self) -> str:
        return f"FieldContext(q={self.q}, ell={self.ell})"


# ---- vectors over the subfield ------------------------------------------------


def support(vec) -> list[int]:
    """Indices of the nonzero entries."""
    return [i for i, v in enumerate(vec) if v]


def weight(vec) -> int:
    return sum(1 for v in vec if v)


def coset_weight(rows: list[list[int]], y: list[int] | None, q: int) -> tuple[int, int]:
    """Support size and total Hamming weight of the coset y + rowspace(rows).

    rows must be linearly independent over Z_q (ValueError otherwise).  With k
    independent rows and s = #nonzero columns, the rowspace alone weighs
    s * q^(k-1) * (q-1); every coordinate outside those columns where y is nonzero
    adds a further q^k.  Computed in closed form — no vector enumeration.
    """
    k = len(rows)
    if linalg.rank(rows, q) != k:
        raise ValueError("rows are not linearly independent")
    supp = set(linalg.nonzero_columns(rows))
    total = len(supp) * q ** (k - 1) * (q - 1)
    if y is not None:
        extra = sum(1 for j, v in enumerate(y) if v % q and j not in supp)
        total += extra * q**k
    return len(supp), total


# ---- polynomials over F (coefficient lists, ascending) -------------------------


def poly_trim(coeffs) -> list[int]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_deg(coeffs) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(poly_trim(coeffs)) - 1


def poly_eval(ctx: FieldContext, coeffs, x: int) -> int:
    acc = 0
    for c in reversed(list(coeffs)):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_add(ctx: FieldContext, a, b) -> list[int]:
    a, b = list(a), list(b)
    if len(a) < len(b):
        a, b = b, a
    return [ctx.add(x, y) for x, y in zip(a, b + [0] * (len(a) - len(b)))]


def poly_scale(ctx: FieldContext, c: int, a) -> list[int]:
    return [ctx.mul(c, x) for x in a]


def poly_mul(ctx: FieldContext, a, b) -> list[int]:
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return out


def poly_shift(ctx: FieldContext, coeffs, c: int) -> list[int]:
    """Coefficients of p(x + c); degree is preserved."""
    out: list[int] = []
    for co in reversed(poly_trim(coeffs)):
        # out <- out * (x + c) + co
        shifted = [0] + out
        for i in range(len(out)):
            shifted[i] = ctx.add(shifted[i], ctx.mul(c, out[i]))
        out = shifted
        out[0] = ctx.add(out[0], co)
    return out
