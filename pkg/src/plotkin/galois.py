"""Exact arithmetic in small finite fields GF(q) and their extensions.

Elements are encoded as integers in [0, q): the base-p digits of the
integer are the polynomial-basis coordinates of the element, lowest
power first.  For GF(4) with modulus x^2+x+1 the generator ``a`` (the
residue class of x) therefore has encoding 2, and ``a+1`` encoding 3.

Multiplication and inversion go through discrete-log tables built from
a fixed primitive element; addition is digitwise mod p, which for
characteristic 2 collapses to XOR of the encodings.

The moduli for GF(4), GF(8) and GF(9) are the Conway polynomials, so
element labels transfer verbatim from Magma.  Any other extension uses
the lexicographically smallest monic irreducible polynomial (smallest
integer encoding), found by exhaustive trial division.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

MAX_ORDER = 1 << 16

# Conway moduli, coeffs lowest degree first, keyed by (p, e).
_CANONICAL_MODULI = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (3, 2): (2, 2, 1),        # x^2 + 2x + 2
}

_PRIMES = {2, 3, 5, 7}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


class Field:
    """A finite field GF(q), q = p^e, with log/antilog tables.

    Do not call the constructor directly; use :func:`field_create` or
    :meth:`Field.extension`, which cache and validate.
    """

    def __init__(self, p: int, base: Optional["Field"], modulus: Optional["Poly"]):
        self.p = p
        self.base = base
        self.modulus = modulus
        if base is None:
            self.e = 1
            self.q = p
        else:
            if modulus is None:
                raise ValueError("extension field requires a modulus")
            self.e = base.e * modulus.degree
            self.q = base.q ** modulus.degree
        if self.q > MAX_ORDER:
            raise ValueError(f"field order {self.q} exceeds {MAX_ORDER}")

        self._build_tables()
        self._np_tables = None

    # -- construction ---------------------------------------------------

    def _mul_raw(self, x: int, y: int) -> int:
        """Multiply without log tables (used to bootstrap them)."""
        if self.base is None:
            return (x * y) % self.p
        b = self.base
        m = self.modulus.degree
        xd = _digits(x, b.q, m)
        yd = _digits(y, b.q, m)
        prod = [0] * (2 * m - 1)
        for i, xi in enumerate(xd):
            if xi == 0:
                continue
            for j, yj in enumerate(yd):
                if yj:
                    prod[i + j] = b.add(prod[i + j], b.mul(xi, yj))
        # reduce modulo the modulus polynomial
        mod = self.modulus.coeffs
        for deg in range(2 * m - 2, m - 1, -1):
            c = prod[deg]
            if c == 0:
                continue
            prod[deg] = 0
            for j in range(m):
                if mod[j]:
                    prod[deg - m + j] = b.sub(prod[deg - m + j], b.mul(c, mod[j]))
        return _undigits(prod[:m], b.q)

    def _order_of(self, x: int) -> int:
        acc = x
        order = 1
        while acc != 1:
            acc = self._mul_raw(acc, x)
            order += 1
            if order > self.q:
                raise RuntimeError("element order overflow; field tables corrupt")
        return order

    def _build_tables(self) -> None:
        target = self.q - 1
        gen = None
        for cand in range(2, self.q):
            if self._order_of(cand) == target:
                gen = cand
                break
        if gen is None:
            if self.q == 2:
                gen = 1
            else:
                raise RuntimeError("no primitive element found; modulus not irreducible?")
        self.generator = gen
        exp = [1] * target
        for i in range(1, target):
            exp[i] = self._mul_raw(exp[i - 1], gen)
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self.exp_table = exp
        self.log_table = log

    # -- element arithmetic ----------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        p = self.p
        z = 0
        shift = 1
        while x or y:
            z += ((x + y) % p) * shift
            x //= p
            y //= p
            shift *= p
        return z

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        p = self.p
        z = 0
        shift = 1
        while x:
            z += (-x % p) * shift
            x //= p
            shift *= p
        return z

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        i = self.log_table[x] + self.log_table[y]
        return self.exp_table[i % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in GF(q)")
        return self.exp_table[(self.q - 1 - self.log_table[x]) % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def exp(self, i: int) -> int:
        return self.exp_table[i % (self.q - 1)]

    def log(self, x: int) -> int:
        if x == 0:
            raise ValueError("log of zero")
        return self.log_table[x]

    def pow(self, x: int, n: int) -> int:
        if x == 0:
            if n <= 0:
                raise ZeroDivisionError("0 ** nonpositive power")
            return 0
        return self.exp_table[(self.log_table[x] * n) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    # -- numpy operation tables (for matrix/distance inner loops) ---------

    def np_tables(self):
        """(ADD, MUL, NEG, INV) lookup tables as uint8 arrays (q <= 256)."""
        if self._np_tables is None:
            if self.q > 256:
                raise ValueError("numpy tables only built for q <= 256")
            q = self.q
            add = np.zeros((q, q), dtype=np.uint8)
            mul = np.zeros((q, q), dtype=np.uint8)
            for x in range(q):
                for y in range(q):
                    add[x, y] = self.add(x, y)
                    mul[x, y] = self.mul(x, y)
            neg = np.array([self.neg(x) for x in range(q)], dtype=np.uint8)
            inv = np.array([0] + [self.inv(x) for x in range(1, q)], dtype=np.uint8)
            self._np_tables = (add, mul, neg, inv)
        return self._np_tables

    # -- extensions -------------------------------------------------------

    def extension(self, m: int, modulus: Optional["Poly"] = None) -> "Field":
        """The degree-m extension of this field."""
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if m == 1 and modulus is None:
            return self
        key = None if modulus is None else tuple(modulus.coeffs)
        cache = getattr(self, "_ext_cache", None)
        if cache is None:
            cache = self._ext_cache = {}
        if (m, key) in cache:
            return cache[(m, key)]
        if modulus is None:
            canon = _CANONICAL_MODULI.get((self.p, self.e * m)) if self.e == 1 else None
            if canon is not None:
                modulus = Poly(self, list(canon))
            else:
                modulus = _smallest_irreducible(self, m)
        if modulus.field is not self:
            raise ValueError("modulus must be a polynomial over the base field")
        if modulus.degree != m:
            raise ValueError(f"modulus degree {modulus.degree} != extension degree {m}")
        if modulus.coeffs[-1] != 1:
            raise ValueError("modulus must be monic")
        if not is_irreducible(modulus):
            raise ValueError("modulus is reducible")
        ext = Field(self.p, self, modulus)
        cache[(m, key)] = ext
        return ext

    def __repr__(self) -> str:
        return f"GF({self.q})"


def _digits(x: int, b: int, width: int) -> list:
    d = []
    for _ in range(width):
        d.append(x % b)
        x //= b
    return d


def _undigits(d, b: int) -> int:
    v = 0
    for c in reversed(d):
        v = v * b + c
    return v


_prime_fields: dict = {}


def field_create(p: int, e: int = 1, modulus: Optional["Poly"] = None) -> Field:
    """Create (or fetch the cached) field GF(p^e).

    When *modulus* is omitted and e > 1, the canonical modulus is used:
    the Conway polynomial for GF(4)/GF(8)/GF(9), otherwise the smallest
    monic irreducible of degree e over GF(p).
    """
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** e > MAX_ORDER:
        raise ValueError(f"field order {p ** e} exceeds {MAX_ORDER}")
    if p not in _prime_fields:
        _prime_fields[p] = Field(p, None, None)
    prime = _prime_fields[p]
    if e == 1:
        if modulus is not None:
            raise ValueError("prime field takes no modulus")
        return prime
    return prime.extension(e, modulus)


def field_for_order(q: int) -> Field:
    """GF(q) for a prime power q, with the canonical modulus."""
    for p in sorted(_PRIMES | {x for x in range(2, 40) if _is_prime(x)}):
        if q % p == 0:
            e = 0
            t = q
            while t % p == 0:
                t //= p
                e += 1
            if t != 1:
                raise ValueError(f"{q} is not a prime power")
            return field_create(p, e)
    raise ValueError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense polynomial over a Field; coeffs lowest degree first.

    Zero is represented by an empty coefficient list; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(int(c) for c in coeffs)
        for c in self.coeffs:
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} out of range for {field}")

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, [1])

    @classmethod
    def x_pow(cls, field: Field, n: int, coeff: int = 1) -> "Poly":
        return cls(field, [0] * n + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def _check(self, other: "Poly") -> None:
        if self.field is not other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                if cj:
                    out[i + j] = F.add(out[i + j], F.mul(ci, cj))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(c, x) for x in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        quot = [0] * (dq + 1)
        lead_inv = F.inv(other.coeffs[-1])
        for i in range(dq, -1, -1):
            c = rem[i + other.degree]
            if c == 0:
                continue
            f = F.mul(c, lead_inv)
            quot[i] = f
            for j, oc in enumerate(other.coeffs):
                if oc:
                    rem[i + j] = F.sub(rem[i + j], F.mul(f, oc))
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def eval(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __repr__(self) -> str:
        return f"Poly({self.field}, {poly_to_string(self)!r})"


def poly_divmod(n: Poly, d: Poly):
    """Quotient and remainder with deg(remainder) < deg(d)."""
    return divmod(n, d)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._check(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_irreducible(f: Poly) -> bool:
    """Trial-division irreducibility test (degree <= ~8 over small fields)."""
    F = f.field
    if f.degree <= 0:
        return False
    if f.degree == 1:
        return True
    if f.coeffs[0] == 0:
        return False
    for d in range(1, f.degree // 2 + 1):
        for enc in range(F.q ** d):
            cand = Poly(F, _digits(enc, F.q, d) + [1])
            if (f % cand).is_zero():
                return False
    return True


def _smallest_irreducible(F: Field, m: int) -> Poly:
    for enc in range(F.q ** m):
        cand = Poly(F, _digits(enc, F.q, m) + [1])
        if is_irreducible(cand):
            return cand
    raise RuntimeError(f"no irreducible of degree {m} over {F}")


# ---------------------------------------------------------------------------
# Polynomial text syntax (shared with the recipe module)
# ---------------------------------------------------------------------------

import re

_TERM_RE = re.compile(
    r"^(?:(?P<coeff>a(?:\^\d+)?|\d+)(?:\s*\*\s*|\s+|(?=x))?)?(?P<mono>x(?:\^(?P<exp>\d+))?)?$"
)


def poly_from_string(field: Field, text: str) -> Poly:
    """Parse ``c*x^i + ...`` with coefficients INT, ``a`` or ``a^k``.

    ``a`` denotes the residue class of x modulo the field's modulus
    (encoding p), matching Magma's ``F.1`` for the canonical moduli.
    """
    coeffs: dict = {}
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise ValueError(f"empty term in polynomial {text!r}")
        m = _TERM_RE.match(term.replace(" ", ""))
        if not m or (m.group("coeff") is None and m.group("mono") is None):
            raise ValueError(f"bad polynomial term {term!r}")
        cs = m.group("coeff")
        if cs is None:
            c = 1
        elif cs.startswith("a"):
            if field.e == 1:
                raise ValueError(f"generator 'a' undefined over prime field {field}")
            a = field.p  # residue class of x
            k = int(cs[2:]) if len(cs) > 1 else 1
            c = field.pow(a, k)
        else:
            c = int(cs)
            if c >= field.q:
                raise ValueError(f"coefficient {c} out of range for {field}")
        deg = 0
        if m.group("mono"):
            deg = int(m.group("exp")) if m.group("exp") else 1
        coeffs[deg] = field.add(coeffs.get(deg, 0), c)
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return Poly(field, out)


def _elem_to_string(field: Field, c: int) -> str:
    if c < field.p or field.e == 1:
        return str(c)
    a = field.p
    k = (field.log(c) - field.log(a)) % (field.q - 1)
    # c = a^k only if log lines up; otherwise fall back to the encoding
    if field.pow(a, k) == c:
        return "a" if k == 1 else f"a^{k}"
    return str(c)


def poly_to_string(f: Poly) -> str:
    """Inverse of :func:`poly_from_string` (highest degree first)."""
    if f.is_zero():
        return "0"
    field = f.field
    parts = []
    for deg in range(f.degree, -1, -1):
        c = f.coeffs[deg]
        if c == 0:
            continue
        cs = _elem_to_string(field, c)
        if deg == 0:
            parts.append(cs)
        else:
            x = "x" if deg == 1 else f"x^{deg}"
            parts.append(x if cs == "1" else f"{cs}*{x}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# Cyclotomic cosets and minimal polynomials
# ---------------------------------------------------------------------------

from math import gcd


def cyclotomic_coset(n: int, q: int, i: int) -> list:
    """Sorted orbit {i * q^j mod n}."""
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    if not 0 <= i < n:
        raise ValueError(f"exponent {i} out of range [0, {n})")
    orbit = {i}
    c = i * q % n
    while c != i:
        orbit.add(c)
        c = c * q % n
    return sorted(orbit)


def _embeds_in(base: Field, ext: Field) -> bool:
    if base is ext:
        return True
    if ext.p != base.p or ext.e % base.e != 0:
        return False
    if base.e == 1:
        return True  # prime subfield embeds as constants in any tower
    f = ext
    while f is not None:
        if f is base:
            return True
        f = f.base
    return False


def minimal_polynomial(base: Field, ext: Field, alpha_pow: int) -> Poly:
    """Minimal polynomial over *base* of alpha^alpha_pow.

    alpha is ext's fixed primitive element (the one behind its log
    tables).  The result is monic over *base* with roots exactly
    {alpha^(alpha_pow * base.q^j)}.
    """
    if not _embeds_in(base, ext):
        raise ValueError(f"{ext} is not an extension of {base}")
    order = ext.q - 1
    coset = cyclotomic_coset(order, base.q, alpha_pow % order) if alpha_pow % order else [0]
    prod = Poly.one(ext)
    for c in coset:
        root = ext.exp(c)
        prod = prod * Poly(ext, [ext.neg(root), 1])
    out = []
    for c in prod.coeffs:
        if c >= base.q:
            raise RuntimeError("minimal polynomial coefficient escaped the base field")
        out.append(c)
    return Poly(base, out)
