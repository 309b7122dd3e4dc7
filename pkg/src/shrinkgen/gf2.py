"""Arithmetic over GF(2)[x] and GF(2^A).

Polynomials over GF(2) are held as integer bit masks: bit k of the mask is
the coefficient of x^k, so x^5 + x^4 + x^3 + x^2 + 1 is 0b111101 = 0x3D.
The mask representation is canonical by construction: no coefficient can sit
above the degree, and the zero polynomial is mask 0 with degree ``None``.

The text format is a sum of ``x^k`` terms in descending powers, with ``x``
for k = 1 and ``1`` for k = 0.  ``BinaryPolynomial.parse`` also accepts a
hex mask prefixed with ``0x``; ``str()`` always prints the text form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import UnsupportedSizeError

# Primitivity testing needs the full factorization of 2^L - 1; trial
# division past this degree would dominate everything else done here.
FACTOR_DEGREE_CAP = 40


@dataclass(frozen=True)
class BinaryPolynomial:
    """A polynomial over GF(2); ``mask`` bit k is the coefficient of x^k."""

    mask: int

    def __post_init__(self) -> None:
        if not isinstance(self.mask, int) or self.mask < 0:
            raise ValueError("polynomial mask must be a nonnegative integer")

    @property
    def degree(self) -> int | None:
        """Index of the highest nonzero coefficient; None for the zero polynomial."""
        return self.mask.bit_length() - 1 if self.mask else None

    def coeff(self, k: int) -> int:
        return (self.mask >> k) & 1

    def __bool__(self) -> bool:
        return self.mask != 0

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        if not isinstance(other, BinaryPolynomial):
            return NotImplemented
        return BinaryPolynomial(self.mask ^ other.mask)

    def __mul__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        if not isinstance(other, BinaryPolynomial):
            return NotImplemented
        a, b, acc = self.mask, other.mask, 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            b >>= 1
        return BinaryPolynomial(acc)

    def __divmod__(self, other: "BinaryPolynomial") -> tuple["BinaryPolynomial", "BinaryPolynomial"]:
        if not isinstance(other, BinaryPolynomial):
            return NotImplemented
        if not other.mask:
            raise ZeroDivisionError("division by the zero polynomial")
        a, b = self.mask, other.mask
        dn = b.bit_length() - 1
        q = 0
        while a and a.bit_length() - 1 >= dn:
            shift = a.bit_length() - 1 - dn
            q |= 1 << shift
            a ^= b << shift
        return BinaryPolynomial(q), BinaryPolynomial(a)

    def __mod__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return divmod(self, other)[0]

    def __pow__(self, k: int) -> "BinaryPolynomial":
        if k < 0:
            raise ValueError("exponent must be >= 0")
        result, base = BinaryPolynomial(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def parse(cls, text: str) -> "BinaryPolynomial":
        """Parse the text form (``x^5+x^4+1``, ``x``, ``1``, ``0``) or a ``0x`` hex mask."""
        s = "".join(text.split())
        if not s:
            raise ValueError("empty polynomial")
        if s[:2].lower() == "0x":
            try:
                return cls(int(s, 16))
            except ValueError:
                raise ValueError(f"bad hex polynomial mask {text!r}") from None
        if s == "0":
            return cls(0)
        mask = 0
        for term in s.split("+"):
            if term == "1":
                k = 0
            elif term == "x":
                k = 1
            elif term.startswith("x^"):
                try:
                    k = int(term[2:])
                except ValueError:
                    raise ValueError(f"bad polynomial term {term!r} in {text!r}") from None
                if k < 0:
                    raise ValueError(f"negative exponent in {text!r}")
            else:
                raise ValueError(f"bad polynomial term {term!r} in {text!r}")
            if (mask >> k) & 1:
                raise ValueError(f"duplicate term x^{k} in {text!r}")
            mask |= 1 << k
        return cls(mask)

    def __str__(self) -> str:
        if not self.mask:
            return "0"
        terms = []
        for k in range(self.mask.bit_length() - 1, -1, -1):
            if (self.mask >> k) & 1:
                terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"BinaryPolynomial({self})"


def poly_mul_mod(a: BinaryPolynomial, b: BinaryPolynomial, m: BinaryPolynomial) -> BinaryPolynomial:
    """(a * b) mod m over GF(2)[x]."""
    if m.degree is None or m.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    return (a * b) % m


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return tuple(factors)


def _powmod(base: BinaryPolynomial, k: int, m: BinaryPolynomial) -> BinaryPolynomial:
    result = BinaryPolynomial(1) % m
    base = base % m
    while k:
        if k & 1:
            result = (result * base) % m
        base = (base * base) % m
        k >>= 1
    return result


@lru_cache(maxsize=None)
def poly_is_primitive(p: BinaryPolynomial) -> bool:
    """True iff p is primitive over GF(2): irreducible with x of maximal order.

    Checking the order of x alone settles it: if x has order 2^L - 1 modulo p,
    the unit group of GF(2)[x]/(p) must contain all 2^L - 1 nonzero residues,
    which already forces p irreducible.
    """
    deg = p.degree
    if deg is None or deg < 1:
        raise ValueError("primitivity is defined for degree >= 1")
    if deg > FACTOR_DEGREE_CAP:
        raise UnsupportedSizeError(
            f"degree {deg} exceeds the factorization cap {FACTOR_DEGREE_CAP}"
        )
    if not p.mask & 1:  # x divides p
        return False
    order = (1 << deg) - 1
    x = BinaryPolynomial(2)
    if _powmod(x, order, p).mask != 1:
        return False
    return all(_powmod(x, order // q, p).mask != 1 for q in _prime_factors(order))


def mod_inverse(u: int, m: int) -> int:
    """The v in [1, m-1] with u*v = 1 (mod m)."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    try:
        return pow(u, -1, m)
    except ValueError:
        raise ValueError(f"{u} has no inverse modulo {m}") from None


@dataclass(frozen=True)
class CyclotomicCoset:
    """The orbit of an exponent under doubling modulo 2^A - 1."""

    leader: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.exponents:
            raise ValueError("a coset cannot be empty")
        if list(self.exponents) != sorted(set(self.exponents)):
            raise ValueError("exponents must be sorted and distinct")
        if self.leader != self.exponents[0] or self.leader < 0:
            raise ValueError("leader must be the smallest exponent")

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)


def cyclotomic_coset(n: int, a: int) -> CyclotomicCoset:
    """Coset {n * 2^k mod (2^a - 1)} collected until closure."""
    if a < 1:
        raise ValueError("field size exponent must be >= 1")
    m = (1 << a) - 1
    if not 0 <= n < m:
        raise ValueError(f"coset element must lie in [0, {m})")
    exps = set()
    e = n
    while e not in exps:
        exps.add(e)
        e = (e << 1) % m
    ordered = tuple(sorted(exps))
    return CyclotomicCoset(ordered[0], ordered)


@dataclass(frozen=True)
class FieldElement:
    """A residue in GF(2^A) = GF(2)[x] modulo a degree-A polynomial."""

    residue: BinaryPolynomial
    modulus: BinaryPolynomial

    def __post_init__(self) -> None:
        if self.modulus.degree is None or self.modulus.degree < 1:
            raise ValueError("field modulus must have degree >= 1")
        if self.residue.degree is not None and self.residue.degree >= self.modulus.degree:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    @classmethod
    def generator(cls, modulus: BinaryPolynomial) -> "FieldElement":
        """The class of x, a primitive element when the modulus is primitive."""
        return cls(BinaryPolynomial(2), modulus)

    @classmethod
    def one(cls, modulus: BinaryPolynomial) -> "FieldElement":
        return cls(BinaryPolynomial(1), modulus)

    @classmethod
    def zero(cls, modulus: BinaryPolynomial) -> "FieldElement":
        return cls(BinaryPolynomial(0), modulus)

    def _check_modulus(self, other: "FieldElement") -> None:
        if self.modulus != other.modulus:
            raise ValueError("field elements have different moduli")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check_modulus(other)
        return FieldElement(self.residue + other.residue, self.modulus)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check_modulus(other)
        return FieldElement((self.residue * other.residue) % self.modulus, self.modulus)

    def __pow__(self, k: int) -> "FieldElement":
        return field_pow(self, k)


def field_pow(e: FieldElement, k: int) -> FieldElement:
    """e^k by square-and-multiply; e^0 is the multiplicative identity."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    result = FieldElement.one(e.modulus)
    base = e
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def coset_min_poly(n: int, pa: BinaryPolynomial) -> BinaryPolynomial:
    """Minimal polynomial over GF(2) of alpha^n, alpha a root of primitive pa.

    Expands the product of (x + alpha^e) over the cyclotomic coset of n; the
    closure of the coset guarantees the product collapses into GF(2)[x].  The
    result is irreducible with degree equal to the coset size.
    """
    if not poly_is_primitive(pa):
        raise ValueError(f"{pa} is not primitive")
    a = pa.degree
    m = (1 << a) - 1
    if not 1 <= n < m:
        raise ValueError(f"exponent must lie in [1, {m})")
    alpha = FieldElement.generator(pa)
    zero = FieldElement.zero(pa)
    coeffs = [FieldElement.one(pa)]  # polynomial in GF(2^A)[x], index = power of x
    for e in cyclotomic_coset(n, a):
        root = field_pow(alpha, e)
        coeffs = [
            (coeffs[i - 1] if i > 0 else zero)
            + (coeffs[i] * root if i < len(coeffs) else zero)
            for i in range(len(coeffs) + 1)
        ]
    mask = 0
    for k, c in enumerate(coeffs):
        assert c.residue.mask in (0, 1), "coset product left GF(2)"
        mask |= c.residue.mask << k
    return BinaryPolynomial(mask)


def berlekamp_massey(bits: Iterable[int]) -> tuple[int, BinaryPolynomial]:
    """Minimal LFSR length and characteristic polynomial of a bit sequence.

    Returns (lc, conn) where conn = x^lc + c_{lc-1} x^{lc-1} + ... + c_0 and
    the recurrence b[k+lc] = sum_i c_i * b[k+i] regenerates the input.  The
    all-zero sequence gives (0, 1).
    """
    c, b = 1, 1  # feedback masks, bit i = coefficient of x^i
    lc, m = 0, -1
    window = 0  # bit i = input bit n - i
    for n, s in enumerate(bits):
        s = int(s)
        if s not in (0, 1):
            raise ValueError("sequence bits must be 0 or 1")
        window = (window << 1) | s
        if (c & window).bit_count() & 1:  # discrepancy
            t = c
            c ^= b << (n - m)
            if 2 * lc <= n:
                lc, m, b = n + 1 - lc, n, t
    mask = 0
    for i in range(lc + 1):
        if (c >> i) & 1:
            mask |= 1 << (lc - i)
    return lc, BinaryPolynomial(mask)
