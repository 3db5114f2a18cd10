"""Exact arithmetic in the ring of integers of the 2d-th cyclotomic field.

Every amplitude produced by the generator matrices and their eigenvectors is
an integer power of tau = exp(i*pi/d), the primitive 2d-th root of unity
(tau**2 = q = exp(2i*pi/d); half-integer powers of q are therefore integer
powers of tau).  A sum of such amplitudes is an integer coefficient vector
indexed by tau**0 .. tau**(2d-1), and identities between sums can be decided
with integer arithmetic alone once the vectors are put in canonical form.

Canonical reduction uses exactly two relations:

* tau**d = -1, which folds exponents d..2d-1 into 0..d-1 with a sign flip;
* for odd prime d, 1 + zeta + ... + zeta**(d-1) = 0 with zeta = tau**2 a
  primitive d-th root, which removes the one remaining redundancy.  In the
  tau-folded coordinates this relation reads sum_k (-1)**k tau**k = 0, and
  eliminating it zeroes the coefficient that carries zeta**(d-1).

After both folds the representation is a free Z-module of rank phi(2d), so
equality is component-wise comparison.  For d = 2 the tau-fold alone is
canonical (Z[i]).  For non-prime d only the tau-fold applies, canonical
forms are not unique, and equality testing falls back to numeric comparison
at NUMERIC_EQ_TOL.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

#: Default tolerance for pass/fail numeric verification.
DEFAULT_TOL = 1e-10
#: Default tolerance for internal consistency checks (exact vs float shadow).
INTERNAL_TOL = 1e-12
#: Tolerance used when exact equality is unavailable (non-prime d).
NUMERIC_EQ_TOL = 1e-10


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _phase_table(modulus: int) -> np.ndarray:
    """Unit phases exp(2i*pi*k/modulus) for k = 0..modulus-1, read-only.

    Quarter-circle entries are exactly 1, i, -1, -i; all numeric phases in
    the package come from this table, so those values stay float-clean.
    """
    table = np.exp(2j * np.pi * np.arange(modulus) / modulus)
    cardinal = {0: 1, 1: 1j, 2: -1, 3: -1j}
    for k in range(modulus):
        quarters, rem = divmod(4 * k, modulus)
        if rem == 0:
            table[k] = cardinal[quarters]
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class PhaseExponent:
    """An integer residue k mod 2d standing for the phase tau**k.

    modulus is always 2d (even).  Addition and negation are the mod-2d
    group operations; conj negates the exponent.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 0 or self.modulus % 2 != 0:
            raise ValueError(f"modulus must be a positive even integer, got {self.modulus}")
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _check(self, other: "PhaseExponent") -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: "PhaseExponent") -> "PhaseExponent":
        self._check(other)
        return PhaseExponent(self.value + other.value, self.modulus)

    def __sub__(self, other: "PhaseExponent") -> "PhaseExponent":
        self._check(other)
        return PhaseExponent(self.value - other.value, self.modulus)

    def __neg__(self) -> "PhaseExponent":
        return PhaseExponent(-self.value, self.modulus)

    def conj(self) -> "PhaseExponent":
        return -self

    def evaluate(self) -> complex:
        return complex(_phase_table(self.modulus)[self.value])


def _fold_tau(raw: np.ndarray) -> np.ndarray:
    """Fold tau**k = -tau**(k-d) on the last axis (length 2d -> 2d, top half 0)."""
    two_d = raw.shape[-1]
    d = two_d // 2
    out = np.zeros_like(raw)
    out[..., :d] = raw[..., :d] - raw[..., d:]
    return out

@lru_cache(maxsize=None)
def _alt_signs(d: int) -> np.ndarray:
    signs = np.where(np.arange(d) % 2 == 0, 1, -1).astype(np.int64)
    signs.setflags(write=False)
    return signs


def _fold_prime(folded: np.ndarray, d: int) -> np.ndarray:
    """Remove the root-of-unity-sum redundancy for odd prime d.

    Input must already be tau-folded.  Subtracting the right multiple of
    sum_k (-1)**k tau**k zeroes the coefficient at exponent d-2, which is
    where zeta**(d-1) lives after the tau-fold.
    """
    pivot = folded[..., d - 2 : d - 1]
    out = folded.copy()
    out[..., :d] += pivot * _alt_signs(d)
    return out


def canonicalize_coeffs(raw: np.ndarray, d: int) -> np.ndarray:
    """Canonical form of coefficient arrays over tau exponents (last axis 2d)."""
    if raw.shape[-1] != 2 * d:
        raise ValueError(f"coefficient axis must have length {2 * d}, got {raw.shape[-1]}")
    out = _fold_tau(raw)
    if d > 2 and is_prime(d):
        out = _fold_prime(out, d)
    return out


class CyclotomicSum:
    """An integer combination of powers of tau = exp(i*pi/dim), kept canonical.

    coeffs has length 2*dim; after construction the invariants hold:
    coefficients at exponents >= dim are zero, and for odd prime dim the
    coefficient at exponent dim-2 is zero as well.
    """

    __slots__ = ("dim", "coeffs")

    def __init__(self, coeffs, dim: int):
        if dim < 2:
            raise ValueError(f"dim must be >= 2, got {dim}")
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim != 1 or arr.shape[0] != 2 * dim:
            raise ValueError(f"expected {2 * dim} coefficients for dim {dim}, got shape {arr.shape}")
        arr = canonicalize_coeffs(arr, dim)
        arr.setflags(write=False)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicSum is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "CyclotomicSum":
        return cls(np.zeros(2 * dim, dtype=np.int64), dim)

    @classmethod
    def integer(cls, n: int, dim: int) -> "CyclotomicSum":
        raw = np.zeros(2 * dim, dtype=np.int64)
        raw[0] = n
        return cls(raw, dim)

    @classmethod
    def one(cls, dim: int) -> "CyclotomicSum":
        return cls.integer(1, dim)

    @classmethod
    def phase(cls, exponent: int, dim: int) -> "CyclotomicSum":
        raw = np.zeros(2 * dim, dtype=np.int64)
        raw[exponent % (2 * dim)] = 1
        return cls(raw, dim)

    @classmethod
    def from_exponent_counts(cls, exponents, dim: int) -> "CyclotomicSum":
        """Sum of tau**e over a sequence of exponents (duplicates add up)."""
        exps = np.asarray(exponents, dtype=np.int64) % (2 * dim)
        return cls(np.bincount(exps, minlength=2 * dim), dim)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        self._check(other)
        return CyclotomicSum(self.coeffs + other.coeffs, self.dim)

    def __sub__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        self._check(other)
        return CyclotomicSum(self.coeffs - other.coeffs, self.dim)

    def __neg__(self) -> "CyclotomicSum":
        return CyclotomicSum(-self.coeffs, self.dim)

    def __mul__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        """Exponent-index cyclic convolution followed by reduction."""
        self._check(other)
        two_d = 2 * self.dim
        prod = np.zeros(two_d, dtype=np.int64)
        for k in np.nonzero(self.coeffs)[0]:
            prod += self.coeffs[k] * np.roll(other.coeffs, k)
        return CyclotomicSum(prod, self.dim)

    def conj(self) -> "CyclotomicSum":
        """Complex conjugation: negate every exponent mod 2d."""
        two_d = 2 * self.dim
        idx = (-np.arange(two_d)) % two_d
        return CyclotomicSum(self.coeffs[idx], self.dim)

    def abs_squared(self) -> "CyclotomicSum":
        return self * self.conj()

    # -- queries ------------------------------------------------------------

    def evaluate(self) -> complex:
        return complex(self.coeffs @ _phase_table(2 * self.dim))

    def is_zero(self) -> bool:
        if is_prime(self.dim):
            return not self.coeffs.any()
        return abs(self.evaluate()) < NUMERIC_EQ_TOL

    def as_int(self) -> int | None:
        """The rational integer this sum equals, or None if it is not one."""
        if is_prime(self.dim):
            if self.coeffs[1:].any():
                return None
            return int(self.coeffs[0])
        val = self.evaluate()
        nearest = round(val.real)
        if abs(val - nearest) < NUMERIC_EQ_TOL:
            return int(nearest)
        return None

    def _check(self, other: "CyclotomicSum") -> None:
        if not isinstance(other, CyclotomicSum) or other.dim != self.dim:
            raise ValueError("dimension mismatch between CyclotomicSum operands")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = CyclotomicSum.integer(int(other), self.dim)
        if not isinstance(other, CyclotomicSum) or other.dim != self.dim:
            return False
        if is_prime(self.dim):
            return bool(np.array_equal(self.coeffs, other.coeffs))
        # Non-prime d: canonical forms are not unique, compare numerically.
        return abs(self.evaluate() - other.evaluate()) < NUMERIC_EQ_TOL

    __hash__ = None

    def __repr__(self) -> str:
        terms = [f"{c}*tau^{k}" for k, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"CyclotomicSum({body}; dim={self.dim})"


def reduce(raw, d: int) -> CyclotomicSum:
    """Canonicalize a raw length-2d integer coefficient sequence."""
    return CyclotomicSum(raw, d)


def evaluate(x: CyclotomicSum) -> complex:
    """Floating-point value sum_k coeffs[k] * exp(i*pi*k/d)."""
    return x.evaluate()


def abs_squared_exact(x: CyclotomicSum) -> CyclotomicSum:
    """x * conj(x) in canonical form; an integer iff |x|^2 is an integer."""
    return x.abs_squared()
