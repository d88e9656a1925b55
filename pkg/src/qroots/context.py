"""Evaluation context: base q, arithmetic mode, precision and tolerances.

Two arithmetic modes are supported.  Exact mode works over
``fractions.Fraction`` (real rationals) and gives zero-tolerance results
for terminating sums.  Float mode works over complex numbers from a
private mpmath context carrying ``digits`` significant decimal digits
plus guard digits, so two contexts with different precision never
interfere.

A context is immutable after construction; the only internal mutation is
a benign memo of integer powers of q, so sharing a context between
threads is safe.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .errors import UnsupportedMode

EXACT = "exact"
FLOAT = "float"

_GUARD_DIGITS = 15


def _fraction_from(x):
    """Coerce x to Fraction, rejecting anything with an imaginary part."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise UnsupportedMode("boolean is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, complex):
        if x.imag != 0:
            raise UnsupportedMode("exact mode supports real rationals only")
        return Fraction(x.real)
    if isinstance(x, (tuple, list)) and len(x) == 2:
        re, im = (_fraction_from(x[0]), _fraction_from(x[1]))
        if im != 0:
            raise UnsupportedMode("exact mode supports real rationals only")
        return re
    raise UnsupportedMode(f"cannot coerce {type(x).__name__} to a rational")


class EvalContext:
    """Fixed base q with precision, truncation and genericity policy.

    Parameters
    ----------
    q : scalar
        The base, 0 < |q| < 1 strictly.  Rational (real) in exact mode;
        any complex value inside the unit disc in float mode.
    mode : {"exact", "float"}
    digits : int
        Working decimal precision in float mode (>= 15).
    inf_tail_tol : float, optional
        Relative truncation tolerance for infinite products and bilateral
        tails.  Must not exceed 10**(-digits/2); that bound is the default.
    max_shell : int
        Radius cap for bilateral shell summation.
    genericity_margin : float, optional
        Minimum allowed modulus of a denominator factor.  Defaults to
        10**(-digits/2), separating true singularities from roundoff.
    convergence_limit : float
        Safety factor applied to convergence-modulus preconditions;
        moduli above this limit are rejected as too close to the boundary.
    """

    def __init__(self, q, mode=FLOAT, digits=50, inf_tail_tol=None,
                 max_shell=60, genericity_margin=None, convergence_limit=0.9):
        if mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown arithmetic mode {mode!r}")
        digits = int(digits)
        if digits < 15:
            raise ValueError("digits must be at least 15")
        self.mode = mode
        self.digits = digits
        if genericity_margin is None:
            genericity_margin = 10.0 ** (-digits / 2)
        if genericity_margin <= 0:
            raise ValueError("genericity_margin must be positive")
        self.genericity_margin = float(genericity_margin)
        if inf_tail_tol is None:
            inf_tail_tol = 10.0 ** (-digits / 2)
        inf_tail_tol = float(inf_tail_tol)
        if not 0 < inf_tail_tol <= 10.0 ** (-digits / 2) * 1.0000001:
            raise ValueError("inf_tail_tol must be in (0, 10**(-digits/2)]")
        self.inf_tail_tol = inf_tail_tol
        self.max_shell = int(max_shell)
        if self.max_shell < 2:
            raise ValueError("max_shell must be at least 2")
        self.convergence_limit = float(convergence_limit)
        if not 0 < self.convergence_limit < 1:
            raise ValueError("convergence_limit must lie in (0, 1)")

        if mode == EXACT:
            self._mp = None
        else:
            ctx = mpmath.ctx_mp.MPContext()
            ctx.dps = digits + _GUARD_DIGITS
            self._mp = ctx

        self.q = self.scalar(q)
        self.abs_q = self.mag(self.q)
        if not 0 < self.abs_q < 1:
            raise ValueError("q must satisfy 0 < |q| < 1 strictly")
        self._qpow = {0: self.one}

    # -- scalar construction ------------------------------------------------

    @property
    def is_exact(self):
        return self.mode == EXACT

    @property
    def one(self):
        return Fraction(1) if self.is_exact else self._mp.mpf(1)

    @property
    def zero(self):
        return Fraction(0) if self.is_exact else self._mp.mpf(0)

    def scalar(self, x):
        """Coerce x into the active mode's scalar type.

        Accepts ints, floats, Fractions, strings ("3/7", "0.25"),
        complex values and [re, im] pairs of any of these.
        """
        if self.is_exact:
            return _fraction_from(x)
        mp = self._mp
        if isinstance(x, (mp.mpf, mp.mpc)):
            return x
        if isinstance(x, (tuple, list)) and len(x) == 2:
            return mp.mpc(self._real(x[0]), self._real(x[1]))
        if isinstance(x, complex):
            return mp.mpc(x.real, x.imag)
        return self._real(x)

    def _real(self, x):
        mp = self._mp
        if isinstance(x, mp.mpf):
            return x
        if isinstance(x, Fraction):
            return mp.mpf(x.numerator) / mp.mpf(x.denominator)
        if isinstance(x, str):
            if "/" in x:
                f = Fraction(x)
                return mp.mpf(f.numerator) / mp.mpf(f.denominator)
            return mp.mpf(x)
        if isinstance(x, (int, float)):
            return mp.mpf(x)
        raise UnsupportedMode(f"cannot coerce {type(x).__name__} to a float scalar")

    # -- arithmetic helpers --------------------------------------------------

    def qpow(self, k):
        """q**k for integer k, memoized in both directions."""
        k = int(k)
        memo = self._qpow
        got = memo.get(k)
        if got is not None:
            return got
        val = self.q ** k
        memo[k] = val
        return val

    def mag(self, x):
        """|x| as a Python float (inf on overflow); tolerance plumbing only."""
        a = abs(x)
        try:
            return float(a)
        except OverflowError:
            return math.inf

    def is_zero(self, x):
        """True when x vanishes: exactly in exact mode, sub-margin in float."""
        if self.is_exact:
            return x == 0
        return self.mag(x) < self.genericity_margin

    def classify(self, x):
        """Split a factor into (value-to-multiply, zero-count)."""
        if self.is_zero(x):
            return self.one, 1
        return x, 0

    def sqrt(self, x):
        """Principal square root; exact mode requires a perfect square."""
        if not self.is_exact:
            return self._mp.sqrt(self.scalar(x))
        x = self.scalar(x)
        if x < 0:
            raise UnsupportedMode("exact mode has no square root of a negative rational")
        rn = math.isqrt(x.numerator)
        rd = math.isqrt(x.denominator)
        if rn * rn != x.numerator or rd * rd != x.denominator:
            raise UnsupportedMode(f"{x} is not a perfect rational square")
        return Fraction(rn, rd)

    # -- serialization -------------------------------------------------------

    def re_im(self, x):
        if self.is_exact:
            return x, Fraction(0)
        x = self.scalar(x)
        if isinstance(x, self._mp.mpc):
            return x.real, x.imag
        return x, self._mp.mpf(0)

    def format_scalar(self, x):
        """Serialize a scalar as a [re, im] pair of strings."""
        re, im = self.re_im(x)
        if self.is_exact:
            return [str(re), str(im)]
        n = self.digits + 3
        return [mpmath.nstr(re, n), mpmath.nstr(im, n)]

    def __repr__(self):
        return (f"EvalContext(q={self.format_scalar(self.q)}, mode={self.mode!r}, "
                f"digits={self.digits})")
