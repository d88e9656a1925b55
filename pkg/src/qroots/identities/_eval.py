"""Numerator/denominator bookkeeping for series summands.

Every summand in this package is a product of q-shifted factorials,
Weyl-ratio factors and an integer power of a fixed base.  A ``Ratio``
accumulates these as one numerator and one denominator while tracking
factors that vanish (exactly, or below the genericity margin in float
mode).  The distinction matters:

  * a vanished numerator factor makes the term exactly zero, which is
    how terminating and half-space supports emerge from the bilateral
    engines without special-casing;
  * a vanished denominator factor means the parameter point is singular
    and the whole evaluation must fail, never silently produce a number.

Integer powers of a generic base go in via ``scale`` unclassified, since
a legitimately tiny t**|y| must not be confused with a vanishing factor.
"""

from __future__ import annotations

from ..errors import SingularParameter
from ..qarith import PochSeq, qpoch_inf_raw
from ..rootsys import delta_a_ratio_raw, weyl_c_ratio_raw


class Ratio:
    __slots__ = ("_ctx", "_num", "_den", "_num_zeros", "_den_zeros")

    def __init__(self, ctx):
        self._ctx = ctx
        self._num = ctx.one
        self._den = ctx.one
        self._num_zeros = 0
        self._den_zeros = 0

    # -- raw product entry points --------------------------------------------

    def scale(self, value):
        """Multiply by a nonzero-by-construction value (powers, constants)."""
        self._num = self._num * value

    def power(self, base, exponent):
        self._num = self._num * base ** int(exponent)

    def num_product(self, value, zeros=0):
        self._num = self._num * value
        self._num_zeros += zeros

    def den_product(self, value, zeros=0):
        self._den = self._den * value
        self._den_zeros += zeros

    def num_factor(self, value):
        v, z = self._ctx.classify(value)
        self.num_product(v, z)

    def den_factor(self, value):
        v, z = self._ctx.classify(value)
        self.den_product(v, z)

    # -- q-shifted factorials --------------------------------------------------

    def poch(self, seq: PochSeq, k):
        """A numerator occurrence of (a)_k."""
        v, z, recip = seq.raw(k)
        if recip:
            self.den_product(v, z)
        else:
            self.num_product(v, z)

    def poch_inv(self, seq: PochSeq, k):
        """A denominator occurrence of (a)_k."""
        v, z, recip = seq.raw(k)
        if recip:
            self.num_product(v, z)
        else:
            self.den_product(v, z)

    def poch_value(self, base, k):
        self.poch(PochSeq(base, self._ctx), k)

    def poch_value_inv(self, base, k):
        self.poch_inv(PochSeq(base, self._ctx), k)

    def inf(self, base):
        """A numerator occurrence of (base)_oo."""
        v, z = qpoch_inf_raw(base, self._ctx)
        self.num_product(v, z)

    def inf_inv(self, base):
        v, z = qpoch_inf_raw(base, self._ctx)
        self.den_product(v, z)

    # -- root-system ratios -----------------------------------------------------

    def weyl(self, z, y, pair_scale=None):
        num, nz, den, dz = weyl_c_ratio_raw(z, y, self._ctx, pair_scale)
        self.num_product(num, nz)
        self.den_product(den, dz)

    def delta(self, z, y):
        num, nz, den, dz = delta_a_ratio_raw(z, y, self._ctx)
        self.num_product(num, nz)
        self.den_product(den, dz)

    # -- result -------------------------------------------------------------------

    def value(self):
        if self._den_zeros:
            raise SingularParameter("denominator factor vanished during evaluation")
        if self._num_zeros:
            return self._ctx.zero
        return self._num / self._den
