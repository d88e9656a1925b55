"""q-shifted factorials and the product/sum primitives built on them.

The shifted factorial here always uses the fixed base q of the ambient
context:

    (a; k) = (1 - a)(1 - a q) ... (1 - a q^(k-1))          for k >= 0,
    (a; k) = 1 / [(1 - a/q)(1 - a/q^2) ... (1 - a q^k)]    for k < 0,

with the empty product equal to 1, plus the infinite product
(a; oo) = prod_{j>=0} (1 - a q^j) in float mode.

All functions are pure in (inputs, ctx).  ``PochSeq`` is an incremental
cache over the same factor recurrences for summation loops that walk k
up and down; it additionally tracks factors that vanish so callers can
distinguish an exactly-zero product from a singular reciprocal.
"""

from __future__ import annotations

import math

from .errors import SingularParameter, UnsupportedMode


def qpoch(a, k, ctx):
    """The q-shifted factorial (a)_k, both index signs.

    Raises SingularParameter when k < 0 and a reciprocal factor
    vanishes (is sub-margin in float mode).
    """
    a = ctx.scalar(a)
    k = int(k)
    if k >= 0:
        out = ctx.one
        for j in range(k):
            out = out * (ctx.one - a * ctx.qpow(j))
        return out
    den = ctx.one
    for j in range(1, -k + 1):
        f = ctx.one - a * ctx.qpow(-j)
        if ctx.is_zero(f):
            raise SingularParameter(
                f"(a)_k with k={k}: factor 1 - a*q^-{j} vanishes for a={a}")
        den = den * f
    return ctx.one / den


def qpoch_multi(bases, k, ctx):
    """Product of qpoch over a list of bases; empty list gives 1."""
    out = ctx.one
    for a in bases:
        out = out * qpoch(a, k, ctx)
    return out


def _inf_factor_count(a, ctx):
    """Truncation index J with relative tail below inf_tail_tol.

    The dropped factors satisfy |log prod_{j>=J} (1-a q^j)| <=
    2|a||q|^J/(1-|q|) once the terms are below 1/2, so J is chosen from
    that geometric bound.  Deterministic for given (a, ctx).
    """
    mag_a = ctx.mag(a)
    if mag_a == 0:
        return 0
    absq = ctx.abs_q
    target = min(ctx.inf_tail_tol / 8.0, 0.125)
    bound = mag_a / (1.0 - absq)
    if bound <= target:
        return 0
    return max(0, math.ceil(math.log(target / bound) / math.log(absq))) + 1


def qpoch_inf_raw(a, ctx):
    """(a)_oo as (product of non-vanishing factors, count of vanishing ones)."""
    if ctx.is_exact:
        raise UnsupportedMode("infinite products require float mode")
    a = ctx.scalar(a)
    out = ctx.one
    zeros = 0
    aqj = a
    for _ in range(_inf_factor_count(a, ctx)):
        f, z = ctx.classify(ctx.one - aqj)
        out = out * f
        zeros += z
        aqj = aqj * ctx.q
    return out, zeros


def qpoch_inf(a, ctx):
    """The infinite product (a)_oo, truncated to the context tolerance."""
    value, zeros = qpoch_inf_raw(a, ctx)
    return ctx.zero if zeros else value


def qpoch_inf_multi(bases, ctx):
    out = ctx.one
    for a in bases:
        out = out * qpoch_inf(a, ctx)
    return out


class PochSeq:
    """Incrementally extended (a)_k over a range of integer k.

    ``raw(k)`` returns ``(value, zeros, recip)`` where the factors of the
    branch product that vanished (exactly, or below the genericity margin
    in float mode) are excluded from ``value`` and counted in ``zeros``,
    and ``recip`` marks the k < 0 branch whose product sits under a 1.
    Instances memoize prefix products and are cheap to query repeatedly;
    they are not safe for concurrent extension.
    """

    __slots__ = ("_a", "_ctx", "_up", "_dn")

    def __init__(self, a, ctx):
        self._a = ctx.scalar(a)
        self._ctx = ctx
        self._up = [(ctx.one, 0)]
        self._dn = [(ctx.one, 0)]

    def raw(self, k):
        k = int(k)
        if k >= 0:
            up = self._up
            while len(up) <= k:
                j = len(up) - 1
                f, z = self._ctx.classify(self._ctx.one - self._a * self._ctx.qpow(j))
                prev_v, prev_z = up[-1]
                up.append((prev_v * f, prev_z + z))
            v, z = up[k]
            return v, z, False
        dn = self._dn
        depth = -k
        while len(dn) <= depth:
            j = len(dn)
            f, z = self._ctx.classify(self._ctx.one - self._a * self._ctx.qpow(-j))
            prev_v, prev_z = dn[-1]
            dn.append((prev_v * f, prev_z + z))
        v, z = dn[depth]
        return v, z, True

    def value(self, k):
        """(a)_k with the same error contract as :func:`qpoch`."""
        v, zeros, recip = self.raw(k)
        if recip:
            if zeros:
                raise SingularParameter(
                    f"(a)_k with k={k}: reciprocal factor vanishes for a={self._a}")
            return self._ctx.one / v
        return self._ctx.zero if zeros else v


def capital_product(values):
    """Product of the coordinates; empty vector gives 1."""
    out = 1
    for v in values:
        out = out * v
    return out


def index_sum(indices):
    """Sum of integer indices; empty vector gives 0."""
    return sum(int(v) for v in indices)
