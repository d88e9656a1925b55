"""Genericity probe: reject parameters whose denominators can vanish.

Every denominator factor in the package has the form 1 - v*q^j for some
base value v built from the parameters, with j running over an
identity-specific integer range, or is a plain difference such as
z_j - z_k.  A factor can only be small when |v*q^j| is near 1, which
confines the integer exponents to a short window; the probe scans that
window and raises SingularParameter when any factor falls below the
genericity margin.

Entries are created by :func:`orbit` (with an optional one-sided or
two-sided exponent range) and :func:`nonzero` for plain values.  The
ranges matter: a numerator base sitting exactly on a non-negative power
of q is a legitimate terminating configuration and must not be
rejected, so evaluator modules only list the exponent ranges their
denominators actually invert.
"""

from __future__ import annotations

import math

from ..errors import SingularParameter

_WINDOW_LO = 0.4
_WINDOW_HI = 2.5


def orbit(label, value, jlo=None, jhi=None):
    """Require |1 - value*q^j| >= margin for all j in [jlo, jhi]."""
    return ("orbit", label, value, jlo, jhi)


def nonzero(label, value):
    """Require |value| >= margin."""
    return ("value", label, value, None, None)


def check_generic(entries, ctx):
    """Scan probe entries, raising SingularParameter on the first hit."""
    margin = ctx.genericity_margin
    lnq = math.log(ctx.abs_q)
    for kind, label, value, jlo, jhi in entries:
        v = ctx.mag(value)
        if kind == "value":
            if v < margin:
                raise SingularParameter(f"{label} = {value} is below the genericity margin")
            continue
        if v == 0:
            raise SingularParameter(f"{label} vanishes")
        if not math.isfinite(v):
            continue
        lo = (math.log(_WINDOW_LO) - math.log(v)) / lnq
        hi = (math.log(_WINDOW_HI) - math.log(v)) / lnq
        lo, hi = min(lo, hi), max(lo, hi)
        start = math.floor(lo) - 1
        stop = math.ceil(hi) + 1
        if jlo is not None:
            start = max(start, jlo)
        if jhi is not None:
            stop = min(stop, jhi)
        sval = ctx.scalar(value)
        for j in range(start, stop + 1):
            if ctx.mag(ctx.one - sval * ctx.qpow(j)) < margin:
                raise SingularParameter(
                    f"{label} = {value} collides with q^{j} within the genericity margin")
