"""Weyl-denominator and Vandermonde factors for C_n and A_n series.

The C_n Weyl denominator is

    W(z) = prod_{1<=j<=k<=n} (1 - z_j z_k) * prod_{1<=j<k<=n} (z_j - z_k),

and series summands carry the shifted ratio W(z q^y)/W(z), evaluated
factor by factor (never as a quotient of two W values) to stay
cancellation-free for large |y|:

    prod_{j<=k} (1 - z_j z_k q^(y_j+y_k))/(1 - z_j z_k)
      * prod_{j<k} (q^(y_j) z_j - q^(y_k) z_k)/(z_j - z_k).

The A_n analogue keeps only the alternating j < k part.

``pair_scale`` evaluates the ratio for base points s*z with s^2 =
pair_scale without ever forming s: the common scale cancels in the
difference factors and enters the pair products squared.  That is how
the W(q^(-1/2) c q^x)/W(q^(-1/2) c) and W(sqrt(aq) q^x / f) factors are
computed exactly in rational mode.
"""

from __future__ import annotations

from .errors import SingularParameter


def weyl_c(z):
    """W(z) itself; zeros are legitimate values here.  Empty vector -> 1."""
    n = len(z)
    out = 1
    for j in range(n):
        for k in range(j, n):
            out = out * (1 - z[j] * z[k])
    for j in range(n):
        for k in range(j + 1, n):
            out = out * (z[j] - z[k])
    return out


def scale_points(z, y, ctx):
    """Componentwise shift z o q^y, the base points of W(z q^y)."""
    return tuple(ctx.scalar(zj) * ctx.qpow(yj) for zj, yj in zip(z, y))


def weyl_c_ratio_raw(z, y, ctx, pair_scale=None):
    """W(s z q^y)/W(s z) split as (num, num_zeros, den, den_zeros).

    Vanishing factors (within the genericity margin) are excluded from
    the products and counted, so callers can fold the ratio into a larger
    numerator/denominator bookkeeping.  s^2 = pair_scale (default 1).
    """
    n = len(z)
    if len(y) != n:
        raise ValueError("z and y must have the same length")
    z = [ctx.scalar(v) for v in z]
    s2 = ctx.one if pair_scale is None else ctx.scalar(pair_scale)
    num = ctx.one
    den = ctx.one
    num_zeros = 0
    den_zeros = 0
    for j in range(n):
        for k in range(j, n):
            zz = s2 * z[j] * z[k]
            f, zc = ctx.classify(ctx.one - zz * ctx.qpow(y[j] + y[k]))
            num, num_zeros = num * f, num_zeros + zc
            f, zc = ctx.classify(ctx.one - zz)
            den, den_zeros = den * f, den_zeros + zc
    for j in range(n):
        for k in range(j + 1, n):
            f, zc = ctx.classify(ctx.qpow(y[j]) * z[j] - ctx.qpow(y[k]) * z[k])
            num, num_zeros = num * f, num_zeros + zc
            f, zc = ctx.classify(z[j] - z[k])
            den, den_zeros = den * f, den_zeros + zc
    return num, num_zeros, den, den_zeros


def weyl_c_ratio(z, y, ctx, pair_scale=None):
    """The displayed double product for W(z q^y)/W(z); 1 when y = 0."""
    num, num_zeros, den, den_zeros = weyl_c_ratio_raw(z, y, ctx, pair_scale)
    if den_zeros:
        raise SingularParameter(f"W(z) factor below genericity margin for z={z}")
    if num_zeros:
        return ctx.zero
    return num / den


def delta_a_ratio_raw(z, y, ctx):
    """Delta(z q^y)/Delta(z) split as (num, num_zeros, den, den_zeros)."""
    n = len(z)
    if len(y) != n:
        raise ValueError("z and y must have the same length")
    z = [ctx.scalar(v) for v in z]
    num = ctx.one
    den = ctx.one
    num_zeros = 0
    den_zeros = 0
    for j in range(n):
        for k in range(j + 1, n):
            f, zc = ctx.classify(ctx.qpow(y[j]) * z[j] - ctx.qpow(y[k]) * z[k])
            num, num_zeros = num * f, num_zeros + zc
            f, zc = ctx.classify(z[j] - z[k])
            den, den_zeros = den * f, den_zeros + zc
    return num, num_zeros, den, den_zeros


def delta_a_ratio(z, y, ctx):
    """The alternating ratio characterizing A_n series; 1 when y = 0."""
    num, num_zeros, den, den_zeros = delta_a_ratio_raw(z, y, ctx)
    if den_zeros:
        raise SingularParameter(f"Vandermonde factor below genericity margin for z={z}")
    if num_zeros:
        return ctx.zero
    return num / den
