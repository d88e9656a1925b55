"""Generic summation engines: finite boxes and adaptive bilateral sums.

Bilateral sums over Z^n are accumulated over sup-norm shells
max_j |y_j| = R in increasing R, each shell in lexicographic order, so a
rerun in a fixed mode and precision is bit-identical.  The sum stops
once the last two shells each contribute below ``inf_tail_tol`` relative
to the running scale and the geometric extrapolation of the shell decay
is below the same tolerance; failing that by ``max_shell`` raises
NoConvergence.  The engines only enforce eventual shell decay; callers
are responsible for checking an identity's convergence modulus first.

Term functions must be pure; they either return a value or raise
SingularParameter, which the engines re-raise with the offending lattice
point attached.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .errors import NoConvergence, SingularParameter


@dataclass(frozen=True)
class SeriesResult:
    """Value of a series together with how it was obtained.

    ``tail_estimate`` is relative to the scale of the sum (0.0 for exact
    finite sums), ``radius_used`` the last shell or largest box edge.
    """
    value: object
    radius_used: int
    tail_estimate: float
    terms_evaluated: int

    def scaled(self, factor):
        """The same result with the value multiplied by an exact prefactor."""
        return SeriesResult(self.value * factor, self.radius_used,
                            self.tail_estimate, self.terms_evaluated)


@dataclass(frozen=True)
class TermFunction:
    """A deterministic map from lattice points to scalars, with its dimension."""
    fn: Callable
    n: int

    def __call__(self, point):
        return self.fn(point)


def _call_term(f, point):
    try:
        return f(point)
    except SingularParameter as exc:
        if exc.point is None:
            exc.point = tuple(point)
        raise


def finite_box_sum(m, f, ctx):
    """Exact sum of f over the box 0 <= x_j <= m_j, lexicographic order."""
    m = tuple(int(v) for v in m)
    if any(v < 0 for v in m):
        raise ValueError("box bounds must be non-negative")
    if f.n != len(m):
        raise ValueError("box bounds and term function dimension disagree")
    total = ctx.zero
    count = 0
    for point in itertools.product(*(range(v + 1) for v in m)):
        total = total + _call_term(f, point)
        count += 1
    radius = max(m) if m else 0
    return SeriesResult(total, radius, 0.0, count)


def shell_points(n, radius):
    """Lexicographic points of Z^n with sup-norm exactly ``radius``."""
    if n == 0:
        if radius == 0:
            yield ()
        return
    for first in range(-radius, radius + 1):
        rest_needs_extreme = abs(first) < radius
        if n == 1:
            if not rest_needs_extreme:
                yield (first,)
            continue
        if rest_needs_extreme:
            for rest in shell_points(n - 1, radius):
                yield (first,) + rest
        else:
            for rest in itertools.product(range(-radius, radius + 1), repeat=n - 1):
                yield (first,) + rest


def hyperplane_shell_points(n, radius):
    """Points of the zero-sum hyperplane with sup-norm exactly ``radius``."""
    if n == 1:
        if radius == 0:
            yield (0,)
        return
    for head in itertools.product(range(-radius, radius + 1), repeat=n - 1):
        last = -sum(head)
        if abs(last) > radius:
            continue
        if max(abs(last), *(abs(h) for h in head)) != radius:
            continue
        yield head + (last,)


def _shell_sum(n, f, ctx, shells, min_radius):
    """Shared accumulation loop for bilateral and hyperplane sums."""
    total = ctx.zero
    count = 0
    scale = 0.0
    shell_mags = []
    for radius in range(ctx.max_shell + 1):
        shell_total = ctx.zero
        shell_mag = 0.0
        for point in shells(n, radius):
            term = _call_term(f, point)
            shell_total = shell_total + term
            shell_mag += ctx.mag(term)
            count += 1
        total = total + shell_total
        shell_mags.append(shell_mag)
        scale = max(scale, shell_mag, ctx.mag(total))
        if radius < max(2, min_radius):
            continue
        threshold = ctx.inf_tail_tol * scale
        last, prev = shell_mags[-1], shell_mags[-2]
        if last > threshold or prev > threshold:
            continue
        if prev > 0 and last > 0:
            ratio = last / prev
            tail = last * ratio / (1.0 - ratio) if ratio < 1.0 else last * 3.0
        else:
            tail = last
        tail_rel = tail / scale if scale > 0 else 0.0
        if tail_rel <= ctx.inf_tail_tol:
            return SeriesResult(total, radius, tail_rel, count)
    raise NoConvergence(
        f"shell contributions did not decay below tolerance by radius {ctx.max_shell}",
        radius=ctx.max_shell)


def bilateral_sum(n, f, ctx, min_radius=0):
    """Adaptively truncated sum of f over all of Z^n."""
    if f.n != n:
        raise ValueError("term function dimension disagrees with n")
    return _shell_sum(n, f, ctx, shell_points, min_radius)


def hyperplane_sum(n, f, ctx, min_radius=0):
    """Adaptively truncated sum of f over y in Z^n with y_1+...+y_n = 0."""
    if f.n != n:
        raise ValueError("term function dimension disagrees with n")
    return _shell_sum(n, f, ctx, hyperplane_shell_points, min_radius)
