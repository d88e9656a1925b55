"""Parameter bundles and per-identity schemas.

A single ParamSet record holds every letter any identity in the registry
uses; which slots are required, whether a slot is a scalar or a vector,
and the expected lengths are dictated by the identity's schema (a tuple
of FieldSpec).  This mirrors the parameter-file format, where one JSON
object carries ``n``, ``p`` and the letter fields.

Slot conventions across the registry:

    a     upper parameters: vector (length varies by family) or scalar
    b, d  auxiliary scalars (vector b for the A_n reduction)
    c     integral-difference bases: vector, or scalar where an identity
          uses the letter alone
    e     extra scalar
    f     one-variable family bases, vector
    z, w  base points, vectors
    m, l  non-negative integer shifts / box bounds
"""

from __future__ import annotations

from dataclasses import dataclass, fields as dataclass_fields, replace
from typing import Callable, Optional

from ..errors import SchemaMismatch

SCALAR = "scalar"
VECTOR = "vector"
INTS = "ints"

BILATERAL_CN = "bilateral_cn"
FINITE_CN = "finite_cn"
ONE_VAR = "one_var"
BILATERAL_AN = "bilateral_an"


@dataclass(frozen=True)
class ParamSet:
    """Tagged parameter bundle; unused slots stay None."""
    n: int = 1
    p: int = 0
    a: object = None
    b: object = None
    c: object = None
    d: object = None
    e: object = None
    f: object = None
    z: object = None
    w: object = None
    m: object = None
    l: object = None

    def replace(self, **kw):
        return replace(self, **kw)


_LETTER_SLOTS = tuple(f.name for f in dataclass_fields(ParamSet)
                      if f.name not in ("n", "p"))


@dataclass(frozen=True)
class FieldSpec:
    """One required slot of an identity's schema."""
    name: str
    kind: str
    length: Optional[Callable[[int, int], int]] = None


def _coerce_vector(name, value, want, ctx):
    if value is None:
        raise SchemaMismatch(f"missing vector field {name!r}")
    if not isinstance(value, (tuple, list)):
        # a bare scalar is accepted for a length-1 vector
        value = (value,)
    if len(value) != want:
        raise SchemaMismatch(f"field {name!r} must have length {want}, got {len(value)}")
    return tuple(ctx.scalar(v) for v in value)


def _coerce_ints(name, value, want):
    if value is None:
        raise SchemaMismatch(f"missing integer field {name!r}")
    if not isinstance(value, (tuple, list)):
        value = (value,)
    if len(value) != want:
        raise SchemaMismatch(f"field {name!r} must have length {want}, got {len(value)}")
    out = []
    for v in value:
        iv = int(v)
        if iv != v or iv < 0:
            raise SchemaMismatch(f"field {name!r} entries must be non-negative integers")
        out.append(iv)
    return tuple(out)


def coerce_params(schema, uses_n, uses_p, params, ctx, extra_check=None):
    """Validate ``params`` against a schema and coerce into ctx scalars.

    Returns a new ParamSet whose scheduled slots hold mode scalars /
    tuples; raises SchemaMismatch on missing, extra or ill-shaped fields.
    """
    if not isinstance(params, ParamSet):
        raise SchemaMismatch("expected a ParamSet")
    n, p = int(params.n), int(params.p)
    if uses_n and n < 1:
        raise SchemaMismatch("dimension n must be at least 1")
    if not uses_n and n != 1:
        raise SchemaMismatch("this identity has no dimension n; leave n = 1")
    if uses_p and p < 0:
        raise SchemaMismatch("dimension p must be non-negative")
    if not uses_p and p != 0:
        raise SchemaMismatch("this identity has no dimension p; leave p = 0")

    wanted = {spec.name: spec for spec in schema}
    out = {"n": n, "p": p}
    for slot in _LETTER_SLOTS:
        value = getattr(params, slot)
        spec = wanted.get(slot)
        if spec is None:
            if value is not None:
                raise SchemaMismatch(f"unexpected field {slot!r} for this identity")
            out[slot] = None
            continue
        if spec.kind == SCALAR:
            if value is None:
                raise SchemaMismatch(f"missing scalar field {slot!r}")
            if isinstance(value, (tuple, list)) and len(value) == 1:
                value = value[0]
            out[slot] = ctx.scalar(value)
        elif spec.kind == VECTOR:
            out[slot] = _coerce_vector(slot, value, spec.length(n, p), ctx)
        else:
            out[slot] = _coerce_ints(slot, value, spec.length(n, p))
    coerced = ParamSet(**out)
    if extra_check is not None:
        extra_check(coerced)
    return coerced


def _len_n(n, p):
    return n


def _len_p(n, p):
    return p


def _len_2n2(n, p):
    return 2 * n + 2


# schemas, keyed by the field tuples each identity family requires

def bilateral_cn_fields(with_c=True, with_w=False):
    out = [FieldSpec("a", VECTOR, _len_2n2), FieldSpec("z", VECTOR, _len_n)]
    if with_c:
        out += [FieldSpec("c", VECTOR, _len_p), FieldSpec("m", INTS, _len_p)]
    if with_w:
        out.append(FieldSpec("w", VECTOR, _len_n))
    return tuple(out)


KMS_FIELDS = (
    FieldSpec("a", VECTOR, _len_n),
    FieldSpec("b", SCALAR),
    FieldSpec("d", SCALAR),
    FieldSpec("z", VECTOR, _len_n),
    FieldSpec("c", VECTOR, _len_p),
    FieldSpec("m", INTS, _len_p),
)

C2_FIELDS = (
    FieldSpec("a", VECTOR, lambda n, p: 2),
    FieldSpec("z", VECTOR, lambda n, p: 2),
    FieldSpec("c", VECTOR, _len_p),
    FieldSpec("m", INTS, _len_p),
)

AK_FIELDS = (
    FieldSpec("z", VECTOR, _len_n),
    FieldSpec("c", VECTOR, _len_p),
    FieldSpec("m", INTS, _len_p),
    FieldSpec("l", INTS, _len_n),
    FieldSpec("b", SCALAR),
    FieldSpec("d", SCALAR),
)

N0_FIELDS = (
    FieldSpec("z", VECTOR, _len_n),
    FieldSpec("m", INTS, _len_n),
    FieldSpec("b", SCALAR),
    FieldSpec("d", SCALAR),
)

CML_FIELDS = (
    FieldSpec("z", VECTOR, _len_n),
    FieldSpec("m", INTS, _len_n),
    FieldSpec("b", SCALAR),
    FieldSpec("c", SCALAR),
    FieldSpec("d", SCALAR),
    FieldSpec("e", SCALAR),
)

ONEVAR_FIELDS = (
    FieldSpec("a", SCALAR),
    FieldSpec("b", SCALAR),
    FieldSpec("c", SCALAR),
    FieldSpec("d", SCALAR),
    FieldSpec("e", SCALAR),
    FieldSpec("f", VECTOR, _len_p),
    FieldSpec("m", INTS, _len_p),
)

RG_FIELDS = (
    FieldSpec("a", VECTOR, _len_n),
    FieldSpec("b", VECTOR, _len_n),
    FieldSpec("z", VECTOR, _len_n),
    FieldSpec("c", VECTOR, _len_p),
    FieldSpec("m", INTS, _len_p),
)
