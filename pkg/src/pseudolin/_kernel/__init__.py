"""Backend selection for the integer-polynomial kernels.

The compiled Cython module ``_zkernel`` is preferred when it was built;
otherwise the pure-Python twin ``_zkernel_py`` is used.  Setting the
environment variable ``PSEUDOLIN_PURE_PYTHON=1`` forces the fallback,
which the benchmark and the parity tests use to compare both backends.
"""

import os

if os.environ.get("PSEUDOLIN_PURE_PYTHON", "") not in ("", "0"):
    from pseudolin._kernel import _zkernel_py as _impl
else:
    try:
        from pseudolin._kernel import _zkernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from pseudolin._kernel import _zkernel_py as _impl

BACKEND = _impl.BACKEND

zp_trim = _impl.zp_trim
zp_add = _impl.zp_add
zp_sub = _impl.zp_sub
zp_neg = _impl.zp_neg
zp_scale = _impl.zp_scale
zp_mul = _impl.zp_mul
zp_addmul = _impl.zp_addmul
zp_deriv = _impl.zp_deriv
zp_divexact = _impl.zp_divexact
zp_pseudorem = _impl.zp_pseudorem
zp_content = _impl.zp_content
zp_primitive = _impl.zp_primitive
zp_gcd = _impl.zp_gcd


def zp_divides(b, a):
    """True when b divides a in Q[x] (both integer polynomials)."""
    if not b:
        return not a
    try:
        _divexact_q(a, b)
    except ValueError:
        return False
    return True


def _divexact_q(a, b):
    """Division a/b exact over Q[x]: returns (quotient zpoly, num, den).

    The quotient is num/den * zpoly with den > 0; raises ValueError when b
    does not divide a over Q.  By Gauss's lemma this reduces to an exact
    Z[x] division of the primitive parts.
    """
    pa, ca = zp_primitive(a)
    pb, cb = zp_primitive(b)
    if not pb:
        raise ZeroDivisionError("zpoly division by zero")
    if not pa:
        return [], 0, 1
    q = zp_divexact(pa, pb)
    return q, ca, cb
