"""Airy function Ai and its derivative.

For ``|x| <= 8`` the Maclaurin series is summed in 50-digit decimal
arithmetic. On the positive axis the two power series in ``Ai = c1 f - c2 g``
grow like ``exp(2/3 x^{3/2})`` while ``Ai`` decays at that rate, so a double
precision sum loses up to 13 digits by ``x = 8``. Beyond ``|x| = 8`` the
standard asymptotic expansions (DLMF 9.7.5-9.7.10) are used, truncated at
their smallest term. At the switch point that term is about ``exp(-2 zeta)``
with ``zeta = 2/3 * 8**1.5``, roughly 1e-13 relative.
"""

import math
from decimal import Decimal, localcontext

import numpy as np

SWITCH = 8.0

# Ai(0) and -Ai'(0) to 45 digits
_C1 = Decimal("0.355028053887817239260063186004183176397979174")
_C2 = Decimal("0.258819403792806798405183560189203963479091138")

_PREC = 50
_SQRT_PI = math.sqrt(math.pi)


def _maclaurin(x):
    with localcontext() as ctx:
        ctx.prec = _PREC
        X = Decimal(x)
        x3 = X * X * X
        eps = Decimal(10) ** (-_PREC + 2)
        f = t = Decimal(1)
        g = s = X
        fp = Decimal(0)
        p = X * X / 2
        gp = q = Decimal(1)
        k = 1
        scale = Decimal(1) + abs(X)
        while True:
            t = t * x3 / ((3 * k - 1) * (3 * k))
            s = s * x3 / ((3 * k) * (3 * k + 1))
            if k > 1:
                p = p * x3 / ((3 * k - 1) * (3 * k - 3))
            q = q * x3 / ((3 * k) * (3 * k - 2))
            f += t
            g += s
            fp += p
            gp += q
            scale = max(scale, abs(t), abs(s), abs(p), abs(q))
            if k > 3 and max(abs(t), abs(s), abs(p), abs(q)) < eps * scale:
                break
            k += 1
        ai = _C1 * f - _C2 * g
        aip = _C1 * fp - _C2 * gp
        return float(ai), float(aip)


def _u_coeffs(n):
    u = [1.0]
    for k in range(1, n):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k))
    return u


_U = _u_coeffs(60)
_V = [1.0] + [-(6 * k + 1) / (6 * k - 1) * _U[k] for k in range(1, len(_U))]


def _truncated(coeffs, zeta, alternating=True, start=0, stride=1):
    """Sum ``sum_k (+-1)^k c_{start + stride*k} zeta^{-(start + stride*k)}`` up to the smallest term."""
    total = 0.0
    prev = math.inf
    sign = 1.0
    for j in range(start, len(coeffs), stride):
        term = coeffs[j] / zeta**j
        if abs(term) > prev:
            break
        total += sign * term
        prev = abs(term)
        if prev < 1e-18 * abs(total):
            break
        if alternating:
            sign = -sign
    return total


def _asymptotic(x):
    if x > 0:
        zeta = 2.0 / 3.0 * x**1.5
        pre = math.exp(-zeta) / (2.0 * _SQRT_PI)
        q = x**0.25
        ai = pre / q * _truncated(_U, zeta)
        aip = -pre * q * _truncated(_V, zeta)
        return ai, aip
    z = -x
    zeta = 2.0 / 3.0 * z**1.5
    q = z**0.25
    c = math.cos(zeta - math.pi / 4)
    s = math.sin(zeta - math.pi / 4)
    u_even = _truncated(_U, zeta, start=0, stride=2)
    u_odd = _truncated(_U, zeta, start=1, stride=2)
    v_even = _truncated(_V, zeta, start=0, stride=2)
    v_odd = _truncated(_V, zeta, start=1, stride=2)
    ai = (c * u_even + s * u_odd) / (_SQRT_PI * q)
    aip = q * (s * v_even - c * v_odd) / _SQRT_PI
    return ai, aip


def airy_pair(x, method=None):
    """Return ``(Ai(x), Ai'(x))``.

    ``method`` forces ``"series"`` or ``"asymptotic"``; by default the
    choice is made on ``|x|`` against :data:`SWITCH`.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x}")
    if method is None:
        method = "series" if abs(x) <= SWITCH else "asymptotic"
    if method == "series":
        return _maclaurin(x)
    if method == "asymptotic":
        if x == 0.0:
            raise ValueError("the asymptotic expansion is undefined at x = 0")
        return _asymptotic(x)
    raise ValueError(f"unknown method {method!r}")


def airy(x):
    """Ai(x) for a finite real ``x``."""
    return airy_pair(x)[0]


def airy_prime(x):
    return airy_pair(x)[1]


def airy_array(x):
    """Ai over an array of abscissae."""
    x = np.asarray(x, dtype=np.float64)
    return np.vectorize(airy, otypes=[np.float64])(x)
