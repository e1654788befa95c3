"""Closed-form upper bounds on the bondage number.

Everything here takes the maximum degree and Euler characteristic as plain
integers.  The square-root bounds are floored or ceiled with integer
square roots, so they are exact for every input; only the cubic root is
computed numerically, and its floor is confirmed with integer arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache
from typing import Optional

RESIDUAL_TOL = 1e-9
# distance to an integer below which the floor of r is settled exactly
INTEGER_GUARD = 1e-7
_DECIMAL_PREC = 60


def poly_A(z, chi):
    return z * z - z + 4 * chi - 6


def poly_B(z, chi):
    return 5 * z**3 + 6 * z**2 + (24 * chi - 31) * z + 48 * chi - 70


def poly_C(z, chi):
    return z**3 + 2 * z**2 + (6 * chi - 7) * z + 18 * chi - 24


def poly_C_prime(z, chi):
    return 3 * z * z + 4 * z + 6 * chi - 7


def cubic_discriminant_term(chi: int) -> int:
    """The quantity under the square root in the closed form for r."""
    return 5376 - 6876 * chi + 1269 * chi**2 + 648 * chi**3


def cardano_real(chi: int) -> float:
    f = cubic_discriminant_term(chi)
    if f < 0:
        raise ValueError(f"real cubic formula needs f >= 0, got f={f} at chi={chi}")
    u = (253 - 189 * chi + 3 * math.sqrt(f)) ** (1.0 / 3.0)
    return (25 - 18 * chi) / (3 * u) + u / 3 - 2 / 3


def cardano_complex_roots(chi: int) -> list[complex]:
    """All three roots from the same closed form, over the complex numbers.

    Uses the principal square root of f and each of the three cube roots.
    """
    f = cubic_discriminant_term(chi)
    base = 253 - 189 * chi + 3 * cmath.sqrt(f)
    u0 = base ** (1.0 / 3.0)
    roots = []
    for k in range(3):
        u = u0 * cmath.exp(2j * math.pi * k / 3)
        roots.append((25 - 18 * chi) / (3 * u) + u / 3 - 2 / 3)
    return roots


def trigonometric_roots(chi: int) -> list[float]:
    """The three real roots of C via the depressed cubic y^3 + p*y + q (z = y - 2/3)."""
    c = 6 * chi - 7
    d = 18 * chi - 24
    p = c - 4 / 3
    q = 16 / 27 - 2 * c / 3 + d
    if 4 * p**3 + 27 * q**2 >= 0:
        raise ValueError(f"C has a single real root at chi={chi}")
    amp = 2 * math.sqrt(-p / 3)
    arg = 3 * q / (2 * p) * math.sqrt(-3 / p)
    arg = max(-1.0, min(1.0, arg))
    theta = math.acos(arg) / 3
    return sorted(amp * math.cos(theta - 2 * math.pi * k / 3) - 2 / 3 for k in range(3))


@dataclass(frozen=True)
class RootResult:
    chi: int
    r: float
    residual: float
    iterations: int
    floor: int
    r_decimal: Decimal


def _polish(chi: int, z0: float) -> tuple[Decimal, int]:
    with localcontext() as ctx:
        ctx.prec = _DECIMAL_PREC
        z = Decimal(z0)
        tol = Decimal(10) ** (-(_DECIMAL_PREC - 20))
        for it in range(1, 100):
            step = poly_C(z, chi) / poly_C_prime(z, chi)
            z -= step
            if abs(step) <= tol * max(1, abs(z)):
                return +z, it
    raise ArithmeticError(f"Newton polish did not converge at chi={chi}")


@lru_cache(maxsize=4096)
def largest_root_r(chi: int) -> RootResult:
    """Largest real root of z^3 + 2z^2 + (6chi-7)z + 18chi - 24 for chi <= 0."""
    if chi > 0:
        raise ValueError(f"largest_root_r needs chi <= 0, got {chi}")
    # C(0) < 0 and C'' > 0 on z > 0, so there is exactly one positive root
    assert poly_C(0, chi) < 0
    if cubic_discriminant_term(chi) >= 0:
        z0 = cardano_real(chi)
    else:
        z0 = max(trigonometric_roots(chi))
    r_dec, iterations = _polish(chi, z0)
    nearest = int(r_dec.to_integral_value())
    if abs(r_dec - nearest) <= Decimal(INTEGER_GUARD):
        exact = poly_C(nearest, chi)
        if exact == 0:
            r_dec = Decimal(nearest)
        fl = nearest if exact <= 0 else nearest - 1
    else:
        fl = math.floor(r_dec)
    with localcontext() as ctx:
        ctx.prec = _DECIMAL_PREC
        residual = float(abs(poly_C(r_dec, chi)))
    if residual > RESIDUAL_TOL:
        raise ArithmeticError(f"root residual {residual} above tolerance at chi={chi}")
    return RootResult(chi, float(r_dec), residual, iterations, fl, r_dec)


def r_floor(chi: int) -> int:
    """floor(r(chi)), with r(1) = r(2) = 2."""
    if chi > 2:
        raise ValueError(f"Euler characteristic is at most 2, got {chi}")
    if chi >= 1:
        return 2
    return largest_root_r(chi).floor


def h1_bound(max_deg: int, chi: int) -> int:
    return max_deg + r_floor(chi)


def _require_nonpositive(chi: int, name: str) -> None:
    if chi > 0:
        raise ValueError(f"{name} needs chi <= 0, got {chi}")


def h2_bound(max_deg: int, chi: int) -> int:
    """max_deg + ceil(sqrt(12 - 6chi) - 1/2)."""
    _require_nonpositive(chi, "h2_bound")
    x4 = 4 * (12 - 6 * chi)
    # smallest N with N + 1/2 >= sqrt(X), i.e. (2N+1)^2 >= 4X; equality is impossible (parity)
    n = max(0, (math.isqrt(x4) - 1) // 2)
    while (2 * n + 1) ** 2 < x4:
        n += 1
    return max_deg + n


def sachs_bound(max_deg: int, chi: int) -> int:
    """max_deg + floor((3 + sqrt(49 - 24chi)) / 2)."""
    _require_nonpositive(chi, "sachs_bound")
    return max_deg + (3 + math.isqrt(49 - 24 * chi)) // 2


def girth_root(chi: int, g: int) -> float:
    """Larger root of (g-2)z^2 + (g-6)z + 2chi*g - 2g - 4."""
    disc = 8 * g * (2 - g) * chi + (3 * g - 2) ** 2
    return (math.sqrt(disc) - (g - 6)) / (2 * (g - 2))


def girth_bound(max_deg: int, chi: int, g) -> int:
    _require_nonpositive(chi, "girth_bound")
    if g is None or (isinstance(g, float) and math.isinf(g)):
        raise ValueError("girth bound needs a finite girth; forests satisfy b <= 2 instead")
    if g != int(g) or g < 3:
        raise ValueError(f"girth must be an integer >= 3, got {g}")
    g = int(g)
    disc = 8 * g * (2 - g) * chi + (3 * g - 2) ** 2
    return max_deg + (math.isqrt(disc) - (g - 6)) // (2 * (g - 2))


def _check_genera(h: Optional[int], k: Optional[int]) -> None:
    if h is None and k is None:
        raise ValueError("need an orientable genus h, a non-orientable genus k, or both")
    if h is not None and h < 0:
        raise ValueError(f"orientable genus must be >= 0, got {h}")
    if k is not None and k < 1:
        raise ValueError(f"non-orientable genus must be >= 1, got {k}")


def gz_bound(max_deg: int, h: Optional[int] = None, k: Optional[int] = None) -> int:
    """min(max_deg + h + 2, max_deg + k + 1) over the genera supplied."""
    _check_genera(h, k)
    terms = []
    if h is not None:
        terms.append(h + 2)
    if k is not None:
        terms.append(k + 1)
    return max_deg + min(terms)


def gz_improved_bound(max_deg: int, h: Optional[int] = None, k: Optional[int] = None) -> int:
    """gz_bound tightened by every refinement whose genus threshold is met."""
    _check_genera(h, k)
    terms = [gz_bound(max_deg, h, k) - max_deg]
    if h is not None:
        if h >= 8:
            terms.append(h + 1)
        if h >= 11:
            terms.append(h)
    if k is not None:
        if k >= 3:
            terms.append(k)
        if k >= 6:
            terms.append(k - 1)
    return max_deg + min(terms)


def gz_bound_for_chi(max_deg: int, chi: int) -> int:
    """gz bound when only the maximum Euler characteristic is known.

    Either h = (2 - chi)/2 or k = 2 - chi is realised, and the other genus
    may be arbitrarily large, so the weaker of the two single-genus values
    is the one that is guaranteed.
    """
    if chi > 2:
        raise ValueError(f"Euler characteristic is at most 2, got {chi}")
    options = []
    if chi % 2 == 0:
        options.append(gz_bound(max_deg, h=(2 - chi) // 2))
    if chi <= 1:
        options.append(gz_bound(max_deg, k=2 - chi))
    return max(options)


def kang_yuan_bound(max_deg: int) -> int:
    """Planar graphs: min(max_deg + 2, 8)."""
    return min(max_deg + 2, 8)


def teschner_threshold(max_deg: int) -> float:
    return 1.5 * max_deg


def planar_conjecture_threshold(max_deg: int) -> int:
    return max_deg + 1


def asymptotic_ratio(chi: int) -> float:
    """(sqrt(12 - 6chi) + 1/2) / r(chi); exceeds 1 and tends to 1 as chi -> -inf."""
    _require_nonpositive(chi, "asymptotic_ratio")
    with localcontext() as ctx:
        ctx.prec = _DECIMAL_PREC
        num = Decimal(12 - 6 * chi).sqrt() + Decimal("0.5")
        return float(num / largest_root_r(chi).r_decimal)


def quadratic_root_z1(chi: int) -> float:
    """Positive root of poly_A."""
    return 0.5 + 0.5 * math.sqrt(25 - 16 * chi)


def table_row(chi: int) -> tuple[int, float, int, int]:
    """(chi, r, floor(r), ceil(sqrt(12 - 6chi) - 1/2))."""
    res = largest_root_r(chi)
    return chi, res.r, res.floor, h2_bound(0, chi)
