"""Elementary, complete homogeneous and power-sum symmetric polynomials,
built from their recursions, plus symbolic checks of the identities that
relate them and the closed-form reduced Groebner bases they predict."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional

from .poly import Monomial, Polynomial


def _ambient(n: int, arity: Optional[int]) -> int:
    if arity is None:
        arity = max(n, 1)
    if arity < 1:
        raise ValueError("arity must be >= 1")
    if arity < n:
        raise ValueError(f"arity {arity} < variable count {n}")
    return arity


@lru_cache(maxsize=None)
def _elementary(k: int, n: int, arity: int) -> Polynomial:
    if k == 0:
        return Polynomial.one(arity)
    if n < k or n <= 0:
        return Polynomial.zero(arity)
    xn = Polynomial.variable(n, arity)
    return _elementary(k, n - 1, arity) + xn * _elementary(k - 1, n - 1, arity)


@lru_cache(maxsize=None)
def _homogeneous(k: int, n: int, arity: int) -> Polynomial:
    if k == 0:
        return Polynomial.one(arity)
    if n <= 0:
        return Polynomial.zero(arity)
    xn = Polynomial.variable(n, arity)
    return _homogeneous(k, n - 1, arity) + xn * _homogeneous(k - 1, n, arity)


def elementary(k: int, n: int, arity: Optional[int] = None) -> Polynomial:
    """e_{k,n}: sum of wt(S) over all k-subsets S of {1..n}.

    Equals 0 when n < k and 1 when k = 0.  ``n <= 0`` is treated like an
    empty variable set, which keeps the identity checkers total.
    """
    if k < 0:
        raise ValueError("degree k must be >= 0")
    return _elementary(k, n, _ambient(n, arity))


def homogeneous(k: int, n: int, arity: Optional[int] = None) -> Polynomial:
    """h_{k,n}: sum of wt(S) over all k-multisets S with elements in {1..n}.

    Equals 1 when k = 0 and 0 when k > 0 with no variables (n <= 0).
    """
    if k < 0:
        raise ValueError("degree k must be >= 0")
    return _homogeneous(k, n, _ambient(n, arity))


def powersum(k: int, n: int, arity: Optional[int] = None) -> Polynomial:
    """p_{k,n} = x_1^k + ... + x_n^k for k >= 1."""
    if k < 1:
        raise ValueError("power sums require k >= 1")
    arity = _ambient(n, arity)
    p = Polynomial.zero(arity)
    for j in range(1, max(n, 0) + 1):
        p = p + Polynomial.variable(j, arity) ** k
    return p


def weight(elements: Iterable[int], arity: int) -> Monomial:
    """Monomial whose exponent of x_s is the multiplicity of s."""
    exps = [0] * arity
    for s in elements:
        if not 1 <= s <= arity:
            raise ValueError(f"element {s} out of range 1..{arity}")
        exps[s - 1] += 1
    return tuple(exps)


# -- identity checkers -------------------------------------------------------
#
# Each checker moves the identity to one side and tests symbolic equality
# with zero; the *_defect companion returns that difference polynomial so a
# failure can be inspected.  k = 0 degenerates (the alternating sums reduce
# to the constant 1) and is rejected.

def hkn_identity_defect(k: int, n: int) -> Polynomial:
    """h_{k,n-k+1} - sum_{i=1..k} (-1)^{i+1} e_{i,n} h_{k-i,n-k+1}."""
    if k < 1:
        raise ValueError("identity requires k >= 1")
    arity = max(n, 1)
    acc = homogeneous(k, n - k + 1, arity)
    for i in range(1, k + 1):
        sign = 1 if i % 2 == 1 else -1
        acc = acc - sign * elementary(i, n, arity) * homogeneous(k - i, n - k + 1, arity)
    return acc


def check_hkn_identity(k: int, n: int) -> bool:
    return hkn_identity_defect(k, n).is_zero()


def ekn_identity_defect(k: int, n: int) -> Polynomial:
    """e_{k,n} - sum_{i=1..k} (-1)^{i+1} h_{i,n-i+1} e_{k-i,n-i}."""
    if k < 1:
        raise ValueError("identity requires k >= 1")
    arity = max(n, 1)
    acc = elementary(k, n, arity)
    for i in range(1, k + 1):
        sign = 1 if i % 2 == 1 else -1
        acc = acc - sign * homogeneous(i, n - i + 1, arity) * elementary(k - i, n - i, arity)
    return acc


def check_ekn_identity(k: int, n: int) -> bool:
    return ekn_identity_defect(k, n).is_zero()


def telescope_defect(j: int, n: int) -> Polynomial:
    """sum_{l=0..j} x_{n-j+1}^l h_{j-l,n-j} - h_{j,n-j+1}."""
    if not 1 <= j <= n:
        raise ValueError("requires 1 <= j <= n")
    arity = max(n, 1)
    x = Polynomial.variable(n - j + 1, arity)
    acc = -homogeneous(j, n - j + 1, arity)
    for ell in range(j + 1):
        acc = acc + x ** ell * homogeneous(j - ell, n - j, arity)
    return acc


def check_telescope(j: int, n: int) -> bool:
    return telescope_defect(j, n).is_zero()


def newton_defect(k: int, n: int) -> Polynomial:
    """sum_{r=0..k-1} (-1)^r e_{r,n} p_{k-r,n} + (-1)^k k e_{k,n}."""
    if k < 1:
        raise ValueError("identity requires k >= 1")
    arity = max(n, 1)
    acc = Polynomial.zero(arity)
    for r in range(k):
        sign = 1 if r % 2 == 0 else -1
        acc = acc + sign * elementary(r, n, arity) * powersum(k - r, n, arity)
    sign = 1 if k % 2 == 0 else -1
    return acc + sign * k * elementary(k, n, arity)


def check_newton(k: int, n: int) -> bool:
    return newton_defect(k, n).is_zero()


def check_e1ek_reduction(k: int, n: int) -> bool:
    """Verify e_{k,n} - e_{k,n-1} = x_n e_{k-1,n-1} and the generator
    identity e_{1,n-1} e_{k-1,n-1} - e_{k,n-1} = e_{1,n} e_{k-1,n-1} - e_{k,n}."""
    if not 1 <= k <= n:
        raise ValueError("requires 1 <= k <= n")
    arity = max(n, 1)
    xn = Polynomial.variable(n, arity)
    ek1 = elementary(k - 1, n - 1, arity)
    step = elementary(k, n, arity) - elementary(k, n - 1, arity) - xn * ek1
    if not step.is_zero():
        return False
    lhs = elementary(1, n - 1, arity) * ek1 - elementary(k, n - 1, arity)
    rhs = elementary(1, n, arity) * ek1 - elementary(k, n, arity)
    return (lhs - rhs).is_zero()


# -- closed-form reduced Groebner bases --------------------------------------

def conjectured_gb_ek(k: int, n: int) -> list:
    """{h_{i,n-i+1} : i = 1..k}, the closed-form reduced basis for the ideal
    generated by e_{1,n},...,e_{k,n}; sorted by decreasing leading monomial."""
    if not 1 <= k <= n:
        raise ValueError("requires 1 <= k <= n")
    return [homogeneous(i, n - i + 1, n) for i in range(1, k + 1)]


def conjectured_gb_e1ek(k: int, n: int) -> list:
    """{e_{1,n}, e_{1,n-1} e_{k-1,n-1} - e_{k,n-1}}, the closed-form reduced
    basis for the ideal generated by e_{1,n} and e_{k,n}."""
    if not 1 <= k <= n:
        raise ValueError("requires 1 <= k <= n")
    first = elementary(1, n, n)
    second = (elementary(1, n - 1, n) * elementary(k - 1, n - 1, n)
              - elementary(k, n - 1, n))
    out = [first]
    if not second.is_zero():
        out.append(second.monic())
    return out
