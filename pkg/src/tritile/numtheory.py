"""Integer predicates used by the classifier and by square-root normalization."""
from __future__ import annotations

from math import gcd, isqrt


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (k, d) with n == k*k*d and d square-free."""
    if n == 0:
        return 0, 1
    k, d = 1, 1
    for p, e in factorize(n).items():
        k *= p ** (e // 2)
        if e % 2:
            d *= p
    return k, d


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def is_k_times_square(k: int, n: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        return False
    return n % k == 0 and is_square(n // k)


def is_sum_two_squares(n: int) -> bool:
    # every prime 3 mod 4 must divide n to an even power
    if n < 0:
        return False
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(n).items() if p % 4 == 3)


def two_square_decompositions(n: int) -> list[tuple[int, int]]:
    """All (e, f) with 0 <= e <= f and e*e + f*f == n."""
    out = []
    e = 0
    while 2 * e * e <= n:
        rest = n - e * e
        if is_square(rest):
            out.append((e, isqrt(rest)))
        e += 1
    return out


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient is defined for n >= 1")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def totient_preimage(d: int) -> list[int]:
    """Sorted list of all n with totient(n) == d.

    Uses phi(n) >= sqrt(n/2), so every solution satisfies n <= 2*d*d.
    """
    if d < 1:
        raise ValueError("d must be positive")
    return [n for n in range(1, 2 * d * d + 1) if totient(n) == d]


def primitive(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    """Divide by the gcd and make the first nonzero entry positive."""
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g == 0:
        return coeffs
    out = tuple(c // g for c in coeffs)
    for c in out:
        if c:
            return out if c > 0 else tuple(-x for x in out)
    return out
