from functools import lru_cache
from math import isqrt


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


@lru_cache(maxsize=None)
def prime_divisors(n: int) -> frozenset:
    """pi(n): the set of primes dividing n."""
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return frozenset(out)


def pi_part(n: int, primes) -> int:
    """Largest divisor of n whose prime divisors all lie in ``primes``."""
    part = 1
    for p in primes:
        while n % p == 0:
            n //= p
            part *= p
    return part


def is_pi_number(n: int, primes) -> bool:
    return prime_divisors(n) <= frozenset(primes)
