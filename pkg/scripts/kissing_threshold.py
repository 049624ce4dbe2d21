#!/usr/bin/env python3
"""Locate where the large-genus kissing bound starts to hold.

The checked property compares

    lhs(g) = (1/2) P_{8g-4} / (2 log g + 2.409)
    rhs(g) = 3.525 g / log g

where P_n is the perimeter of the right-angled regular n-gon,
(1/2) P_{8g-4} = (8g-4) acosh(sqrt(2) cos(pi/(8g-4))).  Both sides
grow like g/log g; the ratio of the leading constants is
4 acosh(sqrt(2)) / 3.525 = 1.00014..., barely above 1, so the
lower-order terms keep lhs below rhs until an enormous genus.  This
script evaluates the ratio at the sampled genera and bisects (in
t = log g, 50-digit arithmetic) for the crossover.

Needs mpmath (pip install -e .[test]).
"""

import mpmath as mp

mp.mp.dps = 50


def ratio_at_log_genus(t):
    """lhs/rhs with g = exp(t)."""
    g = mp.e ** t
    n = 8 * g - 4
    half_perimeter = n * mp.acosh(mp.sqrt(2) * mp.cos(mp.pi / n))
    lhs = half_perimeter / (2 * t + mp.mpf("2.409"))
    rhs = mp.mpf("3.525") * g / t
    return lhs / rhs


def main():
    print("ratio lhs/rhs at the sampled genera:")
    for exponent in (4, 5, 6):
        r = ratio_at_log_genus(mp.log(mp.mpf(10) ** exponent))
        print(f"  g = 10^{exponent}: {mp.nstr(r, 20)}")

    limit = 4 * mp.acosh(mp.sqrt(2)) / mp.mpf("3.525")
    print(f"limiting ratio as g -> inf: {mp.nstr(limit, 20)}")

    lo, hi = mp.mpf(9), mp.mpf(100000)
    assert ratio_at_log_genus(lo) < 1 < ratio_at_log_genus(hi)
    for _ in range(200):
        mid = (lo + hi) / 2
        if ratio_at_log_genus(mid) < 1:
            lo = mid
        else:
            hi = mid
    t_star = (lo + hi) / 2
    print(f"crossover at log g = {mp.nstr(t_star, 20)}")
    print(f"          i.e. g ~ 10^{mp.nstr(t_star / mp.log(10), 10)}")


if __name__ == "__main__":
    main()
