#!/usr/bin/env python3
# Copyright 2026 The mdtriples Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes factorizations of 2^(t-1) - 1 for the admissible exponents t.

2^(t-1) - 1 is split into cyclotomic values Phi_d(2), d | t - 1, and each
piece is attacked with trial division, rho, p-1 and ECM under a time budget.
Pieces that survive the budget are written as an unresolved composite
cofactor "* C<digits>".
"""

import argparse
import signal
import sys
import time
from collections import Counter

from sympy import divisors, isprime, primerange
from sympy.ntheory import ecm, pollard_pm1, pollard_rho
from sympy.ntheory.primetest import is_square
from sympy.polys.specialpolys import cyclotomic_poly
from sympy.abc import X

ADMISSIBLE = [p for p in primerange(41, 1238) if p % 24 in (13, 17, 19, 23)]


class Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise Timeout()


def cyclotomic_at_2(d):
    return int(cyclotomic_poly(d, X).subs(X, 2))


def small_split(n, bound=10**6):
    out = Counter()
    for p in primerange(2, bound):
        if n == 1 or p * p > n:
            break
        while n % p == 0:
            out[p] += 1
            n //= p
    if n > 1 and n < bound * bound:
        out[n] += 1
        n = 1
    return out, n


def split_one(m, seconds):
    """Nontrivial factor of composite m, or None when time runs out."""
    signal.signal(signal.SIGALRM, _alarm)
    signal.setitimer(signal.ITIMER_REAL, max(seconds, 0.01))
    try:
        for seed in range(1, 4):
            f = pollard_rho(m, seed=seed, max_steps=20000)
            if f:
                return f
        f = pollard_pm1(m, B=100000)
        if f:
            return f
        for b1 in (2000, 11000, 50000, 250000):
            fs = ecm(m, B1=b1, B2=100 * b1, max_curve=30, seed=b1)
            fs = [p for p in fs if 1 < p < m]
            if fs:
                return fs[0]
        return None
    except (Timeout, ValueError):
        return None
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)


def factor_budget(n, budget):
    primes, rest = small_split(n)
    work, unresolved = [rest], []
    deadline = time.monotonic() + budget
    while work:
        m = work.pop()
        if m == 1:
            continue
        if isprime(m):
            primes[m] += 1
            continue
        if is_square(m):
            from math import isqrt
            r = isqrt(m)
            work += [r, r]
            continue
        left = deadline - time.monotonic()
        f = split_one(m, left) if left > 0 else None
        if f is None:
            unresolved.append(m)
        else:
            work += [f, m // f]
    return primes, unresolved


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", required=True)
    ap.add_argument("--budget", type=float, default=4.0, help="seconds per cyclotomic piece")
    ap.add_argument("--only", type=int, nargs="*")
    args = ap.parse_args()

    cache = {}
    ts = args.only or ADMISSIBLE
    lines = [
        "# 2^(t-1) - 1 for t prime, 41 <= t <= 1237, t = 13, 17, 19, 23 mod 24",
        "# source: cyclotomic split + rho/p-1/ECM (sympy), budget %.1fs per piece" % args.budget,
        "# format: t: p1^e1 p2^e2 ... [* C<digits>]",
    ]
    for t in ts:
        total, cofactor = Counter(), 1
        for d in divisors(t - 1):
            if d == 1:
                continue
            if d not in cache:
                cache[d] = factor_budget(cyclotomic_at_2(d), args.budget)
            primes, unresolved = cache[d]
            total.update(primes)
            for u in unresolved:
                cofactor *= u
        n = 2 ** (t - 1) - 1
        prod = cofactor
        for p, e in total.items():
            prod *= p**e
        assert prod == n, t
        body = " ".join("%d^%d" % (p, e) for p, e in sorted(total.items()))
        if cofactor > 1:
            body += " * C%d" % len(str(cofactor))
        lines.append("%d: %s" % (t, body))
        print(t, "unresolved digits" if cofactor > 1 else "complete",
              len(str(cofactor)) if cofactor > 1 else "", file=sys.stderr, flush=True)
    with open(args.out, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
