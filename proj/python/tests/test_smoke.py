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

from fractions import Fraction
from math import gcd, prod

import pytest

import mdtriples as mdt


def test_factorize_roundtrip_big():
    n = 2**89 - 1  # prime
    assert mdt.factorize(n) == [(n, 1)]
    m = (2**61 - 1) * 3**5 * 7
    f = mdt.factorize(m)
    assert prod(p**e for p, e in f) == m
    assert mdt.vp(3, m) == 5


def test_dependence_witness():
    res = mdt.is_multiplicatively_dependent([6, 4, 3])
    assert res["dependent"]
    assert mdt.witness_holds([6, 4, 3], res["witness"])
    assert mdt.is_multiplicatively_dependent([2, 3, 5])["dependent"] is False
    assert mdt.classify_k([4, 8, 3]) == 2
    with pytest.raises(mdt.DomainError):
        mdt.is_multiplicatively_dependent([1, 2])


def test_census_matches_python_scan():
    def dependent(*xs):
        # exponent rank < len(xs) via Fraction elimination over all primes
        primes = sorted({p for x in xs for p, _ in mdt.factorize(x)})
        rows = [[Fraction(dict(mdt.factorize(x)).get(p, 0)) for p in primes] for x in xs]
        rank = 0
        for col in range(len(primes)):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for r in range(len(rows)):
                if r != rank and rows[r][col] != 0:
                    f = rows[r][col] / rows[rank][col]
                    rows[r] = [u - f * v for u, v in zip(rows[r], rows[rank])]
            rank += 1
        return rank < len(xs)

    n = 40
    want = [
        (a, b, c)
        for a in range(2, n + 1)
        for b in range(a + 1, n + 1)
        for c in range(b + 1, n + 1)
        if all(dependent(a + s, b + s, c + s) for s in range(3))
    ]
    got = [(r["a"], r["b"], r["c"]) for r in mdt.search(n)]
    assert got == want


def test_census_excluding_fam1():
    recs = mdt.search(1000, exclude_fam1=True, jobs=2)
    assert len(recs) == 11
    assert {r["family"] for r in recs} == {"Sporadic", "NewFamily"}
    a2, x3 = mdt.verify_main_theorems(300)
    assert a2["violations"] == [] and x3["violations"] == []


def test_lll_preserves_lattice_volume():
    cols = [[1, 0, 12345], [0, 1, 67890], [0, 0, 13579]]
    red = mdt.lll_reduce(cols)
    assert len(red) == 3

    def gram_det(cs):
        g = [[Fraction(sum(a * b for a, b in zip(u, v))) for v in cs] for u in cs]
        det = Fraction(1)
        for i in range(3):
            piv = next(r for r in range(i, 3) if g[r][i] != 0)
            if piv != i:
                g[i], g[piv] = g[piv], g[i]
                det = -det
            det *= g[i][i]
            for r in range(i + 1, 3):
                f = g[r][i] / g[i][i]
                g[r] = [u - f * v for u, v in zip(g[r], g[i])]
        return det

    assert gram_det(red) == gram_det(cols)
    assert sum(x * x for x in red[0]) <= sum(x * x for x in cols[0])


def test_convergents_of_log3_log2():
    cs = mdt.log_ratio_convergents(3, 2, 8)
    assert cs[:5] == [(1, 1), (2, 1), (3, 2), (8, 5), (19, 12)]
    for (p0, q0), (p1, q1) in zip(cs, cs[1:]):
        assert abs(p1 * q0 - p0 * q1) == 1
        assert gcd(p1, q1) == 1


def test_sit_small_pieces():
    assert mdt.sit_holds("-", 3, 2, 0, 1, -1)
    assert not mdt.sit_holds("+", 6, 8, 1, 2, 0)
    res = mdt.solve_sit_final("-", x_lo=3, x_hi=9)
    for s in res["solutions"]:
        assert mdt.sit_holds(s["sign"], s["x"], s["y"], s["z"], s["w"], s["r"])
    assert mdt.sit_pipeline("+")["x_reduced"] == 296


def test_lemmas():
    assert len(mdt.lemma_ids()) == 10
    r = mdt.lemma_search("nagell")
    assert r["matches"] and r["found"] == [[3, 5, 3]]
    with pytest.raises(mdt.DomainError):
        mdt.lemma_search("nosuch")


def test_lll_rejects_non_square():
    with pytest.raises(mdt.DomainError):
        mdt.lll_reduce([[1, 0, 5], [0, 1, 7]])
