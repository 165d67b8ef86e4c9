# Copyright 2026 The catsu Authors
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

"""Independent high-precision oracle for frozen test values.

Computes entropies straight from row counts with mpmath at 50 digits.
Shares no code with the C++ library.
"""
import csv
from collections import Counter
from fractions import Fraction
import mpmath as mp

mp.mp.dps = 50


def H(counts, n):
    return -mp.fsum(mp.mpf(c) / n * mp.log(mp.mpf(c) / n, 2) for c in counts if c)


def cols(path):
    rows = list(csv.reader(open(path)))
    head, body = rows[0], rows[1:]
    return {h: [r[i] for r in body] for i, h in enumerate(head)}


def su(x, y):
    n = len(x)
    hx, hy = H(Counter(x).values(), n), H(Counter(y).values(), n)
    hxy = H(Counter(zip(x, y)).values(), n)
    return 2 * (1 - hxy / (hx + hy)), hx, hy, hxy


def cond(x, y):
    # brute force double sum over contingency cells
    n = len(x)
    joint = Counter(zip(x, y))
    py = Counter(y)
    s = mp.mpf(0)
    for (a, b), c in joint.items():
        s -= mp.mpf(c) / n * mp.log(mp.mpf(c) / py[b], 2)
    return s


if __name__ == "__main__":
    c = cols("data/internship.csv")
    for f in ["Neatness", "Creativity", "Punctuality", "IQuotient", "AttentionType"]:
        s, hx, hy, hxy = su(c[f], c["GotHired"])
        print(f, mp.nstr(s, 17), "H", mp.nstr(hx, 17), mp.nstr(hy, 17), mp.nstr(hxy, 17))
    x, y = c["Creativity"], c["GotHired"]
    print("H(Creativity|GotHired)", mp.nstr(cond(x, y), 17))
    print("H(GotHired|Creativity)", mp.nstr(cond(y, x), 17))
    print("H(0.4,0.1,0.5)", mp.nstr(H([4, 1, 5], 10), 17))
    # nested indicator demo: X = first k rows, Y = first k+1 rows, k = n/2
    prev = None
    for i in range(12):
        n = 4 * 2 ** i
        k = n // 2
        X = [1 if r < k else 0 for r in range(n)]
        Y = [1 if r < k + 1 else 0 for r in range(n)]
        s, *_ = su(X, Y)
        print("demo n", n, mp.nstr(1 - s, 17))
