# Copyright 2026 The Pentagram Authors
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
"""Independent oracle for the classical value of the pentagram game.

Built from the vertex sets of the five hyperedges alone; shares no code or
tables with the C++ library. Prints a JSON object with the exact optima and
exits non-zero if --expect values disagree.
"""

import argparse
import itertools
import json
import sys

import numpy as np

EDGES = {0: {3, 1, 2, 6}, 1: {0, 4, 2, 7}, 2: {0, 1, 5, 8}, 3: {3, 4, 5, 9}, 4: {6, 7, 8, 9}}
E = {s: (-1 if s == 4 else 1) for s in range(5)}


def meet(x, y):
    (v,) = EDGES[x] & EDGES[y]
    return v


def rank(s, t):
    """0-based position of t among the other four edges, in increasing order."""
    return sorted(set(range(5)) - {s}).index(t)


def value(mask, r):
    return -1 if (mask >> r) & 1 else 1


def parity(mask):
    return -1 if bin(mask).count("1") % 2 else 1


def win_table(all_pairs):
    w = np.zeros((5, 5, 16, 16), dtype=np.int8)
    for x, y, a, b in itertools.product(range(5), range(5), range(16), range(16)):
        if x == y:
            ok = all_pairs and parity(a) == E[x] and a == b
        else:
            ok = (parity(a) == E[x] and parity(b) == E[y]
                  and value(a, rank(x, y)) == value(b, rank(y, x)))
        w[x, y, a, b] = ok
    return w


def optimum(all_pairs):
    """max over Alice's 16^5 maps of the sum over y of Bob's best response."""
    w = win_table(all_pairs)
    total = np.zeros((16,) * 5, dtype=np.int32)
    for y in range(5):
        score = np.zeros((16,) * 5 + (16,), dtype=np.int32)
        for x in range(5):
            shape = [1] * 6
            shape[x] = 16
            shape[5] = 16
            score = score + w[x, y].reshape(shape)
        total += score.max(axis=5)
    best = int(total.max())
    return best, 25 if all_pairs else 20


def symmetric_optimum():
    w = win_table(False)
    best = 0
    for a in itertools.product(range(16), repeat=5):
        best = max(best, sum(int(w[x, y, a[x], a[y]]) for x in range(5) for y in range(5) if x != y))
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--expect-distinct", type=int)
    ap.add_argument("--expect-all", type=int)
    ap.add_argument("--symmetric", action="store_true", help="also compute the shared-strategy optimum")
    args = ap.parse_args()
    out = {}
    out["distinct_wins"], out["distinct_questions"] = optimum(False)
    out["all_wins"], out["all_questions"] = optimum(True)
    if args.symmetric:
        out["symmetric_distinct_wins"] = symmetric_optimum()
    print(json.dumps(out))
    bad = (args.expect_distinct is not None and args.expect_distinct != out["distinct_wins"]) or \
          (args.expect_all is not None and args.expect_all != out["all_wins"])
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
