#!/usr/bin/env python3
# Copyright 2026 The multiport-gpt Authors
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

"""Writes the reference matrices under fixtures/.

Independent of the C++ library: states are enumerated and ordered here, the
published block patterns are expanded by hand, and the two-particle member of
the superquantum tritter family is solved with sympy.

    python3 tools/make_fixtures.py [OUTDIR]
"""

import itertools
import json
import pathlib
import sys
from fractions import Fraction as F

import sympy


def compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def canonical_states(n, k):
    """Partition classes most-bunched first, descending lexicographic inside."""
    states = list(compositions(n, k))
    return sorted(states, key=lambda s: (tuple(sorted(s, reverse=True)), s), reverse=True)


def partition(s):
    return tuple(sorted((x for x in s if x), reverse=True))


def frac_text(q):
    q = F(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def dump(value, depth=0):
    pad, close = "  " * (depth + 1), "  " * depth
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [pad + json.dumps(k) + ": " + dump(value[k], depth + 1) for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, list):
        if all(not isinstance(v, (list, dict)) for v in value):
            return "[" + ", ".join(json.dumps(v) for v in value) + "]"
        return "[\n" + ",\n".join(pad + dump(v, depth + 1) for v in value) + "\n" + close + "]"
    return json.dumps(value)


def matrix_json(n, k, rows, inputs=None, outputs=None):
    inputs = inputs or canonical_states(n, k)
    outputs = outputs or canonical_states(n, k)
    return {
        "encoding": "rational",
        "input_states": [list(s) for s in inputs],
        "matrix": [[frac_text(x) for x in row] for row in rows],
        "mode_count": k,
        "output_states": [list(s) for s in outputs],
        "particle_count": n,
    }


def from_blocks(n, k, blocks):
    """blocks[(out_partition, in_partition)] -> value shared by the whole block."""
    states = canonical_states(n, k)
    return [[F(blocks[(partition(o), partition(i))]) for i in states] for o in states]


def relabel(n, k, printed_order, rows):
    """Reorders a matrix printed in `printed_order` (rows = outputs) canonically."""
    states = canonical_states(n, k)
    pos = {s: printed_order.index(s) for s in states}
    return [[F(rows[pos[o]][pos[i]]) for i in states] for o in states]


def deletion(n, k):
    ins, outs = canonical_states(n, k), canonical_states(n - 1, k)
    d = [[F(0)] * len(ins) for _ in outs]
    for j, s in enumerate(ins):
        for m, occ in enumerate(s):
            if occ:
                t = list(s)
                t[m] -= 1
                d[outs.index(tuple(t))][j] = F(occ, n)
    return d


def check_stochastic(rows, doubly=True):
    cols = list(zip(*rows))
    assert all(sum(c) == 1 for c in cols), "column sums"
    if doubly:
        assert all(sum(r) == 1 for r in rows), "row sums"


def induced_lower(s_upper, n, k):
    """The X with X D = D S for the (n -> n-1) deletion matrix D."""
    d = sympy.Matrix(deletion(n, k))
    r = d * sympy.Matrix(s_upper)
    x = r * d.T * (d * d.T).inv()
    assert x * d == r, "no consistent lower-level matrix"
    return [[F(int(v.p), int(v.q)) for v in x.row(i)] for i in range(x.rows)]


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "fixtures")
    out.mkdir(parents=True, exist_ok=True)
    files = {}

    bs_order = [(2, 0), (1, 1), (0, 2)]
    bs = relabel(2, 2, bs_order, [["1/4", "1/2", "1/4"], ["1/2", "0", "1/2"], ["1/4", "1/2", "1/4"]])
    files["beamsplitter_2p.json"] = matrix_json(2, 2, bs)

    d_printed = {((1, 0), (2, 0)): 1, ((1, 0), (1, 1)): F(1, 2), ((0, 1), (1, 1)): F(1, 2), ((0, 1), (0, 2)): 1}
    d_rows = [[F(d_printed.get((o, i), 0)) for i in canonical_states(2, 2)] for o in canonical_states(1, 2)]
    assert d_rows == deletion(2, 2)
    files["deletion_2to1_k2.json"] = matrix_json(2, 2, d_rows, outputs=canonical_states(1, 2))

    A, B, C = (3,), (2, 1), (1, 1, 1)
    tritter = from_blocks(3, 3, {
        (A, A): F(1, 27), (A, B): F(1, 9), (A, C): F(2, 9),
        (B, A): F(1, 9), (B, B): F(1, 9), (B, C): 0,
        (C, A): F(2, 9), (C, B): 0, (C, C): F(1, 3)})
    files["tritter_boson_3p.json"] = matrix_json(3, 3, tritter)

    superquantum = from_blocks(3, 3, {
        (A, A): 0, (A, B): F(1, 8), (A, C): F(1, 4),
        (B, A): F(1, 8), (B, B): F(5, 48), (B, C): 0,
        (C, A): F(1, 4), (C, B): 0, (C, C): F(1, 4)})
    files["superquantum_tritter_3p.json"] = matrix_json(3, 3, superquantum)

    four_port = from_blocks(3, 4, {
        (A, A): F(3, 32), (A, B): F(3, 64), (A, C): F(1, 64),
        (B, A): F(1, 96), (B, B): F(13, 192), (B, C): F(7, 192),
        (C, A): F(1, 8), (C, B): 0, (C, C): F(1, 8)})
    files["superquantum_4port_3p.json"] = matrix_json(3, 4, four_port)

    quarter, eighth = F(1, 4), F(1, 8)
    fourier_a = [[eighth, 0, eighth, eighth, 0, eighth],
                 [0, quarter, 0, 0, quarter, 0],
                 [eighth, 0, eighth, eighth, 0, eighth],
                 [eighth, 0, eighth, eighth, 0, eighth],
                 [0, quarter, 0, 0, quarter, 0],
                 [eighth, 0, eighth, eighth, 0, eighth]]
    grover_a = [[quarter, 0, 0, 0, 0, quarter],
                [0, quarter, 0, 0, quarter, 0],
                [0, 0, quarter, quarter, 0, 0],
                [0, 0, quarter, quarter, 0, 0],
                [0, quarter, 0, 0, quarter, 0],
                [quarter, 0, 0, 0, 0, quarter]]
    states42 = canonical_states(2, 4)
    spread = [s for s in states42 if partition(s) == (1, 1)]
    for name, block in (("fourier4_boson_2p.json", fourier_a), ("grover4_boson_2p.json", grover_a)):
        rows = []
        for o in states42:
            row = []
            for i in states42:
                if partition(o) == (2,) and partition(i) == (2,):
                    row.append(F(1, 16))
                elif partition(o) == (2,) or partition(i) == (2,):
                    row.append(eighth)
                else:
                    row.append(F(block[spread.index(o)][spread.index(i)]))
            rows.append(row)
        files[name] = matrix_json(2, 4, rows)

    s2 = induced_lower(superquantum, 3, 3)
    uniform = [[F(1, 3)] * 3 for _ in range(3)]
    files["superquantum_tritter_family.json"] = {
        "members": [matrix_json(1, 3, uniform), matrix_json(2, 3, s2), matrix_json(3, 3, superquantum)],
        "mode_count": 3,
    }

    for name, data in files.items():
        members = data.get("members", [data])
        for m in members:
            rows = [[F(x) for x in r] for r in m["matrix"]]
            check_stochastic(rows, doubly=m["input_states"] == m["output_states"])
        (out / name).write_text(dump(data) + "\n")
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
