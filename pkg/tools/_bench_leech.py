"""Scratch benchmark: build Golay + Leech, time the norm-4 enumeration."""

import sys, time
sys.path.insert(0, "src")

from fractions import Fraction
from hksym import linalg


def golay_words():
    p = 23
    Q = {(i * i) % p for i in range(1, p)}
    # cyclic QR idempotent rows + parity extension
    rows = []
    for u in range(p):
        row = [0] * 24
        for r in Q:
            row[(u + r) % p] = 1
        row[23] = 1  # parity guess; fixed below
        rows.append(row)
    # fix parity bit so every row has weight divisible by 4
    for row in rows:
        w = sum(row[:23])
        row[23] = (4 - w) % 4 % 2 if (w % 2) else 0
        if (w + row[23]) % 2:
            row[23] ^= 1
    # reduce to a basis over GF(2)
    basis = []
    for row in rows + [[1] * 24]:
        cur = row[:]
        for b in basis:
            piv = next(i for i, x in enumerate(b) if x)
            if cur[piv]:
                cur = [(x ^ y) for x, y in zip(cur, b)]
        if any(cur):
            basis.append(cur)
    # close to 12-dim space and enumerate all words
    words = [0] * 1
    masks = []
    for b in basis:
        m = 0
        for i, x in enumerate(b):
            if x:
                m |= 1 << i
        masks.append(m)
    print("dim:", len(masks))
    all_words = []
    for k in range(1 << len(masks)):
        w = 0
        kk = k
        i = 0
        while kk:
            if kk & 1:
                w ^= masks[i]
            kk >>= 1
            i += 1
        all_words.append(w)
    from collections import Counter
    wc = Counter(bin(w).count("1") for w in all_words)
    print("weights:", dict(sorted(wc.items())))
    return masks, all_words


def leech_basis(code_masks):
    rows = []
    for m in code_masks:
        rows.append([2 if (m >> i) & 1 else 0 for i in range(24)])
    for j in range(1, 24):
        r = [0] * 24
        r[0] = 4
        r[j] = 4
        rows.append(r)
    r = [0] * 24
    r[0] = 8
    rows.append(r)
    rows.append([-3] + [1] * 23)
    h, _ = linalg.hnf_row(rows)
    b = [row for row in h if any(row)]
    assert len(b) == 24, len(b)
    gram = [[sum(x * y for x, y in zip(r1, r2)) // 8 for r2 in b] for r1 in b]
    # integrality check
    for r1 in b:
        for r2 in b:
            assert sum(x * y for x, y in zip(r1, r2)) % 8 == 0
    print("det gram:", linalg.det_bareiss(gram))
    return b, gram


masks, words = golay_words()
t0 = time.time()
B, G = leech_basis(masks)
print("basis built", time.time() - t0)

t0 = time.time()
G2, U = linalg.lll_reduce(G)
print("LLL done", time.time() - t0, "diag:", [G2[i][i] for i in range(24)])

t0 = time.time()
sv = linalg.enumerate_short_vectors(G2, 4)
t1 = time.time()
print("norm<=4 pairs:", len(sv), "time:", t1 - t0)
from collections import Counter
print(Counter(n for _, n in sv))
