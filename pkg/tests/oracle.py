"""Independent reference implementations on plain nested lists.

Nothing here imports the package under test.
"""

from itertools import combinations, product


def grid_contains(host, pat):
    m, n = len(host), len(host[0])
    k, l = len(pat), len(pat[0])
    ones = [(i, j) for i in range(k) for j in range(l) if pat[i][j]]
    for rs in combinations(range(m), k):
        for cs in combinations(range(n), l):
            if all(host[rs[i]][cs[j]] for i, j in ones):
                return True
    return False


def grid_saturated(host, pat):
    if grid_contains(host, pat):
        return False
    for i, row in enumerate(host):
        for j, v in enumerate(row):
            if not v:
                flipped = [list(r) for r in host]
                flipped[i][j] = 1
                if not grid_contains(flipped, pat):
                    return False
    return True


def all_grids(m, n):
    for bits in product((0, 1), repeat=m * n):
        yield [list(bits[i * n:(i + 1) * n]) for i in range(m)]


def sat_ex(pat, m, n):
    """(sat, ex) by scanning all 2^(mn) matrices."""
    sat = ex = None
    for g in all_grids(m, n):
        w = sum(map(sum, g))
        if not grid_contains(g, pat):
            ex = w if ex is None else max(ex, w)
            if grid_saturated(g, pat):
                sat = w if sat is None else min(sat, w)
    return sat, ex


def grid_sat_ex_witnesses(pat, m, n):
    """(sat, ex) with the first saturated grid of each extreme weight in row-major lexicographic order."""
    sat = ex = None
    for g in all_grids(m, n):
        w = sum(map(sum, g))
        if grid_contains(g, pat):
            continue
        if ex is None or w > ex[0]:
            ex = (w, g)
        if grid_saturated(g, pat) and (sat is None or w < sat[0]):
            sat = (w, g)
    return sat, ex


def avoid_table(pat, m, n):
    """Boolean array over all m x n grids (bit i*n+j is cell (i, j)) marking those avoiding pat."""
    import numpy as np

    k, l = len(pat), len(pat[0])
    ones = [(i, j) for i in range(k) for j in range(l) if pat[i][j]]
    grids = np.arange(1 << (m * n), dtype=np.int64)
    hit = np.zeros(grids.shape, dtype=bool)
    for rs in combinations(range(m), k):
        for cs in combinations(range(n), l):
            e = 0
            for i, j in ones:
                e |= 1 << (rs[i] * n + cs[j])
            hit |= (grids & e) == e
    return ~hit


def fast_sat_ex(pat, m, n):
    """(sat, ex) over all m x n grids, vectorised with numpy."""
    import numpy as np

    avoid = avoid_table(pat, m, n)
    grids = np.arange(avoid.size, dtype=np.int64)
    saturated = avoid.copy()
    for c in range(m * n):
        b = 1 << c
        zero = (grids & b) == 0
        saturated &= ~zero | ~avoid[grids | b]
    weight = np.array([bin(x).count("1") for x in range(avoid.size)])
    return int(weight[saturated].min()), int(weight[avoid].max())
