"""Independent reference computations used to check the library.

Nothing here imports ``simphom``.  Boundary matrices are rebuilt from
scratch, ranks come from rational Gaussian elimination and invariant
factors from gcds of minors (determinantal divisors).
"""
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd


def closure(maximal):
    faces = set()
    for s in maximal:
        s = tuple(sorted(s))
        for k in range(1, len(s) + 1):
            faces.update(combinations(s, k))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    return {p: sorted(v) for p, v in by_dim.items()}


def boundary_matrix(by_dim, p):
    rows = by_dim.get(p - 1, [])
    cols = by_dim.get(p, [])
    index = {r: i for i, r in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            mat[index[s[:i] + s[i + 1:]]][j] = (-1) ** i
    return mat


def rational_rank(mat):
    m = [[Fraction(x) for x in row] for row in mat]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def bareiss_det(mat):
    n = len(mat)
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinantal_divisor(mat, k):
    """gcd of all k x k minors (0 if every minor vanishes).

    Column subsets are enumerated first; only rows meeting the support of
    the chosen columns can carry a nonzero minor.
    """
    if not mat or not mat[0]:
        return 0
    support = [[i for i in range(len(mat)) if mat[i][j]] for j in range(len(mat[0]))]
    cols = [j for j, s in enumerate(support) if s]
    g = 0
    for cj in combinations(cols, k):
        rows = sorted(set().union(*(support[j] for j in cj)))
        for ri in combinations(rows, k):
            g = gcd(g, bareiss_det([[mat[i][j] for j in cj] for i in ri]))
            if g == 1:
                return 1
    return g


def leading_invariant_factors(mat, upto):
    """d_1, ..., d_k (k = min(rank, upto)) via d_k = D_k / D_{k-1}."""
    r = min(rational_rank(mat), upto)
    out, prev = [], 1
    for k in range(1, r + 1):
        dk = determinantal_divisor(mat, k)
        out.append(dk // prev)
        prev = dk
    return out


def rank_mod(mat, prime):
    m = [[x % prime for x in row] for row in mat]
    if not m:
        return 0
    rank = 0
    for c in range(len(m[0])):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, prime)
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] * inv % prime
                m[r] = [(a - f * b) % prime for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _random_top_minor(mat, r, rng):
    """A nonzero r x r minor from greedily chosen independent rows/cols."""
    rows = list(range(len(mat)))
    rng.shuffle(rows)
    chosen = []
    for i in rows:
        if rational_rank([mat[k] for k in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == r:
                break
    sub = [mat[i] for i in chosen]
    cols = list(range(len(mat[0])))
    rng.shuffle(cols)
    picked = []
    for j in cols:
        trial = picked + [j]
        if rational_rank([[row[c] for c in trial] for row in sub]) == len(trial):
            picked = trial
            if len(picked) == r:
                break
    return bareiss_det([[row[c] for c in picked] for row in sub])


def invariant_factors(mat, tries=200, seed=0):
    """All nonzero invariant factors d_1 | ... | d_r.

    D_r = d_1 ... d_r divides every r x r minor, so the gcd G of sampled
    nonzero top minors is a multiple of D_r.  For a prime p,
    rank(Q) - rank(GF(p)) counts the d_i divisible by p, which bounds
    v_p(D_r) from below.  Once v_p(G) equals that count for every p | G,
    D_r = G and each d_i is squarefree, which fixes the list.  Otherwise
    every D_k is enumerated.
    """
    import random

    r = rational_rank(mat)
    if r == 0:
        return []
    rng = random.Random(seed)
    g = 0
    for _ in range(tries):
        g = gcd(g, _random_top_minor(mat, r, rng))
        factors = _prime_factors(g)
        deficit = {p: r - rank_mod(mat, p) for p in set(factors)}
        if all(factors.count(p) == e for p, e in deficit.items()):
            out = []
            for i in range(r):
                d = 1
                for p, e in deficit.items():
                    if i >= r - e:
                        d *= p
                out.append(d)
            return out
    return leading_invariant_factors(mat, r)


def homology(maximal):
    """[(betti, torsion)] for p = 0..dim."""
    by_dim = closure(maximal)
    if not by_dim:
        return []
    top = max(by_dim)
    ranks = {p: rational_rank(boundary_matrix(by_dim, p)) for p in range(1, top + 2)}
    out = []
    for p in range(top + 1):
        n_p = len(by_dim[p])
        betti = n_p - ranks.get(p, 0) - ranks.get(p + 1, 0)
        torsion = [d for d in invariant_factors(boundary_matrix(by_dim, p + 1)) if d > 1]
        out.append((betti, torsion))
    return out


def parity_by_transpositions(perm):
    """Sort by explicit swaps and count them."""
    a = list(perm)
    swaps = 0
    for i in range(len(a)):
        while a[i] != i:
            j = a[i]
            a[i], a[j] = a[j], a[i]
            swaps += 1
    return 1 if swaps % 2 == 0 else -1


def all_perms(n):
    return list(permutations(range(n)))
