"""Pure-Python sweep kernel (fallback for the compiled extension).

Everything here works on integer numerators over a fixed even denominator
Q = 2 * L, where L is divisible by every denominator in play and by mu.
On that lattice the whole verification pipeline -- strengthening shift,
merged exponent sequence, nearby-cycle indices, covering pullback and jump
reindexing -- is exact integer arithmetic, which is what makes the
million-case grid sweeps feasible at all.  The companion module
``_fastcore.pyx`` is a line-for-line compiled version of the same
algorithms; ``tests/test_backends.py`` pins the two against each other and
against the high-level reference implementation.
"""

from itertools import combinations
from math import gcd

LABEL = "python"


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _lattice(max_den: int, max_n: int):
    """(L, sorted numerators over L of all fractions in [0,1) with reduced
    denominator <= max_den).  L is also divisible by 1..max_n so that any
    covering order mu <= max_n divides it."""
    L = 1
    for q in range(2, max(max_den, max_n) + 1):
        L = _lcm(L, q)
    nums = sorted({k * (L // q) for q in range(1, max_den + 1) for k in range(q)})
    return L, nums


def _verify_nums(a, b, L, Q):
    """Both routes for one confluent case; numerators over Q.

    Returns (agrees, d0, g, strong_violation) with d0 the constant
    oracle-minus-direct difference over Q (meaningful when agrees) and g
    the strengthening shift numerator over Q.
    """
    n, m = len(a), len(b)
    mu = n - m
    qmu = Q // mu

    rho = []
    for k in range(1, n + 1):
        ak = a[k - 1]
        below = sum(1 for x in b if x < ak)
        rho.append(mu * ak - Q * (k - below))

    strong = all(x % qmu for x in a) and all(x != 0 for x in b)
    if strong:
        g = 0
    else:
        d_all = mu
        for x in a + b:
            xl = x >> 1
            d = L // gcd(xl, L)
            d_all = d_all // gcd(d_all, d) * d
        g = L // d_all

    ap = [x + g for x in a]
    ov = sorted([x + g for x in b] + [l * qmu for l in range(mu)])

    orc = []
    strong_violation = 0
    for k in range(1, n + 1):
        apk = ap[k - 1]
        below = sum(1 for x in ov if x < apk)
        fr = (mu * apk) % Q
        if fr == 0:
            strong_violation = 1
        orc.append(fr + Q * (below - k))

    rho.sort()
    orc.sort()
    d0 = orc[0] - rho[0]
    agrees = all(y - x == d0 for x, y in zip(rho, orc))
    return agrees, d0, g, strong_violation, rho, orc


def sweep_confluent(max_n: int = 4, max_den: int = 8) -> dict:
    """Run both routes over every valid confluent pair (n <= max_n,
    n > m >= 0, entry denominators <= max_den) and tally the outcomes."""
    L, vals = _lattice(max_den, max_n)
    Q = 2 * L
    F = [2 * v for v in vals]
    cases = agree = shift_expected = rank_ok = 0
    strong_violations = gamma_positive = 0
    for n in range(1, max_n + 1):
        for alpha in combinations(F, n):
            aset = set(alpha)
            rest = [v for v in F if v not in aset]
            mu = 0  # silences linters; recomputed per m below
            for m in range(0, n):
                mu = n - m
                for beta in combinations(rest, m):
                    ok, d0, g, sv, rho, orc = _verify_nums(alpha, beta, L, Q)
                    cases += 1
                    agree += ok
                    strong_violations += sv
                    gamma_positive += g > 0
                    shift_expected += d0 == Q + mu * g
                    rank_ok += len(rho) == n and len(orc) == n
    return {
        "cases": cases,
        "agree": agree,
        "shift_defined": agree,
        "shift_expected": shift_expected,
        "rank_ok": rank_ok,
        "strong_violations": strong_violations,
        "gamma_positive": gamma_positive,
        "q": Q,
    }


def sweep_balanced(max_n: int = 4, max_den: int = 8) -> dict:
    """For every valid pair with n = m <= max_n: check that the generic
    jump formula lands on integers and reproduces the counting multiset
    {#{i : beta_i < alpha_k} - k} after shifting the minimum to zero."""
    L, vals = _lattice(max_den, max_n)
    Q = 2 * L
    F = [2 * v for v in vals]
    cases = integral = formula_match = 0
    for n in range(1, max_n + 1):
        for alpha in combinations(F, n):
            aset = set(alpha)
            rest = [v for v in F if v not in aset]
            for beta in combinations(rest, n):
                mu = 0
                rho = []
                counts = []
                for k in range(1, n + 1):
                    ak = alpha[k - 1]
                    below = sum(1 for x in beta if x < ak)
                    rho.append(mu * ak - Q * (k - below))
                    counts.append(below - k)
                cases += 1
                if all(r % Q == 0 for r in rho):
                    integral += 1
                rho.sort()
                counts.sort()
                r0, c0 = rho[0], counts[0]
                if all(r - r0 == Q * (c - c0) for r, c in zip(rho, counts)):
                    formula_match += 1
    return {"cases": cases, "integral": integral, "formula_match": formula_match, "q": Q}


def verify_case(alpha, beta) -> dict:
    """Run one confluent case given (numerator, denominator) pairs.

    The caller guarantees validity (sorted, non-resonant, n > m); raw
    sorted jump numerators for both routes are returned over ``q``.
    """
    n, m = len(alpha), len(beta)
    mu = n - m
    L = mu
    for _, den in list(alpha) + list(beta):
        L = _lcm(L, den)
    Q = 2 * L
    a = [2 * (num * (L // den)) for num, den in alpha]
    b = [2 * (num * (L // den)) for num, den in beta]
    agrees, d0, g, sv, rho, orc = _verify_nums(a, b, L, Q)
    return {
        "q": Q,
        "agrees": bool(agrees),
        "raw_shift_num": d0,
        "gamma_num": g,
        "strong_violation": sv,
        "theorem_nums": rho,
        "oracle_nums": orc,
    }
