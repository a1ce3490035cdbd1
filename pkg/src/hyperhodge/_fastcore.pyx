# cython: language_level=3
"""Compiled sweep kernel; see ``_purecore`` for the annotated twin.

Same integer-lattice algorithms, with C integers and inline loops.  The
public surface (sweep_confluent, sweep_balanced, verify_case, LABEL) is
identical, and the backend tests assert result-for-result equality.

Capacity limits: sequence lengths up to 8 per side, lattice up to 256
values (entry denominators up to 24 or so).
"""

LABEL = "compiled"


cdef long long ll_gcd(long long a, long long b) noexcept:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long ll_lcm(long long a, long long b) noexcept:
    return a // ll_gcd(a, b) * b


cdef void insertion_sort(long long *x, int n) noexcept:
    cdef int i, j
    cdef long long v
    for i in range(1, n):
        v = x[i]
        j = i - 1
        while j >= 0 and x[j] > v:
            x[j + 1] = x[j]
            j -= 1
        x[j + 1] = v


cdef int build_lattice(int max_den, int max_n, long long *l_out, long long *vals) noexcept:
    """Fill vals with sorted numerators over L; returns the count."""
    cdef long long L = 1
    cdef int q, k, cnt, i, hit
    cdef long long v
    cdef int top = max_den if max_den > max_n else max_n
    cdef long long seen[256]
    for q in range(2, top + 1):
        L = ll_lcm(L, q)
    cnt = 0
    for q in range(1, max_den + 1):
        for k in range(q):
            v = k * (L // q)
            hit = 0
            for i in range(cnt):
                if seen[i] == v:
                    hit = 1
                    break
            if not hit:
                seen[cnt] = v
                cnt += 1
    insertion_sort(seen, cnt)
    for i in range(cnt):
        vals[i] = seen[i]
    l_out[0] = L
    return cnt


cdef int verify_core(long long *a, int n, long long *b, int m,
                     long long L, long long Q,
                     long long *rho, long long *orc,
                     long long *d0_out, long long *g_out) noexcept:
    """Both routes for one confluent case; returns flags
    (bit 0: agrees, bit 1: unit-eigenvalue violation)."""
    cdef int mu = n - m
    cdef long long qmu = Q // mu
    cdef int k, i, below, strong
    cdef long long ak, apk, fr, g, d_all, d, xl, d0
    cdef long long ap[8]
    cdef long long ov[16]
    cdef int flags = 0

    for k in range(1, n + 1):
        ak = a[k - 1]
        below = 0
        for i in range(m):
            if b[i] < ak:
                below += 1
        rho[k - 1] = mu * ak - Q * (k - below)

    strong = 1
    for i in range(n):
        if a[i] % qmu == 0:
            strong = 0
            break
    if strong:
        for i in range(m):
            if b[i] == 0:
                strong = 0
                break
    if strong:
        g = 0
    else:
        d_all = mu
        for i in range(n + m):
            xl = (a[i] if i < n else b[i - n]) >> 1
            d = L // ll_gcd(xl, L)
            d_all = d_all // ll_gcd(d_all, d) * d
        g = L // d_all
    g_out[0] = g

    for i in range(n):
        ap[i] = a[i] + g
    for i in range(m):
        ov[i] = b[i] + g
    for i in range(mu):
        ov[m + i] = i * qmu
    insertion_sort(ov, n)

    for k in range(1, n + 1):
        apk = ap[k - 1]
        below = 0
        for i in range(n):
            if ov[i] < apk:
                below += 1
        fr = (mu * apk) % Q
        if fr == 0:
            flags |= 2
        orc[k - 1] = fr + Q * (below - k)

    insertion_sort(rho, n)
    insertion_sort(orc, n)
    d0 = orc[0] - rho[0]
    d0_out[0] = d0
    for i in range(n):
        if orc[i] - rho[i] != d0:
            return flags
    return flags | 1


def sweep_confluent(int max_n=4, int max_den=8):
    """Run both routes over every valid confluent pair (n <= max_n,
    n > m >= 0, entry denominators <= max_den) and tally the outcomes."""
    if not 1 <= max_n <= 8:
        raise ValueError("max_n must be in 1..8")
    if not 1 <= max_den <= 24:
        raise ValueError("max_den must be in 1..24")
    cdef long long L = 0
    cdef long long vals[256]
    cdef int nv = build_lattice(max_den, max_n, &L, vals)
    cdef long long Q = 2 * L
    cdef int i
    cdef long long F[256]
    for i in range(nv):
        F[i] = 2 * vals[i]

    cdef long long cases = 0, agree = 0, shift_expected = 0, rank_ok = 0
    cdef long long strong_violations = 0, gamma_positive = 0
    cdef int n, m, mu, j, flags, pos
    cdef int ai[8]
    cdef int bi[8]
    cdef long long a[8]
    cdef long long b[8]
    cdef long long rest[256]
    cdef int nrest
    cdef long long rho[8]
    cdef long long orc[8]
    cdef long long d0 = 0, g = 0
    cdef bint used[256]

    for n in range(1, max_n + 1):
        if n > nv:
            break
        for i in range(n):
            ai[i] = i
        while True:
            for i in range(nv):
                used[i] = 0
            for i in range(n):
                a[i] = F[ai[i]]
                used[ai[i]] = 1
            nrest = 0
            for i in range(nv):
                if not used[i]:
                    rest[nrest] = F[i]
                    nrest += 1
            for m in range(0, n):
                mu = n - m
                if m == 0:
                    flags = verify_core(a, n, b, 0, L, Q, rho, orc, &d0, &g)
                    cases += 1
                    agree += flags & 1
                    strong_violations += (flags >> 1) & 1
                    gamma_positive += g > 0
                    shift_expected += d0 == Q + mu * g
                    rank_ok += 1
                elif m <= nrest:
                    for i in range(m):
                        bi[i] = i
                    while True:
                        for i in range(m):
                            b[i] = rest[bi[i]]
                        flags = verify_core(a, n, b, m, L, Q, rho, orc, &d0, &g)
                        cases += 1
                        agree += flags & 1
                        strong_violations += (flags >> 1) & 1
                        gamma_positive += g > 0
                        shift_expected += d0 == Q + mu * g
                        rank_ok += 1
                        pos = m - 1
                        while pos >= 0 and bi[pos] == nrest - m + pos:
                            pos -= 1
                        if pos < 0:
                            break
                        bi[pos] += 1
                        for j in range(pos + 1, m):
                            bi[j] = bi[j - 1] + 1
            pos = n - 1
            while pos >= 0 and ai[pos] == nv - n + pos:
                pos -= 1
            if pos < 0:
                break
            ai[pos] += 1
            for j in range(pos + 1, n):
                ai[j] = ai[j - 1] + 1

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


def sweep_balanced(int max_n=4, int max_den=8):
    """For every valid pair with n = m <= max_n: check integrality of the
    generic jump formula (whose mu-term vanishes) and agreement with the
    counting multiset {#{i : beta_i < alpha_k} - k}."""
    if not 1 <= max_n <= 8:
        raise ValueError("max_n must be in 1..8")
    if not 1 <= max_den <= 24:
        raise ValueError("max_den must be in 1..24")
    cdef long long L = 0
    cdef long long vals[256]
    cdef int nv = build_lattice(max_den, max_n, &L, vals)
    cdef long long Q = 2 * L
    cdef int i
    cdef long long F[256]
    for i in range(nv):
        F[i] = 2 * vals[i]

    cdef long long cases = 0, integral = 0, formula_match = 0
    cdef int n, j, k, below, pos, ok
    cdef int ai[8]
    cdef int bi[8]
    cdef long long a[8]
    cdef long long b[8]
    cdef long long rest[256]
    cdef int nrest
    cdef long long rho[8]
    cdef long long counts[8]
    cdef long long ak, r0, c0
    cdef bint used[256]

    for n in range(1, max_n + 1):
        if 2 * n > nv:
            break
        for i in range(n):
            ai[i] = i
        while True:
            for i in range(nv):
                used[i] = 0
            for i in range(n):
                a[i] = F[ai[i]]
                used[ai[i]] = 1
            nrest = 0
            for i in range(nv):
                if not used[i]:
                    rest[nrest] = F[i]
                    nrest += 1
            if nrest >= n:
                for i in range(n):
                    bi[i] = i
                while True:
                    for i in range(n):
                        b[i] = rest[bi[i]]
                    for k in range(1, n + 1):
                        ak = a[k - 1]
                        below = 0
                        for i in range(n):
                            if b[i] < ak:
                                below += 1
                        rho[k - 1] = -Q * (k - below)
                        counts[k - 1] = below - k
                    cases += 1
                    ok = 1
                    for i in range(n):
                        if rho[i] % Q != 0:
                            ok = 0
                    integral += ok
                    insertion_sort(rho, n)
                    insertion_sort(counts, n)
                    r0 = rho[0]
                    c0 = counts[0]
                    ok = 1
                    for i in range(n):
                        if rho[i] - r0 != Q * (counts[i] - c0):
                            ok = 0
                    formula_match += ok
                    pos = n - 1
                    while pos >= 0 and bi[pos] == nrest - n + pos:
                        pos -= 1
                    if pos < 0:
                        break
                    bi[pos] += 1
                    for j in range(pos + 1, n):
                        bi[j] = bi[j - 1] + 1
            pos = n - 1
            while pos >= 0 and ai[pos] == nv - n + pos:
                pos -= 1
            if pos < 0:
                break
            ai[pos] += 1
            for j in range(pos + 1, n):
                ai[j] = ai[j - 1] + 1

    return {"cases": cases, "integral": integral, "formula_match": formula_match, "q": Q}


def verify_case(alpha, beta):
    """Run one confluent case given (numerator, denominator) pairs."""
    cdef int n = len(alpha), m = len(beta)
    if not 0 < n <= 8 or not 0 <= m <= 8 or n <= m:
        raise ValueError("need 0 <= m < n <= 8")
    cdef int mu = n - m
    cdef long long L = mu
    cdef long long num, den
    for num, den in list(alpha) + list(beta):
        L = ll_lcm(L, den)
    cdef long long Q = 2 * L
    cdef long long a[8]
    cdef long long b[8]
    cdef int i
    for i in range(n):
        a[i] = 2 * (alpha[i][0] * (L // alpha[i][1]))
    for i in range(m):
        b[i] = 2 * (beta[i][0] * (L // beta[i][1]))
    cdef long long rho[8]
    cdef long long orc[8]
    cdef long long d0 = 0, g = 0
    cdef int flags = verify_core(a, n, b, m, L, Q, rho, orc, &d0, &g)
    return {
        "q": Q,
        "agrees": bool(flags & 1),
        "raw_shift_num": d0,
        "gamma_num": g,
        "strong_violation": (flags >> 1) & 1,
        "theorem_nums": [rho[i] for i in range(n)],
        "oracle_nums": [orc[i] for i in range(n)],
    }
