"""Depth-first diagram generation in diameter order.

A diagram with n diameters is a cyclic sequence of label pairs
d_t = (a_t, b_t) = (m_t, m_{t+n}).  In these coordinates the cofacet count
factors cleanly:

    cofacets = sum_t a_t b_t                    (complete diameters)
             + sum_{t1 < s < t2} a_t1 a_t2 b_s  (triangles, two front labels)
             + sum_{s1 < t < s2} b_s1 b_s2 a_t  (triangles, two back labels)

because an ascending position triple contains the center iff it consists of
two same-half labels with the opposite-half label strictly between their
diameter indices.  Assigning whole diameters therefore completes every
cofacet at its largest diameter index, which lets a branch-and-bound cut
reject heavy prefixes early.

The open semicircles also factor per diameter index: the semicircle clockwise
of position i sums a_{i+1..n-1} + b_{0..i-1}, and its antipodal mate sums
b_{i+1..n-1} + a_{0..i-1}.

The dihedral symmetries of the 2n-gon act on pair sequences as: rotate the
sequence by j diameters and flip (swap within the pair) the wrapped-around
entries, optionally flip every pair (the antipodal map), optionally reverse.
The enumeration keeps exactly the sequences that are lexicographically
minimal under this action, comparing pairs as (a, b) tuples.
"""
from __future__ import annotations

from .diagram import GaleDiagram
from .errors import CounterexampleError


def pair_views(pairs: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """All 4n dihedral images of a pair sequence."""
    n = len(pairs)
    flip = [(b, a) for (a, b) in pairs]
    out = []
    for j in range(n):
        out.append(pairs[j:] + flip[:j])
        out.append(flip[j:] + pairs[:j])
    rev = pairs[::-1]
    frev = flip[::-1]
    for c in range(n):
        # reflection fixing position c: d_c, d_{c-1}, .., d_0, ~d_{n-1}, .., ~d_{c+1}
        out.append(rev[n - 1 - c :] + frev[: n - 1 - c])
        out.append(frev[n - 1 - c :] + rev[: n - 1 - c])
    return out


def is_pair_canonical(pairs: list[tuple[int, int]]) -> bool:
    """Is the sequence the lexicographic minimum of its dihedral orbit?"""
    return all(pairs <= v for v in pair_views(pairs))


def run_shard(
    k: int,
    n: int,
    first_a: int,
    level: str,
    sum_cap: int,
    label_cap: int,
    best_seed: int | None,
    collect_leaves: bool,
):
    """Search the branch where the first diameter's front label is ``first_a``.

    Returns (best, witnesses, leaves, nodes, evaluated).  ``witnesses`` holds
    every leaf attaining ``best`` as a (front-labels + back-labels) tuple.
    With ``best_seed`` None the branch-and-bound cut is off and, if
    ``collect_leaves``, all leaves are returned for the plain enumerator.
    """
    p = k + 1
    want_minimal = level in ("minimal", "extremal")
    nonzero = level == "extremal"
    two_n = 2 * n

    av = [0] * n  # front labels a_t
    bv = [0] * n  # back labels b_t
    codes = [0] * n  # (a, b) encoded as a * K + b for fast lexicographic compares
    K = label_cap + 1

    best = best_seed
    witnesses: list[tuple[int, ...]] = []
    leaves: list[tuple[tuple[int, ...], int, int]] = []
    nodes = 0
    evaluated = 0

    if first_a > label_cap:
        return best, witnesses, leaves, nodes, evaluated

    def leaf(f_run: int, s_run: int) -> None:
        nonlocal best, evaluated
        # adjacency across the half boundary (positions n-1|n and 2n-1|0)
        if av[n - 1] + bv[0] == 0 or bv[n - 1] + av[0] == 0:
            return
        if nonzero and (av[n - 1] + bv[0] < 2 or bv[n - 1] + av[0] < 2):
            return
        sa = sum(av)
        sb = sum(bv)
        pa = 0
        pb = 0
        sums = [0] * two_n
        for i in range(n):
            w_front = (sa - pa - av[i]) + pb
            w_back = (sb - pb - bv[i]) + pa
            if w_front < p or w_back < p:
                return
            sums[i] = w_front
            sums[i + n] = w_back
            pa += av[i]
            pb += bv[i]
        if not is_pair_canonical(list(zip(av, bv))):
            return
        if want_minimal:
            labels = av + bv
            for i in range(two_n):
                if labels[i] and min(sums[(i - t) % two_n] for t in range(1, n)) > p:
                    return  # label i could be decremented: not minimal
        evaluated += 1
        diff = f_run - s_run
        if diff < 0:
            raise CounterexampleError(
                GaleDiagram(n=n, labels=tuple(av + bv)), f_run, s_run
            )
        if collect_leaves:
            leaves.append((tuple(av + bv), f_run, s_run))
        if best is None:
            return
        if diff < best:
            best = diff
            witnesses.clear()
        if diff == best:
            witnesses.append(tuple(av + bv))

    def dfs(
        t: int,
        s_run: int,
        f_run: int,
        sa: int,
        sb: int,
        xa: int,  # sum over assigned s of b_s * (front prefix before s)
        xb: int,  # sum over assigned s of a_s * (back prefix before s)
        mf: int,  # max over i < t of (front prefix through i) - (back prefix before i)
        mb: int,
        live0: list[int],  # rotations j tied with the identity so far
        live1: list[int],  # rotations j tied after the global pair flip
    ) -> None:
        nonlocal nodes
        nodes += 1
        if t == n:
            leaf(f_run, s_run)
            return

        budget = sum_cap - s_run
        slots = n - t  # unassigned diameters, this one included

        if want_minimal and sa - mf > p and sb - mb > p:
            # every semicircle already holds more than p assigned mass, so
            # every label of every completion can be decremented
            return

        # worst semicircle deficits; front deficits can only be paid with
        # future front labels and back deficits with future back labels
        d_front = p - sa + mf
        d_back = p - sb + mb
        cap_room = slots * label_cap
        if d_front > cap_room or d_back > cap_room:
            return
        df = d_front if d_front > 0 else 0
        db = d_back if d_back > 0 else 0
        if df + db > budget:
            return

        d0c = codes[0]
        a_lo = 0
        b_base = 0
        if av[t - 1] == 0:
            a_lo = 1
        if bv[t - 1] == 0:
            b_base = 1
        if nonzero:
            if 2 - av[t - 1] > a_lo:
                a_lo = 2 - av[t - 1]
            if 2 - bv[t - 1] > b_base:
                b_base = 2 - bv[t - 1]
        if t == n - 1:
            # the two semicircles that avoid the last diameter are settled
            if sa < p or sb < p:
                return
            # those through its positions receive no future mass either
            if d_front > a_lo:
                a_lo = d_front
            if d_back > b_base:
                b_base = d_back

        # lexicographic floors from rotations still tied with the identity
        r1 = d0c
        for j in live0:
            c = codes[t - j]
            if c > r1:
                r1 = c
        r2 = d0c
        for j in live1:
            c = codes[t - j]
            if c > r2:
                r2 = c

        # reversal pivoted at t, plain and pair-flipped, restricted to the
        # assigned prefix: the first strict difference decides
        rv0 = 0  # -1 view smaller (prune), 0 tied, 1 view bigger
        for s in range(1, t):
            x = codes[t - s]
            y = codes[s]
            if x != y:
                rv0 = -1 if x < y else 1
                break
        rv1 = 0
        for s in range(1, t):
            x = bv[t - s] * K + av[t - s]
            y = codes[s]
            if x != y:
                rv1 = -1 if x < y else 1
                break
        fd0c = bv[0] * K + av[0]

        floor_rest = slots - 1  # every remaining diameter carries mass
        if s_run + a_lo + floor_rest > sum_cap:
            return
        ra1, rb1 = divmod(r1, K)
        ra2, rb2 = divmod(r2, K)

        for a in range(a_lo, label_cap + 1):
            room = sum_cap - s_run - a - floor_rest
            if room < 0:
                break
            if a < ra1:
                continue
            b_lo = b_base
            if a == 0 and b_lo == 0:
                b_lo = 1  # no dead diameters
            if a == ra1 and rb1 > b_lo:
                b_lo = rb1
            # flipped pair (b, a) must not drop below r2
            if a >= rb2:
                if ra2 > b_lo:
                    b_lo = ra2
            elif ra2 + 1 > b_lo:
                b_lo = ra2 + 1
            b_cap = label_cap if label_cap < room else room
            if b_lo > b_cap:
                continue
            f_a = f_run + a * xa  # a closes front-front-back triangles
            for b in range(b_lo, b_cap + 1):
                code = a * K + b
                fcode = b * K + a
                if code == d0c and rv0 < 0:
                    continue
                if fcode == d0c and (rv1 < 0 or (rv1 == 0 and fd0c < code)):
                    continue
                f_child = f_a + a * b + b * xb
                saa = sa + a
                sbb = sb + b
                nmf = mf if mf >= saa - sb else saa - sb
                nmb = mb if mb >= sbb - sa else sbb - sa
                nxa = xa + b * sa
                nxb = xb + a * sb
                if best is not None:
                    s_max = s_run + a + b + (slots - 1) * 2 * label_cap
                    if s_max > sum_cap:
                        s_max = sum_cap
                    # deficits force future mass, and xa/xb only grow, so
                    # every forced front (back) unit closes at least the
                    # current xa (xb) triangles
                    guaranteed = f_child
                    dfr = p - saa + nmf
                    if dfr > 0:
                        guaranteed += dfr * nxa
                    dbr = p - sbb + nmb
                    if dbr > 0:
                        guaranteed += dbr * nxb
                    if guaranteed - s_max > best:
                        continue

                av[t] = a
                bv[t] = b
                codes[t] = code

                nlive0 = [j for j in live0 if codes[t - j] == code]
                if code == d0c:
                    nlive0.append(t)
                nlive1 = [j for j in live1 if codes[t - j] == fcode]
                if fcode == d0c:
                    nlive1.append(t)

                dfs(
                    t + 1,
                    s_run + a + b,
                    f_child,
                    saa,
                    sbb,
                    nxa,
                    nxb,
                    nmf,
                    nmb,
                    nlive0,
                    nlive1,
                )
        av[t] = 0
        bv[t] = 0
        codes[t] = 0

    # at t = 0 the pair-flipped view forces a_0 <= b_0; the shard fixes a_0
    a0 = first_a
    for b0 in range(a0 if a0 > 0 else 1, label_cap + 1):
        if a0 + b0 + (n - 1) > sum_cap:
            break
        av[0] = a0
        bv[0] = b0
        codes[0] = a0 * K + b0
        dfs(
            1,
            a0 + b0,
            a0 * b0,
            a0,
            b0,
            0,
            0,
            a0,
            b0,
            [],
            [0] if a0 == b0 else [],
        )
    av[0] = 0
    bv[0] = 0
    codes[0] = 0
    return best, witnesses, leaves, nodes, evaluated
