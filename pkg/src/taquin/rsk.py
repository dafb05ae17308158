"""Row-insertion RSK, the star involution on permutations, and independent
shape oracles.

greene_shape deliberately shares no code with rsk(): it computes maximal
unions of increasing subsequences directly (min-cost flow), so the two routes
check each other.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right

from .dynamics import evacuation_path, jdt_slide, lazy_jdt_path
from .tableaux import StandardTableau, YoungDiagram, renumber

_INF = float("inf")


def _check_permutation(perm) -> tuple[int, ...]:
    perm = tuple(perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("input is not a permutation of 1..n")
    return perm


def standardize(word) -> tuple[int, ...]:
    """Replace each entry of a distinct-entry word by its rank, smallest = 1."""
    word = tuple(word)
    if len(set(word)) != len(word):
        raise ValueError("word must have distinct entries")
    order = sorted(range(len(word)), key=lambda i: word[i])
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def rsk(perm) -> tuple[StandardTableau, StandardTableau]:
    """Row insertion.  P gets the bumped values, Q records the growth."""
    perm = _check_permutation(perm)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, v in enumerate(perm, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([v])
                q_rows.append([step])
                break
            row = p_rows[r]
            idx = bisect_right(row, v)
            if idx == len(row):
                row.append(v)
                q_rows[r].append(step)
                break
            row[idx], v = v, row[idx]
            r += 1
    make = lambda rows: StandardTableau(tuple(tuple(x) for x in rows))
    return make(p_rows), make(q_rows)


def schuetzenberger_star(perm) -> tuple[int, ...]:
    """Reverse and complement: entry i becomes n+1-sigma_{n+1-i}."""
    perm = _check_permutation(perm)
    n = len(perm)
    return tuple(n + 1 - v for v in reversed(perm))


def check_shift_identity(perm) -> bool:
    """Sliding the recording tableau once and renumbering to 1..n-1 must equal
    the recording tableau of the permutation with its first letter dropped.
    Expected true always."""
    perm = _check_permutation(perm)
    if len(perm) < 2:
        raise ValueError("need n >= 2")
    _, q = rsk(perm)
    slid = renumber(jdt_slide(q).after)
    # the tail is a distinct word, not a permutation; recording tableaux only
    # see relative order
    _, q_tail = rsk(standardize(perm[1:]))
    return slid == q_tail


def path_equivalence_check(perm) -> bool:
    """The lazy path of Q(sigma), read at threshold p, must sit where the
    maximal entry of Q(star(sigma)) sits after n-p slides.  Expected true
    always."""
    perm = _check_permutation(perm)
    n = len(perm)
    if n == 0:
        return True
    _, q = rsk(perm)
    lazy = lazy_jdt_path(q).q
    _, q_star = rsk(schuetzenberger_star(perm))
    ev = evacuation_path(q_star).positions
    return all(lazy[p - 1] == ev[n - p] for p in range(1, n + 1))


def greene_shape(word, p: int) -> YoungDiagram:
    """Shape whose first i rows total the maximal number of elements of
    word[:p] coverable by i disjoint increasing subsequences.

    Computed as unit-capacity min-cost flow (cost -1 per covered element,
    successive shortest augmentations); augmentation i yields the i-chain
    optimum, so the whole profile comes from one run.
    """
    word = list(word)
    if len(set(word)) != len(word):
        raise ValueError("word must have distinct entries")
    if not 1 <= p <= len(word):
        raise ValueError(f"prefix length {p} outside 1..{len(word)}")
    profile = _cover_profile(word[:p])
    rows = []
    prev = 0
    for total in profile:
        rows.append(total - prev)
        prev = total
    for a, b in zip(rows, rows[1:]):
        # concavity of the successive-shortest-path optima
        assert a >= b, "cover profile must have decreasing increments"
    return YoungDiagram(tuple(rows))


def _cover_profile(w: list[int]) -> list[int]:
    """[L_1, L_2, ...]: L_i = max elements covered by i disjoint increasing
    subsequences; stops when coverage is complete or stops growing."""
    p = len(w)
    source, sink = 0, 2 * p + 1
    nn = 2 * p + 2
    graph: list[list[list[int]]] = [[] for _ in range(nn)]

    def add(u, v, cap, cost):
        graph[u].append([v, cap, cost, len(graph[v])])
        graph[v].append([u, 0, -cost, len(graph[u]) - 1])

    # element i splits into in-node 1+i and out-node 1+p+i
    for i in range(p):
        add(source, 1 + i, 1, 0)
        add(1 + i, 1 + p + i, 1, -1)
        add(1 + p + i, sink, 1, 0)
        for j in range(i + 1, p):
            if w[i] < w[j]:
                add(1 + p + i, 1 + j, 1, 0)

    # initial potentials: one DP pass in topological order handles the
    # negative arcs; afterwards Dijkstra on reduced costs
    topo = [source] + [x for i in range(p) for x in (1 + i, 1 + p + i)] + [sink]
    h = [_INF] * nn
    h[source] = 0
    for u in topo:
        if h[u] == _INF:
            continue
        for v, cap, cost, _ in graph[u]:
            if cap > 0 and h[u] + cost < h[v]:
                h[v] = h[u] + cost

    profile = []
    covered = 0
    while covered < p:
        dist = [_INF] * nn
        dist[source] = 0
        prev_edge: list[tuple[int, int]] = [(-1, -1)] * nn
        pq = [(0, source)]
        while pq:
            d, u = heapq.heappop(pq)
            if d > dist[u]:
                continue
            for ei, (v, cap, cost, _) in enumerate(graph[u]):
                if cap <= 0:
                    continue
                nd = d + cost + h[u] - h[v]
                if nd < dist[v]:
                    dist[v] = nd
                    prev_edge[v] = (u, ei)
                    heapq.heappush(pq, (nd, v))
        if dist[sink] == _INF:
            break
        real_cost = dist[sink] + h[sink]
        if real_cost >= 0:
            break
        for v in range(nn):
            if dist[v] < _INF:
                h[v] += dist[v]
        v = sink
        while v != source:
            u, ei = prev_edge[v]
            edge = graph[u][ei]
            edge[1] -= 1
            graph[v][edge[3]][1] += 1
            v = u
        covered += -real_cost
        profile.append(covered)
    return profile
