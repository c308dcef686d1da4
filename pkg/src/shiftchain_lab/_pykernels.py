"""Pure-Python search kernels.

Reference implementation of the compiled kernels in ``_ckernels.pyx``. Both
must return identical results, including node counts.

Edges arrive flattened: ``flat[e*m:(e+1)*m]`` holds edge ``e`` as 1-based
vertex ids. Colors are 1..k. Each kernel returns ``(colors or None, nodes)``.
"""

from itertools import product

BACKEND = "python"


def _edge_lists(m, flat):
    return [tuple(flat[i:i + m]) for i in range(0, len(flat), m)]


def exhaustive(n, k, m, flat, polychromatic):
    """Test all k**n colorings in lexicographic order; nodes = colorings tested."""
    edges = [tuple(v - 1 for v in e) for e in _edge_lists(m, flat)]
    nodes = 0
    for colors in product(range(1, k + 1), repeat=n):
        nodes += 1
        if polychromatic:
            ok = all(len({colors[v] for v in e}) == k for e in edges)
        else:
            ok = all(any(colors[v] != colors[e[0]] for v in e) for e in edges)
        if ok:
            return colors, nodes
    return None, nodes


def backtrack(n, k, m, flat, polychromatic, first_colors=None):
    """Assign vertices 1..n in order, colors ascending, pruning dead edges.

    Proper: an edge whose vertices are all assigned one color is dead.
    Polychromatic: an edge is dead when its unassigned vertices cannot
    supply the colors it still misses. ``first_colors`` restricts the
    choices for vertex 1. nodes = single-vertex assignments made.
    """
    edges = _edge_lists(m, flat)
    incident = [[] for _ in range(n + 1)]
    for e, verts in enumerate(edges):
        for v in verts:
            incident[v].append(e)
    t = len(edges)
    counts = [[0] * (k + 1) for _ in range(t)]
    assigned = [0] * t
    distinct = [0] * t
    choices = list(first_colors) if first_colors is not None else list(range(1, k + 1))
    choice_pos = [0] * (n + 2)
    colors = [0] * (n + 2)
    nodes = 0
    v = 1
    while True:
        if v == 0:
            return None, nodes
        if v > n:
            return tuple(colors[1:n + 1]), nodes
        c = colors[v]
        if c:
            for e in incident[v]:
                cnt = counts[e]
                cnt[c] -= 1
                if cnt[c] == 0:
                    distinct[e] -= 1
                assigned[e] -= 1
        # next candidate color for v
        if v == 1:
            pos = choice_pos[1]
            if pos >= len(choices):
                colors[1] = 0
                v = 0
                continue
            c = choices[pos]
            choice_pos[1] = pos + 1
        else:
            c += 1
            if c > k:
                colors[v] = 0
                v -= 1
                continue
        colors[v] = c
        nodes += 1
        ok = True
        for e in incident[v]:
            cnt = counts[e]
            if cnt[c] == 0:
                distinct[e] += 1
            cnt[c] += 1
            assigned[e] += 1
            if polychromatic:
                if m - assigned[e] < k - distinct[e]:
                    ok = False
            elif assigned[e] == m and cnt[c] == m:
                ok = False
        if ok:
            v += 1
            if v <= n:
                colors[v] = 0
