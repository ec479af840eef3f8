"""Pure-Python permutation-group closure (fallback for the compiled kernel)."""

from __future__ import annotations


def perm_closure(gens, cap):
    """Breadth-first closure of permutation generators.

    Returns ``(elements, parent, via)`` where ``elements[k] = elements[parent[k]] * gens[via[k]]``
    (composition ``(p * g)[i] = p[g[i]]``), with the identity first. Raises
    ``OverflowError`` once more than ``cap`` elements appear.
    """
    gens = [tuple(g) for g in gens]
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    elements = [ident]
    parent = [-1]
    via = [-1]
    seen = {ident: 0}
    head = 0
    while head < len(elements):
        p = elements[head]
        for gi, g in enumerate(gens):
            q = tuple([p[x] for x in g])
            if q not in seen:
                seen[q] = len(elements)
                elements.append(q)
                parent.append(head)
                via.append(gi)
                if len(elements) > cap:
                    raise OverflowError(f"group order exceeds cap {cap}")
        head += 1
    return elements, parent, via
