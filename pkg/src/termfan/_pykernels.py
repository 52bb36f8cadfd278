"""Pure-Python monomial kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors this
module function for function.  Monomials are tuples of non-negative ints.
"""


def mono_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mono_divides(a, b):
    """Return True if ``a`` divides ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_quotient(b, a):
    """Return ``b / a``; caller guarantees divisibility."""
    return tuple([y - x for x, y in zip(a, b)])


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def matrix_key(rows, m):
    """Return the tuple of row-vector dot products ``rows . m``."""
    return tuple([sum([w * e for w, e in zip(row, m)]) for row in rows])


def first_divisor(m, lms):
    """Index of the first monomial in ``lms`` dividing ``m``, or -1."""
    for k, a in enumerate(lms):
        for x, y in zip(a, m):
            if x > y:
                break
        else:
            return k
    return -1


def lcm_degree_profile(gens, max_degree=-1):
    """Signed inclusion-exclusion profile of a monomial generator set.

    Returns ``{d: c}`` where ``c`` is the sum of ``(-1)**|S|`` over subsets
    ``S`` of ``gens`` whose lcm has total degree ``d``.  With
    ``max_degree >= 0`` subsets whose lcm exceeds it are pruned together
    with all their supersets.
    """
    gens = [tuple(g) for g in gens]
    n = len(gens)
    if n == 0:
        return {0: 1}
    t = len(gens[0])
    profile = {0: 1}
    # iterative DFS: (next index, lcm, degree, sign)
    stack = [(0, (0,) * t, 0, 1)]
    while stack:
        start, cur, deg, sign = stack.pop()
        for k in range(start, n):
            g = gens[k]
            new = tuple([x if x > y else y for x, y in zip(cur, g)])
            d = sum(new)
            if 0 <= max_degree < d:
                continue
            profile[d] = profile.get(d, 0) - sign
            stack.append((k + 1, new, d, -sign))
    return {d: c for d, c in profile.items() if c}
