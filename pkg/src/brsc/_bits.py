"""Small helpers for vertex subsets encoded as Python ints."""

from itertools import combinations


def bit(i):
    return 1 << i


def popcount(x):
    return x.bit_count()


def members(x):
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def from_indices(idx):
    x = 0
    for i in idx:
        x |= 1 << i
    return x


def subsets(x):
    """All submasks of ``x`` (including 0 and ``x``)."""
    sub = x
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & x


def subsets_of_size(x, k):
    for combo in combinations(members(x), k):
        yield from_indices(combo)


def lex_key(x):
    """Sort key: cardinality first, then the sorted index tuple."""
    m = members(x)
    return (len(m), m)
