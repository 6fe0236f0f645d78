"""Pure-Python convolution kernels.

Reference implementation of the hot loops; ``_kernels.pyx`` mirrors these
signatures exactly and is preferred when it has been compiled.
"""


def convolve_int(a, b):
    """Full product of two integer coefficient sequences."""
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    out = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def cauchy(a, b, zero):
    """Truncated Cauchy product: ``c[n] = sum(a[j] * b[n - j])`` for n < len(a).

    ``a`` and ``b`` must have equal length; entries are arbitrary ring elements.
    """
    n = len(a)
    out = []
    for m in range(n):
        acc = zero
        for j in range(m + 1):
            x = a[j]
            if x:
                y = b[m - j]
                if y:
                    acc = acc + x * y
        out.append(acc)
    return out
