"""Dense integer polynomial kernels, pure Python.

A polynomial is a tuple of ints, lowest degree first, with no trailing
zeros; the zero polynomial is the empty tuple.  The compiled module
``_ckernel`` exposes exactly the same functions.
"""
from math import gcd

BACKEND = "python"


def p_trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return p_trim(out)


def p_sub(a, b):
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return p_trim(out)


def p_neg(a):
    return tuple(-c for c in a)


def p_scale(a, c):
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def p_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def p_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def p_divexact_int(a, c):
    out = []
    for x in a:
        d, r = divmod(x, c)
        if r:
            raise ArithmeticError("inexact integer division")
        out.append(d)
    return tuple(out)


def p_divexact(a, b):
    """Quotient a/b in Z[q]; raises ArithmeticError when b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ()
    db = len(b) - 1
    if len(a) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    r = list(a)
    lb = b[db]
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c, rem = divmod(r[i + db], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        quo[i] = c
        if c:
            for j in range(db + 1):
                r[i + j] -= c * b[j]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quo)


def p_prem(a, b):
    """Pseudo-remainder of a by b."""
    db = len(b) - 1
    r = list(a)
    lb = b[db]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        r = list(p_trim(r))
    return tuple(r)


def p_primitive(a):
    if not a:
        return ()
    c = p_content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return p_divexact_int(a, c)


def p_gcd(a, b):
    """Primitive gcd in Z[q] with positive leading coefficient (content ignored)."""
    if not a:
        return p_primitive(b)
    if not b:
        return p_primitive(a)
    a = p_primitive(a)
    b = p_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        r = p_prem(a, b)
        a, b = b, p_primitive(r)
    return a
