"""Pure-Python versions of the word kernels.

Letters are nonzero ints: ``+i`` is ``x_i`` and ``-i`` is ``x_i^-1``.
Token codes for :func:`evaluate_codes` are ``4 * (index - 1) + kind`` with
kind 0 = sigma, 1 = sigma^-1, 2 = rho, 3 = tau.
"""


def reduce_letters(letters):
    out = []
    push = out.append
    pop = out.pop
    for a in letters:
        if out and out[-1] == -a:
            pop()
        else:
            push(a)
    return tuple(out)


def invert_letters(letters):
    return tuple([-a for a in reversed(letters)])


def substitute(images, letters):
    """Image of the word ``letters`` under ``x_i -> images[i-1]``, reduced."""
    out = []
    push = out.append
    pop = out.pop
    for a in letters:
        if a > 0:
            piece = images[a - 1]
        else:
            piece = [-b for b in reversed(images[-a - 1])]
        for b in piece:
            if out and out[-1] == -b:
                pop()
            else:
                push(b)
    return tuple(out)


def conjugate_letters(u, w):
    """Reduced ``w^-1 u w``."""
    return reduce_letters(invert_letters(w) + tuple(u) + tuple(w))


def evaluate_codes(n, codes):
    """Left-to-right fold of generator automorphisms.

    Returns the tuple of generator images of the product.  The running
    product ``acc`` is replaced by ``acc o g`` for each generator ``g``, so
    only the one or two images that ``g`` touches are recomputed.
    """
    imgs = [(i,) for i in range(1, n + 1)]
    for code in codes:
        i, kind = divmod(code, 4)
        if kind == 0:
            a, b = imgs[i], imgs[i + 1]
            imgs[i] = b
            imgs[i + 1] = reduce_letters(invert_letters(b) + a + b)
        elif kind == 1:
            a, b = imgs[i], imgs[i + 1]
            imgs[i] = reduce_letters(a + b + invert_letters(a))
            imgs[i + 1] = a
        elif kind == 2:
            imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
        else:
            imgs[i] = invert_letters(imgs[i])
    return tuple(imgs)
