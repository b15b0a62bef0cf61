from loopbraid import _kernels

BACKENDS = [_kernels.python_kernels]
if _kernels.compiled_kernels is not None:
    BACKENDS.append(_kernels.compiled_kernels)


def naive_reduce(letters):
    """Scan for an adjacent cancelling pair, delete it, repeat until none is left."""
    w = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            if w[k] == -w[k + 1]:
                del w[k:k + 2]
                changed = True
                break
    return tuple(w)
