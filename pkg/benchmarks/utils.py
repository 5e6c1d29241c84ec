import timeit


def measure(func, inner_iterations=1, repeats=5):
    """
    Best speed of ``func`` over ``repeats`` runs, in ``inner_iterations``
    per second. Garbage collection is off while timing.
    """
    best = min(timeit.Timer(func).repeat(repeat=repeats, number=1))
    return inner_iterations / best
