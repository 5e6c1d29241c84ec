import itertools
import json
import math
import os

try:
    from tqdm import tqdm
except ImportError:
    tqdm = None


def mem_usage_mb():
    """
    Resident memory of this process in megabytes; needs ``psutil``
    (ImportError otherwise).
    """
    import psutil
    return psutil.Process(os.getpid()).memory_info().rss / (1024 * 1024)


def binomial(a, b):
    """
    Binomial coefficient which is zero outside of ``0 <= b <= a``,
    so that closed-form counts stay total at boundary parameters:

        >>> binomial(5, 2)
        10
        >>> binomial(3, -1)
        0
        >>> binomial(2, 3)
        0
        >>> binomial(-1, 0)
        0
        >>> binomial(23, 11)
        1352078

    """
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def is_int(value):
    """
    True for integers other than bools:

        >>> is_int(3), is_int(True), is_int(2.0)
        (True, False, False)
    """
    return isinstance(value, int) and not isinstance(value, bool)


def nonempty_subsets(items, min_size=1, max_size=None):
    """
    Return all subsets of ``items`` (as tuples) ordered by size,
    then lexicographically:

        >>> [''.join(s) for s in nonempty_subsets('ABC')]
        ['A', 'B', 'C', 'AB', 'AC', 'BC', 'ABC']
        >>> [''.join(s) for s in nonempty_subsets('ABC', 2, 2)]
        ['AB', 'AC', 'BC']

    """
    items = list(items)
    if max_size is None:
        max_size = len(items)
    sizes = range(min_size, max_size + 1)
    return itertools.chain.from_iterable(itertools.combinations(items, k) for k in sizes)


def parse_point_set(text):
    """
    Parse a comma-separated list of chain points:

        >>> parse_point_set("1, 2,4")
        (1, 2, 4)
        >>> parse_point_set("3,1,3")
        (1, 3)
        >>> parse_point_set("1,x")
        Traceback (most recent call last):
        ...
        ValueError: Invalid point set: '1,x'

    """
    try:
        points = {int(part) for part in text.split(',') if part.strip()}
    except ValueError:
        raise ValueError(f"Invalid point set: {repr(text)}") from None
    return tuple(sorted(points))


def write_json(filename, doc):
    """ Write a store document; element words are plain ASCII """
    with open(filename, 'w', encoding='ascii') as f:
        json.dump(doc, f, indent=1)
        f.write('\n')


def read_json(filename):
    with open(filename, encoding='ascii') as f:
        return json.load(f)


def params_repr(params, hidden=()):
    """
    Render unit parameters for ``__repr__``; values of ``hidden``
    parameters are elided:

    >>> params_repr(dict(generators=None, min_degree=5))
    'generators=None, min_degree=5'
    >>> params_repr(dict(generators=[1, 2], budget=None), hidden=['generators'])
    'budget=None, generators=<...>'
    >>> params_repr({})
    ''
    """
    return ", ".join(
        f"{name}={'<...>' if name in hidden else repr(value)}"
        for name, value in sorted(params.items())
    )


def progress(iterable, desc=None, total=None):
    """
    Wrap ``iterable`` in a tqdm progress bar written to stderr.
    Without tqdm installed the iterable is returned as is.
    """
    if tqdm is None:
        return iterable
    if total is None and hasattr(iterable, '__len__'):
        total = len(iterable)
    return tqdm(iterable, desc=desc, total=total, leave=False)
