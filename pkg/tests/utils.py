from orderzero.transformations import Transformation


def T(*images):
    """ Shorthand: ``T(1, 1, 2)`` """
    return Transformation(images)


def words(elements):
    """ Canonical text forms of ``elements`` """
    return [str(t) for t in elements]


def assert_report_passes(report):
    """ Check a claim report and show its failures if it did not pass """
    assert report.status == 'pass', (report.reason, report.evidence['failures'])


def naive_closure(generators):
    """ Closure by squaring the set found so far until it stops growing """
    elements = set(generators)
    while True:
        current = list(elements)
        elements.update(a * b for a in current for b in current)
        if len(elements) == len(current):
            return elements
