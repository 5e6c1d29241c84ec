"""
:mod:`orderzero.store` is a module with the element container used by
enumeration and closure, and with saving / loading of such containers.
"""
import datetime
import logging

import numpy as np

import orderzero
from orderzero.config import SCHEMA_VERSION
from orderzero.transformations import (
    DegreeMismatch,
    OrderedPartition,
    Transformation,
    check_degree_value,
)
from orderzero.utils import read_json, write_json

logger = logging.getLogger(__name__)

CURRENT_FORMAT_VERSION = '1.0'


class ElementStore:
    """
    Deduplicated, insertion-ordered collection of transformations of
    one degree, optionally labeled with the id of the set it holds.

        >>> store = ElementStore(3, [Transformation((1, 1, 2))])
        >>> store.add(Transformation((1, 1, 2)))
        False
        >>> store.add(Transformation((1, 1, 1)))
        True
        >>> [str(t) for t in store]
        ['[1,1,2]', '[1,1,1]']
    """

    def __init__(self, degree, elements=(), label=None):
        check_degree_value(degree)
        self.degree = degree
        self.label = label
        self._elements = []
        self._index = {}
        for t in elements:
            self.add(t)

    def add(self, t):
        """ Add ``t``; return True if it was not in the store yet """
        if t.degree != self.degree:
            raise DegreeMismatch(f"Can't add {t} (degree {t.degree}) to a store of degree {self.degree}")
        if t in self._index:
            return False
        self._index[t] = len(self._elements)
        self._elements.append(t)
        return True

    def update(self, items):
        for t in items:
            self.add(t)

    def index(self, t):
        return self._index[t]

    @property
    def elements(self):
        return tuple(self._elements)

    def as_set(self):
        return frozenset(self._index)

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, t):
        return t in self._index

    def __getitem__(self, i):
        return self._elements[i]

    def __eq__(self, other):
        if not isinstance(other, ElementStore):
            return NotImplemented
        return self.degree == other.degree and self._index.keys() == other._index.keys()

    def __repr__(self):
        label = f", label={self.label!r}" if self.label is not None else ""
        return f"<ElementStore degree={self.degree} size={len(self)}{label}>"

    def sorted(self):
        """ A copy in lexicographic order """
        return ElementStore(self.degree, sorted(self._elements), self.label)

    def filter(self, predicate, label=None):
        return ElementStore(self.degree, (t for t in self._elements if predicate(t)), label)

    def to_array(self):
        """ 0-based images as an ``(len, degree)`` integer array """
        if not self._elements:
            return np.zeros((0, self.degree), dtype=np.int64)
        return np.array([t.images for t in self._elements], dtype=np.int64) - 1


def to_jsonable(obj):
    """
    Convert library values to JSON-compatible data with transformations
    in their canonical text form:

        >>> to_jsonable({'a': [Transformation((1, 2)), frozenset({3, 1})]})
        {'a': ['[1,2]', [1, 3]]}
    """
    if isinstance(obj, Transformation):
        return str(obj)
    if isinstance(obj, ElementStore):
        return [str(t) for t in obj]
    if isinstance(obj, OrderedPartition):
        return [list(block) for block in obj]
    if hasattr(obj, '_asdict'):
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def save_store(store, filename):
    """ Save ``store`` to a JSON file together with its metadata """
    label = store.label
    meta = [
        ['schema', SCHEMA_VERSION],
        ['format_version', CURRENT_FORMAT_VERSION],
        ['orderzero_version', orderzero.__version__],
        ['created_at', datetime.datetime.now().isoformat()],
        ['id', label.kind if label is not None else None],
        ['n', store.degree],
        ['k', label.k if label is not None else None],
        ['y', list(label.y) if label is not None and label.y is not None else None],
        ['count', len(store)],
    ]
    doc = dict(meta)
    doc['elements'] = [str(t) for t in store]
    logger.debug("saving %d elements to %s", len(store), filename)
    write_json(filename, doc)


def read_store(filename):
    """
    Read a file written by :func:`save_store`. Returns the metadata
    and the elements as an unlabeled store;
    :func:`orderzero.enumeration.load_store` attaches and checks the label.
    """
    doc = read_json(filename)
    _assert_format_is_compatible(doc, filename)
    elements = [Transformation.parse(text) for text in doc['elements']]
    store = ElementStore(doc['n'], elements)
    if len(store) != doc.get('count', len(store)):
        raise ValueError(
            f"{filename} declares {doc['count']} elements but holds {len(store)} distinct ones"
        )
    meta = {key: value for key, value in doc.items() if key != 'elements'}
    return meta, store


def _assert_format_is_compatible(doc, path):
    """ Raise an exception if the file format is not supported """
    if doc.get('schema') != SCHEMA_VERSION:
        raise ValueError(f"{path} has unsupported schema {repr(doc.get('schema'))}")
    format_version = str(doc.get('format_version', '0.0'))
    if format_version.split('.')[0] != CURRENT_FORMAT_VERSION.split('.')[0]:
        msg = (f"Error loading {path}: format {format_version} is not supported; "
               f"current format is {CURRENT_FORMAT_VERSION}.")
        raise ValueError(msg)
