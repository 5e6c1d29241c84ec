"""
Numpy index over an :class:`~orderzero.store.ElementStore` for bulk
pairwise products.

Each transformation of degree n is encoded as the base-n integer of
its 0-based image word, which keeps lexicographic order; products of a
fixed left factor with every element are computed as one fancy-index
operation.
"""
import logging

import numpy as np

logger = logging.getLogger(__name__)

# n**n must fit into int64
MAX_TABLE_DEGREE = 15


class MultiplicationTable:

    def __init__(self, store):
        n = store.degree
        if n > MAX_TABLE_DEGREE:
            raise ValueError(f"Product tables support n <= {MAX_TABLE_DEGREE}, got n={n}")
        self.store = store
        self.degree = n
        self.array = store.to_array()
        self._weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        codes = self.encode(self.array)
        self._order = np.argsort(codes, kind='stable')
        self._sorted_codes = codes[self._order]

    def __len__(self):
        return len(self.array)

    def encode(self, rows):
        return rows @ self._weights

    def lookup(self, codes):
        """ Store indices of ``codes``, -1 where a code is not in the store """
        if len(self._sorted_codes) == 0:
            return np.full(len(codes), -1, dtype=np.int64)
        pos = np.searchsorted(self._sorted_codes, codes)
        pos = np.minimum(pos, len(self._sorted_codes) - 1)
        found = self._sorted_codes[pos] == codes
        return np.where(found, self._order[pos], -1)

    def right_products(self, i):
        """
        Store indices of ``s_i * s_j`` for every ``j`` (-1 when the product
        leaves the store).
        """
        # row j of arr[:, a] is x -> s_j[s_i[x]], the image word of s_i s_j
        rows = self.array[:, self.array[i]]
        return self.lookup(self.encode(rows))

    def left_products(self, i, js):
        """ Store indices of ``s_i * s_j`` for ``j`` in ``js`` """
        rows = self.array[js][:, self.array[i]]
        return self.lookup(self.encode(rows))

    def right_multiples(self, js, i):
        """ Store indices of ``s_j * s_i`` for ``j`` in ``js`` """
        rows = self.array[i][self.array[js]]
        return self.lookup(self.encode(rows))

    def product_indices(self):
        """ ``(len, len)`` array of product indices, -1 outside the store """
        m = len(self.array)
        result = np.empty((m, m), dtype=np.int64)
        for i in range(m):
            result[i] = self.right_products(i)
        return result

    def first_violation(self):
        """ First pair ``(i, j)`` in row-major order whose product leaves the store """
        for i in range(len(self.array)):
            missing = np.flatnonzero(self.right_products(i) < 0)
            if len(missing):
                return i, int(missing[0])
        return None

    def decomposable_mask(self):
        """
        Boolean mask of elements ``s = ab`` with ``a, b`` both different
        from ``s``. The store must be closed.
        """
        m = len(self.array)
        mask = np.zeros(m, dtype=bool)
        js = np.arange(m)
        for i in range(m):
            prod = self.right_products(i)
            if (prod < 0).any():
                j = int(np.flatnonzero(prod < 0)[0])
                raise ValueError(
                    f"The set is not closed: {self.store[i]} * {self.store[j]} is not in it"
                )
            ok = (prod != i) & (prod != js)
            mask[prod[ok]] = True
        return mask
