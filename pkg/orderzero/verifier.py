"""
:mod:`orderzero.verifier` runs claim checkers and collects their
reports.
"""
import concurrent.futures
import logging
import threading
import time
from typing import NamedTuple, Optional

from orderzero import config, utils
from orderzero.claims import claim_units
from orderzero.claims.base import Evidence
from orderzero.config import LimitExceeded, SearchBudget
from orderzero.store import to_jsonable

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'


class ClaimReport(NamedTuple):
    claim_id: str
    degree: int
    params: dict
    status: str
    reason: Optional[str]
    evidence: dict
    elapsed: float

    @property
    def ok(self):
        return self.status != FAIL

    def to_json(self, timings=False):
        doc = {
            'claim_id': self.claim_id,
            'n': self.degree,
            'params': to_jsonable(self.params),
            'status': self.status,
            'reason': self.reason,
            'evidence': self.evidence,
        }
        if timings:
            doc['elapsed'] = round(self.elapsed, 3)
        return doc


class Verifier:
    """
    Runs claim checkers at a given degree.

        >>> verifier = Verifier()
        >>> report = verifier.verify('LEMMA_2', 3)
        >>> report.status, report.evidence['values']['counts']
        ('pass', {'1': 3, '2': 5, '3': 3})

    ``claims`` is a list of claim units (instances of
    :class:`orderzero.claims.base.BaseClaim` subclasses); by default the
    units named in ``config.DEFAULT_CLAIMS`` are used, in that order.
    """
    _lock = threading.RLock()

    def __init__(self, claims=None, budget=None):
        self.budget = budget if budget is not None else SearchBudget.default()
        if claims is None:
            claims = claim_units(config.DEFAULT_CLAIMS)
        with self._lock:
            self._claims = [self._bound_claim(c) for c in claims]
        self._by_id = {c.claim_id: c for c in self._claims}

    def _bound_claim(self, claim):
        claim = claim.clone()
        claim.init(self)
        return claim

    @property
    def claim_ids(self):
        return [c.claim_id for c in self._claims]

    def claim(self, claim_id):
        key = claim_id.strip().upper()
        try:
            return self._by_id[key]
        except KeyError:
            raise ValueError(
                f"Unknown claim {repr(claim_id)}. Known claims: {', '.join(self.claim_ids)}"
            ) from None

    def verify(self, claim_id, n, params=None):
        """ Check one claim at degree ``n`` and return a :class:`ClaimReport` """
        claim = self.claim(claim_id)
        params = dict(params or {})
        if not utils.is_int(n) or n < 1:
            raise ValueError(f"Degree must be a positive integer, got {repr(n)}")

        start = time.perf_counter()
        evidence = Evidence()
        reason = claim.skip_reason(n, params)
        if reason is None:
            logger.info("checking %s at n=%d", claim.claim_id, n)
            try:
                claim.run(n, params, evidence)
            except LimitExceeded as e:
                reason = str(e)
        if reason is not None:
            status = SKIPPED
        else:
            status = PASS if evidence.ok else FAIL
        elapsed = time.perf_counter() - start
        logger.info("%s at n=%d: %s (%.2fs)", claim.claim_id, n, status, elapsed)
        return ClaimReport(claim.claim_id, n, params, status, reason,
                           evidence.to_json(), elapsed)

    def verify_all(self, n, params=None, workers=1, progress=False):
        """
        Check every claim at degree ``n``. Reports keep the claim order
        whatever the number of ``workers``.
        """
        ids = self.claim_ids
        if workers is None or workers <= 1:
            items = utils.progress(ids, desc='claims') if progress else ids
            return [self.verify(claim_id, n, params) for claim_id in items]

        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(self.verify, claim_id, n, params) for claim_id in ids]
            if progress:
                list(utils.progress(concurrent.futures.as_completed(futures),
                                    desc='claims', total=len(futures)))
            return [f.result() for f in futures]
