import concurrent.futures
import random

from orderzero.enumeration import enumerate_set, semigroup_id
from orderzero.verifier import Verifier
from utils import assert_report_passes

CASES = [
    ('LEMMA_1', 4),
    ('LEMMA_2', 4),
    ('SUBSEMIGROUP_IFF', 4),
    ('THEOREM_4', 4),
    ('COROLLARY_6', 4),
    ('PROP_9', 5),
]


def _check_verifier(verifier, cases):
    for claim_id, n in cases:
        assert_report_passes(verifier.verify(claim_id, n))


def _check_new_verifier(cases):
    _check_verifier(Verifier(), cases)


def _enumerate_random_set(i):
    kind = random.choice(['L', 'R', 'Z'])
    n = random.randint(2, 6)
    store = enumerate_set(semigroup_id(kind, n, k=1))
    assert store == enumerate_set(semigroup_id(kind, n, k=1))


def test_threading_single_verifier(verifier):
    with concurrent.futures.ThreadPoolExecutor(3) as executor:
        list(executor.map(_check_verifier, [verifier]*5, [CASES]*5))


def test_threading_multiple_verifiers():
    with concurrent.futures.ThreadPoolExecutor(3) as executor:
        list(executor.map(_check_new_verifier, [CASES]*5))


def test_threading_enumeration():
    with concurrent.futures.ThreadPoolExecutor(3) as executor:
        list(executor.map(_enumerate_random_set, range(20)))


def test_verify_all_keeps_claim_order(verifier):
    sequential = verifier.verify_all(5)
    threaded = verifier.verify_all(5, workers=3)
    assert [r.claim_id for r in threaded] == verifier.claim_ids
    assert [(r.claim_id, r.status, r.evidence) for r in threaded] == \
           [(r.claim_id, r.status, r.evidence) for r in sequential]
