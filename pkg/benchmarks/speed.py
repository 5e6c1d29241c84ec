import datetime
import functools
import logging

from benchmarks import utils
from orderzero.engine import (
    MultiplicationTable, closure, rank_bounds, rank_exact, undecomposables,
)
from orderzero.enumeration import enumerate_O, enumerate_set, semigroup_id
from orderzero.families import family_G, z1_minimal_generators
from orderzero.verifier import Verifier

logger = logging.getLogger('orderzero.bench')


def bench_enumeration(max_n, repeats):
    measure = functools.partial(utils.measure, repeats=repeats)

    for n in range(6, max_n + 1):
        size = len(enumerate_O(n))
        logger.info("    %-40s %0.0f elements/sec", f"enumerate_O({n})",
                    measure(lambda: enumerate_O(n), size))
        sid = semigroup_id('Z', n, k=1)
        size = len(enumerate_set(sid))
        logger.info("    %-40s %0.0f elements/sec", f"enumerate_set(Z_1, n={n})",
                    measure(lambda: enumerate_set(sid), size))


def bench_closure(max_n, repeats):
    measure = functools.partial(utils.measure, repeats=repeats)

    def show_info(name, func, count):
        logger.info("    %-40s %0.0f products/sec", name, measure(func, count))

    for n in range(5, max_n + 1):
        gens = list(family_G(n))
        result = closure(gens, record_words=False)
        show_info(f"closure(G_{n})", lambda: closure(gens, record_words=False),
                  result.product_count)
        show_info(f"closure(G_{n}) with words", lambda: closure(gens), result.product_count)

        if n > 7:
            continue
        store = result.elements
        show_info(f"MultiplicationTable(O_{n})",
                  lambda: MultiplicationTable(store).product_indices(), len(store)**2)


def bench_undecomposables(max_n, repeats):
    measure = functools.partial(utils.measure, repeats=repeats)

    for n in range(4, min(max_n, 7) + 1):
        store = enumerate_set(semigroup_id('L', n, k=2))
        logger.info("    %-40s %0.0f products/sec", f"undecomposables(L_2, n={n})",
                    measure(lambda: undecomposables(store), len(store)**2))


def bench_rank(max_n, repeats):
    measure = functools.partial(utils.measure, repeats=repeats)

    for n in range(4, min(max_n, 6) + 1):
        store = enumerate_set(semigroup_id('Z', n, k=1))
        logger.info("    %-40s %0.2f searches/sec", f"rank_exact(Z_1, n={n})",
                    measure(lambda: rank_exact(store)))

    for n in range(6, max_n + 1):
        store = enumerate_set(semigroup_id('Z', n, k=1))
        gens = list(z1_minimal_generators(n))
        logger.info("    %-40s %0.2f searches/sec", f"rank_bounds(Z_1, n={n})",
                    measure(lambda: rank_bounds(store, known_generators=gens)))


def bench_verify(max_n, repeats):
    verifier = Verifier()
    n = min(max_n, 6)
    for workers in [1, 4]:
        wps = utils.measure(lambda: verifier.verify_all(n, workers=workers), repeats=repeats)
        logger.info("    %-40s %0.3f runs/sec", f"verify_all(n={n}, workers={workers})", wps)


def bench_all(max_n, repeats):
    """ Run every benchmark for chain sizes up to ``max_n`` """
    started = datetime.datetime.now()

    logger.info("\nbenchmarking enumeration:")
    bench_enumeration(max_n, repeats)

    logger.info("\nbenchmarking closure:")
    bench_closure(max_n, repeats)

    logger.info("\nbenchmarking undecomposables:")
    bench_undecomposables(max_n, repeats)

    logger.info("\nbenchmarking rank search:")
    bench_rank(max_n, repeats)

    logger.info("\nbenchmarking claim verification:")
    bench_verify(max_n, max(1, repeats // 5))

    logger.info("\ntotal time: %s", datetime.datetime.now() - started)
