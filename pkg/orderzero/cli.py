import functools
import json
import logging
import sys
import time

try:
    import click
except ModuleNotFoundError as e:
    raise ModuleNotFoundError('''orderzero's command line tools require Click which is not currently installed. Try installing Click via "pip install click".''') from e

import orderzero
from orderzero import config
from orderzero.config import SearchBudget
from orderzero.counts import card, rank_formula
from orderzero.engine import closure, rank_exact
from orderzero.enumeration import (
    contains,
    enumerate_set,
    in_L_definitional,
    in_R_definitional,
    in_Z_definitional,
    load_store,
    parse_set_name,
)
from orderzero.families import family
from orderzero.graph import export_dot, to_dot, zero_divisor_graph
from orderzero.store import save_store, to_jsonable
from orderzero.transformations import Transformation
from orderzero.utils import mem_usage_mb, parse_point_set
from orderzero.verifier import Verifier

__doc__ = """
Usage::

    orderzero count --set <set> --n <n> [--k <k>] [--y <points>] [--method formula|enumerate]
    orderzero enumerate --set <set> --n <n> [--k <k>] [--y <points>] [--out <file>]
    orderzero member --set <set> --element <word> [--k <k>] [--method formula|enumerate]
    orderzero closure (--gens <words> | --family <name> --n <n> | --gens-file <file>)
    orderzero rank --set <set> --n <n> [--exact] [--budget <budget>]
    orderzero verify --claim <id>|all --n <n> [--workers <N>] [--small-n] [--timings]
    orderzero export-graph --n <n> --k <k> [--out <file>]
    orderzero -h | --help
    orderzero --version

Sets: on, ion, ony (with --y), l/r/z (with --k), l1, ln, r1, rn, z1, zn,
r1star, z1star. Commands accept --json for machine-readable output.
"""

logger = logging.getLogger('orderzero')

_DEFINITIONAL = {'L': in_L_definitional, 'R': in_R_definitional, 'Z': in_Z_definitional}


# ============================== Entry point ============================
@click.group()
@click.help_option('-h', '--help')
@click.version_option(version=orderzero.__version__, message='%(version)s')
@click.option('-v', '--verbose', is_flag=True, help='Be more verbose')
@click.pass_context
def main(ctx, verbose):
    """
    orderzero computes with the monoid O_n of order-preserving
    transformations and the zero divisors of its constant maps.
    """
    if verbose:
        logger.addHandler(logging.StreamHandler())
        logger.setLevel(logging.DEBUG)
        ctx.call_on_close(_log_mem_usage)


def _log_mem_usage():
    try:
        mem_usage = mem_usage_mb()
    except ImportError:
        return
    logger.info("Memory usage: %0.1fM", mem_usage)


def _usage_errors(func):
    """ Report library ValueErrors as usage errors (exit code 2) """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValueError as e:
            raise click.UsageError(str(e)) from e
    return wrapper


def _set_options(func):
    options = [
        click.option('--set', 'set_name', required=True, help='Set identifier, e.g. on, ion, l1, r, z1star'),
        click.option('--n', type=int, help='Chain size'),
        click.option('--k', type=int, help='Index of the constant map pi_k'),
        click.option('--y', 'points', help='Comma-separated point set Y for ony'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _resolve_set(set_name, n, k, points):
    if n is None:
        raise ValueError("--n is required")
    y = parse_point_set(points) if points else None
    return parse_set_name(set_name, n, k=k, y=y)


def _echo_json(doc):
    doc = dict({'schema': config.SCHEMA_VERSION}, **doc)
    click.echo(json.dumps(doc, ensure_ascii=False, indent=2))


def _set_doc(sid):
    return {'id': sid.kind, 'n': sid.n, 'k': sid.k, 'y': list(sid.y) if sid.y else None}


def _parse_words(text):
    words = [part for part in text.split(';') if part.strip()]
    if not words:
        raise ValueError(f"No transformations in {repr(text)}")
    return [Transformation.parse(word) for word in words]


# ============================ Commands ===========================

@main.command(name='count', context_settings={'show_default': True})
@_set_options
@click.option('--method', type=click.Choice(['formula', 'enumerate']), default='formula',
              help='Closed-form count or enumeration')
@click.option('--json', 'as_json', is_flag=True, help='JSON output')
@_usage_errors
def cli_count(set_name, n, k, points, method, as_json):
    """ Size of a set """
    sid = _resolve_set(set_name, n, k, points)
    value = card(sid) if method == 'formula' else len(enumerate_set(sid))
    if as_json:
        _echo_json(dict(_set_doc(sid), method=method, count=value))
    else:
        click.echo(value)


@main.command(name='enumerate')
@_set_options
@click.option('--out', 'out_file', type=click.Path(dir_okay=False, writable=True),
              help='Write the elements to a store file')
@click.option('--json', 'as_json', is_flag=True, help='JSON output')
@_usage_errors
def cli_enumerate(set_name, n, k, points, out_file, as_json):
    """ List the elements of a set """
    sid = _resolve_set(set_name, n, k, points)
    if sid.n > config.enumeration_cap():
        # only the closed form is available above the cap
        if not as_json:
            raise ValueError(f"Enumeration is capped at n={config.enumeration_cap()}, got n={sid.n}")
        _echo_json(dict(_set_doc(sid), count=card(sid)))
        return

    store = enumerate_set(sid)
    if out_file:
        save_store(store, out_file)
        logger.info("%d elements written to %s", len(store), out_file)
    if as_json:
        _echo_json(dict(_set_doc(sid), count=len(store), elements=to_jsonable(store)))
    elif not out_file:
        for t in store:
            click.echo(t)


@main.command(name='member', context_settings={'show_default': True})
@click.option('--set', 'set_name', required=True, help='Set identifier')
@click.option('--element', required=True, help='Transformation, e.g. "[1,1,2]"')
@click.option('--n', type=int, help='Chain size (defaults to the degree of the element)')
@click.option('--k', type=int, help='Index of the constant map pi_k')
@click.option('--y', 'points', help='Comma-separated point set Y for ony')
@click.option('--method', type=click.Choice(['formula', 'enumerate']), default='formula',
              help='Characterized predicate or the definition by search')
@click.option('--json', 'as_json', is_flag=True, help='JSON output')
@_usage_errors
def cli_member(set_name, element, n, k, points, method, as_json):
    """ Check whether an element belongs to a set """
    a = Transformation.parse(element)
    if n is not None and n != a.degree:
        raise ValueError(f"{a} has degree {a.degree}, not {n}")
    sid = _resolve_set(set_name, a.degree, k, points)
    if method == 'formula':
        result = contains(sid, a)
    elif sid.kind in _DEFINITIONAL:
        result = _DEFINITIONAL[sid.kind](a, sid.k)
    else:
        result = a in enumerate_set(sid)
    if as_json:
        _echo_json(dict(_set_doc(sid), element=str(a), method=method, member=result))
    else:
        click.echo('yes' if result else 'no')


@main.command(name='closure')
@click.option('--gens', help='Generators separated by ";", e.g. "[1,1,2];[1,1,3]"')
@click.option('--family', 'family_name', help='Generator family, e.g. b, c, eplus, g')
@click.option('--n', type=int, help='Chain size for --family')
@click.option('--gens-file', type=click.Path(exists=True, dir_okay=False),
              help='Store file with the generators')
@click.option('--json', 'as_json', is_flag=True, help='JSON output')
@_usage_errors
def cli_closure(gens, family_name, n, gens_file, as_json):
    """ The subsemigroup generated by a set of transformations """
    sources = [s for s in (gens, family_name, gens_file) if s]
    if len(sources) != 1:
        raise ValueError("Give exactly one of --gens, --family and --gens-file")
    if gens:
        generators = _parse_words(gens)
    elif family_name:
        if n is None:
            raise ValueError("--family needs --n")
        generators = list(family(family_name, n))
    else:
        generators = list(load_store(gens_file))

    result = closure(generators, record_words=False)
    if as_json:
        _echo_json({
            'n': result.elements.degree,
            'generators': to_jsonable(result.generators),
            'size': len(result.elements),
            'product_count': result.product_count,
            'elements': to_jsonable(result.elements.sorted()),
        })
    else:
        click.echo(len(result.elements))
        for t in result.elements.sorted():
            click.echo(t)


@main.command(name='rank', context_settings={'show_default': True})
@_set_options
@click.option('--exact', is_flag=True, help='Run the exact search instead of the closed form')
@click.option('--budget', help='Search limits: "max_elements=N,max_depth=N,max_products=N" or N')
@click.option('--json', 'as_json', is_flag=True, help='JSON output')
@_usage_errors
def cli_rank(set_name, n, k, points, exact, budget, as_json):
    """ Rank of a set: closed form, or exact search with a witness """
    sid = _resolve_set(set_name, n, k, points)
    if not exact:
        value = rank_formula(sid)
        if as_json:
            _echo_json(dict(_set_doc(sid), mode='formula', rank=value))
        else:
            click.echo(value)
        return

    search_budget = SearchBudget.parse(budget) if budget else SearchBudget.default()
    start = time.perf_counter()
    cert = rank_exact(enumerate_set(sid), search_budget)
    logger.info("rank search for %s took %0.2fs", sid, time.perf_counter() - start)
    if as_json:
        _echo_json(dict(
            _set_doc(sid),
            mode=cert.mode,
            rank=cert.rank,
            lower_bound=cert.lower_bound,
            upper_bound=cert.upper_bound,
            witness=to_jsonable(cert.witness),
            mandatory=to_jsonable(cert.mandatory),
            reason=cert.reason,
        ))
        return
    if cert.search_exhaustive:
        click.echo(cert.rank)
    else:
        click.echo(f"{cert.lower_bound}..{cert.upper_bound}")
        click.echo(f"search stopped: {cert.reason}")
    click.echo("witness: " + ' '.join(str(t) for t in cert.witness))


@main.command(name='verify', context_settings={'show_default': True})
@click.option('--claim', 'claim_id', required=True, help='Claim id (e.g. lemma_1) or "all"')
@click.option('--n', type=int, required=True, help='Chain size')
@click.option('--y', 'points', help='Point set Y for THEOREM_5')
@click.option('--workers', type=int, default=1, help='Threads for --claim all')
@click.option('--small-n', is_flag=True, help='Also check the values stated for small degrees')
@click.option('--budget', help='Search limits: "max_elements=N,max_depth=N,max_products=N" or N')
@click.option('--timings', is_flag=True, help='Include elapsed seconds in the output')
@click.option('--json', 'as_json', is_flag=True, help='JSON output')
@_usage_errors
def cli_verify(claim_id, n, points, workers, small_n, budget, timings, as_json):
    """ Check claims at degree n; exit code 1 if any fails """
    verifier = Verifier(budget=SearchBudget.parse(budget) if budget else None)
    params = {'small_n': small_n}
    if points:
        params['y'] = parse_point_set(points)
    if claim_id.strip().lower() == 'all':
        reports = verifier.verify_all(n, params, workers=workers,
                                       progress=logger.isEnabledFor(logging.DEBUG))
    else:
        reports = [verifier.verify(claim_id, n, params)]

    if as_json:
        _echo_json({'n': n, 'reports': [r.to_json(timings=timings) for r in reports]})
    else:
        for r in reports:
            line = f"{r.claim_id:<18} n={r.degree:<3} {r.status}"
            if r.reason:
                line += f"  ({r.reason})"
            elif r.status == 'fail':
                first = r.evidence['failures'][0]
                line += f"  {first['check']}: {first['counterexample']}"
            if timings:
                line += f"  {r.elapsed:0.2f}s"
            click.echo(line)
    if not all(r.ok for r in reports):
        sys.exit(1)


@main.command(name='export-graph')
@click.option('--n', type=int, required=True, help='Chain size')
@click.option('--k', type=int, required=True, help='Index of the constant map pi_k')
@click.option('--out', 'out_file', type=click.Path(dir_okay=False, writable=True),
              help='DOT file (stdout if omitted)')
@_usage_errors
def cli_export_graph(n, k, out_file):
    """ Zero-divisor graph of pi_k in graphviz DOT format """
    graph = zero_divisor_graph(n, k)
    if out_file:
        export_dot(graph, out_file)
        logger.info("graph with %d vertices written to %s", len(graph.vertices), out_file)
    else:
        click.echo(to_dot(graph), nl=False)
