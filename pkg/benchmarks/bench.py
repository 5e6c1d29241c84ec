#!/usr/bin/env python
"""
Speed of enumeration, closure, undecomposable search, rank search and
claim verification for growing chain sizes::

    python benchmarks/bench.py run --max-n 7

"""
import logging
import pathlib
import sys

import click

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent))

import orderzero
from benchmarks import speed

logger = logging.getLogger('orderzero.bench')


@click.group()
@click.help_option('-h', '--help')
@click.version_option(version=orderzero.__version__, message='%(version)s')
def main():
    """ orderzero benchmarks """
    logging.basicConfig(format='%(message)s')


@main.command(context_settings={'show_default': True})
@click.option('-n', '--max-n', type=click.IntRange(min=4), default=8,
              help='Largest chain size')
@click.option('-r', '--repeats', type=click.IntRange(min=1), default=5,
              help='Timed runs per benchmark; the best one is reported')
@click.option('-v', '--verbose', is_flag=True, help='Log engine debug messages too')
def run(max_n, repeats, verbose):
    logger.setLevel(logging.INFO)
    if verbose:
        logging.getLogger('orderzero').setLevel(logging.DEBUG)
    speed.bench_all(max_n=max_n, repeats=repeats)


if __name__ == '__main__':
    main()
