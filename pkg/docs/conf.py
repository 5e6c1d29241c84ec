# Sphinx configuration for the orderzero docs.
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))


def _read_version():
    line = (ROOT / 'orderzero' / 'version.py').read_text().splitlines()[0]
    return line.split('=')[1].strip(' "')


extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'sphinx.ext.graphviz']
graphviz_output_format = 'svg'
autodoc_member_order = 'bysource'

master_doc = 'index'
exclude_patterns = ['_build']

project = 'orderzero'
copyright = '2026, orderzero contributors'
release = _read_version()
version = '.'.join(release.split('.')[:2])
language = 'en'

html_theme = 'sphinx_rtd_theme'
html_title = 'orderzero'

man_pages = [
    ('index', 'orderzero', 'orderzero documentation', ['orderzero contributors'], 1),
]
