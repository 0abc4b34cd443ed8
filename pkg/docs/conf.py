# Configuration file for the Sphinx documentation builder.

import os
import sys
from typing import Dict, Optional, Tuple

sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

master_doc = "index"
project = 'monolight'
copyright = '2026, the monolight developers'   # pylint: disable=redefined-builtin
author = 'the monolight developers'

# The full version, including alpha/beta/rc tags
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.napoleon',
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

add_function_parentheses: bool = False
add_module_names: bool = False

autodoc_member_order = 'groupwise'
autodoc_type_aliases: Dict[str, str] = {}

intersphinx_mapping: Dict[str, Tuple[str, Optional[str]]] = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'sympy': ('https://docs.sympy.org/latest/', None),
}


# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"
html_theme_options = {
    'collapse_navigation': True,
    'navigation_depth': 3,
    "show_prev_next": False,
}
