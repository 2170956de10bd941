# Sphinx configuration for the PyLRC documentation.

import os
import sys

# autodoc imports PyLRC from the repository root
sys.path.insert(0, os.path.abspath('../'))

from PyLRC import __version__  # noqa: E402

project = 'PyLRC'
copyright = '2020, Doguhan Sariturk'
author = 'Doguhan Sariturk'
version = release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
]

# Docstrings are numpydoc
napoleon_google_docstring = False
napoleon_numpy_docstring = True
autodoc_member_order = 'bysource'

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': False,
    'navigation_depth': 4,
}
