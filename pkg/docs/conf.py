#!/usr/bin/env python
#
# diagentropy documentation build configuration file

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import diagentropy  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'sphinx.ext.napoleon', 'sphinx.ext.mathjax']
source_suffix = '.rst'
master_doc = 'index'

project = 'diagentropy'
copyright = "2022, diagentropy developers"
author = "diagentropy developers"
version = diagentropy.__version__
release = diagentropy.__version__

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'diagentropydoc'

# -- Options for manual page output ------------------------------------

man_pages = [(master_doc, 'diagentropy', 'diagentropy Documentation', [author], 1)]

# -- Napoleon: the library uses numpy style docstrings -----------------

napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True
napoleon_attr_annotations = True

# -- Also document __init__ methods

autoclass_content = 'both'


def run_apidoc(_):
    from sphinx.ext.apidoc import main

    cur_dir = os.path.abspath(os.path.dirname(__file__))
    module = os.path.join(cur_dir, "..", "diagentropy")
    out_dir = os.path.join(cur_dir, "diagentropy")
    main(['-e', '-o', out_dir, module, '--force'])


def setup(app):
    app.connect('builder-inited', run_apidoc)
