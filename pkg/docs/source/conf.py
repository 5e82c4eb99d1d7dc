# =================================================================
#
# Authors: The symmconv contributors
#
# Copyright (c) 2026 The symmconv contributors
#
# Permission is hereby granted, free of charge, to any person
# obtaining a copy of this software and associated documentation
# files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following
# conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
# =================================================================

# symmconv documentation build configuration file

import os
import sys

SYMMCONV_HOME = os.path.abspath('../..')
sys.path.insert(0, SYMMCONV_HOME)

os.environ['SYMMCONV_CONFIG'] = f'{SYMMCONV_HOME}/symmconv-config.yml'

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.todo',
              'sphinx.ext.coverage',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode',
              'sphinx.ext.doctest',
              'sphinx.ext.intersphinx']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'symmconv'
author = 'The symmconv contributors'
license = 'This work is licensed under a Creative Commons Attribution 4.0 International License'  # noqa
copyright = '2026, ' + author + ' ' + license

today_fmt = '%Y-%m-%d'

version = '0.1.0'
release = version

language = 'en'

exclude_patterns = []

pygments_style = 'sphinx'

todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'symmconvdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_engine = 'xelatex'

latex_show_urls = 'footnote'

latex_documents = [
    (master_doc, 'symmconv.tex', 'symmconv Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'symmconv', 'symmconv Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable', None)}
