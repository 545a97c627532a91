# -*- coding: utf-8 -*-
#
# disk_evac documentation build configuration file.
#
# Build with:
#
#   sphinx-build docs docs/_build
#
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import disk_evac

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax', 'sphinx.ext.todo']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'disk_evac'
copyright = u'2026, disk_evac developers'

version = disk_evac.__version__
release = disk_evac.__version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'basic'

html_show_sphinx = False

html_show_copyright = False

htmlhelp_basename = 'disk_evacdoc'
