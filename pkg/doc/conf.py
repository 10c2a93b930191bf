# -*- coding: utf-8 -*-
#
# lfa documentation build configuration file.

import sys, os
from datetime import datetime

# The package is documented from the source tree
sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'lfa'
copyright = u'{0}, lfa developers'.format(datetime.now().year)

version = u'0.1.0'
release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'lfadoc'

latex_elements = {
}

latex_documents = [
  ('index', 'lfa.tex', u'lfa Documentation',
   u'lfa developers', 'manual'),
]

man_pages = [
    ('index', 'lfa', u'lfa Documentation',
     [u'lfa developers'], 1)
]

texinfo_documents = [
  ('index', 'lfa', u'lfa Documentation',
   u'lfa developers', 'lfa', 'Lévy-flight firefly optimization library.',
   'Miscellaneous'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
}
