# -*- coding: utf-8 -*-
#
# Sphinx configuration for django zeitlin.

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import django_zeitlin  # noqa: E402

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'django zeitlin'
copyright = u'2026, django zeitlin contributors'
version = django_zeitlin.__version__
release = django_zeitlin.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

import sphinx_rtd_theme  # noqa: E402

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_theme_options = {
    'collapse_navigation': False,
    'navigation_depth': 3,
}
htmlhelp_basename = 'django_zeitlindoc'

man_pages = [
    ('index', 'django_zeitlin', u'django zeitlin Documentation',
     [u'django zeitlin contributors'], 1)
]
