# -*- coding: utf-8 -*-
#
# diffinfo documentation build configuration file.

import diffinfo

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest', 'sphinx.ext.viewcode']

templates_path = []
source_suffix = '.rst'
master_doc = 'index'

project = 'diffinfo'
copyright = '2024-2026, The diffinfo Team'

# The short X.Y version and the full release.
version = diffinfo.__version__
release = diffinfo.__version__

exclude_patterns = []
pygments_style = 'sphinx'

# Both the class and the __init__ docstring are inserted.
autoclass_content = 'both'
autodoc_default_options = {'members': True}
autodoc_member_order = 'groupwise'

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'diffinfodoc'

man_pages = [
    ('index', 'diffinfo', 'diffinfo Documentation', ['The diffinfo Team'], 1)
]
