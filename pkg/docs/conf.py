# -*- coding: utf-8 -*-
#
# dracdjango documentation build configuration file.

extensions = []

source_suffix = '.rst'
master_doc = 'index'

project = u'dracdjango'
copyright = u"2026, dracdjango developers"

version = '0.1'
release = '0.1'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'dracdjangodoc'

man_pages = [
    ('index', 'dracdjango', u'dracdjango Documentation',
     [u"dracdjango developers"], 1)
]
