# pylint: disable=invalid-name, redefined-builtin

"""
Sphinx Configuration
--------------------

This module configures the api documentation build.
"""

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from qhoconf.system.version import __author__, __program__, __version__  # noqa


extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']

source_suffix = '.rst'
master_doc = 'index'

project = __program__
copyright = '2026, %s' % __author__
version = '.'.join(str(part) for part in __version__[:2])
release = '.'.join(str(part) for part in __version__)

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'qhoconfdoc'
