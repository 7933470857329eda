# -*- coding: utf-8 -*-
"""Sphinx configuration for the API reference."""
import os
import sys
from typing import List

sys.path.insert(0, os.path.abspath(os.path.join("..", "..", "src")))

project = "mailbox-synchronizability"
copyright = "2026, Curi Bio"  # pylint: disable=redefined-builtin
author = "Curi Bio"
release = "0.1.0"

extensions: List[str] = ["sphinx.ext.autodoc", "sphinx.ext.napoleon"]
autodoc_member_order = "bysource"
# DOT export is not needed to render the API pages
autodoc_mock_imports: List[str] = ["graphviz"]

templates_path: List[str] = []
exclude_patterns: List[str] = []

html_theme = "alabaster"
html_static_path: List[str] = []
