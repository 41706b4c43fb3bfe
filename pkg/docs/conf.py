#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# disjointmeter documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import disjointmeter  # noqa

# -- General configuration ---------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode", "sphinx.ext.napoleon"]

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

project = "disjointmeter"
copyright = "2026, disjointmeter developers"
author = "disjointmeter developers"

version = disjointmeter.__version__
release = disjointmeter.__version__

language = "en"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"

todo_include_todos = False

# napoleon reads the "Parameters and Attributes" sections of namedtuples
napoleon_custom_sections = [("Parameters and Attributes", "params_style")]

# -- Options for HTML output -------------------------------------------

html_theme = "sphinx_rtd_theme"

html_static_path = ["_static"]

htmlhelp_basename = "disjointmeterdoc"

# -- Options for LaTeX output ------------------------------------------

latex_documents = [
    (
        master_doc,
        "disjointmeter.tex",
        "disjointmeter Documentation",
        "disjointmeter developers",
        "manual",
    )
]

# -- Options for manual page output ------------------------------------

man_pages = [(master_doc, "disjointmeter", "disjointmeter Documentation", [author], 1)]

# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [
    (
        master_doc,
        "disjointmeter",
        "disjointmeter Documentation",
        author,
        "disjointmeter",
        "Exact torus dynamics and Weyl-sum disjointness experiments.",
        "Miscellaneous",
    )
]
