# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

import hitchfib  # noqa

sys.path.insert(0, os.path.abspath("."))

# -- Project information -----------------------------------------------------

project = "hitchfib"
copyright = "2022, HitchFib developers"
author = "HitchFib developers"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "recommonmark",
]

templates_path = ["_templates"]

language = "Python"

exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
