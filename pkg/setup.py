#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import setup, find_namespace_packages

import os.path

readme_filename = "README.rst"
if not os.path.isfile(readme_filename):
    readme_filename = "docs/readme.rst"
with open(readme_filename) as readme_file:
    readme = readme_file.read()

history_filename = "CHANGELOG.rst"
if not os.path.isfile(history_filename):
    history_filename = "docs/changelog.rst"

with open(history_filename) as history_file:
    history = history_file.read()

requirements = [
    "Click>=7.0",
    "PyYAML>=5.1",
    "Cerberus>=1.3",
    "numpy>=1.20",
    "mpmath>=1.1",
]

setup_requirements = ["pytest-runner"]

test_requirements = ["pytest"]

setup(
    author="disjointmeter developers",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description=(
        "Exact torus dynamics and Weyl-sum experiments on the disjointness of "
        "oscillating sequences from affine distal flows"
    ),
    entry_points={"console_scripts": ["disjointmeter=disjointmeter.cli:console_main"]},
    install_requires=requirements,
    license="BSD license",
    long_description=readme + "\n\n" + history,
    include_package_data=True,
    package_data={"disjointmeter": ["settings/*.yml", "settings/examples/*.json"]},
    keywords="disjointmeter mobius disjointness unipotent torus weyl sums",
    name="disjointmeter",
    packages=find_namespace_packages(include=["disjointmeter", "disjointmeter.*"]),
    python_requires=">=3.9",
    setup_requires=setup_requirements,
    test_suite="tests",
    tests_require=test_requirements,
    version="0.1.0",
    zip_safe=False,
)
