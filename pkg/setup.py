#!/usr/bin/env python
# coding=utf-8
"""A setuptools-based script for installing Holocodes."""
from setuptools import find_packages, setup

with open('README.rst') as handle:
    LONG_DESCRIPTION = handle.read()

with open('VERSION') as handle:
    VERSION = handle.read().strip()

setup(
    name='holocodes',
    version=VERSION,
    packages=find_packages(include=['holocodes', 'holocodes.*']),
    install_requires=['click>=8', 'galois', 'networkx', 'numpy'],
    python_requires='>=3.9',
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description=(
        'Holocodes builds classical and quantum codes on p-adic trees, '
        'pentagon tilings and the link of a rank 2 building.'
    ),
    entry_points='''
        [console_scripts]
        holocodes=holocodes:cli
    ''',
    include_package_data=True,
    license='GPLv3',
    long_description=LONG_DESCRIPTION,
)
