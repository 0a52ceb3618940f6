# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from setuptools import setup, find_packages
import sys

if sys.version_info < (3, 10):
    sys.exit("Sorry, Python < 3.10 is not supported")

with open("README.md", "r", encoding="utf-8") as fh:
    LONG_DESCRIPTION = fh.read()

DESCRIPTION = (
    "Imbalance statistics, encoder/decoder oversampling and evaluation for multi-label datasets."
)

setup(
    name="mlbalance",
    author="mlbalance contributors",
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    license="MIT",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "dataclasses-json>=0.6.3",
        "typing_extensions>=4.9.0",
        "aenum>=3.1.0",
        "numpy>=1.24",
        "scipy>=1.10",
        "scikit-learn>=1.3",
        "pandas>=2.0",
    ],
    entry_points={
        "console_scripts": ["mlbalance=mlbalance.cli:main"],
    },
    keywords=["multi-label", "imbalance", "oversampling", "autoencoder"],
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
    ],
)
