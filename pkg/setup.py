#!/usr/bin/env python3

import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="pysurgflow",
    version="0.1.0",
    description="Surgical workflow recognition evaluation, ranking and annotation harmonization",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    install_requires=["numpy>=1.22", "scikit-learn>=1.0"],
    entry_points={"console_scripts": ["pysurgflow = pysurgflow.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    package_data={"pysurgflow": ["*.pyi"]},
    python_requires=">=3.10",
)
