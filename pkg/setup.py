#!/usr/bin/env python
from setuptools import find_packages, setup


setup(
    name="diagharm",
    version="0.1.0",
    author="diagharm team",
    description="Exact bigraded dimensions and stable polynomials of the diagonal coinvariants.",
    license="MIT",
    packages=find_packages(exclude=["tests"]),
    install_requires=["anytree", "mypy_extensions", "numpy", "sympy", "tqdm", "yacs"],
    entry_points={"console_scripts": ["diagharm = diagharm.cli:main"]},
    zip_safe=True,
)
