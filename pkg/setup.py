"""
Setup script for Pseudo-Hermitian Entropy

This exists for backwards compatibility with older pip versions.
Modern installations should use pyproject.toml.
"""
from setuptools import setup, find_packages

setup(
    name="pseudo_hermitian_entropy",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    include_package_data=True,
    install_requires=[
        "numpy>=1.24",
        "scipy>=1.10",
        "pandas>=2.0.0",
        "pyyaml>=6.0",
        "pydantic>=2.0",
        "click>=8.0.0",
    ],
    entry_points={
        'console_scripts': [
            'ph-entropy=pseudo_hermitian_entropy.cli.main:cli',
        ],
    },
)
