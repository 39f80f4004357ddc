#!/usr/bin/env python

from setuptools import find_packages
from setuptools import setup

setup(
    name='harmonic_kernels',
    version='0.1.0',
    packages=find_packages(exclude=['test', 'test.*']),
    package_data={'harmonic_kernels': ['suite_cfg.yaml']},
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.24',
        'PyYAML>=6.0',
    ],
    extras_require={
        'test': [
            'pytest>=7.0',
            'mpmath>=1.3',
            'sympy>=1.12',
            'scipy>=1.10',
        ],
    },
    entry_points={
        'console_scripts': [
            'harmonic-kernels=harmonic_kernels.cli:main',
        ],
    },
)
