# Standard Library
import sys
from codecs import open
from os import path

from setuptools import find_packages
from setuptools import setup


assert sys.version_info >= (3, 8), "oversampling needs Python 3.8 or newer, you have {version}".format(version=sys.version_info)

here = path.abspath(path.dirname(__file__))

# Get the long description from the relevant file
with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()


setup(
    name='oversampling',
    version='0.1.0.dev0',
    description=long_description.split("\n")[0],
    long_description=long_description,
    license='MIT',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='wavelets frames lattices oversampling exact arithmetic',
    packages=find_packages(exclude=['docs']),
    package_data={'oversampling': ['conf/*.ini']},
    include_package_data=True,
    zip_safe=False,
    python_requires='>=3.8',
    install_requires=[
        # Settings parsing and INI loading
        'pyramid>=1.10,<2.0.0',
        'plaster',
        'plaster_pastedeploy',
        'PasteDeploy',

        # Console logging
        "rainbow_logging_handler",

        # Numerics
        "numpy",
        "sortedcontainers",

        # Input documents
        "jsonschema>=4.0",
    ],

    extras_require={
        # Dependencies needed to build and release
        'dev': [
            'setuptools_git',
            'zest.releaser[recommended]',
        ],
        'test': [
            'codecov',
            'coverage',
            'flake8',
            'hypothesis',
            'isort',
            'pytest-cov',
            'pytest-runner',
            'pytest-timeout',
            'pytest',
            'sympy',
        ],
    },

    # To provide executable scripts, use entry points in preference to the
    # "scripts" keyword. Entry points provide cross-platform support and allow
    # pip to create the appropriate form of executable for the target platform.
    entry_points={
        'console_scripts': [
            'oversampling=oversampling.system.devop.scripts.main:main',
        ],

        'plaster.loader_factory': [
            'osc=oversampling.utils.config.loader:Loader',
        ],
    },
)
