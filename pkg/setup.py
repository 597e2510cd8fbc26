from setuptools import setup
from setuptools import find_packages
import sys

if sys.version_info < (3, 7):
    sys.exit('Sorry, Python < 3.7 is not supported. We use dataclasses that have been introduced in 3.7.')

setup(
    name='edgesquare',
    version="0.1",
    description='Cohen-Macaulay, Buchsbaum and Gorenstein properties of the square of an edge ideal, decided '
                'combinatorially and cross-checked with simplicial homology',
    author='',
    author_email='',
    download_url='',
    license='MIT',
    install_requires=[
        'numpy',
        'pandas',
        'pyyaml',
        'networkx',
        'sympy',
    ],
    extras_require={
        'test': ['pytest'],
    },
    scripts=[],
    packages=find_packages(exclude=['tests'])
)
