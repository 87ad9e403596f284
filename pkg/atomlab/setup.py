'''
Install script. Everything is handled in setup.cfg

To set up locally for development, run `pip install -e .`, in a
virtualenv, preferably.
'''

from setuptools import setup, find_packages
import os

my_path = os.path.dirname(os.path.realpath(__file__))
parent_path = os.path.abspath(os.path.join(my_path, os.pardir))
req_path = os.path.join(parent_path, 'requirements.txt')


def clean_requirements(filename):
    file_path = os.path.join(parent_path, filename)
    requirements = [s.split('#')[0].strip() for s in open(file_path).readlines()]
    return [r for r in requirements if r]


setup(
    install_requires=clean_requirements(req_path),
    packages=find_packages(exclude=['tests', 'tests.*']),
)
