#!/usr/bin/env python
from setuptools import setup


def get_version():
    with open("orderzero/version.py", "rt") as f:
        return f.readline().split("=")[1].strip(' "\n')


install_requires = [
    'numpy >= 1.21',
]


extras_require = {
    'CLI': ['click'],
    'progress': ['tqdm'],
}


setup(
    name='orderzero',
    version=get_version(),
    author='orderzero contributors',

    description='Zero divisors of constant maps in the monoid of '
                'order-preserving transformations: counts, generators and ranks.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',

    license='MIT license',
    packages=[
        'orderzero',
        'orderzero.engine',
        'orderzero.claims',
    ],
    entry_points={
        'console_scripts': ['orderzero = orderzero.cli:main']
    },
    install_requires=install_requires,
    extras_require=extras_require,
    python_requires='>=3.8',
    zip_safe=False,

    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Education',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
