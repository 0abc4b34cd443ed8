from setuptools import setup, find_packages

with open("README.md", "r", encoding='utf-8') as fh:
    long_description = fh.read()

setup(
    name='monolight',
    version="0.1.0",
    packages=find_packages(exclude=['bin', 'docs']),
    include_package_data=True,
    description='monolight computes torsion theories and monotone-light factorisations of morphisms '
                'in small algebraic categories, and verifies their axioms by brute force.',
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=[
        'numpy',
        'sympy',
        'structlog',
    ],
    python_requires='>=3.8',
    entry_points={
        'console_scripts': ['monolight = monolight.cli.commands:main'],
    },
    keywords=['algebra', 'category theory', 'torsion theory', 'factorisation system'],
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
