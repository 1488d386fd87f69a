from setuptools import setup, find_packages

# Requirements definitions
SETUP_REQUIRES = [
    "setuptools>=59.5.0",
]

INSTALL_REQUIRES = [
    "colorlog>=6.6",
    "pandas>=1.3",
    "numpy>=1.21",
    "sympy>=1.9",
    "tqdm>=4.64",
]

EXTRAS_REQUIRE = {
    "develop": [
        "black",
        "coverage",
        "pre-commit",
        "pydocstyle",
        "pylint",
        "pytest",
        "sphinx",
        "sphinx_rtd_theme",
    ],
}

# https://pypi.org/classifiers/
CLASSIFIERS = [
    "Development Status :: 3 - Alpha",
    "Intended Audience :: Science/Research",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
    "Programming Language :: Python :: 3.10",
    "Environment :: Console",
    "License :: OSI Approved :: Apache Software License",
    "Topic :: Scientific/Engineering",
    "Topic :: Scientific/Engineering :: Mathematics",
    "Topic :: Software Development :: Libraries :: Python Modules",
]


def _read_version() -> str:
    version = {}
    with open("src/sasakijoin/_version.py") as f:
        exec(f.read(), version)
    return version["__version__"]


setup(
    name="sasakijoin",
    version=_read_version(),
    description=(
        "Exact analysis of the Einstein-Hilbert functional, cscS rays and "
        "admissible extremal metrics on the w-cone of Sasaki joins."
    ),
    license="Apache 2.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    setup_requires=SETUP_REQUIRES,
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    classifiers=CLASSIFIERS,
    entry_points={
        "console_scripts": [
            "sasakijoin = sasakijoin.cli.__main__:main",
        ],
    },
)
