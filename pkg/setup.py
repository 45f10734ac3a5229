import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="toric-mazur",
    version="0.1.0",
    description=(
        "toric-mazur is an exact-arithmetic library for toric varieties of root systems, "
        "their equivariant line bundles and the converse to Mazur's inequality."
    ),
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["example", "tests"]),
    package_data={"toric_mazur": ["py.typed"]},
    python_requires=">=3.10",
    install_requires=[
        "cachetools>=5.3.0",
        "environs>=9.5.0",
        "networkx>=3.0",
        "pycddlib>=2.1.7,<3",
        "sympy>=1.12",
    ],
    extras_require={
        "test": [
            "hypothesis>=6.80",
            "pytest>=7.4",
        ],
    },
    entry_points={
        "console_scripts": [
            "toric-mazur=toric_mazur.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Environment :: Console",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent"
    ],

    keywords=(
        "toric varieties, root systems, Weyl fans, lattice polytopes, "
        "line bundles, cohomology, Mazur inequality"
    ),
    license="MIT",
)
