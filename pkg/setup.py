from setuptools import find_packages, setup

setup(
    name="borcherds-congruences",
    version="1.0.0",
    description="Exact q-series, twisted Borcherds products and congruences between their logarithmic derivatives",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=[
        "gmpy2>=2.1.0",
        "mpmath>=1.2.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.0",
            "hypothesis>=6.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "borcherds=borcherds.__main__:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
