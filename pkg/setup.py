from setuptools import setup, find_packages

setup(
    name="chainring",
    version="0.1.0",
    description="chainring - exact-arithmetic laboratory for finite valuation rings and their spectral graphs",
    author="",
    author_email="",
    packages=find_packages(where="src") + ["cli"],
    package_dir={"": "src", "cli": "cli"},
    python_requires=">=3.8",
    install_requires=[
        "pydantic>=2.0.0",
        "typing-extensions>=4.0.0",
        "python-dotenv>=1.0.0",
        "rich>=10.0.0",
        "numpy>=1.22.0",
        "scipy>=1.8.0",
        "galois>=0.3.0",
    ],
    extras_require={
        "test": ["hypothesis>=6.0.0"],
    },
    entry_points={
        "console_scripts": [
            "chainring=cli.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
