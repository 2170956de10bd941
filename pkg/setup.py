from setuptools import find_packages, setup

with open("README.rst", "rt") as f:
    long_description = f.read()

with open("requirements.txt", "rt") as f:
    requirements = [line.strip() for line in f if line.strip()]

setup(
        name="PyLRC",
        version="0.1.0",
        author="Doguhan Sariturk",
        author_email="dogu.sariturk@gmail.com",
        description="Local rainbow colourings of complete graphs: constructions, verifiers, attacks and exact search",
        long_description=long_description,
        license="GPL",
        packages=find_packages(exclude=["tests", "docs"]),
        install_requires=requirements,
        python_requires=">=3.8",
        entry_points={"console_scripts": ["pylrc = PyLRC.CLI:main"]},
        test_suite="tests",
        classifiers=[
                "Programming Language :: Python :: 3",
                "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
                "Topic :: Scientific/Engineering :: Mathematics",
        ],
)
