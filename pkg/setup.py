"""
fracdelay | setup.py
Called to setup the fracdelay package.
"""

from setuptools import find_packages, setup

# README.md > long_description
with open("README.md", encoding="utf-8") as long_description_file:
    long_description = long_description_file.read()

# requirements.txt > requirements
with open("requirements.txt", encoding="UTF-8") as requirements_file:
    install_requires = requirements_file.read().splitlines()

extras_require = {
    "test": [
        "mpmath",
        "pytest",
        "pytest-cov",
        "pytest-timeout",
    ]
}

if __name__ == "__main__":

    setup(
        name="fracdelay",
        use_scm_version=True,
        setup_requires=["setuptools>=45", "setuptools_scm", "wheel"],
        install_requires=install_requires,
        extras_require=extras_require,
        packages=find_packages(include=["fracdelay", "fracdelay.*"]),
        python_requires=">=3.8",
        description="Stability analysis of scalar Caputo fractional delay differential equations.",
        long_description=long_description,
        long_description_content_type="text/markdown",
        classifiers=[
            "Environment :: Console",
            "Intended Audience :: Science/Research",
            "License :: OSI Approved :: MIT License",
            "Operating System :: OS Independent",
            "Programming Language :: Python",
            "Programming Language :: Python :: 3",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        include_package_data=True,
        entry_points={"console_scripts": ["fracdelay = fracdelay.cli.entry:fracdelay_cli"]},
        keywords=[
            "fractional calculus",
            "caputo",
            "delay differential equations",
            "mittag-leffler",
            "stability",
        ],
        license="MIT",
    )
