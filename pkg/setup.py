#!/usr/bin/env python3
# Copyright 2026 The equicoalg authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#
from pathlib import Path

import setuptools
from setuptools import setup

this_dir = Path(__file__).parent
module_dir = this_dir / "equicoalg"

# -----------------------------------------------------------------------------

# Load README in as long description
long_description: str = ""
readme_path = this_dir / "README.md"
if readme_path.is_file():
    long_description = readme_path.read_text(encoding="utf-8")

requirements = []
requirements_path = this_dir / "requirements.txt"
if requirements_path.is_file():
    with open(requirements_path, "r", encoding="utf-8") as requirements_file:
        requirements = requirements_file.read().splitlines()

dev_requirements = []
dev_requirements_path = this_dir / "requirements_dev.txt"
if dev_requirements_path.is_file():
    with open(dev_requirements_path, "r", encoding="utf-8") as dev_requirements_file:
        dev_requirements = dev_requirements_file.read().splitlines()

version_path = module_dir / "VERSION"
with open(version_path, "r", encoding="utf-8") as version_file:
    version = version_file.read().strip()

# -----------------------------------------------------------------------------

setup(
    name="equicoalg",
    version=version,
    description="Equivariant function approximation through group-action comonads",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="The equicoalg authors",
    license="AGPLv3+",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={"equicoalg": ["VERSION", "py.typed"]},
    install_requires=requirements,
    extras_require={
        ':python_version<"3.9"': ["importlib_resources"],
        "dev": dev_requirements,
    },
    entry_points={"console_scripts": ["equicoalg = equicoalg.__main__:main"]},
    python_requires=">=3.7",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU Affero General Public License v3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
    ],
    keywords="equivariance group representation comonad universal approximation",
)
