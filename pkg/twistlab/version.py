from os.path import join as pjoin

# Format expected by setup.py and doc/source/conf.py: string of form "X.Y.Z"
_version_major = 0
_version_minor = 1
_version_micro = ""  # use '' for first of series, number for 1 and above
_version_extra = "dev"
# _version_extra = ''  # Uncomment this for full releases

# Construct full version string from these.
_ver = [_version_major, _version_minor]
if _version_micro:
    _ver.append(_version_micro)
if _version_extra:
    _ver.append(_version_extra)

__version__ = ".".join(map(str, _ver))

CLASSIFIERS = [
    "Development Status :: 3 - Alpha",
    "Environment :: Console",
    "Intended Audience :: Science/Research",
    "License :: OSI Approved :: MIT License",
    "Operating System :: OS Independent",
    "Programming Language :: Python",
    "Topic :: Scientific/Engineering :: Mathematics",
]

# Description should be a one-liner:
description = "twistlab: index and mean Euler characteristic calculators for fibered Dehn twists"
# Long description will go up on the pypi page
long_description = """

twistlab
========
twistlab computes Robbin-Salamon indices of symplectic paths, mean Euler
characteristics of Boothby-Wang orbibundles and their fillings, and decides
which powers of fibered Dehn twists can be told apart by comparing the two.
Formulas that are exact are evaluated in exact rational arithmetic; the
numerical parts (crossing forms, twisting profiles) are cross-checked against
them.

License
=======
``twistlab`` is licensed under the terms of the MIT license. See the file
"LICENSE" for information on the history of this software, terms & conditions
for usage, and a DISCLAIMER OF ALL WARRANTIES.

All trademarks referenced herein are property of their respective holders.
"""

NAME = "twistlab"
MAINTAINER = "twistlab developers"
MAINTAINER_EMAIL = ""
DESCRIPTION = description
LONG_DESCRIPTION = long_description
URL = ""
DOWNLOAD_URL = ""
LICENSE = "MIT"
AUTHOR = "twistlab developers"
AUTHOR_EMAIL = ""
PLATFORMS = "OS Independent"
MAJOR = _version_major
MINOR = _version_minor
MICRO = _version_micro
VERSION = __version__
PACKAGE_DATA = {"twistlab": [pjoin("data", "*")]}
REQUIRES = ["numpy", "numba", "scipy"]
EXTRAS_REQUIRE = {"test": ["pytest", "hypothesis"], "docs": ["sphinx", "sphinx_rtd_theme"]}
ENTRY_POINTS = {"console_scripts": ["twistlab = twistlab.cli:main"]}
