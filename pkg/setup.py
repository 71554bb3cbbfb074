"""Setup file to automate the install of dielfet in the Python environment."""
from setuptools import setup
from dielfet.constants import VERSION


setup(
    name="dielfet",
    version=VERSION,
    url="https://github.com/dielfet/dielfet",
    description="Optics of dielectrics from an effective field theory of light in matter",
    keywords="optics dielectric dispersion kerr casimir blackbody effective field theory",
    license="GPLv3",
    packages=["dielfet"],
    python_requires=">=3.7",
    install_requires=["docopt", "numpy", "scipy"],
    entry_points={"console_scripts": ["dielfet=dielfet.main:main"]},
    package_data={"dielfet": ["materials/*.csv"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        (
            "License :: OSI Approved :: "
            "GNU General Public License v3 or later (GPLv3+)"
        ),
        "Natural Language :: English",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
