import setuptools

from spectral_contagion.get_version import git_revision, version

try:
    long_desc = open("README.md").read()
except IOError:
    long_desc = "Failed to read README.md"

with open("requirements.txt") as reqs:
    install_requires = reqs.read().splitlines()

with open("spectral_contagion/version.py", "w") as version_file:
    version_file.write(f"""# Generated in setup.py

git_revision = {git_revision!r}
version = {version!r}
""")

setuptools.setup(
    name="spectral-contagion",
    version=version,

    author="Spectral Contagion contributors",

    description="Spectral epidemic thresholds, spread centrality, SIS simulation and vaccination on graphs.",
    long_description=long_desc,
    long_description_content_type="text/markdown",

    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),

    install_requires=install_requires,
    python_requires="~=3.10",

    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    package_data={"spectral_contagion": ["example-config.yaml"]},
    entry_points={
        "console_scripts": ["spectral-contagion=spectral_contagion.__main__:main"],
    },
)
