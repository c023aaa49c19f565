from setuptools import find_packages, setup

with open("requirements.txt") as f:
	install_requires = f.read().strip().split("\n")

# get version from __version__ variable in eit_toolkit/__init__.py
from eit_toolkit import __version__ as version

setup(
	name="eit_toolkit",
	version=version,
	description="Master-equation simulation and analytic formulas for EIT media",
	packages=find_packages(exclude=["examples", "examples.*"]),
	zip_safe=False,
	include_package_data=True,
	install_requires=install_requires,
	entry_points={"console_scripts": ["eit-toolkit = eit_toolkit.runner.cli:main"]},
)
