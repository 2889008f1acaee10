from setuptools import find_packages, setup

setup(
    name='cogrowth',
    version='0.1',
    description='Growth and cogrowth of subgroups of free groups and of right ideals',
    packages=find_packages(exclude=['examples', 'examples.*']),
    python_requires='>=3.7',
    install_requires=['numpy', 'networkx', 'sympy', 'click'],
    entry_points={'console_scripts': ['cogrowth = cogrowth.cli:run']},
)
