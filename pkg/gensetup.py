#!/usr/bin/python3

# petriasp
# Copyright (C) 2026 petriasp contributors
#
# petriasp is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

# Writes setup.py on stdout: ./gensetup.py > setup.py

def load_long_description():

    with open('README.md', 'rt') as f:
        long_description = [i for i in f.readlines() if not i.startswith('![')]

    # Add double ===
    to_add = []
    for i, line in enumerate(long_description):
        line = line.rstrip()
        if not line or set(line) != {'='}:
            continue
        to_add.append((i, len(line)))

    to_add.reverse()
    for line, size in to_add:
        long_description.insert(line - 1, '=' * size + '\n')

    # Convert ``` to indentation
    indent_block = False
    for i in range(len(long_description)):
        line = long_description[i]
        if line.startswith('```'):
            indent_block = not indent_block
            long_description[i] = '\n>>>\n' if indent_block else '\n'
            continue

        if line.rstrip() == '' and indent_block:
            long_description[i] = '>>>\n'

    return long_description


def load_version():
    with open('docs/CHANGELOG.md', 'rt') as f:
        return f.readline().strip()

AUTHOR = 'petriasp contributors'


print(
f'''#!/usr/bin/python3
# This file is auto generated. Do not modify
from setuptools import setup
setup(
    name='petriasp',
    version={load_version()!r},
    description='Exhaustive simulation of Petri nets with reset, inhibitor and read arcs, and their ASP encoding',
    long_description={''.join(load_long_description())!r},
    author={AUTHOR!r},
    license='GPLv3',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Bio-Informatics',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],
    keywords='petri net simulation asp answer set programming',
    packages=['petriasp'],
    python_requires='>=3.8',
    install_requires=['typedload'],
    extras_require={{'solver': ['clingo']}},
    entry_points={{'console_scripts': ['petriasp=petriasp.cli:main']}},
)'''
)
