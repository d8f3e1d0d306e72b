#!/usr/bin/python3
# This file is auto generated. Do not modify
from setuptools import setup
setup(
    name='petriasp',
    version='1.0',
    description='Exhaustive simulation of Petri nets with reset, inhibitor and read arcs, and their ASP encoding',
    long_description="========\npetriasp\n========\n\nExhaustive simulation of Petri nets with reset, inhibitor and read arcs,\nand translation of the same nets into Answer Set Programming.\n\nA net and its initial marking are written in a small text format. Every\nexecution sequence up to a number of steps can then be enumerated, with\ntransitions firing in sets, in maximal sets or one at a time. The same\nnet can be written as an ASP program whose answer sets are those\nsequences, and the output of a solver can be read back and compared.\n\nBuilt on top of the enumeration there are simple analyses that hold\nwithin the chosen horizon: reachability, boundedness, deadlocks,\nliveness of a transition, T- and P-invariants and per step statistics\nof the token counts.\n\nIt is released with a GPLv3 license.\n\n=======\nExample\n=======\n\nA section of glycolysis:\n\n\n>>>\nplace f16bp\nplace dhap\nplace g3p\nplace bpg13\n>>>\ntrans t3\ntrans t4\ntrans t5a\ntrans t5b\ntrans t6\n>>>\narc t3 -> f16bp\narc f16bp -> t4\narc t4 -> dhap\narc t4 -> g3p\narc dhap -> t5a\narc t5a -> g3p\narc g3p -> t5b\narc t5b -> dhap\narc g3p -> t6\narc t6 -> bpg13 weight=2\n\n\nCan be loaded and simulated with this:\n\n\n>>>\nfrom petriasp.dsl import parse_net\nfrom petriasp.engine import Simulator, SemanticsMode\n>>>\nnet, m0 = parse_net(text)\nsequences = Simulator(semantics=SemanticsMode.MAXIMAL).enumerate(net, m0, 5)\n\n\nAnd written as a program for the solver:\n\n\n>>>\nfrom petriasp.asp import AspVariant, emit\n>>>\nprint(emit(net, m0, AspVariant(k=5, ntok=60)).text)\n\n\nThe same from the command line:\n\n\n>>>\npetriasp simulate nets/glycolysis.pnet --steps 5 --semantics max --dump\npetriasp emit-asp nets/glycolysis.pnet --steps 5 --ntok 60 --dialect clingo > glycolysis.lp\nclingo 0 glycolysis.lp > answers.txt\npetriasp crossval nets/glycolysis.pnet --steps 5 --solver-output answers.txt\n\n\n`example.py` compares the production of bpg13 with and without a\ntransition that removes dhap.\n\n==============\nSupported nets\n==============\n\n * Weighted arcs between places and transitions\n * Reset arcs, emptying a place when their transition fires\n * Inhibitor arcs, disabling a transition while a place has tokens\n * Read arcs, requiring tokens without consuming them\n * Set, maximal and interleaved firing\n * Reset arcs that compete for tokens (contention) or that act as a\n   side effect (standard)\n\n========\nAnalyses\n========\n\n * `reachable`: a marking matching some place counts, with a shortest\n   witness\n * `bounded`: every place and step going over a bound\n * `deadlocks`: markings that enable nothing\n * `liveness`: if a transition can ever fire, with unlimited sources\n * `t-invariants` and `p-invariants`, as observed in the sequences\n * `waypoints`: filtering sequences with predicates like\n   `dhap = 0 then dhap >= 1`\n * `stats`: mean, minimum, maximum and distinct values per step, and\n   the rate of production\n\nAll of them only hold within the horizon.\n\n=========\nExtending\n=========\n\nThe parser keeps a list of handlers for each kind of statement and the\nsimulator a list of selectors for each firing semantics. Both can be\nreplaced or extended after the object is created.\n\n=======\nInstall\n=======\n\n* `pip install .`\n\nThe only dependency is typedload. clingo is needed only to run the\nsolver half of the cross validation tests.\n\n=============\nDocumentation\n=============\n\n* In the docs/ directory\n\nThe tests in tests/ show most of the behaviour, including the case\nstudy.\n",
    author='petriasp contributors',
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
    extras_require={'solver': ['clingo']},
    entry_points={'console_scripts': ['petriasp=petriasp.cli:main']},
)
