# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" Generate the bundled FCIDUMP files with pyscf.

::

    python scripts/make_fixtures.py [output directory]

"""
import argparse
import logging
import os

from symadapt.tooling.fixtures import FIXTURES, write_fixture


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        'directory', nargs='?',
        default=os.path.join(
            os.path.dirname(__file__), os.pardir, 'symadapt', 'data'))
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format='%(message)s')
    for name in sorted(FIXTURES):
        write_fixture(name, args.directory)


if __name__ == '__main__':
    main()
