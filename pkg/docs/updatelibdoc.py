#!/usr/bin/env python

import os
import sys
sys.path.insert(0, os.path.abspath(".."))

import importlib
from glob import glob
from io import StringIO

from common import write_if_changed


def discover():
    """Map ``mpzeta`` and each of its subpackages, tests excluded, onto their module names."""
    packages = {"mpzeta": []}
    for fn in glob("../mpzeta/*/__init__.py"):
        subpackage = fn.split("/")[2]
        if subpackage != "test":
            packages["mpzeta.%s" % subpackage] = []
    for package, modules in packages.items():
        stub = package.replace(".", "/")
        for fn in glob("../%s/*.py" % stub):
            module = os.path.splitext(os.path.basename(fn))[0]
            if module != "__init__":
                modules.append(module)
    return packages


def get_first_docline(module):
    m = importlib.import_module(module)
    if m.__doc__ is not None:
        return m.__doc__.split("\n")[0]
    return "%s.__init__.py" % module


def underline(line, char, f):
    f.write(line + "\n")
    f.write(char*len(line) + "\n")
    f.write("\n")


def main():
    fns_rst = []
    for package, modules in sorted(discover().items()):
        f = StringIO()
        f.write("..\n")
        f.write("    This file is automatically generated. Do not make\n")
        f.write("    changes as these will be overwritten. Rather edit\n")
        f.write("    the docstrings in the source code.\n")
        f.write("\n")
        underline("``%s`` -- %s" % (package, get_first_docline(package)), "#", f)
        f.write("\n")
        for module in sorted(modules):
            full = "%s.%s" % (package, module)
            f.write("\n\n")
            underline("``%s`` -- %s" % (full, get_first_docline(full)), "=", f)
            f.write(".. automodule:: %s\n" % full)
            f.write("    :members:\n")
        fn_rst = "rg_%s.rst" % package.replace(".", "_")
        fns_rst.append(fn_rst)
        write_if_changed(fn_rst, f.getvalue())

    for fn_rst in glob("rg_mpzeta*.rst"):
        if fn_rst not in fns_rst:
            print("Removing %s" % fn_rst)
            os.remove(fn_rst)


if __name__ == "__main__":
    main()
