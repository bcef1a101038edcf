#!/usr/bin/env python

import os


__all__ = ["write_if_changed"]


def write_if_changed(fn, text):
    """Write ``text`` to ``fn`` unless the file already holds exactly that text."""
    if os.path.isfile(fn):
        with open(fn) as f:
            if f.read() == text:
                print("File %s needs no update. Skipping." % fn)
                return
    print("Writing new or updated %s" % fn)
    with open(fn, "w") as f:
        f.write(text)
