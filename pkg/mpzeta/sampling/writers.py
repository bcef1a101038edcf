#!/usr/bin/env python

#   MpZeta 1.0, boundary terms and mean-periodicity of zeta functions.
#               Copyright (C) 2022  The MpZeta developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#      the Free Software Foundation, either version 3 of the License, or
#                  (at your option) any later version.
#
#     This program is distributed in the hope that it will be useful,
#     but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#              GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see https://www.gnu.org/licenses/.


"""Scan writers: CSV files with a trailing configuration hash, and HDF5 files."""

import csv

from mpzeta.sampling.iterative import Hook


__all__ = ["CSVWriter", "HDF5Writer"]


class CSVWriter(Hook):

    def __init__(self, f, config_hash=None, start=0, step=1):
        """
        Parameters
        ----------
        f : str or file object
            A filename, or an open text stream such as ``sys.stdout`` which is not closed.
        config_hash : str, optional
            Written as the final comment line ``# config-hash=<hex>``.
        start : int, optional
            The first iteration at which this hook should be called.
        step : int, optional
            The hook will be called every ``step`` iterations.
        """
        self.f = f
        self.config_hash = config_hash
        self._stream = None
        self._writer = None
        self._own = False
        Hook.__init__(self, start, step)

    def _open(self, iterative):
        if hasattr(self.f, "write"):
            self._stream = self.f
        else:
            self._stream = open(self.f, "w", newline="")
            self._own = True
        self._writer = csv.writer(self._stream, lineterminator="\n")
        self._writer.writerow(iterative.columns)

    def __call__(self, iterative):
        if self._writer is None:
            self._open(iterative)
        self._writer.writerow([repr(float(iterative.state[name].value)) for name in iterative.columns])

    def close(self, iterative):
        if self._writer is None:
            self._open(iterative)
        if self.config_hash is not None:
            self._stream.write("# config-hash=%s\n" % self.config_hash)
        self._stream.flush()
        if self._own:
            self._stream.close()
        self._writer = None


class HDF5Writer(Hook):

    def __init__(self, f, config_hash=None, start=0, step=1):
        """
        Parameters
        ----------
        f : h5py.File object (open)
            An .h5 file to write the scan to, in a group ``scan``.
        config_hash : str, optional
            Stored as an attribute of the group.
        start : int, optional
            The first iteration at which this hook should be called.
        step : int, optional
            The hook will be called every ``step`` iterations.
        """
        self.f = f
        self.config_hash = config_hash
        self.nrow = 0
        Hook.__init__(self, start, step)

    def __call__(self, iterative):
        if "scan" not in self.f:
            self.init_scan(iterative)
        sgrp = self.f["scan"]
        for key in sgrp:
            ds = sgrp[key]
            ds.resize(self.nrow + 1, axis=0)
            ds[self.nrow] = iterative.state[key].value
        self.nrow += 1

    def init_scan(self, iterative):
        sgrp = self.f.create_group("scan")
        for key, item in iterative.state.items():
            # Empty arrays have no row to store.
            if item.value is None or 0 in item.shape:
                continue
            sgrp.create_dataset(key, (0,) + item.shape, maxshape=(None,) + item.shape, dtype=item.dtype)
            for name, value in item.iter_attrs(iterative):
                sgrp.attrs[name] = value
        sgrp.attrs["columns"] = ",".join(iterative.columns)

    def close(self, iterative):
        if "scan" not in self.f:
            sgrp = self.f.create_group("scan")
            sgrp.attrs["columns"] = ",".join(iterative.columns)
        if self.config_hash is not None:
            self.f["scan"].attrs["config_hash"] = self.config_hash
        self.f.flush()
