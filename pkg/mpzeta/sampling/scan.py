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


"""Grid scans: named evaluators tabulated along a one-dimensional grid."""

import time

import numpy as np

from mpzeta.log import log, timer
from mpzeta.sampling.iterative import Iterative, AttributeStateItem, ColumnStateItem, Hook


__all__ = ["GridScan", "ScanScreenLog"]


class ScanScreenLog(Hook):
    def __init__(self, start=0, step=1):
        Hook.__init__(self, start, step)
        self.time0 = None

    def __call__(self, iterative):
        if log.do_medium:
            if self.time0 is None:
                self.time0 = time.time()
                log.hline()
                log(" ".join(["counter"] + ["%16s" % name for name in iterative.columns]))
                log.hline()
            row = [iterative.table[name][iterative.row] for name in iterative.columns]
            log(" ".join(["%7i" % iterative.counter] + ["% 16.8e" % value for value in row]))


class GridScan(Iterative):
    default_state = [AttributeStateItem("counter")]
    log_name = "SCAN"

    def __init__(self, grid, evaluators, variable="t", state=None, hooks=None, counter0=0):
        """
        Parameters
        ----------
        grid : numpy.ndarray
            The grid points, possibly none.
        evaluators : list of tuple
            Pairs ``(name, func)`` with ``func`` a vectorized real function of the grid variable.
            Each one becomes a column of the scan.
        variable : str, optional
            The name of the grid variable, the first column.
        state : list, optional
            Additional state items.
        hooks : Hook or list of Hook, optional
            Writers and loggers, called at every grid point.
        counter0 : int, optional
            The counter value of the first grid point.
        """
        self.grid = np.asarray(grid, dtype=float).ravel()
        self.variable = variable
        self.names = [name for name, func in evaluators]
        if variable in self.names or len(set(self.names)) != len(self.names):
            raise ValueError("Scan columns must have distinct names, got %s." % ([variable] + self.names))
        self.table = {variable: self.grid}
        with timer.section("Scan evaluation"):
            for name, func in evaluators:
                if len(self.grid) == 0:
                    self.table[name] = np.zeros(0)
                else:
                    values = np.asarray(func(self.grid), dtype=float)*np.ones(len(self.grid))
                    self.table[name] = values
        columns = [ColumnStateItem(name) for name in self.columns]
        Iterative.__init__(self, columns + ([] if state is None else state), hooks, counter0)

    @property
    def columns(self):
        return [self.variable] + self.names

    @property
    def row(self):
        return self.counter - self.counter0

    def _add_default_hooks(self):
        if not any(isinstance(hook, ScanScreenLog) for hook in self.hooks):
            self.hooks.append(ScanScreenLog())

    def initialize(self):
        if len(self.grid) > 0:
            Iterative.initialize(self)

    def done(self):
        return self.row + 1 >= len(self.grid)

    def finalize(self):
        Iterative.finalize(self)
        if log.do_medium:
            log.hline()
            log("Scanned %i points over %i columns." % (len(self.grid), len(self.names)))

    def scan(self):
        """Walk all grid points and return the table of columns."""
        self.run()
        return self.table
