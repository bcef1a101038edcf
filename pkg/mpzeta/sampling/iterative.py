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


"""Base class for iterative algorithms driven by a counter, with state items and hooks."""

import numpy as np

from mpzeta.log import log, timer


__all__ = ["Iterative", "StateItem", "AttributeStateItem", "ColumnStateItem", "Hook"]


def _hook_list(hooks):
    if hooks is None:
        return []
    if isinstance(hooks, Hook):
        return [hooks]
    return list(hooks)


class Iterative(object):
    """A loop over a counter.

    Subclasses say when there is nothing left to do in ``done``. After every advance of the counter, the state
    items are refreshed and the hooks that expect a call at the new counter value are called.
    """
    default_state = []
    log_name = "ITER"

    def __init__(self, state=None, hooks=None, counter0=0):
        """
        Parameters
        ----------
        state : list of StateItem, optional
            Added to copies of the ``default_state`` of the class.
        hooks : Hook or list of Hook, optional
            Routines called after the state is refreshed, each at its own iterations.
        counter0 : int, optional
            The counter value of the initial state.
        """
        self.state_list = [item.copy() for item in self.default_state] + list(state or [])
        self.state = dict((item.key, item) for item in self.state_list)
        self.hooks = _hook_list(hooks)
        self._add_default_hooks()
        self.counter0 = counter0
        self.counter = counter0
        with log.section(self.log_name), timer.section(self.log_name):
            self.initialize()

    def _add_default_hooks(self):
        pass

    def initialize(self):
        self.call_hooks()

    def call_hooks(self):
        due = [hook for hook in self.hooks if hook.expects_call(self.counter)]
        if len(due) == 0:
            return
        with timer.section("%s hooks" % self.log_name):
            for item in self.state_list:
                item.update(self)
            for hook in due:
                hook(self)

    def run(self, nsteps=None):
        """Advance until ``done``, or at most ``nsteps`` times, and finalize."""
        with log.section(self.log_name), timer.section(self.log_name):
            nstep = 0
            while nsteps is None or nstep < nsteps:
                if self.propagate():
                    break
                nstep += 1
            self.finalize()

    def propagate(self):
        """Advance the counter by one. Returns True when nothing is left to do."""
        if self.done():
            return True
        self.counter += 1
        self.call_hooks()
        return self.done()

    def done(self):
        raise NotImplementedError

    def finalize(self):
        for hook in self.hooks:
            hook.close(self)


class StateItem(object):
    """A named quantity read from the iterative algorithm before the hooks are called.

    The shape and dtype are fixed by the first value, writers use them to allocate datasets.
    """
    def __init__(self, key):
        self.key = key
        self.value = None
        self.shape = None
        self.dtype = None

    def update(self, iterative):
        self.value = self.get_value(iterative)
        if self.shape is None:
            value = np.asarray(self.value)
            self.shape = value.shape
            self.dtype = value.dtype

    def get_value(self, iterative):
        raise NotImplementedError

    def iter_attrs(self, iterative):
        return iter(())

    def copy(self):
        return self.__class__(self.key)


class AttributeStateItem(StateItem):
    def get_value(self, iterative):
        return getattr(iterative, self.key)


class ColumnStateItem(StateItem):
    """The value of a named column of ``iterative.table`` in the current row."""
    def __init__(self, key, unit=None):
        StateItem.__init__(self, key)
        self.unit = unit

    def get_value(self, iterative):
        return float(iterative.table[self.key][iterative.row])

    def iter_attrs(self, iterative):
        if self.unit is not None:
            yield "%s_unit" % self.key, self.unit

    def copy(self):
        return self.__class__(self.key, self.unit)


class Hook(object):
    """Base class for any routine called during an iterative algorithm.

    Parameters
    ----------
    start : int
        The first iteration at which this hook is called.
    step : int
        The hook is called every ``step`` iterations from ``start`` on.
    """
    def __init__(self, start=0, step=1):
        if step < 1:
            raise ValueError("A hook step must be at least 1, got %s." % step)
        self.start = start
        self.step = step

    def expects_call(self, counter):
        offset = counter - self.start
        return offset >= 0 and offset % self.step == 0

    def __call__(self, iterative):
        raise NotImplementedError

    def close(self, iterative):
        pass
