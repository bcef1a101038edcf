from io import StringIO

import numpy as np
import pytest
import h5py

from mpzeta.sampling.iterative import Iterative, Hook
from mpzeta.sampling.scan import GridScan
from mpzeta.sampling.writers import CSVWriter, HDF5Writer


def square(t):
    return t*t


def test_scan_csv():
    f = StringIO()
    table = GridScan([0.0, 1.0, 2.0], [("sq", square)], hooks=CSVWriter(f, "abc")).scan()
    assert table["sq"].tolist() == [0.0, 1.0, 4.0]
    assert f.getvalue() == "t,sq\n0.0,0.0\n1.0,1.0\n2.0,4.0\n# config-hash=abc\n"


def test_scan_empty_grid():
    f = StringIO()
    GridScan(np.zeros(0), [("sq", square)], hooks=CSVWriter(f, "abc")).scan()
    assert f.getvalue() == "t,sq\n# config-hash=abc\n"


def test_scan_constant_column():
    table = GridScan([1.0, 2.0], [("one", lambda t: 1.0)], variable="x").scan()
    assert table["one"].tolist() == [1.0, 1.0]
    assert table["x"].tolist() == [1.0, 2.0]


def test_scan_names():
    with pytest.raises(ValueError):
        GridScan([0.0], [("sq", square), ("sq", square)])
    with pytest.raises(ValueError):
        GridScan([0.0], [("t", square)])


def test_csv_file(tmp_path):
    fn = str(tmp_path/"scan.csv")
    GridScan([2.0], [("sq", square)], hooks=CSVWriter(fn)).scan()
    with open(fn) as f:
        assert f.read() == "t,sq\n2.0,4.0\n"


def test_hdf5(tmp_path):
    with h5py.File(str(tmp_path/"scan.h5"), "w") as f:
        GridScan([0.0, 1.0, 2.0], [("sq", square)], hooks=HDF5Writer(f, "abc")).scan()
        assert f["scan/sq"][:].tolist() == [0.0, 1.0, 4.0]
        assert f["scan/counter"][:].tolist() == [0, 1, 2]
        assert f["scan"].attrs["config_hash"] == "abc"
        assert f["scan"].attrs["columns"] == "t,sq"


def test_hook_schedule():
    hook = Hook(start=2, step=3)
    assert [counter for counter in range(10) if hook.expects_call(counter)] == [2, 5, 8]


def test_iterative_needs_finalize():
    with pytest.raises(NotImplementedError):
        Iterative().run(1)
