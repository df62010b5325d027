import dataclasses

import pytest

from hfix.config import DEFAULT, Tolerances


def test_defaults():
    assert DEFAULT.root_tol == 1e-12 and DEFAULT.cluster_eps == 1e-6 and DEFAULT.one_band == 1e-8
    assert DEFAULT.contour_start == 64 and DEFAULT.contour_max == 2**16


def test_overrides_ignore_none():
    t = DEFAULT.with_overrides(root_tol=None, one_band=1e-6)
    assert t.root_tol == 1e-12 and t.one_band == 1e-6
    assert DEFAULT.one_band == 1e-8


def test_frozen_and_dict():
    with pytest.raises(dataclasses.FrozenInstanceError):
        DEFAULT.root_tol = 1
    assert Tolerances().as_dict()["sum_pass"] == 1e-7
