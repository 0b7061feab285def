from __future__ import annotations

from prop_suites import (
    suite_chordal_normalization,
    suite_equitable_quotients,
    suite_forest_spectra,
    suite_interlacing,
    suite_switch_invariance,
)


def test_switch_invariance_suite():
    assert suite_switch_invariance(cases=1000) == 1000


def test_interlacing_suite():
    assert suite_interlacing(cases=1000) == 1000


def test_forest_spectra_suite():
    assert suite_forest_spectra(cases=1000) == 1000


def test_chordal_normalization_suite():
    assert suite_chordal_normalization(cases=1000) == 1000


def test_equitable_quotients_suite():
    assert suite_equitable_quotients(cases=1000) == 1000
