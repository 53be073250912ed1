import numpy as np
import pytest

from fermiwell import WellParams, count_states, matching_function, solve_spectrum
from fermiwell.errors import DomainError
from fermiwell.tables import DEMO_EXACT_LEVELS


def test_demo_well_levels_parities_nodes(demo_report):
    assert demo_report.count == 3
    for state, e_ref in zip(demo_report.states, DEMO_EXACT_LEVELS):
        assert state.energy == pytest.approx(e_ref, abs=1e-3)
    assert [s.parity for s in demo_report.states] == ["even", "odd", "even"]
    assert [s.nodes for s in demo_report.states] == [0, 1, 2]
    assert not any(s.near_threshold for s in demo_report.states)


def test_matching_function_vanishes_at_eigenvalues(demo_well):
    # Index 1 is odd, so the odd condition psi(0)=0 holds there; the even
    # condition holds at indices 0 and 2.
    scale = abs(matching_function(demo_well, -20.0, "odd"))
    assert abs(matching_function(demo_well, DEMO_EXACT_LEVELS[1], "odd")) < 1e-4 * scale
    scale = abs(matching_function(demo_well, -20.0, "even"))
    assert abs(matching_function(demo_well, DEMO_EXACT_LEVELS[0], "even")) < 1e-4 * scale


def test_matching_function_rejects_bad_parity(demo_well):
    with pytest.raises(DomainError):
        matching_function(demo_well, -10.0, "mixed")


def test_energies_strictly_ordered(demo_report):
    energies = [s.energy for s in demo_report.states]
    assert energies == sorted(energies)
    assert all(-demo_report.params.v0 < e < 0.0 for e in energies)


def test_g_value_brackets_count(random_wells):
    for p in random_wells[:12]:
        rep = solve_spectrum(p)
        lo = int(np.floor(rep.g_value))
        assert rep.count in (lo, lo + 1)


def test_count_states_shortcut(demo_well):
    assert count_states(demo_well) == 3


def test_grid_refinement_stable(demo_well):
    coarse = solve_spectrum(demo_well, grid_points=500)
    fine = solve_spectrum(demo_well, grid_points=4000)
    assert coarse.count == fine.count
    for s1, s2 in zip(coarse.states, fine.states):
        assert s1.energy == pytest.approx(s2.energy, abs=1e-7)


def test_tol_refinement(demo_well):
    loose = solve_spectrum(demo_well, tol_e=1e-4)
    tight = solve_spectrum(demo_well, tol_e=1e-10)
    for s1, s2 in zip(loose.states, tight.states):
        assert s1.energy == pytest.approx(s2.energy, abs=2e-4)


def test_invalid_arguments(demo_well):
    with pytest.raises(DomainError):
        solve_spectrum(demo_well, grid_points=10)
    with pytest.raises(DomainError):
        solve_spectrum(demo_well, tol_e=0.0)


def test_shallow_well_single_state():
    p = WellParams(0.35, 1.0, 0.5)
    rep = solve_spectrum(p)
    assert rep.count == 1
    assert rep.states[0].parity == "even"


def test_deep_edge_well_is_stable():
    # alpha = a/b ~ 47: 1 - y0 underflows in naive arithmetic; the solver
    # must still deliver a verified spectrum.
    p = WellParams(30.6, 4.9, 0.105)
    rep = solve_spectrum(p)
    lo = int(np.floor(rep.g_value))
    assert rep.count in (lo, lo + 1)
    assert [s.nodes for s in rep.states] == list(range(rep.count))
