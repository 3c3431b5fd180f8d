import numpy as np
import pytest

import coarray_bf as cb


def test_geometry_and_coarray():
    g = cb.make_mra(7)
    assert g.size() == 7
    ca = cb.sum_coarray(g, g)
    assert ca.n_sigma() == 21
    assert cb.q_lower_bound(7, 7, ca.n_sigma()) == 2


def test_quantizer_lattice():
    phases = np.linspace(-7.0, 7.0, 41).reshape(1, -1)
    q = cb.quantize_phase(phases, 3)
    step = 2.0 * np.pi / 8
    k = q / step
    assert np.allclose(k, np.round(k))
    assert np.array_equal(cb.quantize_phase(q, 3), q)


def test_altmin_exact_at_bound():
    g = cb.make_mra(7)
    ca = cb.sum_coarray(g, g)
    sel = cb.selection_matrix(g, g, ca)
    op = cb.PsfOperator(sel)
    target = cb.target_stochastic(ca.n_sigma(), 42)
    bank, err, trace = cb.altmin(op, target, 2)
    assert err <= 1e-12 * np.linalg.norm(target) ** 2
    realized = op.realized(bank.wt, bank.wr)
    assert np.linalg.norm(realized - target) <= 1e-6 * np.linalg.norm(target)


def test_closed_forms_reconstruct():
    rng = np.random.default_rng(3)
    w = rng.standard_normal((5, 4)) + 1j * rng.standard_normal((5, 4))
    digital = cb.svd_factorize(w)
    for bank in (
        cb.thm1_hybrid_cont(digital),
        cb.thm2_hybrid_1bit(w),
        cb.thm3_analog_cont(digital),
        cb.thm4_analog_1bit(w),
    ):
        assert np.linalg.norm(bank.effective() - w) <= 1e-10 * np.linalg.norm(w)
    assert cb.thm2_hybrid_1bit(w).q() == 20
    assert cb.thm4_analog_1bit(w).q() == 80


def test_greedy_quantized_bank_on_lattice():
    g = cb.make_mra(7)
    ca = cb.sum_coarray(g, g)
    op = cb.PsfOperator(cb.selection_matrix(g, g, ca))
    target = cb.target_stochastic(ca.n_sigma(), 7)
    bank, err, trace = cb.greedy(op, target, m_t=2, m_r=2, b=3, q=4, k_max=30)
    assert bank.bits == 3
    step = 2.0 * np.pi / 8
    for phases in (bank.ft_phase, bank.fr_phase):
        k = np.asarray(phases) / step
        assert np.allclose(k, np.round(k), atol=1e-9)
    assert err <= np.linalg.norm(target) ** 2
    assert trace == sorted(trace, reverse=True)


def test_experiment_runner():
    cfg = """{
        "kind": "closedform-verify",
        "trials": 10,
        "seed": 5
    }"""
    columns, rows = cb.run_experiment(cfg)
    row = dict(zip(columns, rows[0]))
    assert row["failed"] == 0
    assert row["q_exact"] == 1
    for key in ("thm1_max_err", "thm2_max_err", "thm3_max_err", "thm4_max_err"):
        assert row[key] <= 1e-10
