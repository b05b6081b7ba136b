"""Closed-form vs dense product-state oracles, embeddings, Okounkov limits."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from rookchar.elements import (
    compose,
    enumerate_rn,
    idempotent,
    identity,
    parse_element,
    symmetric_group,
    transposition,
)
from rookchar.errors import ResourceGuardError
from rookchar.states import evaluate
from rookchar.tensor_model import (
    ModelParams,
    TensorEmbedding,
    marked_cycle_value,
    model_from_state,
    okounkov_check,
    okounkov_projection_check,
    phi_closed_form,
    phi_model,
    validate_params,
)
from conftest import ORACLE_PARAMS, SUITE_STATES

# The worked example set: alpha = 1/2, beta = 1/3, t = 1/2, leftover mass on
# one declared regular coordinate.
RUNNING = ModelParams.of(["1/2", "-1/3", "0", "0"], ["1/2", "0", "1/2", "0"], [4], 4)


class TestValidation:
    def test_running_params_pass(self):
        assert validate_params(RUNNING).ok

    def test_mass_bound(self):
        p = ModelParams.of(["3/4", "-2/5"], ["1", "0"], [], 2)
        report = validate_params(p)
        assert not report.ok
        assert any(code == "a" and not ok for code, ok, _ in report.conditions)

    def test_weight_on_negative_block_fails(self):
        p = ModelParams.of(["1/2", "-1/3", "0", "0"], ["1/2", "1/2", "0", "0"], [4], 4)
        report = validate_params(p)
        assert any(code == "e" and not ok for code, ok, _ in report.conditions)

    def test_weight_on_regular_fails(self):
        p = ModelParams.of(["1/2", "-1/3", "0", "0"], ["1/2", "0", "0", "1/2"], [4], 4)
        report = validate_params(p)
        assert any(code == "f" and not ok for code, ok, _ in report.conditions)

    def test_leftover_mass_needs_regular(self):
        p = ModelParams.of(["1/2", "0"], ["1", "0"], [], 2)
        report = validate_params(p)
        assert any(code == "d" and not ok for code, ok, _ in report.conditions)

    def test_full_mass_forbids_regular(self):
        p = ModelParams.of(["1", "0"], ["1", "0"], [2], 2)
        report = validate_params(p)
        assert any(code == "c" and not ok for code, ok, _ in report.conditions)

    def test_oracle_sets_pass(self, oracle_params):
        assert validate_params(oracle_params).ok

    def test_closed_form_rejects_invalid(self):
        p = ModelParams.of(["3/4", "-2/5"], ["1", "0"], [], 2)
        with pytest.raises(ValueError):
            phi_closed_form(p, identity())

    def test_json_roundtrip(self):
        again = ModelParams.from_json(RUNNING.to_json())
        assert again == RUNNING
        assert RUNNING.to_json()["v"] == ["sqrt(1/2)", "0", "sqrt(1/2)", "0"]


class TestClosedForm:
    def test_plain_cycle_matches_character(self):
        assert phi_closed_form(RUNNING, parse_element("(1 2)")) == Fraction(5, 36)

    def test_single_marked_cycle(self):
        assert phi_closed_form(RUNNING, parse_element("(1 2)e{1}")) == Fraction(1, 8)

    def test_double_marked_cycle(self):
        r = parse_element("(1 2 3 4)e{1}e{3}")
        assert phi_closed_form(RUNNING, r) == Fraction(1, 64)
        assert marked_cycle_value(RUNNING, 4, [1, 3]) == Fraction(1, 64)

    def test_marked_cycle_rotation_invariance(self):
        # Shifting all marked positions around the cycle must not change the
        # value: the element is conjugate by a rotation.
        for marks in ([1], [1, 3], [1, 2], [2, 4]):
            vals = set()
            for shift in range(4):
                shifted = sorted((m - 1 + shift) % 4 + 1 for m in marks)
                vals.add(marked_cycle_value(RUNNING, 4, shifted))
            assert len(vals) == 1

    def test_marked_cycle_matches_decomposed_element(self):
        for k in (2, 3, 4):
            for b in range(1, k + 1):
                for marks in itertools.combinations(range(1, k + 1), b):
                    r = compose(
                        parse_element("(" + " ".join(map(str, range(1, k + 1))) + ")"),
                        idempotent(marks),
                    )
                    assert marked_cycle_value(RUNNING, k, marks) == phi_closed_form(
                        RUNNING, r
                    )

    def test_rank_one_spectral_relation(self, oracle_params):
        # <A^{m-1} v, v> = <A^{m-2}|A| v, v> when v avoids the negative block.
        p = oracle_params
        for m in range(2, 7):
            lhs = sum(a ** (m - 1) * q for a, q in zip(p.a_diag, p.v_sq))
            rhs = sum(a ** (m - 2) * abs(a) * q for a, q in zip(p.a_diag, p.v_sq))
            assert lhs == rhs


class TestEmbedding:
    def test_swap_without_negative_block(self):
        p = ModelParams.of(["1/2", "1/2"], ["1", "0"], [], 2)
        emb = TensorEmbedding(p)
        swap = np.zeros((4, 4))
        for i in range(2):
            for j in range(2):
                swap[j * 2 + i, i * 2 + j] = 1.0
        assert np.array_equal(emb.generator_s(1), swap)

    def test_generators_square_correctly(self):
        emb = TensorEmbedding(ORACLE_PARAMS["t_half_beta"])
        s1 = emb.generator_s(1)
        assert np.allclose(s1 @ s1, np.eye(emb.dim))
        q = emb.generator_eps1()
        assert np.allclose(q @ q, q)

    def test_epsilon_k_is_slot_projection(self):
        emb = TensorEmbedding(ORACLE_PARAMS["t_half_beta"])
        d, n = emb.params.d, emb.params.slots
        qmat = np.outer(emb._v, emb._v)
        for k in range(1, n + 1):
            direct = np.kron(
                np.kron(np.eye(d ** (k - 1)), qmat), np.eye(d ** (n - k))
            )
            assert np.allclose(emb.matrix(idempotent([k])), direct, atol=1e-12)

    def test_guard(self):
        p = ModelParams.of(["1", "0", "0", "0"], ["1", "0", "0", "0"], [], 12)
        with pytest.raises(ResourceGuardError):
            TensorEmbedding(p)

    def test_support_beyond_slots_rejected(self):
        emb = TensorEmbedding(ModelParams.of(["1", "0"], ["1", "0"], [], 2))
        with pytest.raises(ValueError):
            emb.matrix(idempotent([3]))


class TestOracleEquivalence:
    def test_normalization(self, oracle_params):
        emb = TensorEmbedding(oracle_params)
        assert phi_model(oracle_params, identity(), emb) == pytest.approx(1.0)

    def test_sixteen_by_sixteen_sign_twist(self):
        p = ModelParams.of(["1/2", "1/12", "-1/3", "-1/12"], ["1", "0", "0", "0"], [], 2)
        emb = TensorEmbedding(p)
        assert emb.dim == 16
        value = phi_model(p, parse_element("(1 2)"), emb)
        assert value == pytest.approx(5 / 36, abs=1e-14)

    def test_epsilon_value_with_running_params(self):
        emb = TensorEmbedding(RUNNING)
        assert phi_model(RUNNING, idempotent([1]), emb) == pytest.approx(0.25, abs=1e-14)
        assert phi_closed_form(RUNNING, idempotent([1])) == Fraction(1, 4)

    def test_broken_sign_twist_is_caught(self):
        p = ORACLE_PARAMS["t_half_beta"]
        crooked = TensorEmbedding(p, twist=False)
        r = parse_element("(1 2)")
        assert abs(phi_model(p, r, crooked) - float(phi_closed_form(p, r))) > 0.2

    def test_r3_agreement(self, oracle_params):
        emb = TensorEmbedding(oracle_params)
        for r in enumerate_rn(3):
            assert phi_model(oracle_params, r, emb) == pytest.approx(
                float(phi_closed_form(oracle_params, r)), abs=1e-10
            )

    def test_model_invariance_and_multiplicativity(self):
        p = ORACLE_PARAMS["t_half_beta"]
        emb = TensorEmbedding(p)
        elems = list(enumerate_rn(3))
        values = {r: phi_model(p, r, emb) for r in elems}
        for s in symmetric_group(3):
            for r in elems:
                assert phi_model(p, compose(s, r), emb) == pytest.approx(
                    phi_model(p, compose(r, s), emb), abs=1e-12
                )
        for r1, r2 in itertools.combinations(elems, 2):
            if r1.support() & r2.support():
                continue
            assert phi_model(p, compose(r1, r2), emb) == pytest.approx(
                values[r1] * values[r2], abs=1e-10
            )

    def test_truncated_regular_block_collision_is_understood(self):
        # With leftover mass recycled through a single regular coordinate,
        # plain cycles whose slots collide gain (1 - Tr|A|)^len; quasi-cycle
        # and idempotent values stay exact.  This documents the deviation.
        emb = TensorEmbedding(RUNNING)
        r = parse_element("(1 2)")
        leftover = 1 - float(RUNNING.spectral_mass)
        assert phi_model(RUNNING, r, emb) == pytest.approx(
            float(phi_closed_form(RUNNING, r)) + leftover**2, abs=1e-12
        )
        q = parse_element("(1 2)e{1}")
        assert phi_model(RUNNING, q, emb) == pytest.approx(
            float(phi_closed_form(RUNNING, q)), abs=1e-12
        )


class TestStateFamilyBridge:
    def test_exact_equality_r3(self, suite_state):
        params = model_from_state(suite_state, slots=3)
        assert validate_params(params).ok
        for r in enumerate_rn(3):
            assert phi_closed_form(params, r) == evaluate(suite_state, r)

    def test_bridge_declares_regular_only_when_needed(self):
        full = model_from_state(SUITE_STATES["running"], slots=3)
        assert full.regular == ()  # 1/2 + 1/3 + 1/6 == 1
        partial = model_from_state(SUITE_STATES["zero_extension"], slots=3)
        assert partial.regular != ()


class TestOkounkov:
    def test_identity_pair_reproduces_two_cycle_value(self):
        p = ORACLE_PARAMS["t_half_beta"]
        rep = okounkov_check(p, 1, identity(), identity())
        expected = float(phi_closed_form(p, parse_element("(1 2)")))
        assert rep.target == pytest.approx(expected, abs=1e-12)
        assert rep.max_deviation <= 1e-12
        assert len(rep.values) == 3  # n in {2, 3, 4} with N = 4, k = 1

    def test_epsilon_pair(self):
        p = ORACLE_PARAMS["t_half_beta"]
        eps = idempotent([1])
        rep = okounkov_check(p, 2, eps, eps)
        expected = float(phi_closed_form(p, parse_element("(2 3)e{1}")))
        assert rep.target == pytest.approx(expected, abs=1e-12)
        assert rep.max_deviation <= 1e-12

    def test_r2_vectors_stabilize(self):
        p = ORACLE_PARAMS["t1_beta"]
        emb = TensorEmbedding(p)
        for x in enumerate_rn(2):
            for y in enumerate_rn(2):
                rep = okounkov_check(p, 3, x, y, emb)
                assert rep.max_deviation <= 1e-12

    def test_support_bound_enforced(self):
        p = ORACLE_PARAMS["t_half_beta"]
        with pytest.raises(ValueError):
            okounkov_check(p, 4, identity(), identity())

    def test_projection_law(self):
        p = ModelParams.of(["1", "0", "0"], ["1/2", "1/2", "0"], [], 4)
        emb = TensorEmbedding(p)
        for x in enumerate_rn(1):
            for y in enumerate_rn(1):
                assert okounkov_projection_check(p, 2, x, y, emb) <= 1e-12

    def test_projection_law_requires_projection(self):
        with pytest.raises(ValueError):
            okounkov_projection_check(
                ORACLE_PARAMS["t_half_beta"], 1, identity(), identity()
            )
