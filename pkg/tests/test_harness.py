import pytest
from pydantic import ValidationError

import starcat.harness.laws as laws_module
from starcat.category import adjoint, identity, negate
from starcat.errors import GenerationError
from starcat.factorizations import classify
from starcat.gram_schmidt import is_split
from starcat.harness import (
    LAWS,
    GenConfig,
    Law,
    LawReport,
    Sampler,
    gen_contraction,
    gen_isometry,
    gen_matrix,
    gen_positive,
    gen_split_cospan,
    law,
    laws_for,
    run_laws,
)
from starcat.order import is_contraction, is_positive_endo
from starcat.scalars import RingId
from tests.helpers import ALL_RINGS

ACCEPTANCE_SECONDS = 300


class TestGenConfig:
    """Test run configuration validation."""

    def test_defaults(self):
        """Test the default seed, case count and dimension bound."""
        cfg = GenConfig(ring="gaussian")
        assert cfg.ring is RingId.GAUSSIAN
        assert (cfg.seed, cfg.cases, cfg.max_dim) == (1, 50, 5)

    def test_negative_dimension_raises_error(self):
        """Test that bounds are validated."""
        with pytest.raises(ValidationError):
            GenConfig(ring="rational", max_dim=-1)

    def test_unknown_ring_raises_error(self):
        """Test that only the four rings are accepted."""
        with pytest.raises(ValidationError):
            GenConfig(ring="octonion")

    def test_unknown_field_raises_error(self):
        """Test that typos in field names are rejected."""
        with pytest.raises(ValidationError):
            GenConfig(ring="rational", max_dims=3)


class TestGenerators:
    """Test the public generators and the sampler."""

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_generators_meet_their_contracts(self, ring):
        """Test every generator output against its defining predicate."""
        cfg = GenConfig(ring=ring, max_dim=3)
        for case in range(5):
            m = gen_matrix(cfg, (2, 3), case)
            assert (m.cod.dim, m.dom.dim) == (2, 3)
            assert classify(gen_isometry(cfg, case)).isometry
            assert is_contraction(gen_contraction(cfg, case))
            assert is_positive_endo(gen_positive(cfg, case)).positive
            assert is_split(gen_split_cospan(cfg, case)) is not None

    def test_ratfun_dimensions_are_capped(self):
        """Test that RATFUN objects stay small even at max_dim 5."""
        cfg = GenConfig(ring="ratfun", max_dim=5)
        assert cfg.dim_bound == cfg.ratfun_max_dim == 3
        assert GenConfig(ring="rational", max_dim=5).dim_bound == 5
        sampler = Sampler(cfg, 0)
        assert max(sampler.dim() for _ in range(50)) <= 3

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_reflections_and_unitaries(self, ring):
        """Test that reflections are Hermitian unitaries."""
        sampler = Sampler(GenConfig(ring=ring, max_dim=4), 1)
        X = sampler.obj(3)
        r = sampler.reflection(X)
        assert adjoint(r) == r
        assert classify(r).unitary
        assert classify(sampler.unitary(X)).unitary
        empty = sampler.obj(0)
        assert sampler.unitary(empty) == identity(empty)

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_isometry_of_requested_dimension(self, ring):
        """Test that isometries land in the given object."""
        sampler = Sampler(GenConfig(ring=ring), 2)
        Y = sampler.obj(3)
        s = sampler.isometry(Y, 2)
        assert (s.dom.dim, s.cod) == (2, Y)
        assert classify(s).isometry

    def test_isometry_too_large_raises_error(self):
        """Test that no isometry exists into a smaller object."""
        sampler = Sampler(GenConfig(ring="rational"), 0)
        with pytest.raises(GenerationError):
            sampler.isometry(sampler.obj(1), 2)

    def test_samplers_are_deterministic(self):
        """Test that equal (config, case, label) give equal instances."""
        cfg = GenConfig(ring="quaternion", seed=7)
        first = Sampler(cfg, 3, "label").morphism()
        second = Sampler(cfg, 3, "label").morphism()
        assert first == second

    def test_labels_separate_streams(self):
        """Test that labels and cases pick independent streams."""
        cfg = GenConfig(ring="rational", seed=7, max_dim=4)
        draws = {
            tuple(Sampler(cfg, case, label).rng.random() for _ in range(3))
            for case in range(3)
            for label in ("a", "b")
        }
        assert len(draws) == 6

    def test_contraction_respects_given_objects(self):
        """Test that a contraction lands between the requested objects."""
        sampler = Sampler(GenConfig(ring="gaussian"), 0)
        X, Y = sampler.obj(2), sampler.obj(3)
        f = sampler.contraction(X, Y)
        assert (f.dom, f.cod) == (X, Y)
        assert is_contraction(f)


class TestLawRegistry:
    """Test registration and selection of laws."""

    def test_ring_restricted_laws_are_filtered(self):
        """Test that ratfun-only laws run on ratfun alone."""
        rational = {entry.name for entry in laws_for(RingId.RATIONAL)}
        ratfun = {entry.name for entry in laws_for(RingId.RATFUN)}
        assert "ratfun_square_roots" in ratfun
        assert "ratfun_square_roots" not in rational
        assert "involution_composition" in rational

    def test_duplicate_registration_raises_error(self):
        """Test that a law name can be registered only once."""
        with pytest.raises(ValueError):
            law("involution_composition")(lambda s: None)

    def test_descriptions_come_from_docstrings(self):
        """Test that every law has a one-line description."""
        for entry in LAWS.values():
            assert entry.description
            assert "\n" not in entry.description

    def test_unknown_law_raises_error(self):
        """Test that requesting an unregistered law fails."""
        with pytest.raises(KeyError):
            run_laws(GenConfig(ring="rational", cases=1), laws=["nope"])


class TestRunLaws:
    """Test law-suite runs."""

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_small_run_passes(self, ring):
        """Test a short run of every law on each ring."""
        report = run_laws(GenConfig(ring=ring, cases=2, max_dim=2), workers=1)
        assert report.ok, report.failing_laws()
        assert set(report.laws) == {e.name for e in laws_for(ring)}
        for result in report.laws.values():
            assert result.passed == 2

    @pytest.mark.slow
    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_acceptance_run_passes(self, ring):
        """Test seed 1, 50 cases, max_dim 5 on each ring within budget."""
        report = run_laws(GenConfig(ring=ring, seed=1, cases=50, max_dim=5))
        assert report.ok, report.failing_laws()
        assert report.elapsed_seconds < ACCEPTANCE_SECONDS

    def test_raising_law_is_a_failure(self, monkeypatch):
        """Test that an unexpected exception fails the case, not the run."""

        def always_raises(s: Sampler) -> None:
            raise ZeroDivisionError("boom")

        monkeypatch.setitem(
            LAWS,
            "always_raises",
            Law("always_raises", always_raises, None, "Raises."),
        )
        report = run_laws(
            GenConfig(ring="rational", seed=1, cases=2, max_dim=2),
            laws=["always_raises", "scalar_involution"],
            workers=1,
        )
        result = report.laws["always_raises"]
        assert (result.passed, result.failed) == (0, 2)
        assert report.laws["scalar_involution"].failed == 0
        counterexample = result.first_counterexample
        assert counterexample is not None
        assert counterexample.message.startswith("ZeroDivisionError: boom")
        assert "seed 1, case 0" in counterexample.message
        assert counterexample.document is None

    def test_runs_are_reproducible(self):
        """Test that equal configs give equal per-law results."""
        cfg = GenConfig(ring="gaussian", seed=3, cases=3, max_dim=3)
        names = ["kernel_universal", "gram_schmidt_postconditions"]
        first = run_laws(cfg, laws=names, workers=1)
        second = run_laws(cfg, laws=names, workers=1)
        assert first.laws == second.laws

    def test_worker_pool_matches_serial_run(self):
        """Test that scheduling across processes does not change results."""
        cfg = GenConfig(ring="rational", seed=5, cases=4, max_dim=3)
        names = ["positivity_certificates", "codilation_gram_identity"]
        serial = run_laws(cfg, laws=names, workers=1)
        pooled = run_laws(cfg, laws=names, workers=2)
        assert serial.laws == pooled.laws

    def test_broken_adjoint_is_caught(self, monkeypatch):
        """Test that a sign-flipped adjoint fails with a counterexample."""
        real_adjoint = laws_module.adjoint
        monkeypatch.setattr(
            laws_module, "adjoint", lambda f: negate(real_adjoint(f))
        )
        report = run_laws(
            GenConfig(ring="rational", seed=1, cases=20, max_dim=3),
            laws=["involution_composition"],
            workers=1,
        )
        result = report.laws["involution_composition"]
        assert not report.ok
        assert result.failed > 0
        counterexample = result.first_counterexample
        assert counterexample is not None
        assert counterexample.document is not None
        assert set(counterexample.document["morphisms"]) == {"f", "g"}

    def test_report_round_trips_through_json(self):
        """Test that a report survives its own JSON form."""
        report = run_laws(
            GenConfig(ring="rational", cases=1, max_dim=2),
            laws=["scalar_involution"],
            workers=1,
        )
        restored = LawReport.model_validate_json(report.model_dump_json())
        assert restored == report
