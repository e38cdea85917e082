import pytest
from pydantic import ValidationError

from pyqcolor.core.models import AnnealConfig, MultiRunConfig
from pyqcolor.core.utils import MASK_64, derive_seed, derive_seeds, splitmix64
from pyqcolor.engine.annealer import MetropolisAnnealer
from pyqcolor.engine.graph_generator import generate_erdos_renyi
from pyqcolor.engine.multirun import MultiRunner, resolve_worker_count, run_many


@pytest.fixture
def graph():
    return generate_erdos_renyi(60, 4.0, seed=21)


@pytest.fixture
def base():
    return AnnealConfig(n_colors=3, n_iterations=20_000, seed=99)


class TestSeedDerivation:
    """Tests for per-run seed derivation."""

    def test_seeds_distinct(self):
        seeds = derive_seeds(0, 1000)
        assert len(set(seeds)) == 1000
        assert all(0 <= s <= MASK_64 for s in seeds)

    def test_deterministic(self):
        assert derive_seed(42, 3) == derive_seed(42, 3)
        assert derive_seeds(42, 4) == [derive_seed(42, i) for i in range(4)]

    def test_base_seed_matters(self):
        assert derive_seed(1, 0) != derive_seed(2, 0)

    def test_splitmix64_known_value(self):
        # First output of SplitMix64 seeded with 0
        assert splitmix64(0x9E3779B97F4A7C15) == 0xE220A8397B1DCDAF


class TestMultiRunner:
    """Tests for best-of-k runs."""

    def test_single_run_matches_direct_run(self, graph, base):
        result = run_many(graph, MultiRunConfig(base=base, n_runs=1, n_workers=1))
        direct = MetropolisAnnealer(
            graph, base.model_copy(update={"seed": derive_seed(base.seed, 0)})
        ).run()
        assert result.best.model_dump() == direct.model_dump()
        assert result.all_hmins == [direct.h_min]
        assert result.best_index == 0

    def test_best_is_minimum(self, graph, base):
        result = run_many(graph, MultiRunConfig(base=base, n_runs=5, n_workers=1))
        assert len(result.all_hmins) == 5
        assert result.best.h_min == min(result.all_hmins)
        assert result.best_index == result.all_hmins.index(min(result.all_hmins))
        assert result.seeds == derive_seeds(base.seed, 5)

    def test_parallel_matches_sequential(self, graph, base):
        sequential = run_many(graph, MultiRunConfig(base=base, n_runs=4, n_workers=1))
        parallel = run_many(graph, MultiRunConfig(base=base, n_runs=4, n_workers=2))
        assert sequential.all_hmins == parallel.all_hmins
        assert sequential.best.model_dump() == parallel.best.model_dump()

    def test_more_runs_never_worse(self, graph, base):
        one = run_many(graph, MultiRunConfig(base=base, n_runs=1, n_workers=1))
        eight = run_many(graph, MultiRunConfig(base=base, n_runs=8, n_workers=1))
        assert eight.all_hmins[0] == one.all_hmins[0]
        assert eight.best.h_min <= one.best.h_min

    def test_split_budget(self, graph, base):
        config = MultiRunConfig(base=base, n_runs=3, n_workers=1, split_budget=True)
        runner = MultiRunner(graph, config)
        assert [cfg.n_iterations for cfg in runner.run_configs()] == [6666] * 3
        assert runner.run().best.n_iterations == 6666

    def test_split_budget_keeps_one_iteration(self, graph):
        base = AnnealConfig(n_colors=3, n_iterations=2)
        config = MultiRunConfig(base=base, n_runs=5, split_budget=True)
        assert {cfg.n_iterations for cfg in MultiRunner(graph, config).run_configs()} == {1}

    def test_zero_runs_rejected(self, base):
        with pytest.raises(ValidationError):
            MultiRunConfig(base=base, n_runs=0)

    def test_resolve_worker_count(self):
        assert resolve_worker_count(4, 2) == 2
        assert resolve_worker_count(1, 10) == 1
        assert 1 <= resolve_worker_count(None, 3) <= 3
