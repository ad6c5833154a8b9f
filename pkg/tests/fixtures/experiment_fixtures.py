import pytest

from app.schemas.experiment import ExperimentConfig


@pytest.fixture
def quick_config(output_dir):
    """Factory for short Kuhn runs that write under the test's output directory."""

    def make(**overrides):
        values = {
            "game": "kuhn3",
            "algorithm": "rtcfr",
            "mu": 0.01,
            "T": 5,
            "traversal_budget": 40,
            "eval_every": 10,
            "output_dir": str(output_dir),
        }
        values.update(overrides)
        return ExperimentConfig.model_validate(values)

    return make


@pytest.fixture
def sweep_text(output_dir):
    return (
        "game=kuhn3\n"
        "traversal_budget=30\n"
        f"output_dir={output_dir / 'sweep'}\n"
        "[run]\n"
        "algorithm=cfr+\n"
        "epsilon=0.001\n"
        "[run]\n"
        "perturbation=adaptive\n"
        "epsilon=0.1\n"
        "delta=1\n"
        "gamma=0.5\n"
        "T=5\n"
        "mu=0.01\n"
    )
