import pytest

from lislab.campaign import ExperimentConfig, run_campaign
from lislab.tracy_widom import solve_hastings_mcleod

# The campaign scale used by the exponent and cylinder-transition criteria.
STANDARD_N = (100.0, 200.0, 400.0, 800.0)
STANDARD_TRIALS = 200
STANDARD_GAMMAS = (0.45, 0.5, 0.6, 0.67, 0.75, 0.85, 0.95)
STANDARD_SEED = 20261019

TW_N = 500.0
TW_TRIALS = 2000
TW_SEEDS = (5001, 5002)


@pytest.fixture(scope="session")
def tw_solution():
    return solve_hastings_mcleod()


@pytest.fixture(scope="session")
def standard_campaign():
    cfg = ExperimentConfig(STANDARD_N, STANDARD_TRIALS, STANDARD_GAMMAS, STANDARD_SEED)
    return cfg, run_campaign(cfg)


@pytest.fixture(scope="session")
def tw_batches():
    """Two disjoint seed batches of 2000 trials each at N = 500."""
    out = []
    for seed in TW_SEEDS:
        cfg = ExperimentConfig((TW_N,), TW_TRIALS, (), seed)
        out.append(run_campaign(cfg))
    return out


ACCEPTANCE = {}


def record_criterion(number, title, ok, detail):
    ACCEPTANCE[number] = (title, bool(ok), detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
