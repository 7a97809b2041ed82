from importlib import resources

import pytest

from ugap.calibration import default_profile
from ugap.fitting import fit_all
from ugap.ingest import build_panel, parse_series_csv, splice_vacancy, to_quarterly
from ugap.quarters import Quarter
from ugap.regimes import build_schedule, default_regime_table


def bundled_text(name: str) -> str:
    return resources.files("ugap").joinpath(f"data/{name}").read_text()


@pytest.fixture(scope="session")
def panel():
    u_q, _ = to_quarterly(parse_series_csv(bundled_text("unemployment_monthly.csv"), "percent"))
    pre_q, _ = to_quarterly(parse_series_csv(bundled_text("vacancy_hwi_monthly.csv"), "percent"))
    post_q, _ = to_quarterly(parse_series_csv(bundled_text("vacancy_jolts_monthly.csv"), "percent"))
    v_q = splice_vacancy(pre_q, post_q, Quarter(2001, 1))
    return build_panel(u_q, v_q)


@pytest.fixture(scope="session")
def regime_table():
    return default_regime_table()


@pytest.fixture(scope="session")
def estimates(panel, regime_table):
    return fit_all(panel, regime_table)


@pytest.fixture(scope="session")
def schedule(panel, regime_table, estimates):
    return build_schedule(regime_table, estimates, panel.quarters())


@pytest.fixture(scope="session")
def profile():
    return default_profile()
