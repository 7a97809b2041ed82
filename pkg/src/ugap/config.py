"""Run configuration: flat key = value files with section headers.

Every key can be overridden by a CLI flag; flags win. Relative paths in
a config file resolve against the file's own directory, which is what
lets the bundled default config point at the bundled data.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .errors import ConfigError
from .quarters import Quarter


def parse_kv_text(text: str) -> dict[str, str]:
    """Parse `key = value` lines into a flat dict keyed `section.key`."""
    values: dict[str, str] = {}
    section = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            continue
        if "=" not in line:
            raise ConfigError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        full = f"{section}.{key.strip()}" if section else key.strip()
        values[full] = value.strip()
    return values


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1", "on"):
        return True
    if t in ("false", "no", "0", "off"):
        return False
    raise ConfigError(f"expected a boolean, got {text!r}")


def _parse_zeta_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise ConfigError(f"bad zeta list {text!r}") from None
    if not values:
        raise ConfigError("zeta list is empty")
    for z in values:
        if not z < 1.0:
            raise ConfigError(f"zeta values must be below 1, got {z}")
    return values


@dataclass(frozen=True)
class RunConfig:
    u_series: Path
    v_pre: Path
    v_post: Path
    cutover: Quarter
    unit: str
    regimes: Path
    recessions: Path | None
    calibration: Path
    kappa: float | None
    kappa_file: Path | None
    zeta: float | None
    zeta_list: tuple[float, ...]
    tolerance: float
    exclude_gap_quarters: bool
    implied_zeta: bool
    scenario: Path | None
    seed: int | None
    noise_scale: float | None
    out_dir: Path


def bundled_data_dir() -> Path:
    return Path(str(resources.files("ugap").joinpath("data")))


def default_config_path() -> Path:
    return bundled_data_dir() / "default.cfg"


def load_config(path: Path | None, overrides: dict | None = None) -> RunConfig:
    """Build a RunConfig from a file (bundled default when None) plus overrides.

    Overrides use RunConfig field names and already-typed values; None
    entries are ignored so absent CLI flags fall through to the file.
    """
    cfg_path = Path(path) if path is not None else default_config_path()
    if not cfg_path.is_file():
        raise ConfigError(f"config file not found: {cfg_path}")
    flat = parse_kv_text(cfg_path.read_text(encoding="utf-8"))
    base = cfg_path.parent

    def get(key: str, default: str | None = None) -> str | None:
        return flat.get(key, default)

    def need(key: str) -> str:
        value = flat.get(key)
        if value is None:
            raise ConfigError(f"config is missing required key {key!r}")
        return value

    def path_of(key: str, required: bool) -> Path | None:
        raw = need(key) if required else get(key)
        if raw is None or raw == "":
            return None
        p = Path(raw)
        return p if p.is_absolute() else (base / p)

    unit = get("data.unit", "fraction")
    if unit not in ("fraction", "percent"):
        raise ConfigError(f"data.unit must be fraction or percent, got {unit!r}")

    cfg = RunConfig(
        u_series=path_of("data.u_series", required=True),
        v_pre=path_of("data.v_pre", required=True),
        v_post=path_of("data.v_post", required=True),
        cutover=Quarter.parse(need("data.cutover")),
        unit=unit,
        regimes=path_of("data.regimes", required=True),
        recessions=path_of("data.recessions", required=False),
        calibration=path_of("calibration.profile", required=True),
        kappa=float(flat["gap.kappa"]) if "gap.kappa" in flat else None,
        kappa_file=path_of("gap.kappa_file", required=False),
        zeta=float(flat["gap.zeta"]) if "gap.zeta" in flat else None,
        zeta_list=_parse_zeta_list(get("sensitivity.zeta_list", "0 0.25 0.5 0.96")),
        tolerance=float(get("gap.tolerance", "0.01")),
        exclude_gap_quarters=_parse_bool(get("gap.exclude_gap_quarters", "false")),
        implied_zeta=_parse_bool(get("sensitivity.implied_zeta", "false")),
        scenario=path_of("simulate.scenario", required=False),
        seed=int(flat["simulate.seed"]) if "simulate.seed" in flat else None,
        noise_scale=float(flat["simulate.noise_scale"]) if "simulate.noise_scale" in flat else None,
        out_dir=path_of("output.out_dir", required=False) or Path("out"),
    )

    if overrides:
        applied = {k: v for k, v in overrides.items() if v is not None}
        if applied:
            cfg = replace(cfg, **applied)
    return cfg
