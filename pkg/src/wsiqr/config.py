"""Flat key = value run configuration with command-line overrides."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, InvalidParameterError
from .params import (DEFAULT_A, DEFAULT_MASS_NUMBER, DEFAULT_MASS_TERM, DEFAULT_R0_COEFF,
                     DEFAULT_V0, Family, PotentialSpec, derive_radius)

FORMATS = ("csv", "json", "text")
DEFAULT_SEED = 20240917

# key -> parser
_KEYS = {
    "v0_mev": float,
    "r0_fm": float,
    "a_fm": float,
    "mass_number": int,
    "big_r0_fm": float,
    "q": float,
    "family": str,
    "mass_term": float,
    "n_max": int,
    "l_max": int,
    "dims": lambda s: [int(x) for x in s.replace(",", " ").split()],
    "format": str,
    "out": str,
    "seed": int,
}


def parse_config_text(text: str) -> dict:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = _KEYS[key](value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key}: {value!r}") from exc
    return values


def read_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config_text(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc


@dataclass(frozen=True)
class RunConfig:
    spec: PotentialSpec
    n_max: int = 2
    l_max: int = 1
    dims: tuple[int, ...] = (3,)
    format: str = "csv"
    out: str | None = None
    seed: int = DEFAULT_SEED
    raw: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.n_max < 0 or self.l_max < 0:
            raise ConfigError("n_max and l_max must be >= 0")
        if not self.dims:
            raise ConfigError("the D list is empty")
        if any(D < 2 for D in self.dims):
            raise ConfigError(f"every D must be >= 2, got {list(self.dims)}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")


def spec_from_values(values: dict) -> PotentialSpec:
    family = values.get("family")
    q = values.get("q")
    if family is None:
        family = Family.HULTHEN if q is not None and q < 0 else Family.WOODS_SAXON
    else:
        family = Family.parse(family)
    expected_q = 1.0 if family is Family.WOODS_SAXON else -1.0
    if q is not None and q != expected_q:
        raise ConfigError(f"q = {q} is inconsistent with family {family.value}")
    mass_term = values.get("mass_term", DEFAULT_MASS_TERM)
    V0 = values.get("v0_mev", DEFAULT_V0)
    a = values.get("a_fm", DEFAULT_A)
    try:
        if family is Family.HULTHEN:
            if "big_r0_fm" in values and values["big_r0_fm"] != 1:
                raise ConfigError("the Hulthen family fixes R0 = 1")
            return PotentialSpec.hulthen(1.0 / a, V0, mass_term)
        if "big_r0_fm" in values:
            R0 = values["big_r0_fm"]
        else:
            R0 = derive_radius(values.get("r0_fm", DEFAULT_R0_COEFF),
                               values.get("mass_number", DEFAULT_MASS_NUMBER))
        return PotentialSpec.woods_saxon(V0=V0, R0=R0, a=a, mass_term=mass_term)
    except InvalidParameterError as exc:
        raise ConfigError(str(exc)) from exc


def build_run_config(values: dict) -> RunConfig:
    for key in values:
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}")
    spec = spec_from_values(values)
    kwargs = {k: values[k] for k in ("n_max", "l_max", "format", "out", "seed") if k in values}
    if "dims" in values:
        kwargs["dims"] = tuple(values["dims"])
    return RunConfig(spec=spec, raw=dict(values), **kwargs)
