"""
Parse run configuration use case.

Reads the flat ``key = value`` run document, merges command-line
overrides on top of it and validates everything into a RunConfig
before any simulation starts.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from core.exceptions import ConfigurationError
from core.value_objects.abm_config import AbmConfig
from core.value_objects.model_params import ModelParams
from core.value_objects.run_config import OUTPUT_FORMATS, AnalysisSettings, RunConfig
from core.value_objects.scenario import Scenario
from core.value_objects.state_vector import StateVector

logger = logging.getLogger(__name__)

STATE_KEYS = ('n', 'n_p', 'a', 'm')


def _parse_float(raw: str) -> float:
    return float(raw)


def _parse_int(raw: str) -> int:
    return int(raw)


def _parse_str(raw: str) -> str:
    if len(raw) >= 2 and raw[0] == raw[-1] and raw[0] in ('"', "'"):
        return raw[1:-1]
    return raw


def _parse_coefficients(raw: str) -> Tuple[Tuple[float, float, float], ...]:
    terms = []
    for chunk in raw.split(';'):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [part.strip() for part in chunk.split(',')]
        if len(parts) != 3:
            raise ValueError(f"expected 'amplitude, center, width', got '{chunk}'")
        terms.append(tuple(float(part) for part in parts))
    if not terms:
        raise ValueError("at least one Gaussian term is required")
    return tuple(terms)


def _known_keys() -> Dict[str, Callable[[str], Any]]:
    keys: Dict[str, Callable[[str], Any]] = {}
    for name in ModelParams.model_fields:
        keys[f"params.{name}"] = _parse_float
    keys['params.s0_coefficients'] = _parse_coefficients
    for name in ('t_start', 't_end', 'dt') + STATE_KEYS:
        keys[f"scenario.{name}"] = _parse_float
    keys['scenario.record_every'] = _parse_int
    keys['scenario.name'] = _parse_str
    keys['abm.dt'] = _parse_float
    keys['abm.scale'] = _parse_float
    keys['abm.seed'] = _parse_int
    keys['abm.replicates'] = _parse_int
    keys['output.path'] = _parse_str
    keys['output.format'] = _parse_str
    for name in AnalysisSettings.model_fields:
        keys[f"analysis.{name}"] = _parse_float
    return keys


KNOWN_KEYS = _known_keys()


@dataclass(frozen=True)
class ConfigEntry:
    """One ``key = value`` assignment and where it came from."""

    key: str
    raw: str
    line_number: Optional[int] = None
    origin: str = 'file'

    @classmethod
    def from_override(cls, text: str, origin: str = '--set') -> 'ConfigEntry':
        """
        Build an entry from a command-line ``key=value`` string.

        Raises:
            ConfigurationError: If the string has no ``=``
        """
        if '=' not in text:
            raise ConfigurationError(f"{origin} {text!r}: expected key=value")
        key, raw = text.split('=', 1)
        return cls(key=key.strip(), raw=raw.strip(), origin=origin)

    @property
    def group(self) -> str:
        return self.key.split('.', 1)[0]

    @property
    def field(self) -> str:
        return self.key.split('.', 1)[1]

    def error(self, message: str) -> ConfigurationError:
        if self.line_number is None:
            message = f"{self.origin} {self.key}: {message}"
        return ConfigurationError(message, line_number=self.line_number, key=self.key)


def flag_entry(key: str, value: Any, origin: str) -> ConfigEntry:
    """Entry for a dedicated command-line flag such as ``--seed``."""
    return ConfigEntry(key=key, raw=str(value), origin=origin)


def read_entries(text: str) -> List[ConfigEntry]:
    """
    Split a document into entries.

    Blank lines and ``#`` comments are ignored; a key may appear only once.

    Raises:
        ConfigurationError: On a malformed line or a repeated key
    """
    entries: List[ConfigEntry] = []
    seen: Dict[str, int] = {}
    for line_number, line in enumerate(text.lstrip("\ufeff").splitlines(), start=1):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        if '=' not in content:
            raise ConfigurationError(f"expected 'key = value', got {content!r}", line_number=line_number)
        key, raw = (part.strip() for part in content.split('=', 1))
        if not key:
            raise ConfigurationError("missing key before '='", line_number=line_number)
        if key in seen:
            raise ConfigurationError(
                f"key '{key}' already set on line {seen[key]}", line_number=line_number, key=key
            )
        seen[key] = line_number
        entries.append(ConfigEntry(key=key, raw=raw, line_number=line_number))
    return entries


def _typed_values(entries: Iterable[ConfigEntry]) -> Dict[str, Tuple[Any, ConfigEntry]]:
    values: Dict[str, Tuple[Any, ConfigEntry]] = {}
    for entry in entries:
        parser = KNOWN_KEYS.get(entry.key)
        if parser is None:
            raise entry.error(f"unknown key '{entry.key}'")
        if entry.raw == '':
            raise entry.error("missing value")
        try:
            values[entry.key] = (parser(entry.raw), entry)
        except ValueError as e:
            raise entry.error(f"cannot parse {entry.raw!r}: {e}")
    return values


def _group(values: Dict[str, Tuple[Any, ConfigEntry]], group: str) -> Dict[str, Tuple[Any, ConfigEntry]]:
    return {entry.field: (value, entry) for value, entry in values.values() if entry.group == group}


def _validate(
    model: type,
    fields: Dict[str, Any],
    entries: Dict[str, ConfigEntry],
    group: str,
) -> BaseModel:
    try:
        return model(**fields)
    except ValidationError as exc:
        errors = exc.errors()
        error = next((e for e in errors if e.get('loc') and e['loc'][0] in entries), errors[0])
        location = error.get('loc') or ()
        message = error.get('msg', str(exc))
        field = location[0] if location else None
        entry = entries.get(field) if field is not None else None
        if entry is None and entries:
            # Cross-field failure: blame the last assignment in the group
            entry = max(entries.values(), key=lambda e: (e.line_number is None, e.line_number or 0))
        if entry is None:
            raise ConfigurationError(f"{group}: {message}")
        raise entry.error(message)


def parse_entries(entries: Sequence[ConfigEntry]) -> RunConfig:
    """
    Validate entries into a RunConfig; later entries override earlier ones.

    Raises:
        ConfigurationError: On an unknown key, an unparseable value or a
            violated invariant, naming the offending line or flag
    """
    values = _typed_values(entries)

    params_group = _group(values, 'params')
    param_overrides = {name: value for name, (value, _entry) in params_group.items()}
    params = _validate(
        ModelParams, param_overrides, {name: e for name, (_v, e) in params_group.items()}, 'params'
    )

    scenario_group = _group(values, 'scenario')
    scenario_entries = {name: e for name, (_v, e) in scenario_group.items()}
    scenario_fields = {
        name: value for name, (value, _entry) in scenario_group.items() if name not in STATE_KEYS
    }
    default_state = Scenario.model_fields['initial_state'].default
    state = {name: getattr(default_state, name) for name in STATE_KEYS}
    for name in STATE_KEYS:
        if name in scenario_group:
            value, entry = scenario_group[name]
            if not math.isfinite(value) or value < 0:
                raise entry.error(f"initial value must be finite and non-negative, got {value}")
            state[name] = value
    t_start = scenario_fields.get('t_start', Scenario.model_fields['t_start'].default)
    if math.isfinite(t_start):
        scenario_fields['initial_state'] = StateVector(t=t_start, **state)
    scenario = _validate(Scenario, scenario_fields, scenario_entries, 'scenario')

    abm_group = _group(values, 'abm')
    abm = _validate(
        AbmConfig,
        {name: value for name, (value, _e) in abm_group.items()},
        {name: e for name, (_v, e) in abm_group.items()},
        'abm',
    )

    analysis_group = _group(values, 'analysis')
    analysis = _validate(
        AnalysisSettings,
        {name: value for name, (value, _e) in analysis_group.items()},
        {name: e for name, (_v, e) in analysis_group.items()},
        'analysis',
    )

    output_group = _group(values, 'output')
    output_format = 'csv'
    if 'format' in output_group:
        output_format, entry = output_group['format']
        if output_format not in OUTPUT_FORMATS:
            raise entry.error(f"format must be one of {', '.join(OUTPUT_FORMATS)}, got {output_format!r}")
    output_path = output_group['path'][0] if 'path' in output_group else None

    return RunConfig(
        params=params,
        param_overrides=param_overrides,
        scenario=scenario,
        abm=abm,
        output_path=output_path,
        output_format=output_format,
        analysis=analysis,
    )


def parse_config(text: str) -> RunConfig:
    """
    Parse a run document.

    An empty document yields the published parameters and the default
    scenario.

    Args:
        text: ``key = value`` lines with ``#`` comments

    Returns:
        Validated RunConfig

    Raises:
        ConfigurationError: With the line number of the first bad entry
    """
    return parse_entries(read_entries(text))


class ParseRunConfigUseCase:
    """
    Use case for building the configuration of a CLI run.

    Precedence, lowest first: defaults, the document, then overrides in
    the order given (dedicated flags before ``--set`` entries).
    """

    def execute(self, text: str = "", overrides: Sequence[ConfigEntry] = ()) -> RunConfig:
        """
        Execute the use case.

        Args:
            text: Run document (may be empty)
            overrides: Command-line entries applied on top of the document

        Returns:
            Validated RunConfig

        Raises:
            ConfigurationError: If any entry is invalid
        """
        entries = read_entries(text) + list(overrides)
        config = parse_entries(entries)
        logger.debug(f"Parsed {len(entries)} configuration entries")
        return config
