from __future__ import annotations

import os
import sys
from pathlib import Path
from typing import Any, Dict

import yaml

from .oracle import MAX_REALIZATION_N

JOBS_ENV_VAR = "FORCED_EDGES_JOBS"

DEFAULTS: Dict[str, Dict[str, Any]] = {
    'output': {'format': 'text'},
    'sample': {'method': 'mcmc', 'steps': 1000, 'seed': 0},
    'verify': {'jobs': 1, 'induced_persistence_max_n': 6},
    'oracle': {'max_n': MAX_REALIZATION_N},
}


class ConfigHelper:
    """
    A helper to find, load, and validate the forced-edges configuration file.

    It starts from a given path and traverses up the directory tree looking for
    the configuration file. Every key is optional; values missing from the file
    fall back to DEFAULTS.
    """
    CONFIG_FILENAME = "forced_edges_config.yaml"

    def __init__(self, start_path: str | Path | None = None, config_file_name: str | None = None,
                 required: bool = False):
        """
        Initializes the helper and triggers the discovery and validation process.

        Args:
            start_path: The path to start searching from. Defaults to the current working directory.
            config_file_name: The name of the config file to find.
                Defaults to "forced_edges_config.yaml".
            required: Raise when no file is found instead of using defaults.

        Raises:
            FileNotFoundError: If ``required`` and the config file is not found.
            ValueError: If the configuration file is malformed or holds invalid values.
        """
        if start_path is None:
            start_path = Path.cwd()
        self.start_path = Path(start_path).resolve()

        if config_file_name is None:
            config_file_name = self.CONFIG_FILENAME
        self.config_filename = config_file_name

        self.config_path: Path | None = None
        self.config: Dict[str, Any] = {}

        self._find_and_load(required)
        self._validate()

        if self.config_path is not None:
            print(f"✅ Configuration loaded successfully from: {self.config_path}", file=sys.stderr)

    @classmethod
    def from_path(cls, path: str | Path) -> "ConfigHelper":
        """Load an explicit file (as given by --config); it must exist."""
        config_file = Path(path)
        start_path = config_file.parent if config_file.parent != Path('.') else Path.cwd()
        return cls(start_path=start_path, config_file_name=config_file.name, required=True)

    def _find_and_load(self, required: bool):
        """Traverse up to find and load the configuration file."""
        current_dir = self.start_path.parent if self.start_path.is_file() else self.start_path

        while True:
            config_file = current_dir / self.config_filename
            if config_file.is_file() and ".venv" not in str(current_dir):
                self.config_path = config_file
                break
            if current_dir == current_dir.parent:  # filesystem root
                break
            current_dir = current_dir.parent

        if self.config_path is None:
            if required:
                raise FileNotFoundError(
                    f"Could not find '{self.config_filename}' in any parent directory "
                    f"of {self.start_path}."
                )
            return

        try:
            with open(self.config_path, 'r') as f:
                loaded = yaml.safe_load(f)
            if loaded is None:
                loaded = {}
            if not isinstance(loaded, dict):
                raise ValueError("Config file is not a valid dictionary.")
            self.config = loaded
        except (yaml.YAMLError, ValueError) as e:
            raise ValueError(f"Error parsing '{self.config_path}': {e}")

    def _section(self, name: str) -> Dict[str, Any]:
        section = self.config.get(name) or {}
        if not isinstance(section, dict):
            raise ValueError(f"Section '{name}' must be a mapping, got {type(section).__name__}.")
        return {**DEFAULTS[name], **section}

    def _validate(self):
        """Check value types and ranges of every known key."""
        unknown = set(self.config) - set(DEFAULTS)
        if unknown:
            print(f"[CONFIG] Ignoring unknown sections: {', '.join(sorted(unknown))}", file=sys.stderr)

        fmt = self._section('output')['format']
        if fmt not in ('text', 'json'):
            raise ValueError(f"output.format must be 'text' or 'json', got '{fmt}'.")

        sample = self._section('sample')
        if sample['method'] not in ('mcmc', 'sis'):
            raise ValueError(f"sample.method must be 'mcmc' or 'sis', got '{sample['method']}'.")
        _require_int('sample.steps', sample['steps'], minimum=0)
        _require_int('sample.seed', sample['seed'])

        verify = self._section('verify')
        _require_int('verify.jobs', verify['jobs'], minimum=1)
        _require_int('verify.induced_persistence_max_n', verify['induced_persistence_max_n'], minimum=0)

        max_n = self._section('oracle')['max_n']
        _require_int('oracle.max_n', max_n, minimum=1)
        if max_n > MAX_REALIZATION_N:
            raise ValueError(f"oracle.max_n must be <= {MAX_REALIZATION_N}, got {max_n}.")

    def get_output_format(self) -> str:
        return self._section('output')['format']

    def get_sample_method(self) -> str:
        return self._section('sample')['method']

    def get_sample_steps(self) -> int:
        return self._section('sample')['steps']

    def get_sample_seed(self) -> int:
        return self._section('sample')['seed']

    def get_verify_jobs(self) -> int:
        """
        Returns the default worker count for verify.

        The FORCED_EDGES_JOBS environment variable overrides the file.
        """
        from_env = os.environ.get(JOBS_ENV_VAR)
        if from_env:
            try:
                jobs = int(from_env)
            except ValueError:
                raise ValueError(f"{JOBS_ENV_VAR} must be an integer, got '{from_env}'.") from None
            _require_int(JOBS_ENV_VAR, jobs, minimum=1)
            print(f"[CONFIG] Using {JOBS_ENV_VAR}={jobs}", file=sys.stderr)
            return jobs
        return self._section('verify')['jobs']

    def get_verify_settings(self) -> Dict[str, Any]:
        """Options handed to every theorem check."""
        return {'induced_persistence_max_n': self._section('verify')['induced_persistence_max_n']}

    def get_oracle_max_n(self) -> int:
        return self._section('oracle')['max_n']


def _require_int(key: str, value: Any, minimum: int | None = None) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"'{key}' must be an integer, got {value!r}.")
    if minimum is not None and value < minimum:
        raise ValueError(f"'{key}' must be >= {minimum}, got {value}.")
