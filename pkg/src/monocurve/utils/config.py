"""Configuration management for monocurve."""

import importlib.resources
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

CONFIG_FILENAME = "monocurve.config.yaml"


def get_templates_dir() -> Path:
    """Get the templates directory from the installed package."""
    try:
        templates_path = importlib.resources.files("monocurve") / "templates"
        if templates_path.is_dir():
            return Path(str(templates_path))
    except Exception:
        pass

    # Fallback: repository checkout (development mode)
    dev_path = Path(__file__).resolve().parents[3] / "templates"
    if dev_path.exists():
        return dev_path

    return Path("templates")


class ComputeSettings(BaseSettings):
    """Limits and switches for the exact computations."""

    model_config = SettingsConfigDict(env_prefix="MONOCURVE_COMPUTE_", extra="ignore")

    max_fiber_size: int = 5000
    max_gb_size: int = 20000
    check_invariants: bool = True


class SweepSettings(BaseSettings):
    """Defaults for random sweeps over quadruples."""

    model_config = SettingsConfigDict(env_prefix="MONOCURVE_SWEEP_", extra="ignore")

    min_value: int = 3
    max_value: int = 60
    count: int = 100
    seed: int = 0
    workers: int = 1


class OutputSettings(BaseSettings):
    """Output configuration settings."""

    model_config = SettingsConfigDict(env_prefix="MONOCURVE_OUTPUT_", extra="ignore")

    format: str = "text"  # text, json, markdown
    output_dir: Path = Field(default=Path("./output"))


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_prefix="MONOCURVE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = "info"

    compute: ComputeSettings = Field(default_factory=ComputeSettings)
    sweep: SweepSettings = Field(default_factory=SweepSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    @classmethod
    def from_config_file(cls, config_path: Path, env_file: Optional[Path] = None) -> "Settings":
        """Load settings from a YAML config file.

        Args:
            config_path: Path to monocurve.config.yaml
            env_file: Path to .env file (defaults to same directory as config)
        """
        if env_file is None:
            env_file = config_path.parent / ".env"

        settings = cls(_env_file=str(env_file) if env_file.exists() else None)

        if config_path.exists():
            with open(config_path, "r", encoding="utf-8") as f:
                config_data = yaml.safe_load(f) or {}
            settings = cls._merge_config(settings, config_data)

        return settings

    @classmethod
    def _merge_config(cls, settings: "Settings", data: dict[str, Any]) -> "Settings":
        """Merge config file data into settings."""
        if "compute" in data:
            settings.compute = ComputeSettings(**data["compute"])
        if "sweep" in data:
            settings.sweep = SweepSettings(**data["sweep"])
        if "output" in data:
            settings.output = OutputSettings(**data["output"])
        if "log_level" in data:
            settings.log_level = str(data["log_level"])

        return settings


_settings_cache: dict[Path, Settings] = {}


def get_settings(project_dir: Optional[Path] = None) -> Settings:
    """Get settings for a project directory.

    Args:
        project_dir: Project directory (defaults to current directory)

    Returns:
        Settings instance for the project
    """
    if project_dir is None:
        project_dir = Path.cwd()

    project_dir = project_dir.resolve()

    if project_dir not in _settings_cache:
        config_path = project_dir / CONFIG_FILENAME
        env_path = project_dir / ".env"

        if config_path.exists():
            _settings_cache[project_dir] = Settings.from_config_file(config_path, env_path)
        else:
            _settings_cache[project_dir] = Settings(
                _env_file=str(env_path) if env_path.exists() else None
            )

    return _settings_cache[project_dir]


def clear_settings_cache() -> None:
    """Clear the settings cache."""
    _settings_cache.clear()


def save_config(settings: Settings, config_path: Path) -> None:
    """Save settings to a YAML config file."""
    config_data = {
        "log_level": settings.log_level,
        "compute": {
            "max_fiber_size": settings.compute.max_fiber_size,
            "max_gb_size": settings.compute.max_gb_size,
            "check_invariants": settings.compute.check_invariants,
        },
        "sweep": {
            "min_value": settings.sweep.min_value,
            "max_value": settings.sweep.max_value,
            "count": settings.sweep.count,
            "seed": settings.sweep.seed,
            "workers": settings.sweep.workers,
        },
        "output": {
            "format": settings.output.format,
            "output_dir": str(settings.output.output_dir),
        },
    }

    with open(config_path, "w", encoding="utf-8") as f:
        yaml.dump(config_data, f, default_flow_style=False, allow_unicode=True, sort_keys=False)
