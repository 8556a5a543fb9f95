from typing import Any, Dict
from pathlib import Path

import yaml
from pydantic_settings import BaseSettings, SettingsConfigDict

CONFIG_DIR = Path(__file__).resolve().parent


class Settings(BaseSettings):
    """Process-wide settings, read from KIRICAP_* environment variables and .env"""

    # Logging
    log_level: str = "INFO"
    logs_dir: Path = Path("logs")
    enable_file_logging: bool = False
    enable_json_logging: bool = False

    # Outputs
    output_dir: Path = Path("out")

    # Numerical defaults
    default_margin: float = 0.5  # mm
    default_dt: float = 0.001  # s
    constraint_samples: int = 1024
    cam_csv_samples: int = 1024

    model_config = SettingsConfigDict(
        env_prefix="KIRICAP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @classmethod
    def load_envelope_config(cls) -> Dict[str, Any]:
        """Load tissue safety envelopes from YAML"""
        try:
            with open(CONFIG_DIR / "envelopes.yaml", "r") as f:
                return yaml.safe_load(f)
        except FileNotFoundError:
            return {
                "envelopes": {
                    "gastric": {"f_min": 0.5, "f_max": 2.0},
                    "intestinal": {"f_min": 0.3, "f_max": 1.0},
                }
            }

    @classmethod
    def load_deployment_config(cls) -> Dict[str, Any]:
        """Load the strain/angle anchors of the deployment model from YAML"""
        try:
            with open(CONFIG_DIR / "deployment.yaml", "r") as f:
                return yaml.safe_load(f)
        except FileNotFoundError:
            return {
                "deployment": {
                    "interpolation": "pchip",
                    "max_strain": 0.30,
                    "anchors": [[0.0, 0.0], [0.15, 34.0], [0.20, 38.0]],
                }
            }


settings = Settings()
