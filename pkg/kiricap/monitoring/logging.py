"""Logging configuration for kiricap."""

import json
import logging
import logging.config
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

# extras copied into JSON records when present
STRUCTURED_FIELDS = ("command", "config_hash", "rows", "segments", "elapsed", "exit_code")


def configure_logging(
    level: str = "INFO",
    log_dir: Path = Path("logs"),
    enable_file_logging: bool = False,
    enable_json_logging: bool = False,
) -> None:
    """Configure logging for kiricap.

    The console handler writes to stderr; stdout is reserved for command
    summaries.
    """
    level = level.upper()
    if enable_file_logging:
        log_dir.mkdir(parents=True, exist_ok=True)

    config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
            "detailed": {
                "format": "%(asctime)s [%(levelname)s] %(name)s:%(funcName)s:%(lineno)d: %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
            "json": {"()": "kiricap.monitoring.logging.JSONFormatter"},
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": level,
                "formatter": "json" if enable_json_logging else "standard",
                "stream": "ext://sys.stderr",
            }
        },
        "loggers": {
            "kiricap": {"level": level, "handlers": ["console"], "propagate": False},
            # ezdxf reports font and table loading at INFO
            "ezdxf": {"level": "WARNING", "handlers": ["console"], "propagate": False},
        },
        "root": {"level": "WARNING", "handlers": ["console"]},
    }

    if enable_file_logging:
        config["handlers"]["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "level": level,
            "formatter": "json" if enable_json_logging else "detailed",
            "filename": str(log_dir / "kiricap.log"),
            "maxBytes": 10485760,  # 10MB
            "backupCount": 5,
        }
        config["handlers"]["simulation_file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "level": "DEBUG",
            "formatter": "detailed",
            "filename": str(log_dir / "simulation.log"),
            "maxBytes": 5242880,  # 5MB
            "backupCount": 3,
        }
        config["loggers"]["kiricap"]["handlers"].append("file")
        config["loggers"]["kiricap.sim"] = {
            "level": "DEBUG",
            "handlers": ["simulation_file"],
            "propagate": True,
        }

    logging.config.dictConfig(config)
    logging.getLogger("kiricap").debug("Logging configured with level: %s", level)


class JSONFormatter(logging.Formatter):
    """One JSON object per record, including structured extras"""

    def format(self, record: logging.LogRecord) -> str:
        log_entry = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
        }
        for name in STRUCTURED_FIELDS:
            if hasattr(record, name):
                log_entry[name] = getattr(record, name)
        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_entry, default=str)


def get_command_logger(command: str) -> logging.Logger:
    return logging.getLogger(f"kiricap.cli.{command}")


def log_command_execution(
    command: str,
    exit_code: int,
    elapsed: float,
    config_hash: Optional[str] = None,
    message: str = "",
) -> None:
    """One structured record per CLI command"""
    extra_data = {"command": command, "exit_code": exit_code, "elapsed": round(elapsed, 4)}
    if config_hash:
        extra_data["config_hash"] = config_hash
    level = logging.INFO if exit_code == 0 else logging.WARNING
    get_command_logger(command).log(
        level, "Command %s finished with exit code %d %s", command, exit_code, message, extra=extra_data
    )
