"""
Run manifest for reproducible CLI outputs.
Records what was run, with which configuration, and what it produced.
"""

import hashlib
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Union

from kiricap.core.errors import ParseError
from kiricap.core.io import canonical_json, write_json

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"
MANIFEST_VERSION = "1.0"


def config_hash(config: Dict[str, Any]) -> str:
    """SHA-256 of the canonical (sorted-key) JSON form of a config"""
    return hashlib.sha256(json.dumps(config, sort_keys=True, default=str).encode()).hexdigest()


def file_digest(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class RunManifest:
    """Creates and compares run manifests.

    Manifests carry no timestamps or host details, so two runs of the same
    command on the same inputs write byte-identical manifests.
    """

    @staticmethod
    def create(command: str, config: Dict[str, Any], outputs: Iterable[Union[str, Path]]) -> Dict[str, Any]:
        outputs = sorted(Path(p) for p in outputs)
        return {
            "manifest_version": MANIFEST_VERSION,
            "command": command,
            "config_hash": config_hash(config),
            "outputs": {p.name: file_digest(p) for p in outputs},
            "environment": {
                "python_version": f"{sys.version_info.major}.{sys.version_info.minor}",
                "key_dependencies": RunManifest._get_key_dependencies(),
            },
            "full_config": config,
        }

    @staticmethod
    def save(manifest: Dict[str, Any], out_dir: Union[str, Path]) -> Path:
        path = write_json(manifest, Path(out_dir) / MANIFEST_NAME)
        logger.info("Run manifest saved: %s", path, extra={"config_hash": manifest["config_hash"]})
        return path

    @staticmethod
    def load(filepath: Union[str, Path]) -> Dict[str, Any]:
        try:
            return json.loads(Path(filepath).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ParseError(f"cannot load manifest {filepath}: {e}") from e

    @staticmethod
    def dumps(manifest: Dict[str, Any]) -> str:
        return canonical_json(manifest)

    @staticmethod
    def validate_reproducibility(manifest1: Dict[str, Any], manifest2: Dict[str, Any]) -> Dict[str, Any]:
        """List differences in config hash, output set and output digests"""
        issues = []

        if manifest1.get("command") != manifest2.get("command"):
            issues.append(f"Command mismatch: {manifest1.get('command')} vs {manifest2.get('command')}")

        if manifest1.get("config_hash") != manifest2.get("config_hash"):
            issues.append("Configuration hash mismatch - configs are different")

        out1 = manifest1.get("outputs", {})
        out2 = manifest2.get("outputs", {})
        for name in sorted(set(out1) | set(out2)):
            if name not in out1:
                issues.append(f"Output {name} missing in first manifest")
            elif name not in out2:
                issues.append(f"Output {name} missing in second manifest")
            elif out1[name] != out2[name]:
                issues.append(f"Output {name} differs")

        return {"compatible": not issues, "issues": issues}

    @staticmethod
    def _get_key_dependencies() -> Dict[str, Optional[str]]:
        """Versions of the packages that shape numeric output"""
        deps = {}
        for name in ("numpy", "scipy", "pandas", "pydantic", "shapely", "svgwrite", "ezdxf"):
            try:
                module = __import__(name)
                deps[name] = getattr(module, "__version__", None)
            except ImportError:
                deps[name] = None
        return deps
