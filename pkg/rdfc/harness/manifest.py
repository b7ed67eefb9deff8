"""Run manifests and atomic artifact writes."""
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

from .. import __version__

PathLike = Union[str, Path]


class RunManifest(BaseModel):
    """Everything needed to re-run a command and reproduce its artifacts."""
    command: str
    params: Dict[str, Any]
    seed: Optional[int] = None
    version: str = __version__
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    outputs: List[str] = Field(default_factory=list)

    @staticmethod
    def path_for(artifact: PathLike) -> Path:
        artifact = Path(artifact)
        return artifact.with_name(artifact.name + ".manifest.json")

    def save(self, output_path: PathLike) -> None:
        atomic_write(output_path, self.model_dump_json(indent=2) + "\n")

    @classmethod
    def load(cls, path: PathLike) -> "RunManifest":
        return cls.model_validate_json(Path(path).read_text())


def atomic_write(path: PathLike, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def write_artifact(path: PathLike, text: str, manifest: RunManifest) -> Path:
    """Write an artifact and its manifest side file; remove both on failure."""
    path = Path(path)
    manifest_path = RunManifest.path_for(path)
    manifest = manifest.model_copy(update={"outputs": [str(path)]})
    try:
        atomic_write(path, text)
        manifest.save(manifest_path)
    except BaseException:
        path.unlink(missing_ok=True)
        manifest_path.unlink(missing_ok=True)
        raise
    return manifest_path
