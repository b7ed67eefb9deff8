"""YAML/JSON configuration loader."""
from pathlib import Path
from typing import Any, Type, TypeVar, Union

import yaml
from pydantic import BaseModel

T = TypeVar("T", bound=BaseModel)

PathLike = Union[str, Path]


class ConfigLoader:
    """Loads configuration files into validated pydantic models."""

    @staticmethod
    def load_raw(file_path: PathLike) -> Any:
        """Parse a YAML or JSON file (JSON is a subset of YAML).

        Raises:
            FileNotFoundError: If the file doesn't exist.
            yaml.YAMLError: If the file is malformed.
        """
        with open(file_path, "r") as f:
            return yaml.safe_load(f)

    @staticmethod
    def load(file_path: PathLike, model: Type[T]) -> T:
        """Load and validate a configuration file.

        Args:
            file_path: Path to a YAML or JSON file.
            model: Model class to validate against.

        Returns:
            The validated model instance.

        Raises:
            FileNotFoundError: If the file doesn't exist.
            ValidationError: If the content doesn't match the model.
            yaml.YAMLError: If the file is malformed.
        """
        return model.model_validate(ConfigLoader.load_raw(file_path))
