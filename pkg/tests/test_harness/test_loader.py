"""Tests for the configuration loader."""
import pytest
import yaml
from pydantic import ValidationError

from rdfc.harness import ConfigLoader
from rdfc.synthesis import CoordinationScheme


def test_load_yaml_scheme(tmp_path):
    """Test loading a valid coordination scheme."""
    path = tmp_path / "scheme.yaml"
    path.write_text(
        """
        p_u: [0.5, 0.5]
        p_x_given_u: [[0.9, 0.1], [0.1, 0.9]]
        p_y_given_u: [[0.8, 0.2], [0.2, 0.8]]
        """
    )
    scheme = ConfigLoader.load(path, CoordinationScheme)
    assert scheme.u_size == 2
    assert scheme.p_x_given_u[0] == [0.9, 0.1]


def test_load_json_as_yaml(tmp_path):
    path = tmp_path / "pmf.json"
    path.write_text('{"k": 2, "q": [0.4, 0.1, 0.1, 0.4]}')
    assert ConfigLoader.load_raw(path) == {"k": 2, "q": [0.4, 0.1, 0.1, 0.4]}


def test_invalid_scheme(tmp_path):
    path = tmp_path / "scheme.yaml"
    path.write_text("p_u: [0.5, 0.5]\n")
    with pytest.raises(ValidationError):
        ConfigLoader.load(path, CoordinationScheme)


def test_malformed_yaml(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("p_u: [0.5, 0.5\n")
    with pytest.raises(yaml.YAMLError):
        ConfigLoader.load_raw(path)


def test_nonexistent_file():
    with pytest.raises(FileNotFoundError):
        ConfigLoader.load("nonexistent.yaml", CoordinationScheme)
