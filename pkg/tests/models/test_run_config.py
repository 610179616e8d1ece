import pytest
from pydantic import ValidationError

from qpower.models import ConfigError, OutputFormat, RunConfig


def test_defaults():
    config = RunConfig()
    assert config.t_order == 8
    assert config.q_order == 10
    assert config.base_m == 1
    assert config.output_format == OutputFormat.TEXT
    assert config.out is None


def test_invalid_values_are_rejected():
    with pytest.raises(ValidationError):
        RunConfig(base_m=0)
    with pytest.raises(ValidationError):
        RunConfig(t_order=0)
    with pytest.raises(ValidationError):
        RunConfig(unknown_key=1)


def test_output_format_ignores_case():
    assert OutputFormat('JSON') == OutputFormat.JSON
    assert RunConfig(output_format='LaTeX').output_format == OutputFormat.LATEX


def test_load_from_yaml(tmp_path):
    path = tmp_path / "qpower.yaml"
    path.write_text("t-order: 4\nbase-m: -1\nseed: 7\n")
    config = RunConfig.load(str(path))
    assert (config.t_order, config.base_m, config.seed) == (4, -1, 7)


def test_overrides_win_over_the_file(tmp_path):
    path = tmp_path / "qpower.yaml"
    path.write_text("t_order: 4\nmax_n: 3\n")
    config = RunConfig.load(str(path), t_order=6, max_n=None)
    assert config.t_order == 6
    assert config.max_n == 3


def test_empty_file_gives_defaults(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert RunConfig.load(str(path)) == RunConfig()


@pytest.mark.parametrize("content", ["- 1\n- 2\n", "t_order: [1\n"])
def test_bad_config_files(tmp_path, content):
    path = tmp_path / "bad.yaml"
    path.write_text(content)
    with pytest.raises(ConfigError):
        RunConfig.load(str(path))


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig.load(str(tmp_path / "nope.yaml"))
