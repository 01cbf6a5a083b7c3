import logging

import pytest

from polyak_lab.config import RunConfig, environment_values, resolve_config
from polyak_lab.definitions.exceptions import ConfigurationException


def test_defaults(isolated_cwd):
    config = resolve_config(environ={})
    assert config == RunConfig()
    assert config.arrow_ceiling == 4
    assert config.chord_ceiling == 5
    assert config.enumeration_ceiling == 6
    assert config.use_cache


def test_precedence(isolated_cwd):
    (isolated_cwd / "polyak-lab.toml").write_text(
        'arrow_ceiling = 3\nchord_ceiling = 4\nformat = "table"\n', encoding="utf-8"
    )
    environ = {"VKFT_CHORD_CEILING": "2", "VKFT_WORKERS": "3", "HOME": "/root"}
    config = resolve_config({"workers": 2, "seed": None}, environ=environ)
    assert config.arrow_ceiling == 3
    assert config.chord_ceiling == 2
    assert config.format == "table"
    assert config.workers == 2
    assert config.seed == 0


def test_explicit_file(isolated_cwd):
    path = isolated_cwd / "other.toml"
    path.write_text("witness_bound = 5\nuse_cache = false\n", encoding="utf-8")
    config = resolve_config(config_path=path, environ={})
    assert config.witness_bound == 5
    assert not config.use_cache


def test_missing_explicit_file(isolated_cwd):
    with pytest.raises(ConfigurationException, match="not found"):
        resolve_config(config_path=isolated_cwd / "absent.toml", environ={})


def test_invalid_toml(isolated_cwd):
    (isolated_cwd / "polyak-lab.toml").write_text("arrow_ceiling = = 3\n", encoding="utf-8")
    with pytest.raises(ConfigurationException):
        resolve_config(environ={})


def test_unknown_setting_warns(isolated_cwd, caplog):
    with caplog.at_level(logging.WARNING):
        config = resolve_config(environ={"VKFT_COLOUR": "red"})
    assert config == RunConfig()
    assert "ignoring unknown setting 'colour'" in caplog.text


@pytest.mark.parametrize("environ", [
    {"VKFT_ARROW_CEILING": "four"},
    {"VKFT_USE_CACHE": "maybe"},
    {"VKFT_WORKERS": "0"},
    {"VKFT_FORMAT": "xml"},
    {"VKFT_LOG_LEVEL": "chatty"},
])
def test_bad_values(isolated_cwd, environ):
    with pytest.raises(ConfigurationException):
        resolve_config(environ=environ)


def test_environment_values(isolated_cwd):
    assert environment_values({"VKFT_LOG_LEVEL": "debug", "PATH": "/bin"}) == {"log_level": "debug"}
    assert resolve_config(environ={"VKFT_LOG_LEVEL": "debug"}).log_level == "DEBUG"


def test_output_dash_means_stdout():
    assert RunConfig().merged({"output": "-"}, "test").output is None
    assert RunConfig().merged({"output": "out.json"}, "test").output == "out.json"
