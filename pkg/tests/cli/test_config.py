"""Unit tests for command-line and file configuration."""

from fractions import Fraction
import json

import pytest

from sasakijoin.cli.config import parse_config, parse_ray
from sasakijoin.join.params import JoinParams
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import DomainError


THREE_CSC_FLAGS = [
    "--dN", "2", "--A", "1", "--l1", "1", "--l2", "29", "--w1", "3",
    "--w2", "2",
]


# Utility method(s)
def _write_config(tmp_path, document: dict) -> str:
    path = tmp_path / "config.json"
    path.write_text(json.dumps(document))
    return str(path)


# Unit test(s)
def test_flags():
    config = parse_config(["analyze"] + THREE_CSC_FLAGS + ["--json"])
    assert config.command == "analyze"
    assert config.format == "json"
    assert config.params == JoinParams(2, 1, 1, 29, 3, 2)
    assert config.tolerance == Fraction(1, 10**12)
    assert config.rays == ()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-2", Fraction(-2)),
        ("0.835", Fraction(167, 200)),
        ("-7/3", Fraction(-7, 3)),
    ],
)
def test_rational_flags(text, expected):
    flags = ["--dN", "1", "--l1", "1", "--l2", "1", "--w1", "3", "--w2", "2"]
    config = parse_config(["analyze", f"--A={text}"] + flags)
    assert config.A == expected


def test_negative_integer_flag():
    config = parse_config(["analyze", "--A", "-2"])
    assert config.A == Fraction(-2)


def test_invalid_params_name_the_condition():
    config = parse_config(
        ["analyze", "--dN", "1", "--A", "-2", "--l1", "1", "--l2", "1",
         "--w1", "2", "--w2", "3"]
    )
    with pytest.raises(DomainError, match="w1 ≥ w2 fails"):
        config.params


def test_malformed_rational_names_the_field():
    with pytest.raises(DomainError, match="A: malformed rational"):
        parse_config(["analyze", "--A", "1/0"])
    with pytest.raises(DomainError, match="l2: expected an integer"):
        parse_config(["analyze", "--l2", "2.5"])


def test_missing_fields():
    config = parse_config(["analyze", "--dN", "1"])
    with pytest.raises(DomainError, match="missing required field"):
        config.params


def test_flags_override_file(tmp_path):
    path = _write_config(
        tmp_path,
        {
            "dN": 1,
            "A": "-2",
            "l1": 1,
            "l2": 101,
            "w1": 3,
            "w2": 2,
            "format": "csv",
            "rays": ["1,1", [2, 1]],
        },
    )
    config = parse_config(["analyze", "--config", path, "--l2", "1"])
    assert config.params == JoinParams(1, -2, 1, 1, 3, 2)
    assert config.format == "csv"
    assert config.rays == (RayId(1, 1), RayId(2, 1))

    config = parse_config(["analyze", "--config", path, "--json"])
    assert config.l2 == 101
    assert config.format == "json"


def test_unknown_file_key(tmp_path):
    path = _write_config(tmp_path, {"dN": 1, "colour": "green"})
    with pytest.raises(DomainError, match="unknown key"):
        parse_config(["analyze", "--config", path])


def test_extremal_flag(tmp_path):
    assert not parse_config(["analyze"] + THREE_CSC_FLAGS).extremal
    config = parse_config(["analyze"] + THREE_CSC_FLAGS + ["--extremal"])
    assert config.extremal

    # (1) The file key must be a boolean
    path = _write_config(tmp_path, {"extremal": "yes"})
    with pytest.raises(DomainError, match="extremal: expected true or false"):
        parse_config(["analyze", "--config", path] + THREE_CSC_FLAGS)


@pytest.mark.parametrize(
    "flags, message",
    [
        (["--tolerance", "0"], "tolerance"),
        (["--count", "1"], "count"),
        (["--bmin", "0"], "bmin"),
        (["--bmin", "2", "--bmax", "1"], "bmin"),
        (["--log-level", "chatty"], "log_level"),
        (["--workers", "0"], "workers"),
    ],
)
def test_checks(flags, message):
    with pytest.raises(DomainError, match=message):
        parse_config(["sample"] + flags)


def test_scan_template():
    config = parse_config(
        ["scan", "--dN", "2", "--A", "1", "--l1", "1", "--w1", "3",
         "--w2", "2", "--l2-from", "29", "--l2-to", "199"]
    )
    template = config.template
    assert template.with_l2(29) == JoinParams(2, 1, 1, 29, 3, 2)
    assert (config.l2_from, config.l2_to) == (29, 199)


def test_verify_alias():
    assert parse_config(["verify-paper"]).command == "verify-paper"
    assert parse_config(["verify"]).command == "verify"


def test_usage_error_exits():
    with pytest.raises(SystemExit):
        parse_config(["frobnicate"])


@pytest.mark.parametrize(
    "text, expected",
    [("1,2", RayId(1, 2)), ("3:2", RayId(3, 2)), ([10, 1], RayId(10, 1))],
)
def test_parse_ray(text, expected):
    assert parse_ray(text) == expected


@pytest.mark.parametrize("text", ["1", "1,2,3", "2,4", "a,b"])
def test_parse_ray_malformed(text):
    with pytest.raises(DomainError):
        parse_ray(text)
