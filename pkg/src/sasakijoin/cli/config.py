"""Run configuration from command-line flags and an optional JSON file."""

import argparse
from dataclasses import dataclass
from fractions import Fraction
import json
import re
from typing import Any, Dict, Optional, Sequence, Tuple

from sasakijoin._version import __version__
from sasakijoin.algebra.numbers import DEFAULT_TOLERANCE, parse_rational
from sasakijoin.analysis.scan import JoinTemplate
from sasakijoin.join.params import JoinParams, validate
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import DomainError


COMMANDS = ("analyze", "scan", "extremal", "sample", "verify")
ALIASES = {"verify": ["verify-paper"]}
FORMATS = ("text", "json", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Keys accepted in a configuration file, with their defaults
DEFAULTS: Dict[str, Any] = {
    "dN": None,
    "A": None,
    "l1": None,
    "l2": None,
    "w1": None,
    "w2": None,
    "rays": [],
    "tolerance": DEFAULT_TOLERANCE,
    "l2_from": None,
    "l2_to": None,
    "bmin": Fraction(1, 10),
    "bmax": Fraction(10),
    "count": 200,
    "format": "text",
    "output": None,
    "workers": 1,
    "window_lo": Fraction(1, 20),
    "window_hi": Fraction(3),
    "window_tol": Fraction(1, 100),
    "extremal": False,
    "log_level": "INFO",
    "log_folder": None,
}
INTEGER_KEYS = ("dN", "l1", "l2", "w1", "w2", "l2_from", "l2_to", "count")
RATIONAL_KEYS = ("A", "tolerance", "bmin", "bmax", "window_lo", "window_hi")
RATIONAL_KEYS += ("window_tol",)


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs, parsed and checked.

    Join parameters are optional here since `verify` needs none and
    `scan` needs no l2; `params` and `template` check what is required.
    """

    command: str
    d_N: Optional[int] = None
    A: Optional[Fraction] = None
    l1: Optional[int] = None
    l2: Optional[int] = None
    w1: Optional[int] = None
    w2: Optional[int] = None
    rays: Tuple[RayId, ...] = ()
    tolerance: Fraction = DEFAULT_TOLERANCE
    l2_from: Optional[int] = None
    l2_to: Optional[int] = None
    b_min: Fraction = Fraction(1, 10)
    b_max: Fraction = Fraction(10)
    count: int = 200
    format: str = "text"
    output: Optional[str] = None
    workers: int = 1
    window_lo: Fraction = Fraction(1, 20)
    window_hi: Fraction = Fraction(3)
    window_tol: Fraction = Fraction(1, 100)
    extremal: bool = False
    log_level: str = "INFO"
    log_folder: Optional[str] = None

    @property
    def params(self) -> JoinParams:
        """Validated join parameters.

        Raises:
            DomainError: If a parameter is missing or a join condition fails.
        """
        self._require("d_N", "A", "l1", "l2", "w1", "w2")
        params = JoinParams(
            d_N=self.d_N,
            A=self.A,
            l1=self.l1,
            l2=self.l2,
            w1=self.w1,
            w2=self.w2,
        )
        violations = validate(params)
        if violations:
            raise DomainError("; ".join(violations))
        return params

    @property
    def template(self) -> JoinTemplate:
        self._require("d_N", "A", "l1", "w1", "w2", "l2_from", "l2_to")
        return JoinTemplate(self.d_N, self.A, self.l1, self.w1, self.w2)

    def _require(self, *names: str):
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            raise DomainError(
                f"missing required field(s): {', '.join(missing)}"
            )


def _add_common_arguments(parser: argparse.ArgumentParser):
    # Defaults are suppressed so that only explicit flags override the file
    add = parser.add_argument
    suppress = argparse.SUPPRESS
    add("--config", default=suppress, help="Flat key-value JSON file.")
    add("--dN", default=suppress, help="Complex dimension of the base.")
    add(
        "--A",
        default=suppress,
        help="Normalised base scalar curvature; pass negative fractions "
        "as --A=-p/q.",
    )
    for key in ("l1", "l2", "w1", "w2"):
        add(f"--{key}", default=suppress)
    add(
        "--rays",
        nargs="*",
        default=suppress,
        help='Rays as "v1,v2" pairs.',
    )
    add("--tolerance", default=suppress)
    add("--l2-from", dest="l2_from", default=suppress)
    add("--l2-to", dest="l2_to", default=suppress)
    add("--bmin", default=suppress)
    add("--bmax", default=suppress)
    add("--count", default=suppress)
    add("--format", choices=FORMATS, default=suppress)
    add(
        "--json",
        dest="format",
        action="store_const",
        const="json",
        default=suppress,
    )
    add(
        "--csv",
        dest="format",
        action="store_const",
        const="csv",
        default=suppress,
    )
    add("--output", default=suppress, help="Write to a file, not stdout.")
    add("--workers", default=suppress)
    add("--window-lo", dest="window_lo", default=suppress)
    add("--window-hi", dest="window_hi", default=suppress)
    add("--window-tol", dest="window_tol", default=suppress)
    add(
        "--extremal",
        action="store_true",
        default=suppress,
        help="With analyze: add extremal profiles for --rays and the "
        "admissible window over --window-lo..--window-hi.",
    )
    add("--log-level", dest="log_level", default=suppress)
    add("--log-folder", dest="log_folder", default=suppress)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sasakijoin",
        description=(
            "Exact analysis of the Einstein-Hilbert functional on the w-cone "
            "of Sasaki joins."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    helps = {
        "analyze": "Full report for one parameter set.",
        "scan": "Sweep l2 over a range.",
        "extremal": "Admissible extremal window and per-ray admissibility.",
        "sample": "Curves of H, H', f_csc, S_num and V_num on a grid.",
        "verify": "Golden verification suite.",
    }
    for command in COMMANDS:
        _add_common_arguments(
            subparsers.add_parser(
                command,
                aliases=ALIASES.get(command, []),
                help=helps[command],
            )
        )
    return parser


def _load_file(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r") as f:
            document = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise DomainError(f"config: cannot read {path}: {e}") from e
    if not isinstance(document, dict):
        raise DomainError("config: expected a flat key-value JSON object")
    unknown = sorted(set(document) - set(DEFAULTS))
    if unknown:
        raise DomainError(f"config: unknown key(s) {', '.join(unknown)}")
    return document


def _parse_integer(value: Any, key: str) -> int:
    if isinstance(value, bool):
        raise DomainError(f"{key}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and re.fullmatch(r"\s*[+-]?\d+\s*", value):
        return int(value)
    raise DomainError(f"{key}: expected an integer, got {value!r}")


def parse_ray(text: Any) -> RayId:
    """Parse "v1,v2", "v1:v2" or a two-element list into a canonical ray."""
    if isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        parts = re.split(r"[,:]", str(text))
    if len(parts) != 2:
        raise DomainError(f"rays: malformed ray {text!r}")
    v1, v2 = (_parse_integer(p, "rays") for p in parts)
    return RayId(v1, v2)


def _normalise(values: Dict[str, Any]) -> Dict[str, Any]:
    out = dict(values)
    for key in INTEGER_KEYS + ("workers",):
        if out[key] is not None:
            out[key] = _parse_integer(out[key], key)
    for key in RATIONAL_KEYS:
        if out[key] is not None:
            out[key] = parse_rational(out[key], key)
    if out["format"] not in FORMATS:
        raise DomainError(f"format: expected one of {', '.join(FORMATS)}")

    # Check(s)
    if out["tolerance"] <= 0:
        raise DomainError("tolerance: must be positive")
    if out["window_tol"] <= 0:
        raise DomainError("window_tol: must be positive")
    if out["count"] < 2:
        raise DomainError("count: sample grid needs at least 2 points")
    if out["bmin"] <= 0 or out["bmax"] <= out["bmin"]:
        raise DomainError("bmin: need 0 < bmin < bmax")
    if out["workers"] < 1:
        raise DomainError("workers: must be positive")
    if not isinstance(out["extremal"], bool):
        raise DomainError(
            f"extremal: expected true or false, got {out['extremal']!r}"
        )
    out["log_level"] = str(out["log_level"]).upper()
    if out["log_level"] not in LOG_LEVELS:
        raise DomainError(
            f"log_level: expected one of {', '.join(LOG_LEVELS)}"
        )
    return out


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Parse flags, merged over an optional `--config` file.

    Raises:
        DomainError: On malformed values or unknown file keys; the message
            names the offending field.
        SystemExit: With code 2 on argparse usage errors.
    """
    namespace = vars(build_parser().parse_args(argv))
    command = namespace.pop("command")

    values = dict(DEFAULTS)
    config_path = namespace.pop("config", None)
    if config_path is not None:
        values.update(_load_file(config_path))
    values.update(namespace)
    values = _normalise(values)

    rays = tuple(parse_ray(r) for r in values.pop("rays") or [])
    renamed = {"dN": "d_N", "bmin": "b_min", "bmax": "b_max"}
    fields = {renamed.get(k, k): v for k, v in values.items()}
    return RunConfig(command=command, rays=rays, **fields)
