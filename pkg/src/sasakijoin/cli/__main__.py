"""Entry point of the `sasakijoin` command-line tool.

Exit codes: 0 on success, 2 on input errors, 3 when two independent
constructions disagree or a golden check fails.
"""

import logging
import sys
from typing import Optional, Sequence

from sasakijoin.cli.commands import (
    EXIT_INCONSISTENT,
    EXIT_INPUT_ERROR,
    run_subcommand,
)
from sasakijoin.cli.config import parse_config
from sasakijoin.utilities.exceptions import DomainError, InconsistencyError
from sasakijoin.utilities.logging import (
    add_log_file,
    get_logger,
    set_logging_level,
)


logger = get_logger()


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except DomainError as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR

    set_logging_level(getattr(logging, config.log_level))
    if config.log_folder is not None:
        add_log_file(config.log_folder)

    try:
        return run_subcommand(config)
    except DomainError as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR
    except InconsistencyError as e:
        logger.error(f"{e} {e.payload}")
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
