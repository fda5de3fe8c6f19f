"""Entrypoint for the skew LCD code toolkit."""
import logging
import sys

from skew_lcd import cli, commands, config

settings = config.get_settings()
LOGGER_NAME = settings.LOGGER_NAME


def main() -> None:
    """Run the skew LCD code toolkit."""
    args = cli.parse_arguments()
    config.setup_logger(args.verbosity)

    logger = logging.getLogger(LOGGER_NAME)
    logger.info("Running the %s command.", args.command)

    status = commands.run(args)
    if status:
        logger.info("The %s command finished with status %s.", args.command, status)
        sys.exit(status)


if __name__ == "__main__":
    main()
