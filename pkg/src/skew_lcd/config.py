"""Configurations for the skew LCD code toolkit."""
import functools
import logging
import pathlib

import pydantic
import pydantic_settings


class Settings(pydantic_settings.BaseSettings):
    """A class representing the settings for the skew LCD code toolkit.

    Attributes:
        LOGGER_NAME (str): The name of the logger.
        DIVISOR_BUDGET (int): Largest number of candidate generators a
            right-divisor scan may visit.
        CENSUS_BUDGET (int): Largest number of candidates the brute-force
            census may visit.
        WEIGHT_LIMIT (int): Default largest weight of the bounded minimum
            distance search.
        THREADS (int): Default number of worker processes for sweeps.
        TABLE_ORDER_LIMIT (int): Largest field order for which dense
            arithmetic tables are built.
        CATALOG_PATH (pathlib.Path): Default location of the code catalog.
    """

    model_config = pydantic_settings.SettingsConfigDict(
        env_prefix="SKEW_LCD_",
    )

    LOGGER_NAME: str = pydantic.Field("skew_lcd")
    DIVISOR_BUDGET: int = pydantic.Field(10_000_000, gt=0)
    CENSUS_BUDGET: int = pydantic.Field(1_000_000, gt=0)
    WEIGHT_LIMIT: int = pydantic.Field(4, ge=1)
    THREADS: int = pydantic.Field(1, ge=1)
    TABLE_ORDER_LIMIT: int = pydantic.Field(1024, ge=2)
    CATALOG_PATH: pathlib.Path = pydantic.Field(pathlib.Path("catalog.json"))


@functools.lru_cache
def get_settings() -> Settings:
    """Cached call to the settings for the skew LCD code toolkit.

    Returns:
        Settings: The settings for the skew LCD code toolkit.

    """
    return Settings()


def setup_logger(verbosity: str | int | None = None) -> None:
    """Set up a logger with the given verbosity level.

    Args:
        verbosity: The verbosity level for the logger. If None, the
            logger will use the default level.

    """
    settings = get_settings()
    logger = logging.getLogger(settings.LOGGER_NAME)
    if verbosity is not None:
        logger.setLevel(verbosity)

    ch = logging.StreamHandler()
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    ch.setFormatter(formatter)
    logger.addHandler(ch)

    logger.debug("Logger set up with verbosity %s", verbosity)
