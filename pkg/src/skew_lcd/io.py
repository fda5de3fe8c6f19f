"""Input/output functionality for the skew LCD code toolkit."""
import datetime
import hashlib
import logging
import pathlib
from typing import Literal

import numpy as np
import pandas as pd
import pydantic

from skew_lcd import codes, config, ring_r

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)

TableFormat = Literal["text", "json", "csv"]


class CodeRecord(pydantic.BaseModel):
    """A skew constacyclic code over F_q as written to JSON.

    Attributes:
        field: The field, as "GF(p^t; m0,...,mt)".
        r: The power of the Frobenius automorphism.
        n: The length.
        lambda_: The constant lambda.
        generator: The generator polynomial.
        G: The reduced generator matrix.
        k: The dimension.
        lcd: LCD verdicts per inner product, None when not applicable.
        d_bounded: The bounded minimum distance, ">=w" for a lower bound.
    """

    model_config = pydantic.ConfigDict(populate_by_name=True)

    field: str
    r: int
    n: int
    lambda_: str = pydantic.Field(alias="lambda")
    generator: str
    G: list[list[str]]  # noqa: N815
    k: int
    lcd: dict[str, bool | None]
    d_bounded: str | None = None


class GrayRecord(pydantic.BaseModel):
    """Gray image parameters and LCD verdicts."""

    params: str
    lcd: dict[str, bool | None]


class RCodeRecord(pydantic.BaseModel):
    """A skew constacyclic code over F_q+vF_q as written to JSON.

    Attributes:
        field: The field F_q.
        r: The power of the Frobenius automorphism.
        n: The length.
        alpha: The constant part of lambda.
        beta: The v part of lambda.
        g1: The generator of the v-side component.
        g2: The generator of the (1 - v)-side component.
        gray: The Gray image parameters and verdicts.
    """

    field: str
    r: int
    n: int
    alpha: str
    beta: str
    g1: str
    g2: str
    gray: GrayRecord


class CatalogEntry(pydantic.BaseModel):
    """A code over F_q+vF_q found by a search.

    Attributes:
        field: The field F_q.
        r: The power of the Frobenius automorphism.
        n: The length over the ring.
        alpha: The constant part of lambda.
        beta: The v part of lambda.
        g1: The generator of the v-side component.
        g2: The generator of the (1 - v)-side component.
        length: The Gray image length 2n.
        dimension: The Gray image dimension.
        distance: The bounded minimum distance of the Gray image.
        distance_exact: Whether the distance is exact or a lower bound.
        lcd: LCD verdicts per inner product.
        digest: sha256 of the canonical Gray generator matrix.
        timestamp: When the entry was found.
    """

    field: str
    r: int
    n: int
    alpha: str
    beta: str
    g1: str
    g2: str
    length: int
    dimension: int
    distance: int
    distance_exact: bool
    lcd: dict[str, bool | None]
    digest: str
    timestamp: datetime.datetime = pydantic.Field(
        default_factory=lambda: datetime.datetime.now(tz=datetime.timezone.utc),
    )

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return self.length, self.dimension, -self.distance


class Catalog(pydantic.RootModel[list[CatalogEntry]]):
    """A JSON array of catalog entries."""

    root: list[CatalogEntry] = pydantic.Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.root)


def code_record(code: codes.SkewConstaCode, w_max: int | None = None) -> CodeRecord:
    return CodeRecord.model_validate(code.to_dict(w_max))


def r_code_record(code: ring_r.RSkewCode, w_max: int | None = None) -> RCodeRecord:
    return RCodeRecord.model_validate(code.to_dict(w_max))


def matrix_digest(matrix: np.ndarray, field: str, r: int) -> str:
    """sha256 of a generator matrix together with its field and automorphism.

    Args:
        matrix: Integer representations of the entries.
        field: The field, as written by repr.
        r: The automorphism is the r-th power of the Frobenius map.

    Returns:
        str: The hex digest.
    """
    array = np.ascontiguousarray(np.asarray(matrix, dtype=np.int64))
    digest = hashlib.sha256(f"{field}|{r}|{array.shape}".encode())
    digest.update(array.tobytes())
    return digest.hexdigest()


def catalog_entry(
    code: ring_r.RSkewCode,
    lcd: dict[str, bool | None],
    w_max: int | None = None,
) -> CatalogEntry:
    """Describe a code over F_q+vF_q as a catalog entry.

    Args:
        code: The code.
        lcd: LCD verdicts per inner product.
        w_max: Largest weight of the bounded distance search.

    Returns:
        CatalogEntry: The entry.
    """
    params = ring_r.gray_params(code, w_max)
    image = code.gray_image()
    return CatalogEntry(
        field=repr(code.field),
        r=code.g1.r,
        n=code.n,
        alpha=str(code.alpha),
        beta=str(code.beta),
        g1=str(code.g1),
        g2=str(code.g2),
        length=params.length,
        dimension=params.dimension,
        distance=params.distance.value,
        distance_exact=params.distance.exact,
        lcd=lcd,
        digest=matrix_digest(
            image.generator.view(np.ndarray), repr(code.field), code.g1.r
        ),
    )


def load_catalog(path: pathlib.Path) -> Catalog:
    """Load a catalog, empty when the file does not exist.

    Args:
        path: The catalog file.

    Returns:
        Catalog: The catalog.
    """
    if not path.exists():
        logger.info("No catalog at %s, starting an empty one.", path)
        return Catalog([])
    logger.debug("Loading catalog from %s.", path)
    return Catalog.model_validate_json(path.read_text())


def save_catalog(path: pathlib.Path, catalog: Catalog) -> None:
    logger.info("Saving %s catalog entries to %s.", len(catalog), path)
    path.write_text(catalog.model_dump_json(indent=4))


def append_entries(catalog: Catalog, entries: list[CatalogEntry]) -> Catalog:
    """Merge entries into a catalog, dropping duplicate generator matrices.

    Args:
        catalog: The existing catalog.
        entries: The new entries.

    Returns:
        Catalog: The merged catalog sorted by (2n, k, -d).
    """
    merged: dict[str, CatalogEntry] = {entry.digest: entry for entry in catalog.root}
    for entry in entries:
        merged.setdefault(entry.digest, entry)
    logger.debug("Catalog grew from %s to %s entries.", len(catalog), len(merged))
    return Catalog(sorted(merged.values(), key=lambda entry: entry.sort_key))


def write_table(frame: pd.DataFrame, fmt: TableFormat = "text") -> str:
    """Render a table as plain text, JSON records or CSV.

    Args:
        frame: The table.
        fmt: The output format.

    Returns:
        str: The rendered table.
    """
    if fmt == "json":
        return frame.to_json(orient="records", indent=4)
    if fmt == "csv":
        return frame.to_csv(index=False)
    if frame.empty:
        return "(no rows)"
    return frame.to_string(index=False)
