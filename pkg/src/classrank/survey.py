"""Survey domain types and ingestion.

A survey couples one rating per student with an n x n binary matrix of
student-to-student competence perceptions: entry (i, j) is 1 when student i
considers student j competent to judge the course. The diagonal is zero and
blank answers count as "not competent". Row-normalizing that matrix is the
shared entry point for both weighting methods.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DimensionMismatch,
    MalformedInput,
    NonBinaryEntry,
    NonZeroDiagonal,
    ScaleViolation,
)

DEFAULT_SCALE = (1.0, 5.0)
DIAGONAL_POLICIES = ("coerce", "reject")

ROW_SUM_TOL = 1e-12


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class RatingVector:
    """Per-student ratings of one course on a bounded scale."""

    values: np.ndarray
    scale_min: float = DEFAULT_SCALE[0]
    scale_max: float = DEFAULT_SCALE[1]

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise DimensionMismatch("ratings must form a nonempty 1-d sequence")
        if not self.scale_min < self.scale_max:
            raise ScaleViolation(
                f"scale [{self.scale_min}, {self.scale_max}] is not an interval"
            )
        if not np.all(np.isfinite(values)):
            raise ScaleViolation("ratings must be finite numbers")
        if np.any(values < self.scale_min) or np.any(values > self.scale_max):
            raise ScaleViolation(
                f"ratings must lie in [{self.scale_min}, {self.scale_max}]"
            )
        object.__setattr__(self, "values", _readonly(values))

    @property
    def n(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class CompetenceMatrix:
    """Square binary matrix of peer competence perceptions, zero diagonal."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatch("competence matrix must be square")
        if entries.shape[0] == 0:
            raise DimensionMismatch("competence matrix must be nonempty")
        values_ok = np.isin(entries, (0, 1))
        if not values_ok.all():
            bad = entries[~values_ok].ravel()[0]
            raise NonBinaryEntry(f"matrix entries must be 0 or 1, found {bad!r}")
        entries = entries.astype(np.int64)
        if np.any(np.diag(entries) != 0):
            where = np.flatnonzero(np.diag(entries)).tolist()
            raise NonZeroDiagonal(f"self-endorsement at index {where}")
        object.__setattr__(self, "entries", _readonly(entries))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    """Row-normalized competence matrix.

    Rows of endorsing students sum to 1; rows of students who endorse nobody
    (the dangling set) stay all zero. ``row_sums`` keeps the original
    endorsement counts.
    """

    entries: np.ndarray
    row_sums: np.ndarray
    dangling: frozenset[int]

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        row_sums = np.array(self.row_sums, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatch("normalized matrix must be square")
        for i, total in enumerate(entries.sum(axis=1)):
            expected = 0.0 if i in self.dangling else 1.0
            if abs(total - expected) > ROW_SUM_TOL:
                raise DimensionMismatch(
                    f"row {i} sums to {total!r}, expected {expected}"
                )
        object.__setattr__(self, "entries", _readonly(entries))
        object.__setattr__(self, "row_sums", _readonly(row_sums))
        object.__setattr__(self, "dangling", frozenset(self.dangling))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def total(self) -> float:
        """Sum of all entries; equals n minus the number of dangling rows."""
        return float(self.entries.sum())


@dataclass(frozen=True, eq=False)
class SurveyInstance:
    """A validated pair of ratings and competence matrix for one course."""

    ratings: RatingVector
    competence: CompetenceMatrix
    label: str = ""
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.ratings.n != self.competence.n:
            raise DimensionMismatch(
                f"{self.ratings.n} ratings vs {self.competence.n} students"
            )

    @property
    def n(self) -> int:
        return self.ratings.n


def validate_survey(
    raw_ratings,
    raw_matrix,
    scale=DEFAULT_SCALE,
    diagonal_policy: str = "coerce",
    strict_likert: bool = False,
    label: str = "",
) -> SurveyInstance:
    """Check raw survey arrays and build a SurveyInstance.

    ``diagonal_policy`` decides what happens to self-endorsements: ``coerce``
    zeroes them and records a warning, ``reject`` raises NonZeroDiagonal.
    Entries other than 0/1 are rejected in both policies. ``strict_likert``
    additionally requires every rating to be an integer.

    Validation is idempotent: feeding back the arrays of a valid instance
    reproduces it unchanged, with no warnings.
    """
    if diagonal_policy not in DIAGONAL_POLICIES:
        raise ValueError(f"unknown diagonal policy {diagonal_policy!r}")

    matrix = np.array(raw_matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch("competence matrix must be square")
    if matrix.shape[0] == 0:
        raise DimensionMismatch("competence matrix must be nonempty")

    off_diagonal = ~np.eye(matrix.shape[0], dtype=bool)
    bad_off = off_diagonal & ~np.isin(matrix, (0, 1))
    if bad_off.any():
        value = matrix[bad_off].ravel()[0]
        raise NonBinaryEntry(f"matrix entries must be 0 or 1, found {value!r}")

    warnings: list[str] = []
    diagonal = np.diag(matrix)
    nonzero_diag = np.flatnonzero(diagonal != 0)
    if nonzero_diag.size:
        if diagonal_policy == "reject":
            raise NonZeroDiagonal(
                f"self-endorsement at index {nonzero_diag.tolist()}"
            )
        matrix = matrix.copy()
        np.fill_diagonal(matrix, 0)
        warnings.append(
            f"zeroed diagonal entries at indices {nonzero_diag.tolist()}"
        )

    ratings = np.array(raw_ratings, dtype=float)
    if strict_likert:
        if ratings.ndim != 1 or not np.all(np.isfinite(ratings)):
            raise ScaleViolation("ratings must be finite numbers")
        fractional = ratings != np.floor(ratings)
        if fractional.any():
            raise ScaleViolation(
                f"non-integer rating {ratings[fractional].ravel()[0]!r} "
                "with strict_likert enabled"
            )

    rating_vector = RatingVector(ratings, scale_min=scale[0], scale_max=scale[1])
    competence = CompetenceMatrix(matrix)
    return SurveyInstance(
        ratings=rating_vector,
        competence=competence,
        label=label,
        warnings=tuple(warnings),
    )


def normalize(competence: CompetenceMatrix) -> NormalizedMatrix:
    """Divide each row by its endorsement count; rows of zeros stay zero."""
    counts = competence.entries.sum(axis=1)
    dangling = frozenset(np.flatnonzero(counts == 0).tolist())
    divisor = np.where(counts == 0, 1, counts)
    entries = competence.entries / divisor[:, None]
    return NormalizedMatrix(entries=entries, row_sums=counts, dangling=dangling)


def _as_number_grid(rows, context: str) -> list[list[float]]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInput(f"{context} must be a list of lists")
    # null cells mean "no answer", which counts as 0
    return [[0 if cell is None else cell for cell in row] for row in rows]


def load_survey_json(
    source,
    diagonal_policy: str = "coerce",
    strict_likert: bool = False,
) -> SurveyInstance:
    """Load a survey document: label, scale, ratings, competence.

    ``source`` is a path or an already-parsed dict. ``scale`` defaults to
    [1, 5] when absent.
    """
    if isinstance(source, (str, Path)):
        try:
            data = json.loads(Path(source).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON in {source}: {exc}") from exc
    else:
        data = source
    if not isinstance(data, dict):
        raise MalformedInput("survey document must be a JSON object")
    missing = [key for key in ("ratings", "competence") if key not in data]
    if missing:
        raise MalformedInput(f"survey document lacks {missing}")
    scale = data.get("scale", list(DEFAULT_SCALE))
    if not (isinstance(scale, list) and len(scale) == 2):
        raise MalformedInput("scale must be a two-element list")
    try:
        return validate_survey(
            data["ratings"],
            _as_number_grid(data["competence"], "competence"),
            scale=(float(scale[0]), float(scale[1])),
            diagonal_policy=diagonal_policy,
            strict_likert=strict_likert,
            label=str(data.get("label", "")),
        )
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"survey document is not numeric: {exc}") from exc


def load_competence_csv(path) -> np.ndarray:
    """Read an n x n matrix of 0/1 cells; blank cells count as 0."""
    rows = []
    with open(path, encoding="utf-8", newline="") as handle:
        for record in csv.reader(handle):
            if not record or all(not cell.strip() for cell in record):
                continue
            try:
                rows.append(
                    [float(cell) if cell.strip() else 0.0 for cell in record]
                )
            except ValueError as exc:
                raise MalformedInput(f"non-numeric matrix cell in {path}") from exc
    if not rows:
        raise MalformedInput(f"no matrix rows in {path}")
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise MalformedInput(f"ragged matrix rows in {path}")
    return np.array(rows)


def load_ratings_csv(path) -> list[float]:
    """Read a single-column list of ratings, one per line."""
    values = []
    with open(path, encoding="utf-8", newline="") as handle:
        for record in csv.reader(handle):
            if not record or all(not cell.strip() for cell in record):
                continue
            if len(record) != 1:
                raise MalformedInput(f"expected one rating per line in {path}")
            try:
                values.append(float(record[0]))
            except ValueError as exc:
                raise MalformedInput(f"non-numeric rating in {path}") from exc
    if not values:
        raise MalformedInput(f"no ratings in {path}")
    return values


def load_survey_csv(
    matrix_path,
    ratings_path,
    scale=DEFAULT_SCALE,
    diagonal_policy: str = "coerce",
    strict_likert: bool = False,
    label: str = "",
) -> SurveyInstance:
    matrix = load_competence_csv(matrix_path)
    ratings = load_ratings_csv(ratings_path)
    return validate_survey(
        ratings,
        matrix,
        scale=scale,
        diagonal_policy=diagonal_policy,
        strict_likert=strict_likert,
        label=label,
    )
