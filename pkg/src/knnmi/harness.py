"""Sweep driver: generate, estimate with every backend, attach ground truth.

A sweep iterates cells (dimension x grid point), repeats each cell with
derived seeds, and estimates every repetition with each configured
backend. The SAME dataset and k-NN radii are shared by all backends within
a repetition (verified downstream via the dataset checksum column), so
backend comparisons are paired. Baseline overflow is caught and recorded
as a status, never aborting the sweep.

Cell seeds are derived by hashing the cell coordinates (sha256), making
every cell independently reproducible regardless of sweep order or subset.

Records are emitted one per (cell, repetition, backend) in deterministic
cell order, as flat rows; aggregation is a separate pass (summarize) so
raw records can be re-analyzed without re-running the O(N^2) estimation.
"""

import hashlib
import json
import time
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Optional

import numpy as np

from .datagen import GaussianSpec, StudentTSpec, generate_gaussian, generate_student_t
from .dataset import dataset_checksum
from .errors import ConfigurationError, DuplicatePointError, NonFiniteNormalizationError
from .estimators import estimate_from_radii
from .neighbors import compute_knn_radii
from .scaling import Backend, ln_v_baseline, ln_v_dominant, ln_v_proposed
from .truth import gaussian_truth, student_t_truth

GAUSSIAN = "gaussian"
STUDENT_T = "student_t"

# the rho = 1.0 grid point is degenerate to generate; data comes from this
# substitute while the recorded truth stays at the capped rho = 1.0 value
RHO_GENERATION_SUBSTITUTE = 0.99

DEFAULT_RHO_GRID = [round(0.1 * i, 1) for i in range(10)] + [1.0]
DEFAULT_NU_GRID = [0.125, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0]
DEFAULT_GAUSSIAN_DIMS = [1, 2, 4, 8, 16, 32, 64, 128, 256, 512]
DEFAULT_STUDENT_T_DIMS = [1, 2, 4, 8, 16, 32]


class Status(str, Enum):
    OK = "ok"
    OVERFLOW = "overflow"
    UNDEFINED_NMI = "undefined_nmi"
    DUPLICATE_POINTS = "duplicate_points"


_BACKEND_ALIASES = {
    "baseline": Backend.BASELINE,
    "proposed": Backend.PROPOSED,
    "dominant": Backend.DOMINANT_TERM,
    "dominantterm": Backend.DOMINANT_TERM,
    "dominant_term": Backend.DOMINANT_TERM,
}


def parse_backend(name) -> Backend:
    if isinstance(name, Backend):
        return name
    key = str(name).strip().lower()
    if key not in _BACKEND_ALIASES:
        raise ConfigurationError(
            f"unknown backend {name!r}; expected one of baseline/proposed/dominant"
        )
    return _BACKEND_ALIASES[key]


@dataclass
class ExperimentConfig:
    family: str
    base_seed: int
    dims: list = None
    rho_grid: list = None
    nu_grid: list = None
    n: int = 10000
    k: int = 5
    repetitions: int = 10
    backends: list = field(default_factory=lambda: [Backend.BASELINE, Backend.PROPOSED])

    def __post_init__(self):
        if self.family not in (GAUSSIAN, STUDENT_T):
            raise ConfigurationError(
                f"family must be {GAUSSIAN!r} or {STUDENT_T!r}, got {self.family!r}"
            )
        if self.dims is None:
            self.dims = list(
                DEFAULT_GAUSSIAN_DIMS if self.family == GAUSSIAN else DEFAULT_STUDENT_T_DIMS
            )
        self.dims = [int(d) for d in self.dims]
        if not self.dims or any(d < 1 for d in self.dims):
            raise ConfigurationError("dims must be a non-empty list of positive integers")
        if self.family == GAUSSIAN:
            if self.rho_grid is None:
                self.rho_grid = list(DEFAULT_RHO_GRID)
            self.rho_grid = [float(r) for r in self.rho_grid]
            if any(not 0.0 <= r <= 1.0 for r in self.rho_grid):
                raise ConfigurationError("rho_grid values must lie in [0, 1]")
        else:
            if self.nu_grid is None:
                self.nu_grid = list(DEFAULT_NU_GRID)
            self.nu_grid = [float(v) for v in self.nu_grid]
            if any(v <= 0.0 for v in self.nu_grid):
                raise ConfigurationError("nu_grid values must be positive")
        for name, low in (("n", 2), ("k", 1), ("repetitions", 1)):
            value = getattr(self, name)
            if not isinstance(value, int) or value < low:
                raise ConfigurationError(f"{name} must be an integer >= {low}, got {value!r}")
        if self.k >= self.n:
            raise ConfigurationError(f"k = {self.k} must be smaller than n = {self.n}")
        self.base_seed = int(self.base_seed)
        backends = [parse_backend(b) for b in self.backends]
        if not backends:
            raise ConfigurationError("backends must not be empty")
        self.backends = backends

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        allowed = {f.name for f in fields(cls)}
        unknown = set(raw) - allowed
        if unknown:
            raise ConfigurationError(f"unknown config fields: {sorted(unknown)}")
        if "family" not in raw or "base_seed" not in raw:
            raise ConfigurationError("config requires at least 'family' and 'base_seed'")
        return cls(**raw)

    @classmethod
    def from_json_file(cls, path) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigurationError(f"{path}: not valid JSON ({exc})") from exc
        if not isinstance(raw, dict):
            raise ConfigurationError(f"{path}: config must be a JSON object")
        return cls.from_dict(raw)

    @property
    def param_name(self) -> str:
        return "rho" if self.family == GAUSSIAN else "nu"

    def grid(self) -> list:
        """(nominal parameter, generation parameter) pairs."""
        if self.family == GAUSSIAN:
            return [
                (r, RHO_GENERATION_SUBSTITUTE if r == 1.0 else r) for r in self.rho_grid
            ]
        return [(v, v) for v in self.nu_grid]


@dataclass(frozen=True)
class RunRecord:
    family: str
    d: int
    param_name: str
    param: float
    param_gen: float
    repetition: int
    backend: str
    status: str
    mi_ksg: Optional[float]
    h_x: Optional[float]
    h_y: Optional[float]
    h_xy: Optional[float]
    mi_from_entropies: Optional[float]
    nmi: Optional[float]
    nmi_true: Optional[float]
    dataset_checksum: str
    wall_time_ms: float


RECORD_COLUMNS = [f.name for f in fields(RunRecord)]


def derive_seed(base_seed: int, family: str, d: int, param: float, repetition: int) -> int:
    """Stable 64-bit cell seed from the sweep coordinates."""
    text = f"{int(base_seed)}|{family}|{int(d)}|{float(param)!r}|{int(repetition)}"
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def _generate(config: ExperimentConfig, d: int, param_gen: float, seed: int):
    if config.family == GAUSSIAN:
        return generate_gaussian(GaussianSpec(d=d, rho=param_gen, n=config.n, seed=seed))
    return generate_student_t(StudentTSpec(d=d, nu=param_gen, n=config.n, seed=seed))


def _truth_nmi(config: ExperimentConfig, d: int, param: float) -> Optional[float]:
    if config.family == GAUSSIAN:
        return gaussian_truth(d, param).nmi_true
    return student_t_truth(d, param).nmi_true


_ESTIMATE_FIELDS = ("mi_ksg", "h_x", "h_y", "h_xy", "mi_from_entropies", "nmi")


def run_sweep(config: ExperimentConfig) -> list:
    """Run every (dim, grid point, repetition, backend) cell of the sweep."""
    records = []
    for d in config.dims:
        for param, param_gen in config.grid():
            nmi_true = _truth_nmi(config, d, param)
            for rep in range(config.repetitions):
                seed = derive_seed(config.base_seed, config.family, d, param, rep)
                shared_start = time.perf_counter()
                data = _generate(config, d, param_gen, seed)
                checksum = dataset_checksum(data)
                try:
                    radii = compute_knn_radii(data, config.k)
                except DuplicatePointError:
                    radii = None
                shared_ms = (time.perf_counter() - shared_start) * 1000.0

                for backend in config.backends:
                    start = time.perf_counter()
                    values = dict.fromkeys(_ESTIMATE_FIELDS)
                    if radii is None:
                        status = Status.DUPLICATE_POINTS
                    else:
                        try:
                            report = estimate_from_radii(radii, d, d, backend)
                        except NonFiniteNormalizationError:
                            status = Status.OVERFLOW
                        else:
                            values = {name: getattr(report, name) for name in _ESTIMATE_FIELDS}
                            numeric = [v for k, v in values.items() if k != "nmi"]
                            if not all(np.isfinite(numeric)):
                                status = Status.OVERFLOW
                                values = dict.fromkeys(_ESTIMATE_FIELDS)
                            elif values["nmi"] is None:
                                status = Status.UNDEFINED_NMI
                            else:
                                status = Status.OK
                    elapsed_ms = (time.perf_counter() - start) * 1000.0
                    records.append(
                        RunRecord(
                            family=config.family,
                            d=d,
                            param_name=config.param_name,
                            param=param,
                            param_gen=param_gen,
                            repetition=rep,
                            backend=Backend(backend).value,
                            status=status.value,
                            nmi_true=nmi_true,
                            dataset_checksum=checksum,
                            wall_time_ms=shared_ms + elapsed_ms,
                            **values,
                        )
                    )
    return records


@dataclass(frozen=True)
class SummaryRow:
    family: str
    d: int
    param_name: str
    param: float
    backend: str
    n_ok: int
    mean_nmi: Optional[float]
    std_nmi: Optional[float]
    overflow_count: int
    undefined_count: int
    duplicate_count: int
    nmi_true: Optional[float]


SUMMARY_COLUMNS = [f.name for f in fields(SummaryRow)]


def summarize(records) -> list:
    """Per-cell mean and sample std (ddof = 1) of NMI over status=ok records."""
    groups = {}
    for rec in records:
        key = (rec.family, rec.d, rec.param_name, rec.param, rec.backend)
        groups.setdefault(key, []).append(rec)

    rows = []
    for (family, d, param_name, param, backend), cell in groups.items():
        ok_values = [r.nmi for r in cell if r.status == Status.OK.value]
        mean_nmi = float(np.mean(ok_values)) if ok_values else None
        std_nmi = float(np.std(ok_values, ddof=1)) if len(ok_values) >= 2 else None
        rows.append(
            SummaryRow(
                family=family,
                d=d,
                param_name=param_name,
                param=param,
                backend=backend,
                n_ok=len(ok_values),
                mean_nmi=mean_nmi,
                std_nmi=std_nmi,
                overflow_count=sum(r.status == Status.OVERFLOW.value for r in cell),
                undefined_count=sum(r.status == Status.UNDEFINED_NMI.value for r in cell),
                duplicate_count=sum(r.status == Status.DUPLICATE_POINTS.value for r in cell),
                nmi_true=cell[0].nmi_true,
            )
        )
    return rows


@dataclass(frozen=True)
class StabilityRow:
    d_joint: int
    backend: str
    ln_v: float
    finite: bool


STABILITY_COLUMNS = [f.name for f in fields(StabilityRow)]

_STABILITY_BACKENDS = (
    (Backend.BASELINE, ln_v_baseline),
    (Backend.PROPOSED, ln_v_proposed),
    (Backend.DOMINANT_TERM, ln_v_dominant),
)


def stability_profile(epsilon, dims) -> list:
    """Evaluate all three ln V backends over a dimension sweep of fixed radii."""
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise ConfigurationError("dims must be a non-empty list of positive integers")
    rows = []
    for d in dims:
        for backend, fn in _STABILITY_BACKENDS:
            result = fn(epsilon, d)
            rows.append(
                StabilityRow(
                    d_joint=d, backend=backend.value, ln_v=result.ln_v, finite=result.finite
                )
            )
    return rows


# ---------------------------------------------------------------------------
# flat-file output: CSV (canonical) and JSON-lines (optional mirror)

def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(rows, columns, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_format_cell(getattr(row, c)) for c in columns) + "\n")


def write_records_csv(records, path) -> None:
    _write_csv(records, RECORD_COLUMNS, path)


def write_summary_csv(rows, path) -> None:
    _write_csv(rows, SUMMARY_COLUMNS, path)


def write_stability_csv(rows, path) -> None:
    _write_csv(rows, STABILITY_COLUMNS, path)


def write_records_jsonl(records, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for rec in records:
            obj = {c: getattr(rec, c) for c in RECORD_COLUMNS}
            fh.write(json.dumps(obj) + "\n")


_RECORD_PARSERS = {
    "family": str,
    "d": int,
    "param_name": str,
    "param": float,
    "param_gen": float,
    "repetition": int,
    "backend": str,
    "status": str,
    "dataset_checksum": str,
    "wall_time_ms": float,
}


def read_records_csv(path) -> list:
    """Parse a records CSV back into RunRecord objects ('' becomes None)."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip().split(",")
        if header != RECORD_COLUMNS:
            raise ConfigurationError(f"{path}: unexpected record columns {header}")
        records = []
        for line_no, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(RECORD_COLUMNS):
                raise ConfigurationError(f"{path}: row {line_no} has {len(parts)} fields")
            kwargs = {}
            for name, text in zip(RECORD_COLUMNS, parts):
                parser = _RECORD_PARSERS.get(name, float)
                kwargs[name] = None if text == "" else parser(text)
            records.append(RunRecord(**kwargs))
    return records
