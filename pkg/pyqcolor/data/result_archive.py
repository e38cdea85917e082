"""
Result archive for PyQColor

Keeps solve summaries and sweep tables across sessions using DuckDB,
TinyDB or JSON files.
"""

import json
import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

try:
    import duckdb

    DUCKDB_AVAILABLE = True
except ImportError:  # pragma: no cover - optional dependency
    DUCKDB_AVAILABLE = False
    logging.warning("DuckDB not available - using TinyDB/JSON for the result archive")

try:
    from tinydb import Query, TinyDB

    TINYDB_AVAILABLE = True
except ImportError:  # pragma: no cover - optional dependency
    TINYDB_AVAILABLE = False
    logging.warning("TinyDB not available - using JSON files for the result archive")

from pyqcolor.core.enums import ArchiveBackend
from pyqcolor.core.models import RunSummary, SweepRecord

logger = logging.getLogger(__name__)

ARCHIVE_DIR_ENV = "PYQCOLOR_ARCHIVE_DIR"

SOLVES_DDL = (
    "CREATE TABLE IF NOT EXISTS solves ("
    "label TEXT, record_date TEXT, h_min BIGINT, final_beta DOUBLE, "
    "n_accepted BIGINT, elapsed_seconds DOUBLE, summary TEXT)"
)
SWEEPS_DDL = (
    "CREATE TABLE IF NOT EXISTS sweeps ("
    "label TEXT, record_date TEXT, c DOUBLE, q INTEGER, h_min BIGINT, "
    "n_edges BIGINT, seed UBIGINT)"
)


class ResultArchive:
    """
    Archives experiment results under a label.

    Uses DuckDB if available, falling back to TinyDB or JSON files.
    Recording under an existing label replaces the previous entry.
    """

    def __init__(
        self, archive_directory: Optional[str] = None, *, use_duckdb: Optional[bool] = None
    ):
        """
        Initialize the archive.

        Args:
            archive_directory: Directory holding the archive. If ``None`` the
                ``PYQCOLOR_ARCHIVE_DIR`` environment variable is used when
                set, otherwise ``"results"``.
            use_duckdb: Force DuckDB on or off. If None, uses DuckDB when
                available.
        """
        if archive_directory is None:
            archive_directory = os.getenv(ARCHIVE_DIR_ENV, "results")

        self.archive_directory = Path(archive_directory)
        self.archive_directory.mkdir(parents=True, exist_ok=True)

        if use_duckdb is None:
            self.use_duckdb = DUCKDB_AVAILABLE
        else:
            self.use_duckdb = bool(use_duckdb) and DUCKDB_AVAILABLE
        self.use_tinydb = (not self.use_duckdb) and TINYDB_AVAILABLE

        self.duckdb_path = self.archive_directory / "results.duckdb"
        self.tinydb_path = self.archive_directory / "results.db"

        logger.info(f"Using {self.backend.value} for the result archive")

    @property
    def backend(self) -> ArchiveBackend:
        if self.use_duckdb:
            return ArchiveBackend.DUCKDB
        if self.use_tinydb:
            return ArchiveBackend.TINYDB
        return ArchiveBackend.JSON

    def _connect(self):
        conn = duckdb.connect(str(self.duckdb_path))
        conn.execute(SOLVES_DDL)
        conn.execute(SWEEPS_DDL)
        return conn

    # Solves

    def record_solve(self, summary: RunSummary, label: str) -> str:
        """
        Archive a solve summary.

        Args:
            summary: Summary of the solve
            label: Name to store it under

        Returns:
            Path of the storage that received the record
        """
        record_date = datetime.now().isoformat(timespec="microseconds")
        if self.use_duckdb:
            with self._connect() as conn:
                conn.execute("DELETE FROM solves WHERE label = ?", [label])
                conn.execute(
                    "INSERT INTO solves VALUES (?, ?, ?, ?, ?, ?, ?)",
                    [
                        label,
                        record_date,
                        summary.h_min,
                        summary.final_beta,
                        summary.n_accepted,
                        summary.elapsed_seconds,
                        summary.model_dump_json(),
                    ],
                )
            logger.info(f"Solve archived to DuckDB: {label}")
            return str(self.duckdb_path)

        document = {"label": label, "record_date": record_date, "summary": summary.model_dump()}
        if self.use_tinydb:
            with TinyDB(self.tinydb_path) as db:
                table = db.table("solves")
                table.remove(Query().label == label)
                table.insert(document)
            logger.info(f"Solve archived to TinyDB: {label}")
            return str(self.tinydb_path)

        path = self.archive_directory / f"solve_{label}.json"
        path.write_text(json.dumps(document, indent=2))
        logger.info(f"Solve archived to JSON: {path}")
        return str(path)

    def load_solve(self, label: str) -> RunSummary:
        """Load an archived solve summary."""
        if self.use_duckdb:
            with self._connect() as conn:
                row = conn.execute(
                    "SELECT summary FROM solves WHERE label = ? LIMIT 1", [label]
                ).fetchone()
            if not row:
                raise FileNotFoundError(f"Solve '{label}' not found in archive")
            return RunSummary.model_validate_json(row[0])

        if self.use_tinydb:
            with TinyDB(self.tinydb_path) as db:
                matches = db.table("solves").search(Query().label == label)
            if not matches:
                raise FileNotFoundError(f"Solve '{label}' not found in archive")
            return RunSummary.model_validate(matches[-1]["summary"])

        path = self.archive_directory / f"solve_{label}.json"
        if not path.exists():
            raise FileNotFoundError(f"Solve '{label}' not found in archive")
        return RunSummary.model_validate(json.loads(path.read_text())["summary"])

    def list_solves(self) -> List[Dict[str, Any]]:
        """
        List archived solves.

        Returns:
            Dictionaries with label, record_date, h_min and elapsed_seconds,
            newest first
        """
        entries: List[Dict[str, Any]] = []
        if self.use_duckdb:
            with self._connect() as conn:
                rows = conn.execute(
                    "SELECT label, record_date, h_min, elapsed_seconds FROM solves"
                ).fetchall()
            entries = [
                {"label": r[0], "record_date": r[1], "h_min": r[2], "elapsed_seconds": r[3]}
                for r in rows
            ]
        elif self.use_tinydb:
            with TinyDB(self.tinydb_path) as db:
                documents = db.table("solves").all()
            entries = [self._entry(doc) for doc in documents]
        else:
            for path in self.archive_directory.glob("solve_*.json"):
                try:
                    entries.append(self._entry(json.loads(path.read_text())))
                except (OSError, ValueError, KeyError) as e:
                    logger.warning(f"Error reading archive file {path}: {e}")

        entries.sort(key=lambda e: e["record_date"], reverse=True)
        return entries

    @staticmethod
    def _entry(document: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "label": document["label"],
            "record_date": document["record_date"],
            "h_min": document["summary"]["h_min"],
            "elapsed_seconds": document["summary"]["elapsed_seconds"],
        }

    # Sweeps

    def record_sweep(self, records: List[SweepRecord], label: str) -> str:
        """
        Archive the rows of a sweep.

        Args:
            records: Sweep rows
            label: Name to store them under

        Returns:
            Path of the storage that received the rows
        """
        record_date = datetime.now().isoformat(timespec="microseconds")
        if self.use_duckdb:
            with self._connect() as conn:
                conn.execute("DELETE FROM sweeps WHERE label = ?", [label])
                if records:
                    conn.executemany(
                        "INSERT INTO sweeps VALUES (?, ?, ?, ?, ?, ?, ?)",
                        [
                            [label, record_date, r.c, r.q, r.h_min, r.n_edges, r.seed]
                            for r in records
                        ],
                    )
            logger.info(f"Sweep archived to DuckDB: {label} ({len(records)} rows)")
            return str(self.duckdb_path)

        document = {
            "label": label,
            "record_date": record_date,
            "records": [r.model_dump() for r in records],
        }
        if self.use_tinydb:
            with TinyDB(self.tinydb_path) as db:
                table = db.table("sweeps")
                table.remove(Query().label == label)
                table.insert(document)
            logger.info(f"Sweep archived to TinyDB: {label} ({len(records)} rows)")
            return str(self.tinydb_path)

        path = self.archive_directory / f"sweep_{label}.json"
        path.write_text(json.dumps(document, indent=2))
        logger.info(f"Sweep archived to JSON: {path}")
        return str(path)

    def load_sweep(self, label: str) -> List[SweepRecord]:
        """Load archived sweep rows sorted by (c, q)."""
        if self.use_duckdb:
            with self._connect() as conn:
                rows = conn.execute(
                    "SELECT c, q, h_min, n_edges, seed FROM sweeps WHERE label = ? "
                    "ORDER BY c, q",
                    [label],
                ).fetchall()
            records = [
                SweepRecord(c=r[0], q=r[1], h_min=r[2], n_edges=r[3], seed=r[4]) for r in rows
            ]
        elif self.use_tinydb:
            with TinyDB(self.tinydb_path) as db:
                matches = db.table("sweeps").search(Query().label == label)
            records = (
                [SweepRecord.model_validate(r) for r in matches[-1]["records"]] if matches else []
            )
        else:
            path = self.archive_directory / f"sweep_{label}.json"
            records = (
                [SweepRecord.model_validate(r) for r in json.loads(path.read_text())["records"]]
                if path.exists()
                else []
            )

        if not records:
            raise FileNotFoundError(f"Sweep '{label}' not found in archive")
        return sorted(records, key=lambda r: (r.c, r.q))
