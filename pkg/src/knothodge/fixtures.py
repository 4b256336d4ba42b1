"""Published reference tables bundled with the package.

Blank cells of the printed tables are absent from the JSON and read as 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .genfun import Parity
from .hodge import HOMOLOGY, HOMOTOPY, EulerTable

__all__ = ["Fixture", "load", "euler_fixture", "chord_primitives", "FIXTURE_IDS"]

FIXTURE_IDS = ("homotopy_odd", "homology_odd", "homotopy_even", "homology_even", "chord_primitives")


@dataclass(frozen=True)
class Fixture:
    identifier: str
    rows: dict[int, dict[int, int]]
    source: str
    imax: int | None = None
    totals: dict[int, int] | None = None

    def cells(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for j, row in self.rows.items() for i, v in row.items()}


@lru_cache(maxsize=None)
def _raw() -> dict:
    text = resources.files("knothodge").joinpath("data/published_tables.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def load(identifier: str) -> Fixture:
    if identifier not in FIXTURE_IDS:
        raise KeyError(f"unknown fixture {identifier!r}")
    blob = _raw()[identifier]
    rows = {int(j): {int(i): int(v) for i, v in row.items()} for j, row in blob["rows"].items()}
    totals = blob.get("totals")
    if totals is not None:
        totals = {int(j): int(v) for j, v in totals.items()}
    return Fixture(identifier, dict(sorted(rows.items())), blob["source"], blob.get("imax"), totals)


def euler_fixture(kind: str, parity) -> EulerTable:
    """The bundled table as an :class:`EulerTable` (displayed columns only)."""
    if kind not in (HOMOLOGY, HOMOTOPY):
        raise ValueError(f"unknown table kind {kind!r}")
    parity = Parity.of(parity)
    fx = load(f"{kind}_{parity.value}")
    return EulerTable(kind, parity, max(fx.rows), fx.cells())


def chord_primitives() -> Fixture:
    return load("chord_primitives")
