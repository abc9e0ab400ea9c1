"""
Golden coefficient tables: Lescop coefficients, their reductions mod 5 and 7,
and the dimensions of the Lefschetz components.
"""

import csv
import io
import json
from typing import Dict

from lefschetz.components import component_dimension
from lescop.invariants import lescop_coefficient
from pmod.weights import lescop_table
from rings.rational import format_rational

LESCOP_ROWS = 12
TABLE_GMAX = 6
PRIMES = (5, 7)


def coefficient_tables() -> Dict[str, dict]:
    tables = {"lescop": {str(j): format_rational(lescop_coefficient(j)) for j in range(1, LESCOP_ROWS + 1)}}
    for p in PRIMES:
        tables[f"lescop_mod_{p}"] = {str(j): value for j, value in enumerate(lescop_table(p), start=1)}
    tables["dimensions"] = {str(g): {str(j): component_dimension(g, j) for j in range(1, g + 2)}
                            for g in range(1, TABLE_GMAX + 1)}
    return tables


def emit_tables(fmt: str = "json") -> str:
    """
    Render the tables as JSON or as CSV rows (table, row, column, value).

    The output is byte-identical between runs.
    """
    tables = coefficient_tables()
    if fmt == "json":
        return json.dumps(tables, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown table format {fmt!r}")

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["table", "row", "column", "value"])
    for name, table in tables.items():
        for row, entry in table.items():
            if isinstance(entry, dict):
                for column, value in entry.items():
                    writer.writerow([name, row, column, value])
            else:
                writer.writerow([name, row, "", entry])
    return buffer.getvalue()
