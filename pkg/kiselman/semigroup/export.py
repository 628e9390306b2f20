"""
Exports of enumerated tables
원소 목록 / 곱셈표 / 케일리 그래프 내보내기

- Elements: JSON array of {"index", "word", "content", "idempotent"}
- Cayley table: CSV, header row of element indices, one row per left factor
- Right Cayley graph: graphviz DOT, nodes labelled by canonical words, edges by generator

To plot a DOT export:

    dot -Tpng -O k3.gv
"""

from pathlib import Path
from typing import Any, Dict, List, Union

from ..core.io import dumps_csv, save_json, save_text
from .structure import idempotent_indices
from .table import SemigroupTable


def elements_json(table: SemigroupTable) -> List[Dict[str, Any]]:
    idempotent_set = set(idempotent_indices(table))
    return [
        {
            "index": x,
            "word": list(w.letters),
            "content": list(table.content_of(x).letters),
            "idempotent": x in idempotent_set,
        }
        for x, w in enumerate(table.elements)
    ]


def cayley_csv(table: SemigroupTable) -> str:
    """
    Product table as CSV.

    The first column holds the index of the left factor; the header row holds
    the indices of the right factors.
    """
    header = [""] + list(range(table.size))
    rows = ([x] + table.product[x].tolist() for x in range(table.size))
    return dumps_csv(rows, header)


def _label(table: SemigroupTable, x: int) -> str:
    text = str(table.word(x))
    return text if text else "e"


def cayley_dot(table: SemigroupTable, skip_loops: bool = False) -> str:
    """Right Cayley graph, one ``rank = same`` layer per word length."""
    lines = [f"digraph K{table.rank} {{", "\tgraph [rankdir=TB];"]

    layers: Dict[int, List[int]] = {}
    for x, w in enumerate(table.elements):
        layers.setdefault(len(w), []).append(x)

    for length in sorted(layers):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for x in layers[length]:
            lines.append(f'\t\t"{x}" [label="{_label(table, x)}"];')
        lines.append("\t}")

    for x in range(table.size):
        for i in range(1, table.rank + 1):
            y = int(table.right[x, i - 1])
            if skip_loops and y == x:
                continue
            lines.append(f'\t"{x}" -> "{y}" [label="{i}"];')

    lines.append("}")
    return "\n".join(lines) + "\n"


def export_elements_json(table: SemigroupTable, path: Union[str, Path]) -> Path:
    return save_json(elements_json(table), path)


def export_cayley_csv(table: SemigroupTable, path: Union[str, Path]) -> Path:
    return save_text(cayley_csv(table), path)


def export_cayley_dot(
    table: SemigroupTable,
    path: Union[str, Path],
    skip_loops: bool = False
) -> Path:
    return save_text(cayley_dot(table, skip_loops=skip_loops), path)
