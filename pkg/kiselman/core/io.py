"""
Result I/O module for kiselman

Standard settings:
- Encoding: UTF-8 for every text output
- JSON: 2-space indent, keys in insertion order, big integers as decimal strings (callers' duty)
- CSV: comma separated, ``\\n`` line endings, header row first
- DOT: written verbatim from the exporter
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

# Global configuration
DEFAULT_ENCODING = "utf-8"
JSON_INDENT = 2


def _prepare(path: Union[str, Path], create_dirs: bool) -> Path:
    path = Path(path)
    if create_dirs:
        path.parent.mkdir(parents=True, exist_ok=True)
    return path


def dumps_json(data: Any) -> str:
    """Serialise ``data`` with the project-wide JSON settings."""
    return json.dumps(data, indent=JSON_INDENT, ensure_ascii=False)


def dumps_csv(rows: Iterable[Sequence[Any]], header: Optional[Sequence[Any]] = None) -> str:
    """Render rows as CSV text (header first when given)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header is not None:
        writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def save_text(text: str, path: Union[str, Path], create_dirs: bool = True) -> Path:
    """
    Save already rendered text (CSV, DOT, plain).

    :param text: content to write
    :type text: str
    :param path: target path
    :type path: str or Path
    :param create_dirs: create parent directories if they don't exist (default: True)
    :type create_dirs: bool
    :return: the resolved target path
    :rtype: Path

    :raises RuntimeError: if the file cannot be written

    Example:
        >>> save_text("digraph K2 {}\\n", "output/k2.dot")
        PosixPath('output/k2.dot')
    """
    path = _prepare(path, create_dirs)

    try:
        path.write_text(text, encoding=DEFAULT_ENCODING)
    except Exception as e:
        raise RuntimeError(f"Error saving file {path}: {str(e)}")

    return path


def save_json(data: Any, path: Union[str, Path], create_dirs: bool = True) -> Path:
    """
    Save a JSON document.

    :param data: JSON-serialisable object
    :param path: target path
    :type path: str or Path
    :param create_dirs: create parent directories if they don't exist (default: True)
    :type create_dirs: bool
    :return: the resolved target path
    :rtype: Path

    :raises ValueError: if ``data`` is not JSON-serialisable
    :raises RuntimeError: if the file cannot be written

    Example:
        >>> save_json({"n": 3, "size": 18}, "output/size.json")
        PosixPath('output/size.json')
    """
    try:
        text = dumps_json(data)
    except TypeError as e:
        raise ValueError(f"Data is not JSON-serialisable: {str(e)}")

    return save_text(text + "\n", path, create_dirs=create_dirs)


def load_json(path: Union[str, Path]) -> Any:
    """
    Load a JSON document written by :func:`save_json`.

    :raises FileNotFoundError: if the file does not exist
    :raises RuntimeError: if the file cannot be read or parsed
    """
    path = Path(path)

    if not path.exists():
        raise FileNotFoundError(f"JSON file not found: {path}")

    try:
        return json.loads(path.read_text(encoding=DEFAULT_ENCODING))
    except Exception as e:
        raise RuntimeError(f"Error loading JSON file {path}: {str(e)}")
