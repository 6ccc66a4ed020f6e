from typing import Any, Iterable, Sequence


def csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def format_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Header line then one line per row; booleans as true/false, None as an empty cell."""
    lines = [",".join(columns)]
    lines.extend(",".join(csv_cell(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"
