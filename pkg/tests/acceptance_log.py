"""Collects one verdict line per acceptance criterion for the terminal summary."""

_results: dict[int, tuple[bool, str, str]] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
    _results[number] = (bool(ok), title, detail)
    print(format_line(number))
    return ok


def format_line(number: int) -> str:
    ok, title, detail = _results[number]
    return f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")


def lines() -> list[str]:
    return [format_line(n) for n in sorted(_results)]
