"""Shared record of acceptance verdicts, printed at the end of a pytest run."""

VERDICTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    VERDICTS[n] = (ok, detail)
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
