"""Desk-scale size limits shared by the exhaustive searches.

Setting CIRCIX_LIMIT_OVERRIDE to any value other than "" or "0" disables the
checks; running past them can take exponential time.
"""
import os


class LimitExceeded(ValueError):
    pass


def limits_disabled() -> bool:
    return os.environ.get("CIRCIX_LIMIT_OVERRIDE", "").strip() not in ("", "0")


def check_limit(name: str, value: int, maximum: int) -> None:
    if value > maximum and not limits_disabled():
        raise LimitExceeded(f"instance too large: {name}={value} exceeds limit {maximum}")
