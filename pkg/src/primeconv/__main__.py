"""Allow ``python -m primeconv``."""

from .cli import console_entry

console_entry()
