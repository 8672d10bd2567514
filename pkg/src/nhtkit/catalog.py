"""Plain-text solution catalogs.

One entry per line, ``n m u0 u1 ... u_{h-1}`` in decimal separated by single
spaces; ``#`` starts a comment line.  Verification flags are never read
from disk: every loaded entry is re-checked.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path

from nhtkit.conditions import check_solution
from nhtkit.errors import CatalogSyntaxError, NhtError

CATALOG_ENV = "NHT_CATALOG"


@dataclass(frozen=True, order=True)
class CatalogEntry:
    n: int
    m: int
    coeffs: tuple
    source: str = field(default="searched", compare=False)
    verified: bool = field(default=False, compare=False)

    @classmethod
    def checked(cls, n, m, coeffs, source="searched"):
        coeffs = tuple(coeffs)
        return cls(n, m, coeffs, source, check_solution(coeffs, m).passed)

    @property
    def key(self):
        return (self.n, self.m, self.coeffs)

    def line(self):
        return " ".join(str(x) for x in (self.n, self.m, *self.coeffs))


def format_catalog(entries):
    lines = [e.line() for e in sorted(set(entries), key=lambda e: e.key)]
    return "".join(line + "\n" for line in lines)


def save_catalog(entries, destination):
    Path(destination).write_text(format_catalog(entries), encoding="ascii")


def _parse_int(token, lineno, what):
    if not token.isdigit() or not token.isascii():
        raise CatalogSyntaxError(lineno, f"{what} must be a non-negative decimal integer, got {token!r}")
    return int(token)


def parse_line(text, lineno, source="file"):
    if text != text.strip() or "  " in text or "\t" in text:
        raise CatalogSyntaxError(lineno, "fields must be separated by single spaces")
    tokens = text.split(" ")
    if len(tokens) < 4:
        raise CatalogSyntaxError(lineno, "expected 'n m u0 u1 ...'")
    n = _parse_int(tokens[0], lineno, "n")
    m = _parse_int(tokens[1], lineno, "m")
    if n < 4 or n % 2:
        raise CatalogSyntaxError(lineno, f"n must be even and >= 4, got {n}")
    if m < 2 or m >= 1 << 63:
        raise CatalogSyntaxError(lineno, f"modulus out of range: {m}")
    coeffs = tuple(_parse_int(t, lineno, "coefficient") for t in tokens[2:])
    if len(coeffs) != n // 2:
        raise CatalogSyntaxError(lineno, f"n={n} needs {n // 2} coefficients, got {len(coeffs)}")
    if any(u >= m for u in coeffs):
        raise CatalogSyntaxError(lineno, f"coefficient >= modulus {m}")
    return CatalogEntry.checked(n, m, coeffs, f"{source}:{lineno}")


def parse_catalog(text, source="file"):
    entries = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw == "" or raw.startswith("#"):
            continue
        entries.append(parse_line(raw.rstrip("\r"), lineno, source))
    return entries


def load_catalog(source):
    path = Path(source)
    return parse_catalog(path.read_text(encoding="ascii"), str(path))


def merge_catalogs(*catalogs):
    """Set union keyed on (n, m, coeffs), sorted."""
    merged = {}
    for catalog in catalogs:
        for entry in catalog:
            merged.setdefault(entry.key, entry)
    return [merged[k] for k in sorted(merged)]


def append_entries(path, entries):
    """Merge ``entries`` into the catalog at ``path`` (created if missing)."""
    path = Path(path)
    existing = load_catalog(path) if path.exists() else []
    save_catalog(merge_catalogs(existing, entries), path)


def default_catalog_path():
    value = os.environ.get(CATALOG_ENV)
    return Path(value) if value else None


# (n, m, coeffs, where the values are printed)
PUBLISHED_COEFFS = (
    (10, 7, (2, 1, 2, 5, 3), "Table 1 caption / 10-point displayed matrix"),
    (10, 5, (1, 4, 2, 4, 3), "Table 2 row 1"),
    (10, 41, (28, 20, 6, 14, 15), "Table 2 row 2 / Table 3 caption"),
    (10, 41, (1, 20, 19, 35, 8), "Table 2 row 3"),
    (10, 61, (28, 55, 49, 37, 13), "Table 2 row 4"),
    (10, 13, (2, 8, 3, 8, 4), "Table 2 row 5"),
    (10, 79, (3, 5, 10, 20, 40), "10-point text, mod 79 claim"),
    (12, 11, (1, 1, 2, 4, 8, 5), "Table 4 row 1 / Table 5 caption"),
    (12, 37, (33, 30, 23, 9, 18, 36), "Table 4 row 2"),
    (12, 43, (2, 4, 23, 16, 32, 8), "Table 4 row 3 (as printed)"),
    (12, 13, (2, 5, 10, 7, 1, 2), "Table 4 row 4"),
    (12, 67, (26, 51, 12, 6, 35, 3), "Table 4 row 5 (as printed)"),
    (12, 29, (14, 18, 28, 27, 7, 23), "Table 6 caption"),
    (12, 103, (78, 54, 5, 10, 20, 40), "12-point text, mod 103 claim (second 'e' read as f)"),
)


def builtin_catalog():
    """Every coefficient set printed in the published tables and text, freshly verified."""
    return [CatalogEntry.checked(n, m, u, src) for n, m, u, src in PUBLISHED_COEFFS]


def find_entry(entries, n, m, coeffs):
    for e in entries:
        if e.key == (n, m, tuple(coeffs)):
            return e
    raise NhtError(f"no catalog entry for n={n} m={m} coeffs={coeffs}")
