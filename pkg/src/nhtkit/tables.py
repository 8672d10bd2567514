"""Published transform tables and their regeneration.

Each table lists eight input blocks f(n) with the printed outputs g(n).
Regeneration recomputes g = N f mod m with :func:`nhtkit.codec.apply_matrix`
(so invalid printed keys still reproduce) and classifies every printed
value as exact, unreduced (congruent but >= m) or wrong.
"""

from dataclasses import dataclass

from nhtkit.circulant import NhtMatrix
from nhtkit.codec import apply_matrix
from nhtkit.conditions import check_solution

_INPUTS_10 = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
    (0, 1, 1, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, 1, 1),
    (1, 0, 0, 1, 0, 0, 1, 1, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 1, 0, 1),
    (0, 1, 1, 0, 0, 0, 1, 1, 0, 0),
)

_INPUTS_12 = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1),
    (1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0),
    (0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 1),
    (0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0),
)


@dataclass(frozen=True)
class PublishedTable:
    number: int
    m: int
    coeffs: tuple
    inputs: tuple
    printed: tuple
    note: str = ""

    @property
    def n(self):
        return 2 * len(self.coeffs)

    @property
    def matrix(self):
        return NhtMatrix(self.n, self.m, self.coeffs)


TABLES = (
    PublishedTable(1, 7, (2, 1, 2, 5, 3), _INPUTS_10, (
        (6, 6, 6, 6, 6, 6, 6, 6, 6, 6),
        (3, 5, 5, 1, 1, 0, 0, 3, 3, 3),
        (3, 3, 5, 5, 1, 1, 0, 0, 3, 3),
        (3, 3, 3, 5, 5, 1, 1, 0, 0, 3),
        (5, 1, 1, 0, 0, 3, 3, 3, 3, 5),
        (6, 5, 4, 6, 4, 4, 0, 4, 5, 0),
        (2, 2, 2, 3, 6, 5, 8, 2, 0, 1),
        (0, 4, 5, 4, 6, 0, 4, 5, 4, 6),
    )),
    PublishedTable(3, 41, (28, 20, 6, 14, 15), _INPUTS_10, (
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
        (7, 2, 2, 29, 29, 20, 20, 26, 26, 7),
        (7, 7, 2, 2, 29, 29, 20, 20, 26, 26),
        (25, 7, 7, 2, 2, 29, 29, 20, 20, 26),
        (2, 29, 29, 20, 20, 26, 26, 7, 7, 2),
        (34, 21, 34, 34, 35, 34, 1, 35, 21, 1),
        (8, 28, 7, 15, 0, 14, 21, 6, 8, 20),
        (1, 34, 21, 35, 34, 1, 34, 21, 35, 34),
    )),
    PublishedTable(5, 11, (1, 1, 2, 4, 8, 5), _INPUTS_12, (
        (10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10),
        (2, 7, 6, 3, 2, 6, 1, 3, 6, 7, 3, 4),
        (4, 2, 7, 6, 3, 2, 6, 1, 3, 6, 7, 3),
        (3, 4, 2, 7, 6, 3, 2, 6, 1, 3, 6, 7),
        (3, 9, 6, 10, 3, 5, 7, 3, 4, 6, 7, 9),
        (5, 4, 3, 2, 6, 7, 9, 8, 9, 10, 10, 10),
        (7, 1, 4, 5, 1, 8, 1, 4, 0, 2, 5, 1),
        (5, 0, 7, 10, 9, 0, 5, 10, 7, 0, 9, 10),
    )),
    PublishedTable(6, 29, (14, 18, 28, 27, 7, 23), _INPUTS_12, (
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
        (3, 26, 8, 15, 1, 28, 5, 4, 26, 15, 17, 2),
        (2, 3, 26, 8, 15, 1, 28, 5, 4, 26, 15, 17),
        (17, 2, 3, 26, 8, 15, 1, 28, 5, 4, 26, 15),
        (15, 21, 28, 6, 4, 16, 15, 13, 2, 12, 26, 21),
        (16, 29, 13, 23, 12, 11, 21, 11, 21, 10, 6, 6),
        (17, 14, 18, 23, 9, 7, 9, 27, 24, 28, 14, 18),
        (12, 20, 22, 10, 25, 20, 12, 10, 22, 20, 25, 10),
    ), note="caption ordering a=14 b=18 c=28 d=27 e=7 f=23; the displayed "
             "matrix uses 14,28,18,27,23,7 and the text names modulus 31"),
)

# Coefficient ordering of the displayed 12-point matrix (row 0 = 0,14,0,28,...).
DISPLAYED_12_COEFFS = (14, 28, 18, 27, 23, 7)


@dataclass(frozen=True)
class Discrepancy:
    table: int
    row: int
    position: int
    printed: int
    computed: int
    modulus: int

    @property
    def kind(self):
        """``unreduced`` when the printed value is congruent but not reduced."""
        return "unreduced" if self.printed % self.modulus == self.computed else "mismatch"


@dataclass(frozen=True)
class RowResult:
    table: int
    row: int
    block: tuple
    printed: tuple
    computed: tuple
    discrepancies: tuple

    @property
    def status(self):
        if not self.discrepancies:
            return "ok"
        kinds = sorted({d.kind for d in self.discrepancies})
        return "+".join(kinds)


def reproduce(table):
    """Recompute every row of ``table``; returns a list of RowResult."""
    matrix = table.matrix
    rows = []
    for idx, (block, printed) in enumerate(zip(table.inputs, table.printed), start=1):
        computed = tuple(apply_matrix(matrix, block))
        diffs = tuple(
            Discrepancy(table.number, idx, pos, p, c, table.m)
            for pos, (p, c) in enumerate(zip(printed, computed)) if p != c
        )
        rows.append(RowResult(table.number, idx, tuple(block), tuple(printed), computed, diffs))
    return rows


def reproduce_all():
    return {t.number: reproduce(t) for t in TABLES}


def table_by_number(number):
    for t in TABLES:
        if t.number == number:
            return t
    raise KeyError(number)


def _fmt(values):
    return ",".join(str(v) for v in values)


def report_lines():
    """Tab-delimited report: one header, one line per row, then errata notes."""
    lines = ["table\trow\tmod\tf(n)\tprinted g(n)\tcomputed g(n)\tstatus"]
    notes = []
    for table in TABLES:
        verdict = check_solution(table.coeffs, table.m)
        if not verdict.passed:
            notes.append(f"# table {table.number}: key {_fmt(table.coeffs)} mod {table.m} "
                         f"is not a valid NHT key ({verdict.describe()})")
        if table.note:
            notes.append(f"# table {table.number}: {table.note}")
        for r in reproduce(table):
            lines.append(f"{table.number}\t{r.row}\t{table.m}\t{_fmt(r.block)}\t"
                         f"{_fmt(r.printed)}\t{_fmt(r.computed)}\t{r.status}")
            for d in r.discrepancies:
                notes.append(f"# table {table.number} row {r.row} g({d.position}): "
                             f"printed {d.printed}, computed {d.computed} ({d.kind})")
    return lines + notes
