"""Cauchon diagram combinatorics on an m x n grid.

A diagram colours each cell black or white; it is valid when every black
cell has either its whole row-segment to the left black or its whole
column-segment above black.  Rows are numbered top to bottom and columns
left to right, matching matrix indexing.  Valid diagrams index the torus
invariant primes of the corresponding quantum matrix algebra, with the
number of black cells giving the height.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

SIZE_LIMIT = 20


@dataclass(frozen=True)
class CauchonDiagram:
    m: int
    n: int
    black: frozenset

    @classmethod
    def validate(cls, m, n, black):
        """Build a diagram after checking the defining condition."""
        cells = frozenset((int(r), int(c)) for r, c in black)
        if not is_valid(m, n, cells):
            raise ValueError("not a valid Cauchon diagram")
        return cls(m, n, cells)

    def black_count(self):
        return len(self.black)

    def __str__(self):
        rows = []
        for r in range(1, self.m + 1):
            rows.append("".join("#" if (r, c) in self.black else "."
                                for c in range(1, self.n + 1)))
        return "\n".join(rows)

    @classmethod
    def from_text(cls, text):
        rows = [line.strip() for line in text.strip().splitlines()]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if any(len(row) != n for row in rows):
            raise ValueError("ragged diagram text")
        cells = set()
        for r, row in enumerate(rows, start=1):
            for c, ch in enumerate(row, start=1):
                if ch == "#":
                    cells.add((r, c))
                elif ch != ".":
                    raise ValueError("diagram text uses only '.' and '#'")
        return cls.validate(m, n, cells)

    def to_cells(self):
        """JSON form: sorted list of black [row, col] pairs."""
        return [list(cell) for cell in sorted(self.black)]


def is_valid(m, n, black):
    """The defining condition: each black cell is left-filled or top-filled."""
    cells = set()
    for r, c in black:
        if not (1 <= r <= m and 1 <= c <= n):
            raise ValueError("cell (%d,%d) outside the %dx%d grid" % (r, c, m, n))
        cells.add((r, c))
    for r, c in cells:
        if all((r, cc) in cells for cc in range(1, c)):
            continue
        if all((rr, c) in cells for rr in range(1, r)):
            continue
        return False
    return True


def _check_size(m, n):
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    if m * n > SIZE_LIMIT:
        raise ValueError("grid with %d cells exceeds the enumeration limit of %d"
                         % (m * n, SIZE_LIMIT))


def _row_patterns(n, fullcols):
    """Admissible black sets for one row given the all-black-so-far columns.

    A row is a black prefix {1..p} plus any black cells in columns beyond
    p+1 whose whole column above is already black.
    """
    for p in range(n + 1):
        prefix = tuple(range(1, p + 1))
        extras = sorted(c for c in fullcols if c > p + 1)
        for k in range(len(extras) + 1):
            for chosen in combinations(extras, k):
                yield prefix + chosen


def enumerate_diagrams(m, n):
    """All valid diagrams, exactly once, by row-wise construction."""
    _check_size(m, n)

    def rec(r, fullcols, acc):
        if r > m:
            yield CauchonDiagram(m, n, frozenset(acc))
            return
        for pattern in _row_patterns(n, fullcols):
            pat = set(pattern)
            yield from rec(r + 1, fullcols & pat, acc + [(r, c) for c in pattern])

    yield from rec(1, frozenset(range(1, n + 1)), [])


def count(m, n):
    return sum(1 for _ in enumerate_diagrams(m, n))


def count_by_black(m, n):
    """Histogram keyed by number of black cells (the height distribution)."""
    hist = {}
    for d in enumerate_diagrams(m, n):
        k = d.black_count()
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))


def height_one_diagrams(m, n):
    """The single-black-cell diagrams: one box in the first row or column."""
    out = []
    for c in range(1, n + 1):
        out.append(CauchonDiagram(m, n, frozenset({(1, c)})))
    for r in range(2, m + 1):
        out.append(CauchonDiagram(m, n, frozenset({(r, 1)})))
    return out
