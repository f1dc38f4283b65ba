"""Dense square matrices of exact rationals.

Public indexing is 1-based: ``A.entry(i, j)`` is a_{i,j} with
1 <= i, j <= n.  ``A.rows`` exposes the underlying 0-based tuple grid for
code that iterates over whole rows.
"""

import re
from dataclasses import dataclass

from .arith import as_rational, parse_rational, render_rational

__all__ = [
    "Matrix",
    "MatrixWindow",
    "FormatError",
    "window",
    "parse_matrix",
    "render_matrix",
]


_TOKEN_RE = re.compile(r"\S+")
_DIM_RE = re.compile(r"[0-9]+")


class FormatError(ValueError):
    """Malformed matrix text.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class Matrix:
    """Immutable n x n matrix of rationals (n = 0 allowed)."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        grid = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(grid)
        for i, row in enumerate(grid, 1):
            if len(row) != n:
                raise ValueError(f"matrix is not square: row {i} has {len(row)} entries, expected {n}")
        self._rows = grid

    @classmethod
    def _trusted(cls, grid):
        # grid must already be a square tuple-of-tuples of Fractions
        self = cls.__new__(cls)
        self._rows = grid
        return self

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def entry(self, i, j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i}, {j}) outside a {self.n}x{self.n} matrix")
        return self._rows[i - 1][j - 1]

    def transpose(self):
        return Matrix._trusted(tuple(zip(*self._rows)) if self._rows else ())

    def scale_row(self, i, c):
        """Return a copy with row i (1-based) multiplied by c."""
        c = as_rational(c)
        grid = list(self._rows)
        grid[i - 1] = tuple(c * x for x in grid[i - 1])
        return Matrix._trusted(tuple(grid))

    def is_integral(self):
        return all(x.denominator == 1 for row in self._rows for x in row)

    def __eq__(self, other):
        if isinstance(other, (Matrix, MatrixWindow)):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(render_rational(x) for x in row) + "]" for row in self._rows)
        return f"Matrix([{body}])"


@dataclass(frozen=True)
class MatrixWindow:
    """Read-only view of the r x r block of ``matrix`` whose top-left entry is (k, l)."""

    matrix: Matrix
    k: int
    l: int
    r: int

    def __post_init__(self):
        n = self.matrix.n
        if self.r < 0 or self.k < 1 or self.l < 1 or self.k + self.r - 1 > n or self.l + self.r - 1 > n:
            raise IndexError(
                f"window at ({self.k}, {self.l}) of size {self.r} does not fit in a {n}x{n} matrix"
            )

    @property
    def n(self):
        return self.r

    def entry(self, i, j):
        if not (1 <= i <= self.r and 1 <= j <= self.r):
            raise IndexError(f"entry ({i}, {j}) outside a {self.r}x{self.r} window")
        return self.matrix.rows[self.k + i - 2][self.l + j - 2]

    @property
    def rows(self):
        k0, l0 = self.k - 1, self.l - 1
        return tuple(row[l0:l0 + self.r] for row in self.matrix.rows[k0:k0 + self.r])

    def to_matrix(self):
        return Matrix._trusted(self.rows)

    def __eq__(self, other):
        if isinstance(other, (Matrix, MatrixWindow)):
            return self.rows == other.rows
        return NotImplemented

    __hash__ = None


def window(A, k, l, r):
    """The r x r contiguous submatrix of A with upper-left corner a_{k,l}."""
    return MatrixWindow(A, k, l, r)


def parse_matrix(text):
    """Parse the text format: dimension on line 1, then n rows of n entries.

    Entries are integers or ``p/q`` rationals separated by whitespace.  The
    final newline is mandatory.
    """
    if not text.endswith("\n"):
        raise FormatError("missing trailing newline")
    lines = text[:-1].split("\n")
    head = lines[0].strip()
    if not _DIM_RE.fullmatch(head):
        raise FormatError(f"expected a nonnegative dimension, got {lines[0]!r}", line=1, column=1)
    n = int(head)
    body = lines[1:]
    if len(body) != n:
        raise FormatError(f"expected {n} rows, found {len(body)}", line=min(len(body), n) + 2)
    grid = []
    for i, line in enumerate(body, 2):
        tokens = _tokens(line)
        if len(tokens) != n:
            col = tokens[n][0] if len(tokens) > n else len(line) + 1
            raise FormatError(f"expected {n} entries, found {len(tokens)} (ragged row)", line=i, column=col)
        row = []
        for col, tok in tokens:
            try:
                row.append(parse_rational(tok))
            except (ValueError, ZeroDivisionError) as exc:
                raise FormatError(f"bad entry {tok!r}: {exc}", line=i, column=col) from None
        grid.append(tuple(row))
    return Matrix._trusted(tuple(grid))


def _tokens(line):
    return [(m.start() + 1, m.group()) for m in _TOKEN_RE.finditer(line)]


def render_matrix(M):
    lines = [str(M.n)]
    lines.extend(" ".join(render_rational(x) for x in row) for row in M.rows)
    return "\n".join(lines) + "\n"
