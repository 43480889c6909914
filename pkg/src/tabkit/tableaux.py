"""Tableau families: SYT, SRT, SRCT, and shifted SST.

Rows are stored bottom-to-top in French notation: rows[0] is the bottom
row.  Cells are addressed (row, col), 0-based; for shifted tableaux row r
is indented r cells, so the absolute column of (r, c) is r + c.
"""

from .core import inverse_descent_set, descent_composition

FLAVORS = ("SYT", "SRT", "SRCT", "SST")


class InvalidTableauError(ValueError):
    pass


class Tableau:
    """An immutable filling of a diagram with distinct positive integers."""

    __slots__ = ("rows", "flavor", "_hash")

    def __init__(self, rows, flavor, check=True):
        if flavor not in FLAVORS:
            raise InvalidTableauError(f"unknown flavor {flavor!r}")
        self.rows = tuple(tuple(row) for row in rows)
        self.flavor = flavor
        self._hash = None
        if check:
            problem = self._validate()
            if problem:
                raise InvalidTableauError(problem)

    # -- basic structure ---------------------------------------------------

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    @property
    def size(self):
        return sum(len(row) for row in self.rows)

    def offset(self, r):
        return r if self.flavor == "SST" else 0

    def entry(self, r, c):
        return self.rows[r][c]

    def values(self):
        return [v for row in self.rows for v in row]

    def position_of(self, value):
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if v == value:
                    return (r, c)
        raise KeyError(value)

    def column_of(self, value):
        r, c = self.position_of(value)
        return self.offset(r) + c

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.flavor == other.flavor
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.flavor, self.rows))
        return self._hash

    def __repr__(self):
        return f"Tableau({self.rows!r}, {self.flavor!r})"

    # -- validation --------------------------------------------------------

    def _validate(self):
        vals = self.values()
        if len(set(vals)) != len(vals):
            return "repeated value"
        if any(len(row) == 0 for row in self.rows):
            return "empty row"
        check = {
            "SYT": self._check_syt,
            "SRT": self._check_srt,
            "SRCT": self._check_srct,
            "SST": self._check_sst,
        }[self.flavor]
        return check()

    def _check_syt(self):
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            return "shape is not a partition"
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return "row not increasing"
        for r in range(len(self.rows) - 1):
            for c, v in enumerate(self.rows[r + 1]):
                if v <= self.rows[r][c]:
                    return "column not increasing"
        return None

    def _check_srt(self):
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            return "shape is not a partition"
        for row in self.rows:
            if any(a <= b for a, b in zip(row, row[1:])):
                return "row not decreasing"
        for r in range(len(self.rows) - 1):
            for c, v in enumerate(self.rows[r + 1]):
                if v >= self.rows[r][c]:
                    return "column not decreasing upward"
        return None

    def _check_srct(self):
        for row in self.rows:
            if any(a <= b for a, b in zip(row, row[1:])):
                return "row not decreasing"
        col0 = [row[0] for row in self.rows]
        if any(a <= b for a, b in zip(col0, col0[1:])):
            return "first column not increasing downward"
        # triple rule: for a at (r, c) with right neighbor b (0 if absent),
        # no value in (b, a) may sit below b's cell in its column
        for r, row in enumerate(self.rows):
            for c, a in enumerate(row):
                b = row[c + 1] if c + 1 < len(row) else 0
                for r2 in range(r):
                    if c + 1 < len(self.rows[r2]):
                        v = self.rows[r2][c + 1]
                        if b < v < a:
                            return "triple rule violated"
        return None

    def _check_sst(self):
        shape = self.shape
        if any(a <= b for a, b in zip(shape, shape[1:])):
            return "shape is not a strict partition"
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return "row not increasing"
        for r in range(len(self.rows) - 1):
            # cell above (r, c) sits at absolute column r + c
            for c2, v in enumerate(self.rows[r + 1]):
                below = self.rows[r][c2 + 1]
                if v <= below:
                    return "column not increasing"
        return None

    # -- reading words -----------------------------------------------------

    def reading_cells(self):
        """Cell order of the flavor's reading word."""
        if self.flavor in ("SYT", "SST"):
            return self._row_cells()
        if self.flavor == "SRT":
            return self._column_cells()
        return self._bent_cells()

    def _row_cells(self):
        cells = []
        for r in range(len(self.rows) - 1, -1, -1):
            for c in range(len(self.rows[r])):
                cells.append((r, c))
        return cells

    def _column_cells(self):
        # up each column, columns right to left
        width = max(len(row) for row in self.rows)
        cells = []
        for c in range(width - 1, -1, -1):
            for r in range(len(self.rows)):
                if c < len(self.rows[r]):
                    cells.append((r, c))
        return cells

    def _bent_cells(self):
        # down each column right to left, then up the leftmost column
        width = max(len(row) for row in self.rows)
        cells = []
        for c in range(width - 1, 0, -1):
            for r in range(len(self.rows) - 1, -1, -1):
                if c < len(self.rows[r]):
                    cells.append((r, c))
        for r in range(len(self.rows)):
            cells.append((r, 0))
        return cells

    def reading_word(self):
        return tuple(self.rows[r][c] for r, c in self.reading_cells())

    def row_reading_word(self):
        return tuple(self.rows[r][c] for r, c in self._row_cells())

    def reverse_column_word(self):
        assert self.flavor == "SRT"
        return self.reading_word()

    def bent_reading_word(self):
        assert self.flavor == "SRCT"
        return self.reading_word()

    def with_word(self, word):
        """Refill the same cells, in reading order, with a new word."""
        cells = self.reading_cells()
        if len(word) != len(cells):
            raise InvalidTableauError("word length does not match shape")
        grid = [[0] * len(row) for row in self.rows]
        for (r, c), v in zip(cells, word):
            grid[r][c] = v
        return Tableau(grid, self.flavor)

    # -- descent statistics ------------------------------------------------

    def inverse_descent_set(self):
        return inverse_descent_set(self.reading_word())

    def descent_composition(self):
        return descent_composition(self.reading_word())

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "flavor": self.flavor,
            "shape": list(self.shape),
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["rows"], data["flavor"])

    def render(self):
        """French layout, top row first."""
        width = max(len(str(v)) for v in self.values())
        lines = []
        for r in range(len(self.rows) - 1, -1, -1):
            pad = "." * width + " "
            cells = " ".join(str(v).rjust(width) for v in self.rows[r])
            lines.append(pad * self.offset(r) + cells)
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# construction helpers

def superstandard(lam):
    """Rows filled 1..n in order, bottom row first."""
    rows = []
    nxt = 1
    for part in lam:
        rows.append(tuple(range(nxt, nxt + part)))
        nxt += part
    return Tableau(rows, "SYT")


def syt_from_word(word, shape):
    """Build an SYT of the given shape from its row reading word."""
    rows = []
    pos = 0
    for part in reversed(shape):
        rows.insert(0, tuple(word[pos:pos + part]))
        pos += part
    if pos != len(word):
        raise InvalidTableauError("word length does not match shape")
    return Tableau(rows, "SYT")


# ---------------------------------------------------------------------------
# run decomposition

def run_cells(t):
    """Cells of each run, in order of increasing value."""
    word = t.row_reading_word()
    n = len(word)
    marks = sorted(inverse_descent_set(word) | {n})
    runs = []
    low = 0
    for high in marks:
        cells = [t.position_of(v) for v in range(low + 1, high + 1)]
        runs.append(cells)
        low = high
    return runs


def restrict_to(t, cutoff):
    """Restriction of an SYT to values <= cutoff."""
    rows = []
    for row in t.rows:
        kept = tuple(v for v in row if v <= cutoff)
        if kept:
            rows.append(kept)
    return Tableau(rows, "SYT")


def first_j_runs(t, j):
    """The SYT formed by the first j runs of t."""
    word = t.row_reading_word()
    marks = sorted(inverse_descent_set(word) | {len(word)})
    if not 1 <= j <= len(marks):
        raise ValueError(f"tableau has {len(marks)} runs, not {j}")
    return restrict_to(t, marks[j - 1])


def uyt_rows(t):
    """Row rendering with each cell labeled by its run index (1-based)."""
    runs = run_cells(t)
    label = {}
    for idx, cells in enumerate(runs, start=1):
        for cell in cells:
            label[cell] = idx
    return tuple(
        tuple(label[(r, c)] for c in range(len(row)))
        for r, row in enumerate(t.rows)
    )


# ---------------------------------------------------------------------------
# pistols

def pistol(shape, cell):
    """Cells weakly below `cell` in its column plus cells weakly above it in
    the column to its left.  `shape` lists row lengths bottom to top."""
    r, c = cell
    if not (0 <= r < len(shape) and 0 <= c < shape[r]):
        raise ValueError(f"cell {cell} not in shape {shape}")
    cells = set()
    for r2 in range(r + 1):
        if c < shape[r2]:
            cells.add((r2, c))
    if c >= 1:
        for r2 in range(r, len(shape)):
            if c - 1 < shape[r2]:
                cells.add((r2, c - 1))
    return cells


def in_single_pistol(shape, cells):
    """True when some pistol of the diagram contains every given cell."""
    cells = set(cells)
    for r in range(len(shape)):
        for c in range(shape[r]):
            if cells <= pistol(shape, (r, c)):
                return True
    return False


# ---------------------------------------------------------------------------
# enumeration

def enumerate_tableaux(shape, flavor):
    """All standard fillings of the shape with the flavor's constraints,
    ordered by reading word."""
    shape = tuple(shape)
    if flavor == "SYT":
        out = _enumerate_increasing(shape, shifted=False)
    elif flavor == "SST":
        if not all(a > b for a, b in zip(shape, shape[1:])):
            raise InvalidTableauError(f"{shape} is not a strict partition")
        out = _enumerate_increasing(shape, shifted=True)
    elif flavor == "SRT":
        n = sum(shape)
        out = [
            Tableau([[n + 1 - v for v in row] for row in t.rows], "SRT")
            for t in _enumerate_increasing(shape, shifted=False)
        ]
    elif flavor == "SRCT":
        out = _enumerate_srct(shape)
    else:
        raise InvalidTableauError(f"unknown flavor {flavor!r}")
    return sorted(out, key=lambda t: t.reading_word())


def _enumerate_increasing(shape, shifted):
    """Backtracking fill with 1..n; rows and columns increase."""
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise InvalidTableauError(f"{shape} is not a partition")
    n = sum(shape)
    if n == 0:
        return []
    grid = [[0] * part for part in shape]
    filled = [0] * len(shape)  # cells filled so far in each row
    out = []

    def supported(r, c):
        if c > 0 and grid[r][c - 1] == 0:
            return False
        if r > 0:
            below_c = c + 1 if shifted else c
            if below_c < len(grid[r - 1]) and grid[r - 1][below_c] == 0:
                return False
            # partition shapes always have the below cell; shifted shapes may
            # hang over on the right, where no support is needed
            if not shifted and below_c >= len(grid[r - 1]):
                return False
        return True

    def place(v):
        if v > n:
            out.append(Tableau([tuple(row) for row in grid], "SST" if shifted else "SYT"))
            return
        for r in range(len(shape)):
            c = filled[r]
            if c >= shape[r] or not supported(r, c):
                continue
            grid[r][c] = v
            filled[r] += 1
            place(v + 1)
            filled[r] -= 1
            grid[r][c] = 0

    place(1)
    return out


def _enumerate_srct(shape):
    """Backtracking fill of a composition shape: each row is filled right to
    left and the first column top to bottom, so rows decrease and the first
    column increases downward; the triple rule is checked on completion."""
    if not all(part >= 1 for part in shape):
        raise InvalidTableauError(f"{shape} is not a composition")
    n = sum(shape)
    if n == 0:
        return []
    k = len(shape)
    grid = [[0] * part for part in shape]
    filled = [0] * k  # cells filled so far in row, from the right
    out = []

    def place(v):
        if v > n:
            cand = Tableau([tuple(row) for row in grid], "SRCT", check=False)
            if cand._validate() is None:
                out.append(Tableau(cand.rows, "SRCT"))
            return
        for r in range(k):
            if filled[r] >= shape[r]:
                continue
            c = shape[r] - 1 - filled[r]
            if c == 0 and r + 1 < k and filled[r + 1] < shape[r + 1]:
                # first column must grow top to bottom
                continue
            grid[r][c] = v
            filled[r] += 1
            place(v + 1)
            filled[r] -= 1
            grid[r][c] = 0

    place(1)
    return out


def brute_force_tableaux(shape, flavor):
    """Filter every assignment of [n] to the cells; oracle for enumerate."""
    from itertools import permutations

    shape = tuple(shape)
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        grid = []
        pos = 0
        for part in shape:
            grid.append(perm[pos:pos + part])
            pos += part
        cand = Tableau(grid, flavor, check=False)
        if cand._validate() is None:
            out.append(Tableau(cand.rows, flavor))
    return sorted(out, key=lambda t: t.reading_word())
