"""Run-permuting involutions on SYT, restricted/quasi/shifted dual moves,
and the column-sorting bijection between SRCT and SRT."""

from .core import flatten, inverse_descent_set, restrict
from .rsk import dual_move
from .tableaux import (
    InvalidTableauError,
    Tableau,
    in_single_pistol,
    restrict_to,
    run_cells,
    superstandard,
)


# ---------------------------------------------------------------------------
# slink and slink_star

def slink_context(t):
    """(j, i, mu) for the run surgery, or None when t is superstandard.

    j is the first index whose run prefix fails to be superstandard, mu the
    shape of the first j runs, and i the lowest row whose part satisfies
    mu[i+1] <= beta[j] + i - j (1-based).
    """
    beta = t.descent_composition()
    j = None
    for cand in range(1, len(beta) + 1):
        cutoff = sum(beta[:cand])
        prefix = restrict_to(t, cutoff)
        if prefix != superstandard(prefix.shape):
            j = cand
            break
    if j is None:
        return None
    mu = restrict_to(t, sum(beta[:j])).shape
    bj = beta[j - 1]
    for i in range(1, j):
        mu_next = mu[i] if i < len(mu) else 0
        if mu_next <= bj + i - j:
            return (j, i, mu)
    raise AssertionError("no admissible row index found")  # pragma: no cover


def _reading_order(cells):
    return sorted(cells, key=lambda cell: (-cell[0], cell[1]))


def _from_runs(shape, runs, flavor="SYT"):
    """Rebuild a tableau from run cell sets: run m gets the next block of
    consecutive values, increasing in reading order of its cells."""
    grid = [[0] * part for part in shape]
    value = 1
    for cells in runs:
        for r, c in _reading_order(cells):
            grid[r][c] = value
            value += 1
    return Tableau(grid, flavor)


def _permute_runs(t, donor, j, take):
    """Exchange cells between runs donor and j (1-based) below row j so the
    donor run ends up with `take` of the pooled cells.

    The donor run lies entirely below row j, so the pool is all of it plus
    the low cells of run j.  Which pooled cells land in which run is forced:
    exactly one split yields a standard tableau with the prescribed run
    sizes.
    """
    from itertools import combinations

    runs = run_cells(t)
    beta = list(t.descent_composition())
    pool = [c for c in runs[donor - 1]] + [
        c for c in runs[j - 1] if c[0] < j - 1
    ]
    kept = [c for c in runs[j - 1] if c[0] >= j - 1]
    expected = list(beta)
    expected[donor - 1] = take
    expected[j - 1] = beta[donor - 1] + beta[j - 1] - take

    # the donor run takes the earliest pooled cells in reading order that
    # still admit a standard tableau with the prescribed run sizes
    ordered = _reading_order(pool)
    for subset in combinations(ordered, take):
        new_runs = list(runs)
        new_runs[donor - 1] = list(subset)
        new_runs[j - 1] = kept + [c for c in pool if c not in subset]
        try:
            cand = _from_runs(t.shape, new_runs)
        except InvalidTableauError:
            continue
        if list(cand.descent_composition()) == expected:
            return cand
    raise AssertionError(
        f"run exchange has no completion for {t!r} "
        f"(donor={donor}, j={j}, take={take})"
    )


def slink(t):
    """Pass the lead of the offending run back to the previous run."""
    ctx = slink_context(t)
    if ctx is None:
        return t
    j, _, _ = ctx
    beta = t.descent_composition()
    return _permute_runs(t, j - 1, j, beta[j - 1] - 1)


def slink_star(t):
    """Exchange the offending run with the lowest row that can absorb it."""
    ctx = slink_context(t)
    if ctx is None:
        return t
    j, i, _ = ctx
    beta = t.descent_composition()
    return _permute_runs(t, i, j, beta[j - 1] + i - j)


# ---------------------------------------------------------------------------
# windowed pattern tables

def _build_window_table(templates, size):
    table = {}
    values = set(range(1, size + 1))
    for template in templates:
        fixed = [int(ch) if ch.isdigit() else None for ch in template]
        free = sorted(values - {v for v in fixed if v is not None})
        for x, y in ((free[0], free[1]), (free[1], free[0])):
            subst = {"x": x, "y": y}
            window = tuple(
                subst[ch] if ch in subst else int(ch) for ch in template
            )
            swapped = tuple(y if v == x else x if v == y else v for v in window)
            table[window] = swapped
    return table


# nontrivial windows of the restricted dual move, on values [i-1, i+2]
RESTRICTED_WINDOW_TEMPLATES = ("x1y4", "x14y", "x41y", "x3y4", "x34y")
RESTRICTED_WINDOW_TABLE = _build_window_table(RESTRICTED_WINDOW_TEMPLATES, 4)

# nontrivial windows of the shifted dual move, on values [i, i+3]
SHIFTED_WINDOW_TEMPLATES = (
    "1x2y", "x12y", "1x4y", "x14y", "4x1y", "x41y", "4x3y", "x43y",
)
SHIFTED_WINDOW_TABLE = _build_window_table(SHIFTED_WINDOW_TEMPLATES, 4)


def _apply_window(word, low, high, table):
    """Apply a flattened-window pattern table to the values in [low, high]."""
    window_values = sorted(restrict(word, low, high))
    if len(window_values) != high - low + 1:
        raise ValueError(f"values [{low}, {high}] not all present")
    window = flatten(word, low, high)
    new_window = table.get(window)
    if new_window is None:
        return tuple(word)
    out = list(word)
    positions = [idx for idx, v in enumerate(word) if low <= v <= high]
    for pos, v in zip(positions, new_window):
        out[pos] = window_values[v - 1]
    return tuple(out)


def restricted_dual_move(i, word):
    """Dual move gated to the identity when i+1 stays a shared inverse
    descent; acts inside the value window [i-1, i+2]."""
    n = len(word)
    if not 2 <= i <= n - 2:
        raise ValueError(f"index {i} out of range [2, {n - 2}]")
    return _apply_window(word, i - 1, i + 2, RESTRICTED_WINDOW_TABLE)


def restricted_dual_move_by_guard(i, word):
    """Oracle for restricted_dual_move via the inverse-descent guard."""
    moved = dual_move(i, word)
    if i + 1 in inverse_descent_set(word) & inverse_descent_set(moved):
        return tuple(word)
    return moved


def restricted_dual_move_tableau(i, t):
    """Restricted dual move on a tableau via its flavor's reading word."""
    word = t.reading_word()
    moved = dual_move(i, word)
    if i + 1 in inverse_descent_set(word) & inverse_descent_set(moved):
        return t
    return t.with_word(moved)


def shifted_dual_move(i, word):
    """Shifted dual move: an eight-pattern involution on the value window
    [i, i+3]; every nontrivial action is a dual move."""
    n = len(word)
    if n <= 3:
        if i != 1:
            raise ValueError(f"index {i} out of range for n={n}")
        return tuple(word)
    if not 1 <= i <= n - 3:
        raise ValueError(f"index {i} out of range [1, {n - 3}]")
    return _apply_window(word, i, i + 3, SHIFTED_WINDOW_TABLE)


def shifted_dual_move_tableau(i, t):
    """Shifted dual move on a shifted tableau via its row reading word."""
    return t.with_word(shifted_dual_move(i, t.row_reading_word()))


# ---------------------------------------------------------------------------
# cyclic move and the quasi-dual moves

def cyclic_dual_move(i, word):
    """Involution cyclically permuting the values i-1, i, i+1; identity when
    i sits between its neighbors."""
    pos = {v: idx for idx, v in enumerate(word)}
    for v in (i - 1, i, i + 1):
        if v not in pos:
            raise ValueError(f"value {v} not present")
    spots = sorted((pos[i - 1], pos[i], pos[i + 1]))
    state = tuple(word[p] for p in spots)
    a, b, c = i - 1, i, i + 1
    cycle = {
        (b, a, c): (a, c, b),
        (a, c, b): (b, a, c),
        (b, c, a): (c, a, b),
        (c, a, b): (b, c, a),
    }
    if state not in cycle:
        return tuple(word)
    out = list(word)
    for p, v in zip(spots, cycle[state]):
        out[p] = v
    return tuple(out)


def _first_column_guard(t, i):
    """True when two of the cells of i-1, i, i+1 lie in the first column and
    the third lies in the second column."""
    cols = sorted(t.position_of(v)[1] for v in (i - 1, i, i + 1))
    return cols == [0, 0, 1]


def quasi_dual_move_srct(i, t):
    """Quasi-dual move on a standard reverse composition tableau."""
    if t.flavor != "SRCT":
        raise InvalidTableauError("expected an SRCT")
    cells = [t.position_of(v) for v in (i - 1, i, i + 1)]
    if _first_column_guard(t, i):
        return t
    word = t.bent_reading_word()
    if in_single_pistol(t.shape, cells):
        return t.with_word(cyclic_dual_move(i, word))
    return t.with_word(dual_move_on_values(i, word))


def quasi_dual_move_srt(i, t):
    """Quasi-dual move on a standard reverse tableau."""
    if t.flavor != "SRT":
        raise InvalidTableauError("expected an SRT")
    if _first_column_guard(t, i):
        return t
    return t.with_word(dual_move_on_values(i, t.reverse_column_word()))


def dual_move_on_values(i, word):
    """Dual move for words over an arbitrary value set containing i-1..i+1."""
    pos = {v: idx for idx, v in enumerate(word)}
    for v in (i - 1, i, i + 1):
        if v not in pos:
            raise ValueError(f"value {v} not present")
    lo, mid, hi = pos[i - 1], pos[i], pos[i + 1]
    if min(lo, hi) < mid < max(lo, hi):
        return tuple(word)
    out = list(word)
    if (mid < lo < hi) or (hi < lo < mid):
        out[mid], out[hi] = i + 1, i
    else:
        out[mid], out[lo] = i - 1, i
    return tuple(out)


# ---------------------------------------------------------------------------
# column sorting bijection between SRCT and SRT

def _columns(t):
    width = max(len(row) for row in t.rows)
    return [
        [row[c] for row in t.rows if c < len(row)] for c in range(width)
    ]


def mason_rho(t):
    """Sort the columns of an SRCT and bottom justify, giving an SRT."""
    if t.flavor != "SRCT":
        raise InvalidTableauError("expected an SRCT")
    cols = [sorted(col, reverse=True) for col in _columns(t)]
    lam = tuple(sorted(t.shape, reverse=True))
    grid = [
        [cols[c][r] for c in range(lam[r])] for r in range(len(lam))
    ]
    return Tableau(grid, "SRT")


def mason_rho_inverse(t, alpha):
    """Rebuild the SRCT of shape alpha whose sorted columns give t.

    Raises InvalidTableauError when t lies outside the image of the
    column-sorting map on SRCT(alpha); membership is certified by the
    round trip.
    """
    if t.flavor != "SRT":
        raise InvalidTableauError("expected an SRT")
    alpha = tuple(alpha)
    if tuple(sorted(alpha, reverse=True)) != t.shape:
        raise InvalidTableauError("shape mismatch")
    cols = _columns(t)
    grid = [[0] * part for part in alpha]
    for r, v in enumerate(sorted(cols[0], reverse=True)):
        grid[r][0] = v
    for c in range(1, len(cols)):
        open_rows = [r for r in range(len(alpha)) if alpha[r] > c]
        for x in sorted(cols[c], reverse=True):
            fits = [r for r in open_rows if grid[r][c - 1] > x]
            if not fits:
                raise InvalidTableauError(
                    "tableau is not in the image of the column sort"
                )
            r = max(fits)
            grid[r][c] = x
            open_rows.remove(r)
    result = Tableau(grid, "SRCT")
    if mason_rho(result) != t:
        raise InvalidTableauError("round trip failed")
    return result
