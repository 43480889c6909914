"""RSK correspondence, elementary dual moves, and Knuth moves."""

from bisect import bisect_right

from .core import invert
from .tableaux import Tableau, InvalidTableauError


def rsk(word):
    """Row-bumping insertion: word -> (insertion tableau, recording tableau)."""
    p_rows = []
    q_rows = []
    for step, value in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([value])
                q_rows.append([step])
                break
            row = p_rows[r]
            idx = bisect_right(row, value)
            if idx == len(row):
                row.append(value)
                q_rows[r].append(step)
                break
            value, row[idx] = row[idx], value
            r += 1
    return Tableau(p_rows, "SYT"), Tableau(q_rows, "SYT")


def rsk_inverse(p, q):
    """The unique word with the given insertion and recording tableaux."""
    if p.shape != q.shape:
        raise InvalidTableauError("insertion and recording shapes differ")
    p_rows = [list(row) for row in p.rows]
    n = p.size
    word = []
    for step in range(n, 0, -1):
        r, c = q.position_of(step)
        value = p_rows[r].pop(c)
        for r2 in range(r - 1, -1, -1):
            row = p_rows[r2]
            idx = bisect_right(row, value) - 1
            value, row[idx] = row[idx], value
        word.append(value)
    return tuple(reversed(word))


def insertion_tableau(word):
    return rsk(word)[0]


def recording_tableau(word):
    return rsk(word)[1]


def dual_move(i, word):
    """Elementary dual equivalence: exchange among the values i-1, i, i+1.

    Identity when i sits between its neighbors; otherwise swaps i with
    whichever of i-1, i+1 makes the positional pattern flip.
    """
    n = len(word)
    if not 2 <= i <= n - 1:
        raise ValueError(f"index {i} out of range [2, {n - 1}]")
    pos = {v: idx for idx, v in enumerate(word)}
    lo, mid, hi = pos[i - 1], pos[i], pos[i + 1]
    if min(lo, hi) < mid < max(lo, hi):
        return tuple(word)
    out = list(word)
    if (mid < lo < hi) or (hi < lo < mid):
        # i-1 in the middle: swap i and i+1
        out[mid], out[hi] = i + 1, i
    else:
        # i+1 in the middle: swap i and i-1
        out[mid], out[lo] = i - 1, i
    return tuple(out)


def dual_move_tableau(i, t):
    """Dual move acting on an SYT via its row reading word."""
    return t.with_word(dual_move(i, t.row_reading_word()))


def knuth_move(i, word):
    """Knuth move: rearranges the entries in positions i-1, i, i+1."""
    n = len(word)
    if not 2 <= i <= n - 1:
        raise ValueError(f"index {i} out of range [2, {n - 1}]")
    a, b, c = word[i - 2], word[i - 1], word[i]
    x, y, z = sorted((a, b, c))
    window = (a, b, c)
    if window == (y, x, z):
        window = (y, z, x)
    elif window == (y, z, x):
        window = (y, x, z)
    elif window == (x, z, y):
        window = (z, x, y)
    elif window == (z, x, y):
        window = (x, z, y)
    return tuple(word[: i - 2]) + window + tuple(word[i + 1:])


def knuth_move_by_inverse(i, word):
    """Oracle: the Knuth move as an inverse-conjugated dual move."""
    return invert(dual_move(i, invert(word)))


def act_via_insertion(f, word):
    """Act on a word by applying f to its insertion tableau."""
    p, q = rsk(word)
    new_p = f(p)
    if new_p.shape != p.shape:
        raise InvalidTableauError("tableau map changed the shape")
    return rsk_inverse(new_p, q)
