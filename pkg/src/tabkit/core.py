"""Partitions, compositions, permutations, and word statistics.

Words and permutations are tuples of ints in one-line notation.
Compositions and partitions are tuples of positive ints.
"""

from itertools import permutations as _itertools_permutations


# ---------------------------------------------------------------------------
# basic shape generators


def compositions(n):
    """All compositions of n, ordered lexicographically."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return sorted(out)


def partitions(n, max_part=None):
    """All partitions of n (weakly decreasing), largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def strict_partitions(n, max_part=None):
    """All strictly decreasing partitions of n."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            out.append((first,) + rest)
    return out


def is_partition(seq):
    return all(a >= b for a, b in zip(seq, seq[1:])) and all(a >= 1 for a in seq)


def is_strict_partition(seq):
    return all(a > b for a, b in zip(seq, seq[1:])) and all(a >= 1 for a in seq)


def is_composition(seq):
    return all(a >= 1 for a in seq)


def sort_to_partition(alpha):
    """The partition obtained by sorting the parts of a composition."""
    return tuple(sorted(alpha, reverse=True))


def conjugate(lam):
    """Conjugate partition (column lengths)."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def all_permutations(n):
    """S_n in lexicographic order, as tuples."""
    return [tuple(p) for p in _itertools_permutations(range(1, n + 1))]


def invert(word):
    """Inverse of a permutation in one-line notation."""
    inv = [0] * len(word)
    for pos, val in enumerate(word):
        inv[val - 1] = pos + 1
    return tuple(inv)


# ---------------------------------------------------------------------------
# descent statistics

def inverse_descent_set(word):
    """{i : i occurs after i+1 in word}.

    Values need not be [n]; i counts when both i and i+1 are present.
    """
    pos = {val: idx for idx, val in enumerate(word)}
    return {i for i in pos if i + 1 in pos and pos[i] > pos[i + 1]}


def descent_composition(word):
    """Gap encoding of the inverse descent set, a composition of len(word)."""
    n = len(word)
    if n == 0:
        return ()
    marks = sorted(inverse_descent_set(word) | {n})
    prev = 0
    parts = []
    for m in marks:
        parts.append(m - prev)
        prev = m
    return tuple(parts)


def subset_to_composition(subset, n):
    """Composition of n whose partial sums are the given subset of [n-1]."""
    marks = sorted(set(subset) | {n})
    prev = 0
    parts = []
    for m in marks:
        parts.append(m - prev)
        prev = m
    return tuple(parts)


def composition_to_subset(alpha):
    """Partial sums of alpha, omitting the final total."""
    out = set()
    total = 0
    for part in alpha[:-1]:
        total += part
        out.add(total)
    return out


# ---------------------------------------------------------------------------
# word surgeries

def restrict(word, low, high):
    """Subword of values in [low, high], in place order."""
    return tuple(v for v in word if low <= v <= high)


def standardize(word):
    """Permutation with the same relative order; earlier copies of equal
    values are treated as smaller."""
    order = sorted(range(len(word)), key=lambda idx: (word[idx], idx))
    out = [0] * len(word)
    for rank, idx in enumerate(order):
        out[idx] = rank + 1
    return tuple(out)


def flatten(word, low, high):
    """Subword of values in [low, high], renumbered to [1, count]."""
    return standardize(restrict(word, low, high))


def reverse_word(word):
    return tuple(reversed(word))


def flip(word):
    """Reverse, then send each value i to n+1-i."""
    n = len(word)
    return tuple(n + 1 - v for v in reversed(word))


# ---------------------------------------------------------------------------
# slinky straightening of composition Schur symbols
#
# A straightened symbol is None (zero) or a (sign, partition) pair.

def slinky(alpha):
    """Straighten a composition Schur symbol to 0 or +/- a partition.

    Closed form: with v_i = alpha_i - i, the symbol is zero when v has a
    repeat; otherwise the sign is the parity of the permutation sorting v
    and the partition is sorted-descending v with i added back.
    """
    if not alpha:
        return (1, ())
    v = [a - i for i, a in enumerate(alpha, start=1)]
    if len(set(v)) < len(v):
        return None
    inversions = sum(
        1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j]
    )
    sign = -1 if inversions % 2 else 1
    lam = tuple(val + i for i, val in enumerate(sorted(v, reverse=True), start=1))
    return (sign, lam)


def slinky_by_swaps(alpha):
    """Straighten by repeated adjacent row swaps; oracle for slinky()."""
    parts = list(alpha)
    sign = 1
    while True:
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                if parts[i] + 1 == parts[i + 1]:
                    return None
                parts[i], parts[i + 1] = parts[i + 1] - 1, parts[i] + 1
                sign = -sign
                break
        else:
            return (sign, tuple(parts))


def slinky_drop_count(alpha):
    """Total number of rows the parts drop under gravity; defined only when
    the symbol is nonzero.  The sign is (-1) to this count."""
    v = [a - i for i, a in enumerate(alpha, start=1)]
    assert len(set(v)) == len(v)
    return sum(
        1 for j in range(len(v)) for i in range(j) if v[i] < v[j]
    )


# ---------------------------------------------------------------------------
# Yamanouchi words

def yamanouchi_words(lam):
    """All words of weight lam such that every suffix contains weakly more
    i's than (i+1)'s."""
    k = len(lam)
    n = sum(lam)
    words = []

    def build(remaining, counts, acc):
        # builds the word right to left; counts are of the suffix built so far
        if remaining == 0:
            words.append(tuple(acc))
            return
        for val in range(1, k + 1):
            if counts[val - 1] == lam[val - 1]:
                continue
            counts[val - 1] += 1
            if all(counts[i] >= counts[i + 1] for i in range(k - 1)):
                acc.insert(0, val)
                build(remaining - 1, counts, acc)
                acc.pop(0)
            counts[val - 1] -= 1

    build(n, [0] * k, [])
    return sorted(words)


def standardized_yamanouchi(lam):
    """Standardizations of the Yamanouchi words of weight lam."""
    return sorted(standardize(w) for w in yamanouchi_words(lam))


# ---------------------------------------------------------------------------
# serialization

def word_to_str(word):
    """Digit string for n <= 9, comma-separated otherwise."""
    if len(word) <= 9:
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def word_from_str(text):
    text = text.strip()
    if "," in text:
        return tuple(int(tok) for tok in text.split(","))
    return tuple(int(ch) for ch in text)


def parts_to_str(parts):
    return ",".join(str(p) for p in parts)


def parts_from_str(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))
