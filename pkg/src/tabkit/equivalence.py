"""Closure engine for the generated equivalence relations.

Carrier elements are either Tableau objects or words (tuples).  The
canonical key of a tableau is its reading word; of a word, itself.
Classes are always listed with members sorted by key and classes sorted
by least member.
"""

from .core import all_permutations, compositions, partitions, reverse_word, flip
from .rsk import dual_move, rsk, rsk_inverse
from .operators import (
    mason_rho,
    quasi_dual_move_srct,
    quasi_dual_move_srt,
    restricted_dual_move,
    restricted_dual_move_tableau,
    shifted_dual_move,
    slink,
    slink_star,
)
from .tableaux import Tableau, enumerate_tableaux


def key_of(element):
    if isinstance(element, Tableau):
        return element.reading_word()
    return tuple(element)


class EquivClass:
    """A move-closed, connected set of carrier elements."""

    __slots__ = ("relation", "members")

    def __init__(self, relation, members):
        self.relation = relation
        self.members = tuple(sorted(members, key=key_of))

    @property
    def key(self):
        return key_of(self.members[0])

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, element):
        return element in self.members

    def __eq__(self, other):
        return (
            isinstance(other, EquivClass)
            and self.relation == other.relation
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.relation, self.members))

    def __repr__(self):
        return f"EquivClass({self.relation!r}, {len(self.members)} members)"


# ---------------------------------------------------------------------------
# move families

def moves_for(relation, n):
    """Indexed involutions (or the slink generator) for a carrier of size n."""
    if relation == "equiv0":
        return [("slink*", 0, slink_star)]
    if relation == "equiv1":
        return [("slink", 0, slink)]
    if relation == "equiv2":
        return [
            ("dR", i, _tab_or_word(restricted_dual_move_tableau, restricted_dual_move, i))
            for i in range(2, n - 1)
        ]
    if relation == "dual":
        return [
            ("d", i, _tab_or_word(_dual_move_tableau, dual_move, i))
            for i in range(2, n)
        ]
    if relation == "quasiDualSRCT":
        return [("DQ", i, _bind(quasi_dual_move_srct, i)) for i in range(2, n)]
    if relation == "quasiDualSRT":
        return [("dQ", i, _bind(quasi_dual_move_srt, i)) for i in range(2, n)]
    if relation == "quasiDualSRT-restricted":
        return [
            ("dR", i, _bind(restricted_dual_move_tableau, i))
            for i in range(2, n - 1)
        ]
    if relation == "shifted":
        return [("h", i, _bind(shifted_dual_move, i)) for i in range(1, n - 2)]
    if relation == "equiv2rev":
        return [
            ("dR.rev", i, _conjugated(restricted_dual_move, i, reverse_word))
            for i in range(2, n - 1)
        ]
    if relation == "equiv2flip":
        return [
            ("dR.flip", i, _conjugated(restricted_dual_move, i, flip))
            for i in range(2, n - 1)
        ]
    raise ValueError(f"unknown relation {relation!r}")


RELATIONS = (
    "equiv0",
    "equiv1",
    "equiv2",
    "dual",
    "quasiDualSRCT",
    "quasiDualSRT",
    "quasiDualSRT-restricted",
    "shifted",
    "equiv2rev",
    "equiv2flip",
)


def _bind(fn, i):
    return lambda x: fn(i, x)


def _tab_or_word(tab_fn, word_fn, i):
    def move(x):
        if isinstance(x, Tableau):
            return tab_fn(i, x)
        return word_fn(i, x)

    return move


def _dual_move_tableau(i, t):
    return t.with_word(dual_move(i, t.reading_word()))


def _conjugated(word_fn, i, outer):
    return lambda w: outer(word_fn(i, outer(w)))


# ---------------------------------------------------------------------------
# closure

class CarrierError(ValueError):
    """A move produced an element outside the declared carrier."""


def closure(seed, moves, universe=None):
    """Minimal move-closed superset of {seed}.

    With involutive moves a plain breadth-first search suffices.  When a
    universe is supplied the closure is the connected component of the
    symmetrized move graph over it (needed for the non-involutive slink).
    """
    if universe is not None:
        target = key_of(seed)
        for cls in all_classes(universe, moves, relation=None):
            if any(key_of(m) == target for m in cls.members):
                return cls
        raise CarrierError("seed not found in universe")
    seen = {key_of(seed): seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for element in frontier:
            for _name, _idx, move in moves:
                image = move(element)
                k = key_of(image)
                if k not in seen:
                    seen[k] = image
                    nxt.append(image)
        frontier = nxt
    return EquivClass(None, list(seen.values()))


def all_classes(universe, moves, relation=None):
    """Partition of the universe into move-connected components."""
    elements = list(universe)
    index = {key_of(e): i for i, e in enumerate(elements)}
    parent = list(range(len(elements)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i, element in enumerate(elements):
        for _name, _idx, move in moves:
            image = move(element)
            k = key_of(image)
            if k not in index:
                raise CarrierError(
                    f"move {_name}_{_idx} left the carrier at {key_of(element)}"
                )
            union(i, index[k])

    groups = {}
    for i, element in enumerate(elements):
        groups.setdefault(find(i), []).append(element)
    classes = [EquivClass(relation, members) for members in groups.values()]
    return sorted(classes, key=lambda cls: cls.key)


def refines(fine, coarse):
    """True iff every fine class is contained in some coarse class."""
    lookup = {}
    for cls in coarse:
        for member in cls.members:
            lookup[key_of(member)] = cls.key
    for cls in fine:
        targets = {lookup.get(key_of(m)) for m in cls.members}
        if len(targets) != 1 or None in targets:
            return False
    return True


# ---------------------------------------------------------------------------
# standard carriers

def syt_universe(n):
    """All standard Young tableaux of size n, every shape."""
    out = []
    for lam in partitions(n):
        out.extend(enumerate_tableaux(lam, "SYT"))
    return out


def syt_classes(shape_or_n, relation):
    """Classes of SYT under equiv0/equiv1/equiv2/dual."""
    if isinstance(shape_or_n, int):
        universe = syt_universe(shape_or_n)
        n = shape_or_n
    else:
        universe = enumerate_tableaux(shape_or_n, "SYT")
        n = sum(shape_or_n)
    return all_classes(universe, moves_for(relation, n), relation)


def perm_classes(n, relation):
    """Classes of S_n under a word-level relation."""
    universe = all_permutations(n)
    if relation in ("equiv0", "equiv1"):
        # slink acts through the insertion tableau; transport the tableau
        # classes across every recording tableau of the same shape
        classes = []
        for lam in partitions(n):
            tab_classes = syt_classes(lam, relation)
            for q in enumerate_tableaux(lam, "SYT"):
                for cls in tab_classes:
                    classes.append(
                        EquivClass(
                            relation, [rsk_inverse(p, q) for p in cls.members]
                        )
                    )
        return sorted(classes, key=lambda cls: cls.key)
    return all_classes(universe, moves_for(relation, n), relation)


def srct_classes(alpha):
    """Classes of SRCT(alpha) under the quasi-dual move."""
    universe = enumerate_tableaux(alpha, "SRCT")
    return all_classes(universe, moves_for("quasiDualSRCT", sum(alpha)), "quasiDualSRCT")


def composition_srt_image(alpha):
    """The image of SRCT(alpha) in SRT under the column sort."""
    return sorted(
        (mason_rho(t) for t in enumerate_tableaux(alpha, "SRCT")),
        key=key_of,
    )


def srt_image_classes(alpha, relation):
    """Classes of the SRT image of SRCT(alpha) under a tableau relation."""
    universe = composition_srt_image(alpha)
    return all_classes(universe, moves_for(relation, sum(alpha)), relation)


def classes_for_cli(relation, n=None, alpha=None):
    """Carrier selection used by the command line front end."""
    if relation in ("equiv0", "equiv1", "equiv2", "dual"):
        if n is None:
            raise ValueError(f"relation {relation} needs --n")
        return syt_classes(n, relation)
    if relation in ("shifted", "equiv2rev", "equiv2flip"):
        if n is None:
            raise ValueError(f"relation {relation} needs --n")
        return perm_classes(n, relation)
    if relation == "quasiDualSRCT":
        if alpha is None:
            raise ValueError("relation quasiDualSRCT needs --alpha")
        return srct_classes(alpha)
    if relation in ("quasiDualSRT", "quasiDualSRT-restricted"):
        if alpha is None:
            raise ValueError(f"relation {relation} needs --alpha")
        return srt_image_classes(alpha, relation)
    raise ValueError(f"unknown relation {relation!r}")


# ---------------------------------------------------------------------------
# export

def classes_to_json(classes):
    from .core import word_to_str

    return [
        {
            "relation": cls.relation,
            "size": len(cls.members),
            "members": [word_to_str(key_of(m)) for m in cls.members],
        }
        for cls in classes
    ]


def classes_to_dot(classes, moves, name="classes"):
    """DOT graph: vertices labeled by reading word, edges by generator."""
    from .core import word_to_str

    lines = [f"graph {name} {{"]
    for cls in classes:
        for member in cls.members:
            lines.append(f'  "{word_to_str(key_of(member))}";')
    emitted = set()
    for cls in classes:
        for member in cls.members:
            for gen_name, idx, move in moves:
                image = move(member)
                a, b = key_of(member), key_of(image)
                if a == b:
                    continue
                edge = (min(a, b), max(a, b), gen_name, idx)
                if edge in emitted:
                    continue
                emitted.add(edge)
                lines.append(
                    f'  "{word_to_str(edge[0])}" -- "{word_to_str(edge[1])}"'
                    f' [label="{gen_name}_{idx}"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
