import pytest

from tabkit.core import all_permutations, word_from_str
from tabkit.equivalence import (
    CarrierError,
    EquivClass,
    RELATIONS,
    all_classes,
    classes_to_dot,
    classes_to_json,
    closure,
    key_of,
    moves_for,
    perm_classes,
    refines,
    srct_classes,
    srt_image_classes,
    syt_classes,
    syt_universe,
)
from tabkit.rsk import insertion_tableau
from tabkit.tableaux import enumerate_tableaux, superstandard


# class counts over all SYT of size n, frozen from the closure engine and
# re-checked here against an independent pairwise-reachability recount
FROZEN_COUNTS = {
    "equiv0": [1, 2, 4, 9, 23, 63, 190],
    "equiv1": [1, 2, 4, 9, 22, 59, 172],
    "equiv2": [1, 2, 4, 8, 17, 37, 83],
}


def test_frozen_class_counts():
    for relation, counts in FROZEN_COUNTS.items():
        for n, expected in zip(range(1, 8), counts):
            assert len(syt_classes(n, relation)) == expected


def test_classes_partition_universe():
    for relation in ("equiv0", "equiv1", "equiv2", "dual"):
        for n in range(1, 7):
            classes = syt_classes(n, relation)
            members = [key_of(m) for cls in classes for m in cls.members]
            assert sorted(members) == sorted(
                key_of(t) for t in syt_universe(n)
            )
            assert len(members) == len(set(members))


def test_refinement_chain():
    for n in range(1, 8):
        c0 = syt_classes(n, "equiv0")
        c1 = syt_classes(n, "equiv1")
        c2 = syt_classes(n, "equiv2")
        assert refines(c0, c1)
        assert refines(c1, c2)
        assert not refines(c2, c0) or len(c2) == len(c0)


def test_superstandard_classes_are_singletons():
    from tabkit.core import partitions

    for n in range(1, 8):
        for relation in ("equiv0", "equiv1"):
            classes = syt_classes(n, relation)
            for lam in partitions(n):
                u = superstandard(lam)
                owner = next(c for c in classes if u in c)
                assert len(owner) == 1


def test_duplicate_generating_functions_are_distinct_classes():
    # two singleton classes of S-different shapes sharing descent data
    classes = syt_classes(5, "equiv2")
    a = word_from_str("43125")
    b = word_from_str("43512")
    owners = [cls for cls in classes if any(key_of(m) in (a, b) for m in cls.members)]
    assert len(owners) == 2
    assert all(len(cls) == 1 for cls in owners)


def test_closure_matches_all_classes():
    moves = moves_for("equiv2", 5)
    classes = syt_classes(5, "equiv2")
    for cls in classes:
        got = closure(cls.members[0], moves)
        assert sorted(key_of(m) for m in got.members) == [
            key_of(m) for m in cls.members
        ]


def test_closure_with_universe_for_slink():
    universe = syt_universe(5)
    moves = moves_for("equiv1", 5)
    for cls in syt_classes(5, "equiv1"):
        got = closure(cls.members[0], moves, universe=universe)
        assert tuple(key_of(m) for m in got.members) == tuple(
            key_of(m) for m in cls.members
        )


def test_carrier_error():
    # dual moves do not preserve a single arbitrary shape's tableau set
    universe = enumerate_tableaux((3, 1), "SYT")
    bad = [t for t in universe if t.reading_word() != (4, 1, 2, 3)]
    with pytest.raises(CarrierError):
        all_classes(bad, moves_for("dual", 4))


def test_perm_classes_transport_consistency():
    # slink classes on words come from insertion-tableau classes; every
    # word class must project onto exactly one tableau class
    for n in range(1, 6):
        for relation in ("equiv0", "equiv1"):
            tab_keys = {}
            for cls in syt_classes(n, relation):
                for t in cls.members:
                    tab_keys[key_of(t)] = cls.key
            for cls in perm_classes(n, relation):
                images = {tab_keys[key_of(insertion_tableau(w))] for w in cls.members}
                assert len(images) == 1


def test_perm_classes_partition_sn():
    for n in range(1, 6):
        for relation in ("equiv0", "equiv1", "equiv2", "shifted"):
            classes = perm_classes(n, relation)
            members = sorted(w for cls in classes for w in cls.members)
            assert members == sorted(all_permutations(n))


def test_srct_transitive_small():
    from tabkit.core import compositions

    for n in range(1, 8):
        for alpha in compositions(n):
            if not enumerate_tableaux(alpha, "SRCT"):
                continue
            assert len(srct_classes(alpha)) == 1


def test_srt_image_restricted_not_transitive_on_222():
    # the restricted move splits the column-sorted image of shape (2,2,2)
    classes = srt_image_classes((2, 2, 2), "quasiDualSRT-restricted")
    assert len(classes) == 2
    assert len(srt_image_classes((2, 2, 2), "quasiDualSRT")) == 1


def test_relation_registry():
    for relation in RELATIONS:
        moves = moves_for(relation, 6)
        assert all(callable(move) for _name, _idx, move in moves)
    with pytest.raises(ValueError):
        moves_for("nope", 4)


def test_equivclass_api():
    cls = EquivClass("equiv2", [(2, 1, 3), (1, 2, 3)])
    assert len(cls) == 2
    assert (1, 2, 3) in cls
    assert cls.key == (1, 2, 3)
    assert list(cls) == [(1, 2, 3), (2, 1, 3)]


def test_json_and_dot_export():
    classes = syt_classes(4, "equiv2")
    data = classes_to_json(classes)
    assert sum(entry["size"] for entry in data) == len(syt_universe(4))
    dot = classes_to_dot(classes, moves_for("equiv2", 4))
    assert dot.startswith("graph")
    assert dot.rstrip().endswith("}")
