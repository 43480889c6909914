"""Command line front end: class enumeration, expansions, verification
suites, the basis conjecture check, and DOT graph export.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import os
import sys

from .core import (
    compositions,
    conjugate,
    flip,
    partitions,
    parts_from_str,
    parts_to_str,
    reverse_word,
    standardized_yamanouchi,
    strict_partitions,
    word_from_str,
    word_to_str,
)
from .equivalence import (
    EquivClass,
    RELATIONS,
    all_classes,
    classes_for_cli,
    classes_to_dot,
    classes_to_json,
    key_of,
    moves_for,
    perm_classes,
    refines,
    srct_classes,
    syt_classes,
)
from .operators import (
    mason_rho,
    mason_rho_inverse,
    quasi_dual_move_srct,
    quasi_dual_move_srt,
    restricted_dual_move,
    shifted_dual_move,
    slink,
    slink_star,
)
from .qsym import (
    NotSymmetricError,
    QsymElement,
    class_union_qsym,
    decompose_in_fk,
    decompose_in_omega_fk,
    family_independence_report,
    quasi_schur,
    schur_expand_by_slinky,
    schur_expand_class_union,
    schur_fundamental,
)
from .rsk import knuth_move, rsk
from .tableaux import enumerate_tableaux

DEFAULT_MAX_DEGREE = 9

SUITES = ("poset", "involutions", "commutation", "mason", "shifted", "conjecture")


class UsageError(ValueError):
    pass


def max_degree():
    raw = os.environ.get("TABKIT_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"TABKIT_MAX_DEGREE must be an integer, got {raw!r}")
    if cap < 1:
        raise UsageError("TABKIT_MAX_DEGREE must be >= 1")
    return cap


def check_degree(n):
    cap = max_degree()
    if n < 1:
        raise UsageError("degree must be >= 1")
    if n > cap:
        raise UsageError(f"degree {n} exceeds the cap {cap} (TABKIT_MAX_DEGREE)")
    return n


# ---------------------------------------------------------------------------
# expansion formatting

def format_qsym(q):
    if not q.coeffs:
        return "0"
    return " + ".join(
        (f"{c}*" if c != 1 else "") + f"F({parts_to_str(alpha)})"
        for alpha, c in sorted(q.coeffs.items())
    )


def format_schur(expansion):
    if not expansion.coeffs:
        return "0"
    return " + ".join(
        (f"{c}*" if c != 1 else "") + f"s({parts_to_str(lam)})"
        for lam, c in sorted(expansion.coeffs.items())
    )


def emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# classes

def cmd_classes(args):
    relation = args.relation
    if relation not in RELATIONS:
        raise UsageError(f"unknown relation {relation!r}; choose from {RELATIONS}")
    alpha = parts_from_str(args.alpha) if args.alpha else None
    n = args.n
    if n is not None:
        check_degree(n)
    if alpha is not None:
        check_degree(sum(alpha))
        n = sum(alpha)
    try:
        classes = classes_for_cli(relation, n=args.n, alpha=alpha)
    except ValueError as exc:
        raise UsageError(str(exc))

    if args.format == "json":
        emit(json.dumps(classes_to_json(classes), indent=2) + "\n", args.out)
    elif args.format == "dot":
        emit(classes_to_dot(classes, moves_for(relation, n)), args.out)
    else:
        lines = [f"{len(classes)} classes under {relation}"]
        for cls in classes:
            members = " ".join(word_to_str(key_of(m)) for m in cls.members)
            lines.append(f"  [{len(cls.members)}] {members}")
        emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# expand

def cmd_expand(args):
    selectors = [args.shape, args.class_of, args.quasischur]
    if sum(sel is not None for sel in selectors) != 1:
        raise UsageError("expand needs exactly one of --shape, --class-of, --quasischur")

    if args.shape is not None:
        lam = parts_from_str(args.shape)
        check_degree(sum(lam))
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise UsageError(f"{lam} is not a partition")
        q = schur_fundamental(lam)
        payload = {
            "input": {"shape": list(lam)},
            "fundamental": q.to_json(),
            "symmetric": True,
            "schur": schur_expand_by_slinky(q).to_json(),
        }
        text = (
            f"s({parts_to_str(lam)}) = {format_qsym(q)}\n"
            f"terms (with multiplicity): {sum(q.coeffs.values())}\n"
        )

    elif args.class_of is not None:
        if args.relation is None:
            raise UsageError("--class-of needs --relation")
        word = word_from_str(args.class_of)
        n = len(word)
        check_degree(n)
        if sorted(word) != list(range(1, n + 1)):
            raise UsageError(f"{args.class_of!r} is not a permutation")
        if args.relation not in (
            "equiv0", "equiv1", "equiv2", "dual", "shifted", "equiv2rev", "equiv2flip",
        ):
            raise UsageError(f"--class-of works with word relations, not {args.relation}")
        classes = perm_classes(n, args.relation)
        cls = next(c for c in classes if tuple(word) in c.members)
        q = class_union_qsym([cls])
        witness = q.symmetry_witness()
        payload = {
            "input": {"word": word_to_str(word), "relation": args.relation},
            "class": {
                "size": len(cls.members),
                "members": [word_to_str(m) for m in cls.members],
            },
            "fundamental": q.to_json(),
            "symmetric": witness is None,
        }
        lines = [
            f"class of {word_to_str(word)} under {args.relation}: "
            + " ".join(word_to_str(m) for m in cls.members),
            f"F-sum = {format_qsym(q)}",
        ]
        if witness is None:
            expansion = schur_expand_class_union([cls])
            payload["schur"] = expansion.to_json()
            lines.append(f"symmetric: yes; Schur expansion = {format_schur(expansion)}")
        else:
            payload["witness"] = [list(witness[0]), list(witness[1])]
            lines.append(
                "symmetric: no; monomial coefficients differ on "
                f"({parts_to_str(witness[0])}) vs ({parts_to_str(witness[1])})"
            )
        text = "\n".join(lines) + "\n"

    else:
        alpha = parts_from_str(args.quasischur)
        n = sum(alpha)
        check_degree(n)
        q = quasi_schur(alpha)
        decomposition = decompose_in_fk(q, 2, n)
        payload = {
            "input": {"quasischur": list(alpha)},
            "fundamental": q.to_json(),
            "f2_decomposition": [
                {"class": word_to_str(key), "coeff": int(c)}
                for key, c in sorted(decomposition.items())
            ],
        }
        lines = [f"S({parts_to_str(alpha)}) = {format_qsym(q)}", "decomposition over the k=2 family:"]
        for key, c in sorted(decomposition.items()):
            lines.append(f"  {c} * f[{word_to_str(key)}]")
        text = "\n".join(lines) + "\n"

    if args.format == "json":
        emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "dot":
        raise UsageError("expand has no dot output")
    else:
        emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify suites
#
# Each suite returns a list of (check name, ok, witness) triples; suites are
# pure re-runs of the library property checks at a configurable degree.

def suite_poset(n):
    results = []
    chain = ["equiv0", "equiv1", "equiv2", "dual"]
    universe_classes = {rel: syt_classes(n, rel) for rel in chain}
    for fine, coarse in zip(chain, chain[1:]):
        ok = refines(universe_classes[fine], universe_classes[coarse])
        results.append((f"{fine} refines {coarse} on SYT({n})", ok, None))

    # quasi-dual classes on the composition image are unions of equiv2 classes
    from .equivalence import srt_image_classes

    for alpha in compositions(min(n, 6)):
        fine = srt_image_classes(alpha, "quasiDualSRT-restricted")
        coarse = srt_image_classes(alpha, "quasiDualSRT")
        ok = refines(fine, coarse)
        results.append((f"restricted refines quasi-dual on image of {alpha}", ok, None))

    # equiv2 on S_n refines shifted dual equivalence taken on reversed words
    fine = perm_classes(n, "equiv2")
    shifted_on_rev = [
        EquivClass("shifted-rev", [reverse_word(w) for w in cls.members])
        for cls in perm_classes(n, "shifted")
    ]
    results.append(
        (f"equiv2 refines reversed shifted classes on S_{n}",
         refines(fine, shifted_on_rev), None)
    )
    shifted_on_flip = [
        EquivClass("shifted-flip", [flip(w) for w in cls.members])
        for cls in perm_classes(n, "shifted")
    ]
    results.append(
        (f"equiv2 refines flipped shifted classes on S_{n}",
         refines(fine, shifted_on_flip), None)
    )
    return results


def suite_involutions(n):
    from .core import all_permutations

    results = []
    words = all_permutations(n)

    def involutive(name, fn, domain):
        for x in domain:
            if fn(fn(x)) != x:
                return (name, False, x)
        return (name, True, None)

    for i in range(2, n - 1):
        results.append(involutive(f"dR_{i} on S_{n}", lambda w, i=i: restricted_dual_move(i, w), words))
    for i in range(1, n - 2):
        results.append(involutive(f"h_{i} on S_{n}", lambda w, i=i: shifted_dual_move(i, w), words))

    tableaux = []
    for lam in partitions(n):
        tableaux.extend(enumerate_tableaux(lam, "SYT"))
    # slink_star is an involution on non-superstandard tableaux; on a
    # superstandard tableau both maps fix it
    results.append(involutive(f"slink* on SYT({n})", slink_star, tableaux))

    for alpha in compositions(min(n, 6)):
        srct = enumerate_tableaux(alpha, "SRCT")
        for i in range(2, sum(alpha)):
            name = f"DQ_{i} on SRCT({alpha})"
            results.append(involutive(name, lambda t, i=i: quasi_dual_move_srct(i, t), srct))
    return results


def suite_commutation(n):
    from .core import all_permutations

    results = []
    words = all_permutations(n)
    ops = [("slink*", _slink_star_word), ("slink", _slink_word)]
    ops += [(f"dR_{i}", lambda w, i=i: restricted_dual_move(i, w)) for i in range(2, n - 1)]
    for j in range(2, n):
        for name, op in ops:
            for w in words:
                if knuth_move(j, op(w)) != op(knuth_move(j, w)):
                    results.append((f"K_{j} commutes with {name} on S_{n}", False, w))
                    break
            else:
                results.append((f"K_{j} commutes with {name} on S_{n}", True, None))
    return results


def _slink_word(word):
    from .rsk import act_via_insertion

    return act_via_insertion(slink, word)


def _slink_star_word(word):
    from .rsk import act_via_insertion

    return act_via_insertion(slink_star, word)


def suite_mason(n):
    results = []
    for alpha in compositions(n):
        srct = enumerate_tableaux(alpha, "SRCT")
        # bijectivity with certified round trip
        images = set()
        ok = True
        witness = None
        for t in srct:
            image = mason_rho(t)
            if image in images or mason_rho_inverse(image, alpha) != t:
                ok, witness = False, t
                break
            images.add(image)
        results.append((f"column sort bijective on SRCT({alpha})", ok, witness))

        # the commuting square with the quasi-dual moves
        ok = True
        witness = None
        for t in srct:
            for i in range(2, sum(alpha)):
                if mason_rho(quasi_dual_move_srct(i, t)) != quasi_dual_move_srt(
                    i, mason_rho(t)
                ):
                    ok, witness = False, (i, t)
                    break
            if not ok:
                break
        results.append((f"column sort commutes with quasi-dual moves on SRCT({alpha})", ok, witness))

        # transitivity of the quasi-dual action
        classes = srct_classes(alpha)
        results.append(
            (f"quasi-dual action transitive on SRCT({alpha})", len(classes) == 1, None)
        )
    return results


def suite_shifted(n):
    from .core import all_permutations
    from .operators import SHIFTED_WINDOW_TABLE, _apply_window

    results = []

    # pattern table against the raw eight-case definition on S_4
    table_ok = True
    witness = None
    for w in all_permutations(4):
        expected = _apply_window(w, 1, 4, SHIFTED_WINDOW_TABLE)
        if shifted_dual_move(1, w) != expected:
            table_ok, witness = False, w
            break
    results.append(("shifted move matches its pattern table on S_4", table_ok, witness))

    # bridges: dR_i on the reverse is h_{i-1}; dR_i on the flip is h_{n-i-1}
    words = all_permutations(n)
    for i in range(2, n - 1):
        ok, witness = True, None
        for w in words:
            lhs = reverse_word(restricted_dual_move(i, reverse_word(w)))
            if lhs != w and shifted_dual_move(i - 1, w) != lhs:
                ok, witness = False, w
                break
        results.append((f"reverse bridge dR_{i} -> h_{i - 1} on S_{n}", ok, witness))
    for i in range(2, n - 1):
        ok, witness = True, None
        for w in words:
            lhs = flip(restricted_dual_move(i, flip(w)))
            if lhs != w and shifted_dual_move(n - i - 1, w) != lhs:
                ok, witness = False, w
                break
        results.append((f"flip bridge dR_{i} -> h_{n - i - 1} on S_{n}", ok, witness))

    # transitivity on shifted standard tableaux via flipped reading words
    for lam in strict_partitions(n):
        universe = [t.row_reading_word() for t in enumerate_tableaux(lam, "SST")]
        classes = all_classes(universe, moves_for("equiv2flip", n), "equiv2flip")
        results.append(
            (f"flip-conjugated moves transitive on SST({lam})", len(classes) == 1, None)
        )
    return results


def suite_conjecture(n):
    results = []
    for k in (0, 1, 2):
        report = family_independence_report(k, n)
        ok = report["rank"] == report["dimension"]
        if k == 2:
            ok = ok and report["distinct"] == report["dimension"]
        label = "independent basis" if k == 2 else "spanning"
        results.append(
            (
                f"k={k} family {label} at degree {n}: "
                f"{report['classes']} classes, {report['distinct']} distinct, "
                f"rank {report['rank']} of {report['dimension']}",
                ok,
                None if ok else report,
            )
        )
    return results


SUITE_RUNNERS = {
    "poset": suite_poset,
    "involutions": suite_involutions,
    "commutation": suite_commutation,
    "mason": suite_mason,
    "shifted": suite_shifted,
    "conjecture": suite_conjecture,
}


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {SUITES}")
    n = args.n if args.n is not None else 5
    check_degree(n)
    results = SUITE_RUNNERS[args.suite](n)
    failures = [r for r in results if not r[1]]
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "n": n,
            "passed": len(results) - len(failures),
            "failed": len(failures),
            "checks": [
                {"name": name, "ok": ok, "witness": repr(witness) if witness else None}
                for name, ok, witness in results
            ],
        }
        emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = []
        for name, ok, witness in results:
            mark = "PASS" if ok else "FAIL"
            suffix = f"  witness: {witness!r}" if witness and not ok else ""
            lines.append(f"[{mark}] {name}{suffix}")
        lines.append(
            f"suite {args.suite}: {len(results) - len(failures)} passed, {len(failures)} failed"
        )
        emit("\n".join(lines) + "\n", args.out)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing

def build_parser():
    parser = argparse.ArgumentParser(
        prog="tabkit",
        description="Tableau equivalence classes and quasisymmetric expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--jobs", type=int, default=1, help="maximum fan-out width")

    p_classes = sub.add_parser("classes", help="list equivalence classes")
    p_classes.add_argument("--n", type=int)
    p_classes.add_argument("--alpha", help="composition, comma separated")
    p_classes.add_argument("--relation", required=True)
    common(p_classes)
    p_classes.set_defaults(fn=cmd_classes)

    p_expand = sub.add_parser("expand", help="fundamental and Schur expansions")
    p_expand.add_argument("--shape", help="partition, comma separated")
    p_expand.add_argument("--class-of", dest="class_of", help="permutation word")
    p_expand.add_argument("--quasischur", help="composition, comma separated")
    p_expand.add_argument("--relation")
    p_expand.add_argument("--n", type=int)
    common(p_expand)
    p_expand.set_defaults(fn=cmd_expand)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("--suite", required=True, choices=SUITES)
    p_verify.add_argument("--n", type=int)
    common(p_verify)
    p_verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
