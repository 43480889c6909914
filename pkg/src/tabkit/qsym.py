"""Quasisymmetric functions on the fundamental basis, symmetry detection,
Schur expansions of class unions, quasisymmetric Schur functions, and the
class generating-function families with exact rank computations."""

from fractions import Fraction

from .core import (
    composition_to_subset,
    compositions,
    descent_composition,
    flip,
    partitions,
    slinky,
    sort_to_partition,
    subset_to_composition,
)
from .equivalence import all_classes, key_of, moves_for, syt_classes
from .rsk import rsk
from .tableaux import Tableau, enumerate_tableaux, superstandard


class NotSymmetricError(ValueError):
    """Raised when a symmetric expansion is requested of a non-symmetric
    function; carries a witness pair of rearranged compositions whose
    monomial coefficients differ."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not symmetric: monomial coefficients differ on {witness}")


class DecompositionError(ValueError):
    """Raised when a function lies outside the span of a family."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__("function is outside the span of the family")


class QsymElement:
    """Degree-n quasisymmetric function as integer coefficients on the
    fundamental basis, keyed by descent compositions."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        self.degree = degree
        self.coeffs = {}
        for alpha, c in (coeffs or {}).items():
            if c == 0:
                continue
            if sum(alpha) != degree:
                raise ValueError(f"{alpha} is not a composition of {degree}")
            self.coeffs[tuple(alpha)] = c

    @classmethod
    def fundamental(cls, alpha):
        return cls(sum(alpha), {tuple(alpha): 1})

    @classmethod
    def of_word(cls, word):
        return cls.fundamental(descent_composition(word))

    @classmethod
    def of_tableau(cls, t):
        return cls.fundamental(t.descent_composition())

    @classmethod
    def zero(cls, degree):
        return cls(degree)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            out[alpha] = out.get(alpha, 0) + c
        return QsymElement(self.degree, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return QsymElement(
            self.degree, {alpha: factor * c for alpha, c in self.coeffs.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, QsymElement)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        if not self.coeffs:
            return f"QsymElement({self.degree}, 0)"
        body = " + ".join(
            f"{c}*F{alpha}" for alpha, c in sorted(self.coeffs.items())
        )
        return f"QsymElement({self.degree}, {body})"

    # -- basis transitions -------------------------------------------------

    def to_monomial(self):
        """Coefficients on the monomial basis: F_a = sum of M_b over
        refinements b of a."""
        out = {}
        for alpha, c in self.coeffs.items():
            for beta in refinements(alpha):
                out[beta] = out.get(beta, 0) + c
        return {beta: c for beta, c in out.items() if c != 0}

    def symmetry_witness(self):
        """None when symmetric; else a pair of rearranged compositions with
        different monomial coefficients."""
        mono = self.to_monomial()
        by_multiset = {}
        for beta in compositions(self.degree):
            by_multiset.setdefault(sort_to_partition(beta), []).append(beta)
        for group in by_multiset.values():
            ref = mono.get(group[0], 0)
            for beta in group[1:]:
                if mono.get(beta, 0) != ref:
                    return (group[0], beta)
        return None

    def is_symmetric(self):
        return self.symmetry_witness() is None

    def omega(self):
        """Complement every descent set in [n-1]."""
        n = self.degree
        out = {}
        for alpha, c in self.coeffs.items():
            full = set(range(1, n))
            comp = subset_to_composition(full - composition_to_subset(alpha), n)
            out[comp] = out.get(comp, 0) + c
        return QsymElement(n, out)

    # -- vector form -------------------------------------------------------

    def to_vector(self):
        """Dense integer vector indexed by subsets of [n-1] as bitmasks."""
        n = self.degree
        vec = [0] * (1 << max(n - 1, 0))
        for alpha, c in self.coeffs.items():
            idx = 0
            for s in composition_to_subset(alpha):
                idx |= 1 << (s - 1)
            vec[idx] += c
        return vec

    def to_json(self):
        return {
            "degree": self.degree,
            "basis": "fundamental",
            "coeffs": [
                {"composition": list(alpha), "coeff": c}
                for alpha, c in sorted(self.coeffs.items())
            ],
        }


def refinements(alpha):
    """All compositions refining alpha (splitting parts into blocks)."""
    if not alpha:
        return [()]
    out = []
    for head in compositions(alpha[0]):
        for rest in refinements(alpha[1:]):
            out.append(head + rest)
    return out


def qsym_sum(elements, degree):
    total = QsymElement.zero(degree)
    for element in elements:
        total = total + element
    return total


class SchurExpansion:
    """Signed integer coefficients on partitions of n."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        self.degree = degree
        self.coeffs = {
            tuple(lam): c for lam, c in (coeffs or {}).items() if c != 0
        }

    def __eq__(self, other):
        return (
            isinstance(other, SchurExpansion)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"SchurExpansion({self.degree}, {self.coeffs!r})"

    def is_positive(self):
        return all(c > 0 for c in self.coeffs.values())

    def conjugate(self):
        from .core import conjugate

        return SchurExpansion(
            self.degree, {conjugate(lam): c for lam, c in self.coeffs.items()}
        )

    def to_json(self):
        return {
            "degree": self.degree,
            "basis": "schur",
            "coeffs": [
                {"partition": list(lam), "coeff": c}
                for lam, c in sorted(self.coeffs.items())
            ],
        }


# ---------------------------------------------------------------------------
# Schur expansions

def schur_fundamental(lam):
    """The Schur function of shape lam as a fundamental expansion, summed
    over standard Young tableaux."""
    n = sum(lam)
    return qsym_sum(
        (QsymElement.of_tableau(t) for t in enumerate_tableaux(lam, "SYT")), n
    )


def schur_expand_by_slinky(q):
    """Straighten every fundamental term; valid whenever q is symmetric."""
    out = {}
    for alpha, c in q.coeffs.items():
        straight = slinky(alpha)
        if straight is None:
            continue
        sign, lam = straight
        out[lam] = out.get(lam, 0) + sign * c
    return SchurExpansion(q.degree, out)


def class_union_qsym(classes):
    """Fundamental generating function of a union of classes."""
    members = [m for cls in classes for m in cls.members]
    if not members:
        raise ValueError("empty class union")
    degree = (
        members[0].size if isinstance(members[0], Tableau) else len(members[0])
    )
    return qsym_sum(
        (
            QsymElement.of_tableau(m)
            if isinstance(m, Tableau)
            else QsymElement.of_word(m)
            for m in members
        ),
        degree,
    )


def schur_expand_class_union(classes):
    """Schur expansion of a symmetric class-union generating function.

    Coefficients are counted from the distinguished members (superstandard
    tableaux, or permutations whose insertion tableau is superstandard,
    flipped for the shifted relation) and cross-checked against the
    slinky straightening of the fundamental expansion.
    """
    relations = {cls.relation for cls in classes}
    if len(relations) != 1:
        raise ValueError(f"classes under mixed relations: {relations}")
    relation = relations.pop()
    members = [m for cls in classes for m in cls.members]
    q = class_union_qsym(classes)
    witness = q.symmetry_witness()
    if witness is not None:
        raise NotSymmetricError(witness)

    counts = {}
    for m in members:
        lam = _marker_shape(m, relation)
        if lam is not None:
            counts[lam] = counts.get(lam, 0) + 1
    expansion = SchurExpansion(q.degree, counts)

    check = schur_expand_by_slinky(q)
    if check != expansion:
        raise AssertionError(
            f"marker counts {expansion!r} disagree with slinky sum {check!r}"
        )
    return expansion


def _marker_shape(member, relation):
    """The partition this member contributes a Schur coefficient to, if any."""
    if isinstance(member, Tableau):
        if member == superstandard(member.shape):
            return member.shape
        return None
    word = flip(member) if relation == "shifted" else member
    p = rsk(word)[0]
    if p == superstandard(p.shape):
        return p.shape
    return None


# ---------------------------------------------------------------------------
# quasisymmetric Schur functions

def quasi_schur(alpha):
    """Sum of fundamentals over the standard reverse composition tableaux
    of shape alpha, with descents read off the bent reading word."""
    n = sum(alpha)
    return qsym_sum(
        (QsymElement.of_tableau(t) for t in enumerate_tableaux(alpha, "SRCT")),
        n,
    )


# ---------------------------------------------------------------------------
# class generating-function families

def fk_family(k, n):
    """Generating functions of the degree-n classes of the k-th relation,
    as (class key, function) pairs sorted by least reading word."""
    relation = f"equiv{k}"
    classes = syt_classes(n, relation)
    return [(cls.key, class_union_qsym([cls])) for cls in classes]


def shifted_family(n):
    """Generating functions of the shifted classes of S_n."""
    from .equivalence import perm_classes

    classes = perm_classes(n, "shifted")
    return [(cls.key, class_union_qsym([cls])) for cls in classes]


def exact_rank(vectors):
    """Rank of integer row vectors by fraction-free (Bareiss) elimination."""
    m = [list(map(int, row)) for row in vectors]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    col = 0
    while rank < rows and col < cols:
        pivot = next((r for r in range(rank, rows) if m[r][col]), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, rows):
            for c in range(col + 1, cols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
        col += 1
    return rank


def family_independence_report(k, n):
    """Class count, distinct-function count, and exact rank for a family.

    Distinct classes can share a generating function, so independence is a
    statement about the set of distinct functions.
    """
    fam = fk_family(k, n)
    distinct = sorted({tuple(q.to_vector()) for _key, q in fam})
    rank = exact_rank(distinct)
    return {
        "degree": n,
        "k": k,
        "classes": len(fam),
        "distinct": len(distinct),
        "rank": rank,
        "dimension": 1 << max(n - 1, 0),
    }


def solve_exact(columns, target):
    """Solve sum_j x_j * columns[j] = target over the rationals.

    Returns (solution list of Fractions, unique flag); free variables are
    set to zero.  Raises DecompositionError with the residual coordinate
    when the system is inconsistent.
    """
    rows = len(target)
    ncols = len(columns)
    aug = [
        [Fraction(columns[j][r]) for j in range(ncols)] + [Fraction(target[r])]
        for r in range(rows)
    ]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, rows) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][ncols]:
            raise DecompositionError([row[ncols] for row in aug[r:]])
    solution = [Fraction(0)] * ncols
    for row_idx, c in enumerate(pivots):
        solution[c] = aug[row_idx][ncols]
    return solution, len(pivots) == ncols


def decompose_in_fk(q, k, n):
    """Express q over the k-th family as nonnegative-checkable coefficients.

    The solve runs against the (conjecturally independent) k=2 family; for
    k < 2 each coefficient is pushed down constructively onto the finer
    classes contained in the coarser one.  Returns {class key: coefficient}.
    """
    if q.degree != n:
        raise ValueError("degree mismatch")
    classes2 = syt_classes(n, "equiv2")
    columns = [class_union_qsym([cls]).to_vector() for cls in classes2]
    solution, _unique = solve_exact(columns, q.to_vector())
    if k == 2:
        return {
            cls.key: coeff
            for cls, coeff in zip(classes2, solution)
            if coeff != 0
        }
    relation = f"equiv{k}"
    out = {}
    for cls, coeff in zip(classes2, solution):
        if coeff == 0:
            continue
        fine = all_classes(cls.members, moves_for(relation, n), relation)
        for sub in fine:
            out[sub.key] = out.get(sub.key, 0) + coeff
    return out


def decompose_in_omega_fk(q, k, n):
    """Express q over the omega images of the k-th family."""
    return decompose_in_fk(q.omega(), k, n)
