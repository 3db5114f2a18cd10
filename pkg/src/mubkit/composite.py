"""Complete MUB sets in prime-power dimension d = p**e from tensor products.

Tensor products of shift-type factors alone have degenerate spectra as soon
as e > 1, so single-operator eigenbases are not well defined.  The fix used
here augments the label set with clock-type factors: every non-identity
label (x, z) in (F_p^e)^2 names the operator with per-slot factor
V_{a_i}**x_i Z**z_i, two labeled operators commute exactly iff the
symplectic form x.z' - z.x' vanishes mod p, and a backtracking search
partitions all p**(2e) - 1 labels into p**e + 1 pairwise-commuting classes
of p**e - 1 labels (the nonzero points of a spread of maximal isotropic
subspaces).  The joint eigenbasis of each class supplies one basis; the
all-clock class, always found first under lexicographic order, supplies the
computational basis.  Correctness rests on the unbiasedness verifier, not
on the construction.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np
import scipy.linalg

from .cyclo import DEFAULT_TOL, is_prime
from .mub import MubBasis, MubSet, MubVector, spherical_basis, verify_set
from .report import VerificationReport
from .weyl import OperatorMatrix, build_v, build_z

#: Largest dimension the dense eigendecomposition path is sized for.
MAX_DIM = 128

#: Pairwise checks inside build_composite_set run at this tolerance.
COMPOSITE_TOL = 1e-9


class InconsistentClassError(RuntimeError):
    """A commuting class failed validation (non-commuting or unresolvable)."""


class ConstructionError(RuntimeError):
    """A constructed set failed verification; carries the offending pair."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class WeylLabel:
    """Exponent vectors (x, z) mod p for one tensor-product operator."""

    p: int
    e: int
    x: tuple
    z: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) % self.p for v in self.x))
        object.__setattr__(self, "z", tuple(int(v) % self.p for v in self.z))
        if len(self.x) != self.e or len(self.z) != self.e:
            raise ValueError("x and z must have length e")

    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.z)

    def symplectic_form(self, other: "WeylLabel") -> int:
        acc = sum(xs * zo - zs * xo for xs, zo, zs, xo in zip(self.x, other.z, self.z, other.x))
        return acc % self.p

    def commutes_with(self, other: "WeylLabel") -> bool:
        return self.symplectic_form(other) == 0


@dataclass(frozen=True)
class CommutingClass:
    """p**e - 1 pairwise-commuting labels; one class supplies one basis."""

    id: int
    members: tuple

    def is_diagonal(self) -> bool:
        return all(not any(lbl.x) for lbl in self.members)


# -- operators ----------------------------------------------------------------


def build_w(p: int, e: int, label: WeylLabel, a_params) -> OperatorMatrix:
    """Tensor product with per-slot factor V_{a_i}**x_i Z**z_i.

    Pure shift labels (z = 0, x = 1..1) give the plain tensor product of
    phased shifts; clock-type factors are the auxiliary content that resolves
    spectral degeneracy.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    if p**e > MAX_DIM:
        raise ValueError(f"dimension {p**e} exceeds the supported bound {MAX_DIM}")
    a_params = tuple(int(v) for v in a_params)
    if len(a_params) != e or any(not 0 <= v < p for v in a_params):
        raise ValueError(f"a_params must be length {e} with entries in 0..{p - 1}")
    out = None
    for x_i, z_i, a_i in zip(label.x, label.z, a_params):
        slot = build_v(p, a_i).power(x_i) @ build_z(p).power(z_i)
        out = slot if out is None else out.tensor(slot)
    return out


@dataclass(frozen=True)
class DegeneracyReport:
    """Eigenvalue multiset of a unitary, with multiplicities."""

    dim: int
    eigenvalues: tuple
    multiplicities: tuple
    degenerate: bool


def degeneracy_report(matrix: OperatorMatrix, tol: float = 1e-8) -> DegeneracyReport:
    """Cluster the spectrum of a unitary and flag any multiplicity > 1."""
    if not matrix.is_unitary(DEFAULT_TOL):
        raise ValueError("input matrix is not unitary")
    eigs = np.linalg.eigvals(matrix.entries)
    clusters = _cluster_phases(eigs, tol)
    values = tuple(complex(eigs[c[0]]) for c in clusters)
    mults = tuple(len(c) for c in clusters)
    return DegeneracyReport(matrix.dim, values, mults, any(m > 1 for m in mults))


def _cluster_phases(eigs: np.ndarray, tol: float) -> list[list[int]]:
    """Group indices of near-equal unit-modulus eigenvalues, sorted by angle.

    Eigenvalues sit on the unit circle, so clustering sorts by angle and
    merges across the 0/2pi seam when the extremes meet.
    """
    angles = np.mod(np.angle(eigs), 2 * np.pi)
    order = np.argsort(angles, kind="stable")
    clusters: list[list[int]] = []
    for idx in order:
        if clusters and abs(eigs[idx] - eigs[clusters[-1][-1]]) < tol:
            clusters[-1].append(int(idx))
        else:
            clusters.append([int(idx)])
    if len(clusters) > 1 and abs(eigs[clusters[0][0]] - eigs[clusters[-1][-1]]) < tol:
        clusters[0] = clusters.pop() + clusters[0]
    return clusters


# -- class partition -----------------------------------------------------------


def partition_commuting_classes(p: int, e: int) -> list[CommutingClass]:
    """Partition all non-identity labels into p**e + 1 commuting classes.

    Backtracking on the symplectic commutation graph at subspace granularity:
    each class is grown as a subgroup (closure comes free, since a pairwise
    commuting set of p**e - 1 labels spans an isotropic subspace of maximal
    size).  Candidate generators are scanned in lexicographic label order, so
    the output is deterministic and the all-clock class always comes first.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    d = p**e
    if d > MAX_DIM:
        raise ValueError(f"dimension {d} exceeds the supported bound {MAX_DIM}")

    vectors = [np.array(v, dtype=np.int64) for v in product(range(p), repeat=2 * e)]
    nonzero = [i for i, v in enumerate(vectors) if v.any()]
    index_of = {tuple(v): i for i, v in enumerate(vectors)}

    def form(i: int, j: int) -> int:
        vi, vj = vectors[i], vectors[j]
        return int(vi[:e] @ vj[e:] - vi[e:] @ vj[:e]) % p

    def subgroup(gens: list[int]) -> list[int] | None:
        """All nonzero combinations of the generators, or None on collision."""
        elems = {0}
        span = [np.zeros(2 * e, dtype=np.int64)]
        for g in gens:
            new_span = []
            for coeff in range(p):
                for base in span:
                    w = (base + coeff * vectors[g]) % p
                    new_span.append(w)
            span = new_span
        out = set()
        for w in span:
            if w.any():
                out.add(index_of[tuple(w)])
        if len(out) != p ** len(gens) - 1:
            return None  # generators were dependent
        return sorted(out)

    covered: set[int] = set()
    classes: list[list[int]] = []
    target_classes = d + 1

    def extend(gens: list[int], members: list[int]) -> bool:
        if len(members) == d - 1:
            classes.append(members)
            covered.update(members)
            if place_next():
                return True
            covered.difference_update(members)
            classes.pop()
            return False
        start = gens[-1] + 1
        for g in nonzero:
            if g < start or g in covered:
                continue
            if any(form(g, h) != 0 for h in gens):
                continue
            grown = subgroup(gens + [g])
            if grown is None or any(m in covered for m in grown):
                continue
            if extend(gens + [g], grown):
                return True
        return False

    def place_next() -> bool:
        if len(classes) == target_classes:
            return True
        seed = next((i for i in nonzero if i not in covered), None)
        if seed is None:
            return False
        return extend([seed], subgroup([seed]))

    if not place_next():
        raise RuntimeError(
            f"commuting-class search failed for p={p}, e={e}; this should be "
            "impossible for prime p and indicates a bug"
        )

    out = []
    for cid, members in enumerate(classes):
        labels = tuple(
            WeylLabel(p, e, tuple(vectors[i][:e]), tuple(vectors[i][e:])) for i in members
        )
        out.append(CommutingClass(cid, labels))
    return out


# -- joint eigenbases -----------------------------------------------------------


def joint_eigenbasis(
    cls: CommutingClass, p: int, e: int, a_params, tol: float = DEFAULT_TOL
) -> MubBasis:
    """Orthonormal simultaneous eigenbasis of every operator in the class.

    Recursive block diagonalization: Schur-diagonalize the first generator,
    then recurse into each eigenspace with the next one (lexicographic label
    order).  Each eigenvector's phase is fixed by making its first
    largest-modulus component real positive.
    """
    d = p**e
    mats = [build_w(p, e, lbl, a_params) for lbl in cls.members]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            res = np.abs(
                mats[i].entries @ mats[j].entries - mats[j].entries @ mats[i].entries
            ).max()
            if res > 1e-10:
                raise InconsistentClassError(
                    f"class {cls.id}: members {i} and {j} fail to commute "
                    f"(residual {res:.3e})"
                )

    arrays = [m.entries for m in mats]

    def resolve(block: np.ndarray, queue: list[np.ndarray]) -> list[np.ndarray]:
        if block.shape[1] == 1:
            return [block[:, 0]]
        if not queue:
            raise InconsistentClassError(
                f"class {cls.id}: eigenspace of dimension {block.shape[1]} left "
                "unresolved after all generators"
            )
        sub = block.conj().T @ queue[0] @ block
        t, u = scipy.linalg.schur(sub, output="complex")
        eigs = np.diag(t)
        vectors = []
        for cluster in _cluster_phases(eigs, 1e-6):
            vectors.extend(resolve(block @ u[:, cluster], queue[1:]))
        return vectors

    columns = resolve(np.eye(d, dtype=np.complex128), arrays)
    fixed = []
    for col in columns:
        moduli = np.abs(col)
        pivot = int(np.argmax(moduli >= moduli.max() - 1e-12))
        col = col * (col[pivot].conjugate() / moduli[pivot])
        fixed.append(col / np.linalg.norm(col))

    label = f"class:{cls.id}"
    vectors = tuple(
        MubVector(d, label, n, amps, None, scale_sqrt_dim=1) for n, amps in enumerate(fixed)
    )
    return MubBasis(d, label, vectors, class_labels=cls.members)


# -- complete sets ---------------------------------------------------------------


def build_composite_set(p: int, e: int, a_params=None, tol: float = COMPOSITE_TOL) -> MubSet:
    """p**e + 1 pairwise-unbiased bases in dimension p**e.

    The all-clock class contributes the computational basis (its joint
    eigenbasis, written exactly); every other class contributes the joint
    eigenbasis of its operators.  The whole set is verified pairwise before
    being returned; failure raises ConstructionError with the offending pair.
    """
    if a_params is None:
        a_params = (0,) * e
    classes = partition_commuting_classes(p, e)
    d = p**e
    bases = []
    for cls in classes:
        if cls.is_diagonal():
            computational = spherical_basis(d)
            vectors = tuple(
                MubVector(d, f"class:{cls.id}", v.n, v.amps, v.exact_exponents, v.scale_sqrt_dim)
                for v in computational.vectors
            )
            bases.append(MubBasis(d, f"class:{cls.id}", vectors, class_labels=cls.members))
        else:
            bases.append(joint_eigenbasis(cls, p, e, a_params))
    mub_set = MubSet(d, tuple(bases))
    report = verify_set(mub_set, tol)
    if not report.passed:
        pair = report.details["failing_pairs"][0]
        raise ConstructionError(
            f"composite construction failed unbiasedness for pair "
            f"({pair['a']}, {pair['b']}) with residual {pair['max_residual']:.3e}",
            pair=(pair["a"], pair["b"]),
        )
    return mub_set


def commutation_soundness(
    classes: list[CommutingClass], p: int, e: int, a_params, tol: float = DEFAULT_TOL
) -> VerificationReport:
    """Matrix-level commutation residuals across every class, plus form checks."""
    worst = 0.0
    form_ok = True
    for cls in classes:
        mats = [build_w(p, e, lbl, a_params).entries for lbl in cls.members]
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                worst = max(worst, float(np.abs(mats[i] @ mats[j] - mats[j] @ mats[i]).max()))
                form_ok &= cls.members[i].commutes_with(cls.members[j])
    return VerificationReport(
        kind="commutation_soundness",
        passed=worst < tol and form_ok,
        tolerance=tol,
        max_residual=worst,
        details={"p": p, "e": e, "symplectic_forms_vanish": form_ok},
    )
