"""Geometric entanglement through alternating closest-product iteration.

The geometric measure of a pure state is E_g = -log2 |<Phi|psi>|^2
maximized over product states Phi = phi_1 x phi_2 x phi_3 x phi_4.  The
maximizer is found by alternating sweeps: holding three single-qubit
states fixed, the optimal fourth is the conjugated, normalized
environment (the contraction of the state against the other three), and
cycling through the qubits makes the overlap non-decreasing.  Random
restarts guard against local maxima; their merge is deterministic for a
fixed seed.

The module also carries the closed-form overlap values known for many
classes, the one-parameter fixed-point iteration for the symmetric
three-qubit witness, an independent grid maximizer over real product
states, and the analysis of a converged witness (which qubits share a
state, and whether the witness can be made real).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import hypercore as hc
from . import statevec as sv

DEFAULT_RESTARTS = 64
DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 5000
DEFAULT_SEED = 0

# overlaps this close to the best are treated as hitting the best
HIT_WINDOW = 1e-9
# single-qubit states this close in fidelity count as the same state
MERGE_TOL = 1e-6
# largest tolerated imaginary part when gauging a witness real
REAL_TOL = 1e-6

_ENV_SPECS = (
    "abcd,rb,rc,rd->ra",
    "abcd,ra,rc,rd->rb",
    "abcd,ra,rb,rd->rc",
    "abcd,ra,rb,rc->rd",
)


class IterationDiverged(RuntimeError):
    """The one-parameter iteration ran into its pole; restart upstream."""


@dataclass(frozen=True)
class SolvePolicy:
    """Knobs of the randomized closest-product solve."""

    restarts: int = DEFAULT_RESTARTS
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class ProductState:
    """Four unit-norm single-qubit amplitude pairs (x_i, y_i)."""

    qubits: np.ndarray  # complex, shape (4, 2)

    def __post_init__(self):
        q = np.asarray(self.qubits, dtype=complex)
        if q.shape != (hc.N_VERTICES, 2):
            raise ValueError(f"product state needs shape (4, 2), got {q.shape}")
        norms = np.linalg.norm(q, axis=1)
        if np.max(np.abs(norms - 1.0)) > 1e-12:
            raise ValueError("single-qubit states must be unit norm")
        object.__setattr__(self, "qubits", q)


@dataclass(frozen=True)
class GeSolution:
    """Outcome of one randomized closest-product solve.

    ``candidates`` holds the witnesses of every restart whose overlap came
    within 1e-9 of the best (restart order preserved); ``tensor`` is the
    solved state reshaped to one axis per qubit, kept so the witness can be
    re-analyzed without the original state.
    """

    overlap: float
    eg: float
    witness: ProductState
    restarts_hit: int
    converged: bool
    candidates: np.ndarray = field(repr=False)  # complex, shape (k, 4, 2)
    tensor: np.ndarray = field(repr=False)      # complex, shape (2, 2, 2, 2)
    monotone_slack: float = 0.0


@dataclass(frozen=True)
class DegeneracyPattern:
    """Grouping of a witness's single-qubit states, plus its reality flag.

    ``label`` is one of "4", "1,3", "2,2", "1,2,1", "1,1,1,1" (sizes of the
    groups of coinciding states).  ``reality`` is "R" when some witness at
    the best overlap can be gauged entrywise real, else "C".  ``census``
    lists (label, count) over all best-overlap candidates, coarsest first,
    for reporting competing groupings.
    """

    label: str
    reality: str
    census: tuple[tuple[str, int], ...] = ()


def state_tensor(s) -> np.ndarray:
    """Reshape 16 amplitudes into T[mu1, mu2, mu3, mu4]."""
    s = np.asarray(s)
    if s.shape != (hc.N_BASIS,):
        raise ValueError(f"state must have 16 amplitudes, got shape {s.shape}")
    # C-order reshape puts qubit 4 first; reverse axes so qubit 1 is first
    return s.reshape((2,) * hc.N_VERTICES).transpose(3, 2, 1, 0).astype(complex)


def _random_product_batch(rng, restarts: int) -> np.ndarray:
    phi = rng.normal(size=(restarts, hc.N_VERTICES, 2)) + 1j * rng.normal(
        size=(restarts, hc.N_VERTICES, 2)
    )
    return phi / np.linalg.norm(phi, axis=2, keepdims=True)


def _sweep(tensor: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """One full alternating sweep over the four qubits, in place.

    Returns the overlap estimates |f| after the sweep (exact for each
    restart because the last-updated qubit is the normalized environment).
    """
    for i in range(hc.N_VERTICES):
        others = [phi[:, j] for j in range(hc.N_VERTICES) if j != i]
        env = np.einsum(_ENV_SPECS[i], tensor, *others)
        norm = np.linalg.norm(env, axis=1)
        safe = norm > 1e-300
        phi[:, i] = np.where(safe[:, None], env.conj() / np.where(safe, norm, 1.0)[:, None], phi[:, i])
    return norm


def _contract(tensor: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Overlap <Phi|psi> for a batch of product states."""
    return np.einsum("abcd,ra,rb,rc,rd->r", tensor, phi[:, 0], phi[:, 1], phi[:, 2], phi[:, 3])


def closest_product(
    s,
    restarts: int = DEFAULT_RESTARTS,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed=DEFAULT_SEED,
) -> GeSolution:
    """Best product-state overlap of a 16-amplitude state, with restarts.

    All restarts run in one batched iteration.  A restart is converged when
    a full sweep improves its overlap by less than ``tol``; the solve stops
    when every restart is converged or after ``max_iter`` sweeps (then the
    solution is flagged unconverged rather than raising).  The reported
    witness is the lowest-indexed restart achieving the best overlap, which
    makes the merge deterministic for a fixed seed.
    """
    policy = SolvePolicy(restarts=restarts, tol=tol, max_iter=max_iter)
    tensor = state_tensor(s)
    rng = np.random.default_rng(seed)
    phi = _random_product_batch(rng, policy.restarts)
    overlap = np.zeros(policy.restarts)
    slack = 0.0
    converged = False
    for sweep in range(policy.max_iter):
        new = _sweep(tensor, phi)
        if sweep:
            slack = max(slack, float(np.max(overlap - new)))
        done = new - overlap < policy.tol
        overlap = new
        if sweep and bool(done.all()):
            converged = True
            break
    overlap = np.abs(_contract(tensor, phi))
    best = int(np.argmax(overlap))
    # Rounding can push the overlap of a unit product pair a hair above 1;
    # clamp so product states report E_g = 0 rather than -1e-16.
    best_overlap = min(float(overlap[best]), 1.0)
    hit = overlap >= best_overlap - HIT_WINDOW
    return GeSolution(
        overlap=best_overlap,
        eg=-2.0 * math.log2(best_overlap) + 0.0,
        witness=ProductState(phi[best]),
        restarts_hit=int(hit.sum()),
        converged=converged,
        candidates=phi[hit].copy(),
        tensor=tensor,
        monotone_slack=slack,
    )


def solve_code(h: int, policy: SolvePolicy | None = None) -> GeSolution:
    """Closest-product solve for a hypergraph code.

    The restart stream is seeded from both the policy seed and the code, so
    per-class results are reproducible independent of evaluation order.
    """
    policy = policy or SolvePolicy()
    return closest_product(
        sv.build_state(h),
        restarts=policy.restarts,
        tol=policy.tol,
        max_iter=policy.max_iter,
        seed=[policy.seed, h],
    )


def geometric_entanglement(h: int, policy: SolvePolicy | None = None) -> float:
    """E_g of the state named by a code, in bits, under the default policy."""
    return solve_code(h, policy).eg


def refine_witness(sol: GeSolution, sweeps: int = 1) -> float:
    """Overlap after re-applying full sweeps to the solution's witness.

    Converged solutions should move by less than ten times the solve
    tolerance; exposed for that consistency check.
    """
    phi = sol.witness.qubits[None].copy()
    for _ in range(sweeps):
        _sweep(sol.tensor, phi)
    return float(np.abs(_contract(sol.tensor, phi))[0])


# ---------------------------------------------------------------------------
# witness analysis


def _partition_sizes(phi, merge_tol: float = MERGE_TOL) -> tuple[int, ...]:
    """Group sizes (descending) of coinciding single-qubit states."""
    parent = list(range(hc.N_VERTICES))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i in range(hc.N_VERTICES):
        for j in range(i + 1, hc.N_VERTICES):
            if abs(np.vdot(phi[i], phi[j])) > 1.0 - merge_tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    sizes = {}
    for q in range(hc.N_VERTICES):
        r = find(q)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


_PARTITION_LABELS = {
    (4,): "4",
    (3, 1): "1,3",
    (2, 2): "2,2",
    (2, 1, 1): "1,2,1",
    (1, 1, 1, 1): "1,1,1,1",
}


def _gauge_real(phi, atol: float = REAL_TOL):
    """Per-qubit phase gauge making the witness real, or None.

    Each qubit's pair is divided by the phase of x (of y when |x| is
    tiny); the witness counts as real when every residual imaginary part
    stays below ``atol``.
    """
    out = np.empty((hc.N_VERTICES, 2))
    for q in range(hc.N_VERTICES):
        x, y = phi[q]
        ref = x if abs(x) > 1e-8 else y
        v = phi[q] * (ref.conjugate() / abs(ref))
        if np.max(np.abs(v.imag)) > atol:
            return None
        out[q] = v.real
    return out / np.linalg.norm(out, axis=1, keepdims=True)


def _project_real(phi) -> np.ndarray:
    """Force a witness real: gauge each qubit on its larger component, drop
    the residual imaginary part, renormalize."""
    out = np.empty((hc.N_VERTICES, 2))
    for q in range(hc.N_VERTICES):
        x, y = phi[q]
        ref = x if abs(x) >= abs(y) else y
        v = (phi[q] * (ref.conjugate() / abs(ref))).real
        norm = np.linalg.norm(v)
        out[q] = v / norm if norm > 1e-8 else (1.0, 0.0)
    return out


def _best_real_overlap(sol: GeSolution, extra_starts: int = 32) -> float:
    """Best overlap reachable by all-real witnesses near the solution.

    Polishes the real projections of every best-overlap candidate plus a
    fixed batch of random real starts with real-arithmetic sweeps; used to
    decide whether a real witness attains the complex optimum.
    """
    tensor = sol.tensor.real
    starts = [_project_real(c) for c in sol.candidates]
    rng = np.random.default_rng(0x5EED)
    extra = rng.normal(size=(extra_starts, hc.N_VERTICES, 2))
    starts.extend(extra / np.linalg.norm(extra, axis=2, keepdims=True))
    phi = np.stack(starts)
    overlap = np.zeros(len(phi))
    for _ in range(500):
        new = _sweep(tensor, phi)
        done = new - overlap < 1e-13
        overlap = new
        if bool(done.all()):
            break
    return float(np.max(np.abs(_contract(tensor.astype(complex), phi.astype(complex)))))


def degeneracy_pattern(sol: GeSolution) -> DegeneracyPattern:
    """Grouping and reality of the closest product state.

    The label follows the declared tie-break: among all restarts within
    1e-9 of the best overlap, the coarsest grouping (fewest distinct
    single-qubit states) wins, earlier restarts breaking ties.  Reality is
    "R" when some best candidate gauges real outright, or when real-only
    polishing of the candidates reaches the same overlap; degenerate
    maximizer families often park every random restart at a complex point
    even though a real witness with the identical overlap exists.
    """
    partitions = [_partition_sizes(c) for c in sol.candidates]
    counts: dict[tuple[int, ...], int] = {}
    for p in partitions:
        counts[p] = counts.get(p, 0) + 1
    coarsest = min(partitions, key=len)
    census = tuple(
        (_PARTITION_LABELS[p], n)
        for p, n in sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0]))
    )
    if any(_gauge_real(c) is not None for c in sol.candidates):
        reality = "R"
    else:
        reality = "R" if _best_real_overlap(sol) >= sol.overlap - HIT_WINDOW else "C"
    return DegeneracyPattern(
        label=_PARTITION_LABELS[coarsest], reality=reality, census=census
    )


# ---------------------------------------------------------------------------
# symmetric one-parameter iteration and closed forms


def symmetric_z_iteration(z0: complex, tol: float = 1e-12, max_steps: int = 10**4) -> complex:
    """Iterate z -> (1 + 2z - z^2) / (1 + z)^2 from z0 until steps settle.

    Stops once consecutive iterates differ by less than ``tol`` (or after
    ``max_steps``).  A pole sits at z = -1 and the pair {-1, infinity} is
    an attracting 2-cycle for nearby starts, so iterates approaching -1
    raise :class:`IterationDiverged`; the caller restarts from a new z0.
    """
    z = complex(z0)
    if z == -1:
        raise ValueError("z0 = -1 is the pole of the iteration")
    for _ in range(max_steps):
        if abs(z + 1.0) < 1e-8:
            raise IterationDiverged(f"iterate reached the pole region near z=-1 (z={z})")
        nxt = (1.0 + 2.0 * z - z * z) / ((1.0 + z) * (1.0 + z))
        if abs(nxt - z) < tol:
            return nxt
        z = nxt
    return z


def stable_symmetric_z(seed: int = 0, tol: float = 1e-12, max_tries: int = 64) -> complex:
    """Run the symmetric iteration from random complex starts in |z| <= 2,
    redrawing whenever a start falls into the pole's basin."""
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        radius = 2.0 * math.sqrt(rng.uniform())
        angle = rng.uniform(0.0, 2.0 * math.pi)
        try:
            return symmetric_z_iteration(radius * complex(math.cos(angle), math.sin(angle)), tol)
        except IterationDiverged:
            continue
    raise IterationDiverged(f"no convergent start found in {max_tries} draws")


def symmetric_cubic_residual(z: complex) -> complex:
    """Residual of the fixed-point cubic z^3 + 3z^2 - z - 1 = 0."""
    return z * z * z + 3.0 * z * z - z - 1.0


def symmetric_z_closed_form() -> float:
    """The unique attracting root of the cubic, in closed form."""
    tau = math.atan(math.sqrt(37.0 / 27.0)) / 3.0
    return -1.0 - (4.0 * math.sqrt(3.0) / 3.0) * math.cos(tau + 2.0 * math.pi / 3.0)


def triangle_eg_closed_form() -> float:
    """E_g of the three-qubit triangle state, from the closed-form z.

    The symmetric witness is (x, y) with y/x = z; its overlap with the
    triangle state is ((x+y)^3 - 2 y^3) / sqrt(8).
    """
    z = symmetric_z_closed_form()
    x = 1.0 / math.sqrt(1.0 + z * z)
    y = z * x
    f = ((x + y) ** 3 - 2.0 * y**3) / math.sqrt(8.0)
    return -2.0 * math.log2(abs(f))


def closed_form_values() -> dict[int, float]:
    """Exact E_g values by class number, for every class with a printed
    closed form; class 12 carries the triangle value."""
    log2 = math.log2
    sqrt = math.sqrt
    return {
        5: 3.0 + 2.0 * log2(3.0 / 5.0),
        11: 5.0 - log2(9.0 + 3.0 * sqrt(3.0)),
        12: triangle_eg_closed_form(),
        14: 1.0,
        15: 3.0 + 2.0 * log2(3.0 / 5.0),
        16: 4.0 - 2.0 * log2(1.0 + sqrt(5.0)),
        17: 2.5 - log2(1.0 + sqrt(2.0)),
        18: 1.0,
        19: 3.0 - log2(3.0),
        20: 4.0 - 2.0 * log2(1.0 + sqrt(2.0)),
        21: 4.0 - 2.0 * log2(1.0 + sqrt(2.0)),
        22: 1.0,
        23: 3.0 - log2(5.0),
        25: 3.0 - log2(3.0),
        26: 6.0 - 2.0 * log2(3.0 + sqrt(5.0)),
        28: 4.0 - 2.0 * log2(3.0),
    }


# ---------------------------------------------------------------------------
# independent real-witness grid maximizer


def real_grid_eg(s, points: int = 24, levels: int = 3) -> float:
    """E_g upper bound from nested grid search over real product states.

    Each qubit is parametrized by one angle, (cos t, sin t) with t in
    [0, pi); the full 4-angle grid is evaluated and refined ``levels``
    times around its maximum.  For states whose closest product state is
    real this matches the iterative solve; complex-witness states sit
    strictly above the grid value.
    """
    tensor = state_tensor(s).real
    centers = np.full(hc.N_VERTICES, math.pi / 2.0)
    half = math.pi / 2.0
    best = 0.0
    for _ in range(levels):
        angles = [
            np.linspace(c - half, c + half, points, endpoint=False) for c in centers
        ]
        qubit_grids = [np.stack([np.cos(a), np.sin(a)], axis=1) for a in angles]
        f = np.einsum(
            "abcd,ia,jb,kc,ld->ijkl",
            tensor,
            qubit_grids[0],
            qubit_grids[1],
            qubit_grids[2],
            qubit_grids[3],
        )
        flat = int(np.argmax(np.abs(f)))
        idx = np.unravel_index(flat, f.shape)
        best = float(np.abs(f[idx]))
        centers = np.array([angles[q][idx[q]] for q in range(hc.N_VERTICES)])
        half = half / points * 2.0
    return -2.0 * math.log2(best)
