"""Hypergraphs on four vertices as 15-bit codes, and the local moves on them.

A hyperedge is a nonempty subset of the vertices {1,2,3,4}, stored as a
4-bit mask with bit (v-1) set when vertex v belongs to the edge.  A
hypergraph is a set of such edges, stored as a 15-bit code with bit (e-1)
set when edge mask e is present.  Codes therefore run over [0, 2**15); code
0 is the edgeless hypergraph.

Each code determines a sign function g on the 16 computational basis
strings: g(mu) is the parity of the number of edges contained in the
support of mu.  This map is a bijection between codes and sign functions
with g(0000) = 0 (a binary Moebius transform inverts it), which is what
lets an equally weighted four-qubit state be named by a single integer.

Local moves act directly on codes: X on vertex i replaces the edge set E
by N(i) xor E where N(i) is the neighborhood of i, Z on vertex i toggles
the loop {i}, and vertex permutations relabel every edge.  All three are
involutions or group actions and never leave the 15-bit code space.
"""

from __future__ import annotations

import itertools

import numpy as np

N_VERTICES = 4
N_BASIS = 1 << N_VERTICES          # 16 basis strings
N_EDGE_KINDS = N_BASIS - 1         # 15 possible hyperedges
N_CODES = 1 << N_EDGE_KINDS        # 32768 hypergraphs
FULL_EDGE = N_BASIS - 1            # the 4-vertex edge {1,2,3,4}

VERTICES = tuple(range(1, N_VERTICES + 1))

# Permutations are tuples p of length 4 where p[k] is the image of vertex k+1.
ALL_PERMUTATIONS = tuple(itertools.permutations(VERTICES))

_EDGE_SIZE = tuple(bin(e).count("1") for e in range(N_BASIS))


def _check_vertex(i: int) -> None:
    if i not in VERTICES:
        raise ValueError(f"vertex must be in 1..4, got {i!r}")


def _check_edge(e: int) -> None:
    if not 1 <= e <= N_EDGE_KINDS:
        raise ValueError(f"edge mask must be in 1..15, got {e!r}")


def _check_code(h: int) -> None:
    if not 0 <= h < N_CODES:
        raise ValueError(f"hypergraph code must be in [0, 32768), got {h!r}")


def edge_mask(vertices) -> int:
    """Pack an iterable of distinct vertices into an edge mask."""
    mask = 0
    for v in vertices:
        _check_vertex(v)
        bit = 1 << (v - 1)
        if mask & bit:
            raise ValueError(f"duplicate vertex {v} in edge")
        mask |= bit
    _check_edge(mask)
    return mask


def edge_vertices(e: int) -> tuple[int, ...]:
    """Unpack an edge mask into its sorted vertices."""
    _check_edge(e)
    return tuple(v for v in VERTICES if e & (1 << (v - 1)))


def edge_size(e: int) -> int:
    """Number of vertices in an edge mask (1 for a loop, up to 4)."""
    _check_edge(e)
    return _EDGE_SIZE[e]


def edges_of(h: int) -> tuple[int, ...]:
    """All edge masks stored in a code, largest edges first.

    The ordering (size descending, then vertex-lexicographic) is the
    display order used by ``format_edges`` and the reports.
    """
    _check_code(h)
    present = [e for e in range(1, N_BASIS) if h >> (e - 1) & 1]
    present.sort(key=lambda e: (-_EDGE_SIZE[e], edge_vertices(e)))
    return tuple(present)


def code_of_edges(edges) -> int:
    """Assemble a code from an iterable of distinct edge masks."""
    h = 0
    for e in edges:
        _check_edge(e)
        bit = 1 << (e - 1)
        if h & bit:
            raise ValueError(f"duplicate edge mask {e}")
        h |= bit
    return h


# ---------------------------------------------------------------------------
# sign functions


def signs_from_hypergraph(h: int) -> np.ndarray:
    """Sign function of a code: g[mu] = parity of edges inside supp(mu).

    Returned as a boolean array over the 16 basis indices; basis index mu
    has bit (v-1) set when vertex v reads 1.
    """
    _check_code(h)
    mu = np.arange(N_BASIS)
    g = np.zeros(N_BASIS, dtype=bool)
    for e in range(1, N_BASIS):
        if h >> (e - 1) & 1:
            g ^= (mu & e) == e
    return g


def hypergraph_from_signs(g) -> int:
    """Invert ``signs_from_hypergraph`` by a binary Moebius transform.

    Edge S is present exactly when the xor of g over all subsets of S is 1.
    Rejects sign functions with g(0000) = 1: those differ from a hypergraph
    state by a global minus sign the caller has to strip first.
    """
    f = np.asarray(g, dtype=bool).copy()
    if f.shape != (N_BASIS,):
        raise ValueError(f"sign function must have 16 entries, got shape {f.shape}")
    if f[0]:
        raise ValueError("sign function has g(0000) = 1; flip the global phase first")
    # in-place subset-sum butterfly over the four vertex directions
    idx = np.arange(N_BASIS)
    for v in range(N_VERTICES):
        hi = idx[(idx >> v & 1) == 1]
        f[hi] ^= f[hi ^ (1 << v)]
    h = 0
    for e in range(1, N_BASIS):
        if f[e]:
            h |= 1 << (e - 1)
    return h


# ---------------------------------------------------------------------------
# local moves


def neighborhood(h: int, i: int) -> tuple[int, ...]:
    """Edges e \\ {i} for every stored edge containing vertex i.

    A loop on i would contribute the empty set, which is a global phase
    rather than an edge, so it is omitted.
    """
    _check_code(h)
    _check_vertex(i)
    bit = 1 << (i - 1)
    out = []
    for e in range(1, N_BASIS):
        if h >> (e - 1) & 1 and e & bit and e != bit:
            out.append(e ^ bit)
    return tuple(sorted(out, key=lambda e: (-_EDGE_SIZE[e], edge_vertices(e))))


def neighborhood_code(h: int, i: int) -> int:
    """The neighborhood N(i) packed as a code (loop contribution dropped)."""
    return code_of_edges(neighborhood(h, i))


def has_loop(h: int, i: int) -> bool:
    """Whether the code stores the loop {i}."""
    _check_code(h)
    _check_vertex(i)
    return bool(h >> ((1 << (i - 1)) - 1) & 1)


def apply_x(h: int, i: int) -> int:
    """Pauli X on vertex i at code level: E -> N(i) xor E.  Involutive."""
    return h ^ neighborhood_code(h, i)


def apply_z(h: int, i: int) -> int:
    """Pauli Z on vertex i at code level: toggle the loop {i}.  Involutive."""
    _check_code(h)
    _check_vertex(i)
    return h ^ (1 << ((1 << (i - 1)) - 1))


def permute_edge(e: int, p) -> int:
    """Relabel the vertices of one edge mask through permutation p."""
    _check_edge(e)
    out = 0
    for k, image in enumerate(p):
        if e >> k & 1:
            out |= 1 << (image - 1)
    return out


def permute(h: int, p) -> int:
    """Relabel every edge of a code through permutation p."""
    _check_code(h)
    if sorted(p) != list(VERTICES):
        raise ValueError(f"not a permutation of 1..4: {p!r}")
    out = 0
    for e in range(1, N_BASIS):
        if h >> (e - 1) & 1:
            out |= 1 << (permute_edge(e, p) - 1)
    return out


def hypergraph_basis(h: int, c: int) -> int:
    """Toggle the loop on every vertex flagged in the 4-bit string c.

    This realizes Z^c at code level, turning one hypergraph into the code
    of the corresponding basis-state variant.  Applying the same c twice
    returns the original code.
    """
    _check_code(h)
    if not 0 <= c < N_BASIS:
        raise ValueError(f"basis flags must be a 4-bit value, got {c!r}")
    for i in VERTICES:
        if c >> (i - 1) & 1:
            h = apply_z(h, i)
    return h


# ---------------------------------------------------------------------------
# rank and the standard form


def rank(h: int) -> int:
    """Largest edge cardinality in the code; 0 for the edgeless hypergraph."""
    _check_code(h)
    if h == 0:
        return 0
    return max(_EDGE_SIZE[e] for e in range(1, N_BASIS) if h >> (e - 1) & 1)


_LOOP_BITS = sum(1 << ((1 << v) - 1) for v in range(N_VERTICES))
_THREE_EDGES = tuple(e for e in range(1, N_BASIS) if _EDGE_SIZE[e] == 3)
_STANDARDIZE_CAP = 16


def strip_loops(h: int) -> int:
    """Remove every loop via Z moves (stays in the local-equivalence orbit)."""
    _check_code(h)
    return h & ~_LOOP_BITS


def standardize(h: int) -> int:
    """Loop-free orbit representative; for rank-4 codes also 3-edge-free.

    Loops are cleared with Z moves.  When the 4-vertex edge is present,
    each 3-edge is removed by an X move on its one absent vertex (that X
    toggles exactly that 3-edge against the 4-edge), scanning absent
    vertices in ascending order and re-clearing loops until a fixed point.
    """
    h = strip_loops(h)
    if h >> (FULL_EDGE - 1) & 1:
        for _ in range(_STANDARDIZE_CAP):
            todo = [e for e in _THREE_EDGES if h >> (e - 1) & 1]
            if not todo:
                break
            for e in sorted(todo, key=lambda e: FULL_EDGE ^ e):
                if h >> (e - 1) & 1:
                    absent = (FULL_EDGE ^ e).bit_length()  # mask is a single bit
                    h = strip_loops(apply_x(h, absent))
        else:
            raise RuntimeError(f"standardize failed to settle for code {h}")
        h = strip_loops(h)
    return h


# ---------------------------------------------------------------------------
# vectorized move tables (consumed by the orbit enumeration)


def x_image_table(i: int) -> np.ndarray:
    """apply_x(c, i) for every code c at once, as a uint16 array."""
    _check_vertex(i)
    codes = np.arange(N_CODES, dtype=np.uint32)
    bit = 1 << (i - 1)
    nbr = np.zeros(N_CODES, dtype=np.uint32)
    for e in range(1, N_BASIS):
        if e & bit and e != bit:
            contrib = 1 << ((e ^ bit) - 1)
            nbr ^= np.where(codes >> (e - 1) & 1 == 1, contrib, 0).astype(np.uint32)
    return (codes ^ nbr).astype(np.uint16)


def z_image_table(i: int) -> np.ndarray:
    """apply_z(c, i) for every code c at once."""
    _check_vertex(i)
    codes = np.arange(N_CODES, dtype=np.uint32)
    return (codes ^ (1 << ((1 << (i - 1)) - 1))).astype(np.uint16)


def permutation_image_table(p) -> np.ndarray:
    """permute(c, p) for every code c at once."""
    codes = np.arange(N_CODES, dtype=np.uint32)
    out = np.zeros(N_CODES, dtype=np.uint32)
    for e in range(1, N_BASIS):
        image_bit = 1 << (permute_edge(e, p) - 1)
        out ^= np.where(codes >> (e - 1) & 1 == 1, image_bit, 0).astype(np.uint32)
    return out.astype(np.uint16)


def sign_matrix(codes=None) -> np.ndarray:
    """Sign functions of many codes stacked into a boolean (len, 16) array."""
    if codes is None:
        codes = np.arange(N_CODES, dtype=np.uint32)
    else:
        codes = np.asarray(codes, dtype=np.uint32)
    mu = np.arange(N_BASIS)
    g = np.zeros((codes.size, N_BASIS), dtype=bool)
    for e in range(1, N_BASIS):
        has = (codes >> (e - 1) & 1) == 1
        g ^= np.outer(has, (mu & e) == e)
    return g


# ---------------------------------------------------------------------------
# text form


def parse_edges(text: str) -> int:
    """Parse a comma-separated hyperedge list such as ``"1234,123"``.

    Each group is a run of vertex digits (a single digit is a loop); the
    empty string is the edgeless hypergraph.  Rejects characters outside
    1..4, repeated vertices inside a group, and repeated groups.
    """
    text = text.strip()
    if not text:
        return 0
    h = 0
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError("empty edge group in edge list")
        mask = 0
        for ch in token:
            if ch not in "1234":
                raise ValueError(f"bad vertex {ch!r} in edge {token!r}")
            bit = 1 << (int(ch) - 1)
            if mask & bit:
                raise ValueError(f"duplicate vertex {ch!r} in edge {token!r}")
            mask |= bit
        code_bit = 1 << (mask - 1)
        if h & code_bit:
            raise ValueError(f"edge {token!r} listed twice")
        h |= code_bit
    return h


def format_edges(h: int) -> str:
    """Render a code in the text form accepted by ``parse_edges``."""
    return ",".join("".join(map(str, edge_vertices(e))) for e in edges_of(h))


def basis_string(mu: int) -> str:
    """Display form of a basis index: vertex 1 is the leftmost character."""
    if not 0 <= mu < N_BASIS:
        raise ValueError(f"basis index must be in 0..15, got {mu!r}")
    return "".join(str(mu >> v & 1) for v in range(N_VERTICES))


def basis_index(s: str) -> int:
    """Inverse of ``basis_string``."""
    if len(s) != N_VERTICES or set(s) - {"0", "1"}:
        raise ValueError(f"basis string must be 4 bits, got {s!r}")
    return sum(1 << v for v, ch in enumerate(s) if ch == "1")
