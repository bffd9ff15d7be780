"""Exhaustive orbits of all 32768 codes under local moves.

The group is generated by the four X moves, the four Z moves, and the 24
vertex permutations.  Every generator is a precomputed permutation table
over the full code space, so orbit finding is plain label propagation:
each code repeatedly adopts the smallest label reachable through any
generator until nothing changes.  The smallest code of an orbit is its
canonical representative.

Orbit sizes must divide the group order 16 * 16 * 24 = 6144, and the rank
of the standardized representative is constant along each orbit; both are
checked.  The table can be dumped to a small versioned binary cache (a
header plus the 32768 class ids as little-endian uint16).
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import hypercore as hc

GROUP_ORDER = 16 * 16 * 24

_CACHE_MAGIC = b"HGORBIT1"
_CACHE_VERSION = 1

# code-space bit masks of the edges of each cardinality
_EDGE_BITS_BY_SIZE = {
    k: sum(1 << (e - 1) for e in range(1, hc.N_BASIS) if hc.edge_size(e) == k)
    for k in (1, 2, 3, 4)
}


@dataclass(frozen=True)
class OrbitTable:
    """Total partition of the code space into orbits.

    ``class_id[c]`` is the orbit id of code c; ids are assigned in
    ascending order of the orbit's canonical (smallest) representative.
    ``reps``, ``sizes`` and ``rep_rank`` line up with the ids; rep_rank is
    the rank of the standardized representative.
    """

    class_id: np.ndarray  # uint16, shape (32768,)
    reps: np.ndarray      # uint16, one per orbit
    sizes: np.ndarray     # int64, one per orbit
    rep_rank: np.ndarray  # int64, one per orbit

    @property
    def n_orbits(self) -> int:
        return int(self.reps.size)


@dataclass(frozen=True)
class OrbitRecord:
    """One orbit as seen from a single code."""

    rep: int
    size: int
    rank: int
    m: int | None  # size/256 for rank 4, size/128 for rank 3, else None


def generator_tables() -> list[np.ndarray]:
    """Image tables of all 32 generators over the full code space."""
    tables = [hc.x_image_table(i) for i in hc.VERTICES]
    tables += [hc.z_image_table(i) for i in hc.VERTICES]
    tables += [hc.permutation_image_table(p) for p in hc.ALL_PERMUTATIONS]
    return tables


def standardized_rank_table() -> np.ndarray:
    """Rank of the standardized form of every code, without standardizing.

    Standardization strips loops always and strips 3-edges exactly when
    the 4-edge is present, so the outcome is readable off the raw bits:
    rank 4 iff the 4-edge bit is set, else 3 iff any 3-edge bit, else 2
    iff any 2-edge bit, else 0.  (Checked against real standardization in
    the tests.)
    """
    codes = np.arange(hc.N_CODES, dtype=np.uint32)
    rank = np.zeros(hc.N_CODES, dtype=np.int64)
    rank[(codes & _EDGE_BITS_BY_SIZE[2]) != 0] = 2
    rank[(codes & _EDGE_BITS_BY_SIZE[3]) != 0] = 3
    rank[(codes & _EDGE_BITS_BY_SIZE[4]) != 0] = 4
    return rank


@lru_cache(maxsize=1)
def enumerate_orbits() -> OrbitTable:
    """Partition the whole code space by min-label propagation."""
    tables = generator_tables()
    labels = np.arange(hc.N_CODES, dtype=np.uint16)
    while True:
        before = labels
        for t in tables:
            labels = np.minimum(labels, labels[t])
        # path compression: follow labels until they are fixed points
        while True:
            nxt = labels[labels]
            if np.array_equal(nxt, labels):
                break
            labels = nxt
        if np.array_equal(labels, before):
            break
    reps, class_id, sizes = np.unique(labels, return_inverse=True, return_counts=True)
    rep_rank = np.array([hc.rank(hc.standardize(int(r))) for r in reps], dtype=np.int64)
    return OrbitTable(
        class_id=class_id.astype(np.uint16),
        reps=reps.astype(np.uint16),
        sizes=sizes.astype(np.int64),
        rep_rank=rep_rank,
    )


def orbit_of(h: int, table: OrbitTable | None = None) -> OrbitRecord:
    """Orbit membership data of one code."""
    hc._check_code(h)
    table = table or enumerate_orbits()
    cid = int(table.class_id[h])
    size = int(table.sizes[cid])
    rank = int(table.rep_rank[cid])
    if rank == 4:
        m = size // 256
    elif rank == 3:
        m = size // 128
    else:
        m = None
    return OrbitRecord(rep=int(table.reps[cid]), size=size, rank=rank, m=m)


def rank_census(table: OrbitTable | None = None) -> dict[int, int]:
    """Number of codes whose standardized form has each rank.

    Raises if any orbit mixes standardized ranks; that would break the
    counting argument and must never happen.
    """
    table = table or enumerate_orbits()
    per_code = standardized_rank_table()
    for cid in range(table.n_orbits):
        ranks = np.unique(per_code[table.class_id == cid])
        if ranks.size != 1 or ranks[0] != table.rep_rank[cid]:
            raise RuntimeError(
                f"orbit {cid} (rep {table.reps[cid]}) mixes standardized ranks {ranks}"
            )
    census: dict[int, int] = {}
    for cid in range(table.n_orbits):
        r = int(table.rep_rank[cid])
        census[r] = census.get(r, 0) + int(table.sizes[cid])
    return census


# ---------------------------------------------------------------------------
# binary cache


def save_cache(table: OrbitTable, path) -> None:
    """Dump the class-id array with a small versioned header."""
    payload = table.class_id.astype("<u2").tobytes()
    with open(path, "wb") as fh:
        fh.write(_CACHE_MAGIC)
        fh.write(struct.pack("<H", _CACHE_VERSION))
        fh.write(payload)


def load_cache(path) -> OrbitTable:
    """Rebuild an OrbitTable from a cache file.

    Representatives, sizes and ranks are re-derived from the class ids;
    malformed files raise ValueError so callers can fall back to a fresh
    enumeration.
    """
    with open(path, "rb") as fh:
        blob = fh.read()
    head = len(_CACHE_MAGIC) + 2
    if len(blob) != head + 2 * hc.N_CODES or blob[: len(_CACHE_MAGIC)] != _CACHE_MAGIC:
        raise ValueError(f"not an orbit cache: {path}")
    (version,) = struct.unpack("<H", blob[len(_CACHE_MAGIC) : head])
    if version != _CACHE_VERSION:
        raise ValueError(f"unsupported orbit cache version {version}: {path}")
    class_id = np.frombuffer(blob[head:], dtype="<u2")
    n = int(class_id.max()) + 1
    reps = np.full(n, hc.N_CODES, dtype=np.int64)
    np.minimum.at(reps, class_id, np.arange(hc.N_CODES, dtype=np.int64))
    sizes = np.bincount(class_id, minlength=n).astype(np.int64)
    if sizes.min() <= 0 or reps.max() >= hc.N_CODES or not np.all(np.diff(reps) > 0):
        raise ValueError(f"orbit cache is internally inconsistent: {path}")
    rep_rank = np.array([hc.rank(hc.standardize(int(r))) for r in reps], dtype=np.int64)
    return OrbitTable(
        class_id=class_id.astype(np.uint16).copy(),
        reps=reps.astype(np.uint16),
        sizes=sizes,
        rep_rank=rep_rank,
    )


def load_or_enumerate(path=None) -> OrbitTable:
    """Use the cache at ``path`` when present and valid, else enumerate
    (writing the cache back when a path was given)."""
    if path is None:
        return enumerate_orbits()
    try:
        return load_cache(path)
    except FileNotFoundError:
        table = enumerate_orbits()
        save_cache(table, path)
        return table
    except ValueError:
        table = enumerate_orbits()
        save_cache(table, path)
        return table
