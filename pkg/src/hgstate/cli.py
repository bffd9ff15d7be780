"""Command line front end: classify, query one hypergraph, verify sweeps.

Exit codes follow a fixed contract.  ``classify`` returns 0 when all 28
hypergraph classes match their reference rows, 2 on any unmatched,
ambiguous, or colliding signature, and 1 on I/O or argument problems.
``query`` returns 1 on a parse error naming the offending token.
``verify`` returns 2 when any invariant suite fails.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import classifier as cf
from . import geoment as gm
from . import hypercore as hc
from . import orbits as ob
from . import statevec as sv


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract here wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _add_policy_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--restarts", type=_positive_int, default=gm.DEFAULT_RESTARTS,
                   help="random restarts per solve (default %(default)s)")
    p.add_argument("--tol", type=_positive_float, default=gm.DEFAULT_TOL,
                   help="per-sweep overlap improvement threshold (default %(default)s)")
    p.add_argument("--max-iter", type=_positive_int, default=gm.DEFAULT_MAX_ITER,
                   help="sweep cap per solve (default %(default)s)")
    p.add_argument("--seed", type=int, default=gm.DEFAULT_SEED,
                   help="base seed for the restart streams (default %(default)s)")
    p.add_argument("--cache", metavar="PATH", default=None,
                   help="orbit table cache file (created when missing)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hgstate",
                     description="four-qubit hypergraph states: orbits and entanglement")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify all 32768 codes and report")
    p_classify.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p_classify.add_argument("--out", metavar="PATH", default=None,
                            help="write the report here instead of stdout")
    _add_policy_flags(p_classify)

    p_query = sub.add_parser("query", help="inspect a single hypergraph")
    p_query.add_argument("edges", help='comma-separated edges, e.g. "1234,123" (empty for no edges)')
    _add_policy_flags(p_query)

    p_verify = sub.add_parser("verify", help="run exhaustive invariant sweeps")
    p_verify.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p_verify.add_argument("--cache", metavar="PATH", default=None,
                          help="orbit table cache file for the orbit suites")
    return parser


def _policy(args) -> gm.SolvePolicy:
    return gm.SolvePolicy(restarts=args.restarts, tol=args.tol,
                          max_iter=args.max_iter, seed=args.seed)


def cmd_classify(args) -> int:
    try:
        table = ob.load_or_enumerate(args.cache)
    except OSError as exc:
        print(f"hgstate: cannot use orbit cache: {exc}", file=sys.stderr)
        return 1
    try:
        records, graphs = cf.classify_all(_policy(args), table)
    except cf.ClassificationError as exc:
        print(f"hgstate: classification failed: {exc}", file=sys.stderr)
        return 2
    report = cf.emit_report(records, graphs, args.format, args.seed)
    if args.out is None:
        sys.stdout.write(report)
        return 0
    try:
        with open(args.out, "w") as fh:
            fh.write(report)
    except OSError as exc:
        print(f"hgstate: cannot write report: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_query(args) -> int:
    try:
        code = hc.parse_edges(args.edges)
    except ValueError as exc:
        print(f"hgstate: bad edge list: {exc}", file=sys.stderr)
        return 1
    try:
        table = ob.load_or_enumerate(args.cache)
    except OSError as exc:
        print(f"hgstate: cannot use orbit cache: {exc}", file=sys.stderr)
        return 1
    record = ob.orbit_of(code, table)
    std = hc.standardize(code)
    state = sv.build_state(code)
    sol = gm.solve_code(code, _policy(args))
    profile = sv.entropy_profile(code)

    print(f"edges:        {hc.format_edges(code) or '(none)'}")
    print(f"code:         {code}")
    print(f"rank:         {hc.rank(code)}")
    print(f"standardized: {hc.format_edges(std) or '(none)'}  (code {std})")
    print("amplitudes (basis: qubit 1 leftmost):")
    for mu in range(hc.N_BASIS):
        print(f"  |{hc.basis_string(mu)}>  {state[mu]:+.4f}")
    m = "-" if record.m is None else record.m
    print(f"orbit:        rep {record.rep}, size {record.size}, rank {record.rank}, m {m}")
    if record.rank in (3, 4):
        ref_table, ref_row = cf.match_row(
            record.rank,
            sol.eg,
            sorted(profile.be2, reverse=True),
        )
        print(f"class:        table {ref_table}, row {ref_row}")
    print(f"stabilizers:  {'ok' if sv.verify_stabilizers(code) else 'FAILED'}")
    print(f"ge:           {sol.eg:.6f}  (overlap {sol.overlap:.6f}, "
          f"restarts_hit {sol.restarts_hit}, converged {sol.converged})")
    print(f"be1:          {' '.join(f'{v:.4f}' for v in profile.be1)}")
    print(f"be2:          {' '.join(f'{v:.4f}' for v in profile.be2)}")
    return 0


# ---------------------------------------------------------------------------
# exhaustive verification sweeps (all vectorized over the full code space)


def _full_sign_matrix() -> np.ndarray:
    return hc.sign_matrix()


def suite_roundtrip() -> tuple[bool, str]:
    """Sign-function round trip over all 32768 codes."""
    g = _full_sign_matrix().copy()
    mu = np.arange(hc.N_BASIS)
    for v in range(hc.N_VERTICES):
        hi = np.flatnonzero(mu >> v & 1)
        g[:, hi] ^= g[:, hi ^ (1 << v)]
    codes = np.zeros(hc.N_CODES, dtype=np.int64)
    for e in range(1, hc.N_BASIS):
        codes |= g[:, e].astype(np.int64) << (e - 1)
    ok = bool(np.array_equal(codes, np.arange(hc.N_CODES)))
    return ok, f"{hc.N_CODES} codes round-tripped" if ok else "round trip broke"


def _neighborhood_sign_tables() -> list[np.ndarray]:
    """Boolean diagonals of the neighborhood controlled-Z products, with the
    loop's global sign folded in, for every code and vertex."""
    out = []
    codes = np.arange(hc.N_CODES, dtype=np.uint32)
    for i in hc.VERTICES:
        nbr = (hc.x_image_table(i).astype(np.uint32)) ^ codes
        loop = (codes >> ((1 << (i - 1)) - 1) & 1).astype(bool)
        out.append(hc.sign_matrix(nbr) ^ loop[:, None])
    return out


def suite_stabilizer() -> tuple[bool, str]:
    """K_i fixes every state and the generators commute, all codes at once.

    At sign level K_i |H> = |H> reads D_i(mu) ^ g(mu) ^ g(mu ^ bit_i) = 0,
    and commutation of K_i with K_j reads
    D_j(mu) ^ D_i(mu ^ bit_j) = D_i(mu) ^ D_j(mu ^ bit_i).
    """
    g = _full_sign_matrix()
    d = _neighborhood_sign_tables()
    mu = np.arange(hc.N_BASIS)
    for i in hc.VERTICES:
        fix = d[i - 1] ^ g ^ g[:, mu ^ (1 << (i - 1))]
        if fix.any():
            return False, f"K_{i} does not fix {int(fix.any(axis=1).sum())} states"
    for i in hc.VERTICES:
        for j in range(i + 1, hc.N_VERTICES + 1):
            bi, bj = 1 << (i - 1), 1 << (j - 1)
            lhs = d[j - 1] ^ d[i - 1][:, mu ^ bj]
            rhs = d[i - 1] ^ d[j - 1][:, mu ^ bi]
            if (lhs ^ rhs).any():
                return False, f"K_{i} and K_{j} do not commute everywhere"
    return True, f"{hc.N_CODES} codes x 4 stabilizers fixed, 6 pairs commute"


def suite_equivalence() -> tuple[bool, str]:
    """The neighborhood controlled-Z product maps |H> to X_i |H> exactly,
    for every code and vertex."""
    g = _full_sign_matrix()
    d = _neighborhood_sign_tables()
    mu = np.arange(hc.N_BASIS)
    for i in hc.VERTICES:
        bad = d[i - 1] ^ g ^ g[:, mu ^ (1 << (i - 1))]
        if bad.any():
            return False, f"neighborhood product mismatch on vertex {i}"
    return True, f"{hc.N_CODES} codes x 4 vertices agree entrywise"


def suite_transforms() -> tuple[bool, str]:
    """Code-level X and Z moves track the statevector-level Pauli action.

    X on vertex i permutes amplitudes by the bit-i flip up to one global
    sign, which must equal the loop flag on i; Z flips the signs of the
    eight amplitudes with mu_i = 1.
    """
    g = _full_sign_matrix()
    codes = np.arange(hc.N_CODES, dtype=np.uint32)
    mu = np.arange(hc.N_BASIS)
    for i in hc.VERTICES:
        bit = 1 << (i - 1)
        loop = (codes >> (bit - 1) & 1).astype(bool)
        diff = g[hc.x_image_table(i)] ^ g[:, mu ^ bit]
        if (diff != loop[:, None]).any():
            return False, f"X move on vertex {i} broke the amplitude action"
        zdiff = g[hc.z_image_table(i)] ^ g
        if (zdiff != ((mu & bit) == bit)[None, :]).any():
            return False, f"Z move on vertex {i} broke the amplitude action"
    return True, "X and Z moves consistent with the amplitude action on all codes"


def suite_closure(table: ob.OrbitTable | None = None) -> tuple[bool, str]:
    """Every generator preserves orbit ids, and sizes divide the group order."""
    table = table if table is not None else ob.enumerate_orbits()
    for t in ob.generator_tables():
        if not np.array_equal(table.class_id[t], table.class_id):
            return False, "a generator escaped its orbit"
    if (ob.GROUP_ORDER % table.sizes).max() != 0:
        return False, "an orbit size does not divide the group order"
    return True, f"{table.n_orbits} orbits closed under all 32 generators"


def suite_census(table: ob.OrbitTable | None = None) -> tuple[bool, str]:
    """Code totals by standardized rank match the expected partition."""
    table = table if table is not None else ob.enumerate_orbits()
    census = ob.rank_census(table)
    got = (census.get(4, 0), census.get(3, 0),
           census.get(2, 0) + census.get(1, 0) + census.get(0, 0))
    counts = (
        int((table.rep_rank == 4).sum()),
        int((table.rep_rank == 3).sum()),
    )
    ok = got == (16384, 15360, 1024) and counts == (11, 17)
    detail = (f"rank4 {got[0]}, rank3 {got[1]}, graphs {got[2]}; "
              f"orbit counts {counts[0]}/{counts[1]}")
    return ok, detail


SUITES = {
    "roundtrip": suite_roundtrip,
    "stabilizer": suite_stabilizer,
    "equivalence": suite_equivalence,
    "transforms": suite_transforms,
    "closure": suite_closure,
    "census": suite_census,
}

# suites that consume the orbit table and so honor --cache
_ORBIT_SUITES = frozenset(("closure", "census"))


def cmd_verify(args) -> int:
    table = None
    if args.cache is not None:
        try:
            table = ob.load_or_enumerate(args.cache)
        except OSError as exc:
            print(f"hgstate: cannot use orbit cache: {exc}", file=sys.stderr)
            return 1
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        ok, detail = SUITES[name](table) if name in _ORBIT_SUITES else SUITES[name]()
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
        failed = failed or not ok
    return 2 if failed else 0


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on bad flags and on --help; report the code
        # instead so embedders can call main() without trapping exits
        return int(exc.code or 0)
    if args.command == "classify":
        return cmd_classify(args)
    if args.command == "query":
        return cmd_query(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())

