"""Exhaustive small-graph sweeps: bounds, maximizers, certificates, audits.

Labeled graphs on n vertices are enumerated as edge-bit masks in graph6
column order.  Sweeps are sharded into fixed chunks (independent of the
worker count) and merged in chunk order, so reports are byte-identical
across runs and across --jobs settings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .certify import (
    GUARD,
    beta_increment_case,
    beta_star_increment_case,
    certify_all,
    fpm_threshold,
    pm_threshold,
)
from .extremal import (
    RegimePrediction,
    matching_bound_connected,
    matching_bound_general,
    predicted_maximizer_connected,
    predicted_maximizer_general,
)
from .graphs import (
    Graph,
    GraphError,
    is_connected,
    is_isomorphic,
    pairs_colex,
    to_graph6,
)
from .halfint import HalfIntegral
from .matching import (
    _blossom_max_matching,
    _dc_matching_size,
    fpm_partition,
    fractional_matching_number,
    fractional_transversal,
    matching_number,
    optimal_fractional_matching,
    wrc_decomposition,
)
from .spectral import spectral_radius

ENUM_CAP = 8
ENUM_CAP_LONG = 9
ORACLE_BETA_STAR_EDGE_CAP = 18
ORACLE_BETA_EDGE_CAP = 24
RHO_TOL = 1e-8
_SUBBATCH = 1 << 15

THEOREMS = ("t32", "t33", "t12", "t13")
_CONNECTED_THEOREMS = {"t32": True, "t33": False, "t12": False, "t13": True}


# ---------------------------------------------------------------------------
# enumeration


def _check_enum_n(n: int, long_run: bool) -> None:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if n <= ENUM_CAP:
        return
    if n == ENUM_CAP_LONG and long_run:
        return
    if n == ENUM_CAP_LONG:
        raise GraphError(f"n={n} enumerates 2^{n * (n - 1) // 2} graphs; pass long_run to allow it")
    raise GraphError(f"exhaustive enumeration capped at n <= {ENUM_CAP_LONG}, got {n}")


def _rows_from_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> list[int]:
    rows = [0] * n
    k = mask
    while k:
        b = k & -k
        u, v = pairs[b.bit_length() - 1]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        k ^= b
    return rows


def _rows_connected(rows: list[int], n: int) -> bool:
    if n == 0:
        return False
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            u = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= rows[u]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def enumerate_graphs(n: int, connected_only: bool = False, long_run: bool = False) -> Iterator[Graph]:
    """Yield every labeled graph on n vertices once, edge-bit masks ascending."""
    _check_enum_n(n, long_run)
    pairs = pairs_colex(n)
    for mask in range(1 << len(pairs)):
        rows = _rows_from_mask(n, mask, pairs)
        if connected_only and not _rows_connected(rows, n):
            continue
        yield Graph._from_rows_unchecked(n, tuple(rows))


# ---------------------------------------------------------------------------
# brute-force oracles


def oracle_beta(g: Graph) -> int:
    """Exhaustive maximum matching size, by branching over the lowest vertex."""
    if g.edge_count() > ORACLE_BETA_EDGE_CAP:
        raise GraphError(f"matching oracle capped at {ORACLE_BETA_EDGE_CAP} edges")
    rows = g.rows

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        res = best(rest)  # v stays unmatched
        nb = rows[v] & rest
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            res = max(res, 1 + best(rest & ~(1 << u)))
        return res

    result = best((1 << g.n) - 1)
    best.cache_clear()
    return result


def oracle_beta_star(g: Graph) -> HalfIntegral:
    """Exhaustive maximum over doubled edge weights {0,1,2} with vertex sums <= 2.

    Dynamic program over (edge index, remaining capacities); capacities of
    vertices with no later edges are cleared so states collapse.  Exact.
    """
    edges = sorted(g.edges())
    m = len(edges)
    if m > ORACLE_BETA_STAR_EDGE_CAP:
        raise GraphError(f"fractional matching oracle capped at {ORACLE_BETA_STAR_EDGE_CAP} edges")
    # active_mask[i]: capacity bits of vertices touched by edges[i:]
    active = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        u, v = edges[i]
        active[i] = active[i + 1] | (3 << (2 * u)) | (3 << (2 * v))

    @lru_cache(maxsize=None)
    def best(i: int, caps: int) -> int:
        if i == m:
            return 0
        u, v = edges[i]
        cu = caps >> (2 * u) & 3
        cv = caps >> (2 * v) & 3
        res = best(i + 1, caps & active[i + 1])
        top = min(cu, cv)
        for w in range(1, top + 1):
            nc = caps - (w << (2 * u)) - (w << (2 * v))
            res = max(res, w + best(i + 1, nc & active[i + 1]))
        return res

    start = 0
    for v in range(g.n):
        start |= 2 << (2 * v)
    result = best(0, start & active[0])
    best.cache_clear()
    return HalfIntegral(result)


# ---------------------------------------------------------------------------
# vectorised chunk helpers


def _chunk_ranges(n: int) -> list[tuple[int, int]]:
    # chunk count depends only on n, so reports do not depend on the job count
    m = n * (n - 1) // 2
    total = 1 << m
    chunks = 1 if m <= 15 else (64 if m <= 21 else 4096)
    step = total // chunks
    return [(i * step, (i + 1) * step if i < chunks - 1 else total) for i in range(chunks)]


def _batch_arrays(n: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-mask spectral radius, connectivity flag, and packed neighbour rows."""
    pairs = pairs_colex(n)
    m = len(pairs)
    iu = np.array([p[0] for p in pairs], dtype=np.int64)
    iv = np.array([p[1] for p in pairs], dtype=np.int64)
    rho = np.empty(hi - lo, dtype=np.float64)
    conn = np.empty(hi - lo, dtype=bool)
    rows_packed = np.empty((hi - lo, n), dtype=np.int64)
    eye = np.eye(n)
    shifts = (1 << np.arange(n, dtype=np.int64))
    for start in range(lo, hi, _SUBBATCH):
        stop = min(start + _SUBBATCH, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(m)[None, :]) & 1).astype(np.float64)
        a = np.zeros((stop - start, n, n))
        a[:, iu, iv] = bits
        a[:, iv, iu] = bits
        rho[start - lo : stop - lo] = np.linalg.eigvalsh(a)[:, -1]
        r = a + eye
        for _ in range(max(1, int(np.ceil(np.log2(max(n, 2)))))):
            r = ((r @ r) > 0).astype(np.float64)
        conn[start - lo : stop - lo] = r[:, 0, :].all(axis=1)
        rows_packed[start - lo : stop - lo] = (a.astype(np.int64) * shifts[None, None, :]).sum(axis=2)
    return rho, conn, rows_packed


def _beta_star_doubled_rows(rows: list[int], n: int) -> int:
    return _dc_matching_size(tuple(rows), n)


def _beta_rows(rows: list[int], n: int) -> int:
    return _blossom_max_matching(tuple(rows), n)[0]


# ---------------------------------------------------------------------------
# theorem sweeps


@dataclass(frozen=True)
class ClassRecord:
    n: int
    class_doubled: int
    regime: str
    bound: float
    max_rho: float
    n_maximizers: int
    argmax_g6: str
    prediction_g6: tuple[str, ...]
    bound_holds: bool
    argmax_matches: bool


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    n: int
    connected_only: bool
    labeled_examined: int
    connected_count: int
    classes: tuple[ClassRecord, ...]
    discrepancies: tuple[str, ...]
    resolutions: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.discrepancies and all(c.bound_holds and c.argmax_matches for c in self.classes)

    def to_csv(self) -> str:
        lines = ["n,two_beta_star,regime,bound,max_rho,n_maximizers,argmax_g6,prediction_g6,bound_holds,argmax_matches"]
        for c in self.classes:
            lines.append(
                f"{c.n},{c.class_doubled},{c.regime},{c.bound:.12g},{c.max_rho:.12g},"
                f"{c.n_maximizers},{c.argmax_g6},{';'.join(c.prediction_g6)},"
                f"{str(c.bound_holds).lower()},{str(c.argmax_matches).lower()}"
            )
        return "\n".join(lines) + "\n"


def _predict(theorem: str, n: int, class_doubled: int) -> RegimePrediction:
    if theorem == "t32":
        return predicted_maximizer_connected(n, HalfIntegral(class_doubled))
    if theorem == "t33":
        return predicted_maximizer_general(n, HalfIntegral(class_doubled))
    if theorem == "t12":
        return matching_bound_general(n, class_doubled // 2)
    if theorem == "t13":
        return matching_bound_connected(n, class_doubled // 2)
    raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")


def _theorem_chunk(args: tuple) -> tuple:
    theorem, n, lo, hi, bounds = args
    connected_only = _CONNECTED_THEOREMS[theorem]
    fractional = theorem in ("t32", "t33")
    rho_arr, conn_arr, rows_packed = _batch_arrays(n, lo, hi)
    per_class: dict[int, list] = {}
    connected_count = int(conn_arr.sum())
    rho_list = rho_arr.tolist()
    conn_list = conn_arr.tolist()
    packed = rows_packed.tolist()
    for i in range(hi - lo):
        if connected_only and not conn_list[i]:
            continue
        rows = packed[i]
        if fractional:
            key = _beta_star_doubled_rows(rows, n)
        else:
            key = 2 * _beta_rows(rows, n)
        rho = rho_list[i]
        mask = lo + i
        rec = per_class.get(key)
        if rec is None:
            rec = [0, -1.0, -1, [], []]
            per_class[key] = rec
        rec[0] += 1
        if rho > rec[1]:
            rec[1] = rho
            rec[2] = mask
            if len(rec[3]) > 50000:
                rec[3] = [(r, mk) for (r, mk) in rec[3] if r >= rho - 1e-7]
        if rho >= rec[1] - 1e-7:
            rec[3].append((rho, mask))
        b = bounds.get(key)
        if b is not None and rho >= b - 1e-6:
            rec[4].append((rho, mask))
    return connected_count, per_class


def _run_chunks(worker: Callable, jobs: int, chunk_args: list[tuple]) -> list:
    if jobs <= 1 or len(chunk_args) == 1:
        return [worker(a) for a in chunk_args]
    import multiprocessing as mp

    ctx = mp.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(worker, chunk_args)


def verify_theorem(
    theorem: str,
    n: int,
    jobs: int = 1,
    long_run: bool = False,
    bound_offset: float = 0.0,
) -> VerificationReport:
    """Bucket all (connected, for the connected theorems) labeled graphs on n
    vertices by class, then check bounds, maximizers, and predictions."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    if n < 1:
        raise GraphError("verification needs n >= 1")
    if n > 7 and not long_run:
        raise GraphError(f"full sweep at n={n} enumerates 2^{n * (n - 1) // 2} graphs; pass long_run to allow it")
    if n > ENUM_CAP:
        raise GraphError(f"full sweep capped at n <= {ENUM_CAP}")
    connected_only = _CONNECTED_THEOREMS[theorem]
    fractional = theorem in ("t32", "t33")

    predictions: dict[int, RegimePrediction] = {}
    bounds: dict[int, float] = {}
    keys = range(0, n + 1) if fractional else range(0, n + 1, 2)
    for key in keys:
        pred = _predict(theorem, n, key)
        predictions[key] = pred
        bounds[key] = pred.bound + bound_offset

    chunk_args = [(theorem, n, lo, hi, bounds) for lo, hi in _chunk_ranges(n)]
    partials = _run_chunks(_theorem_chunk, jobs, chunk_args)

    connected_count = 0
    merged: dict[int, list] = {}
    for cc, per_class in partials:
        connected_count += cc
        for key, rec in per_class.items():
            tgt = merged.get(key)
            if tgt is None:
                merged[key] = [rec[0], rec[1], rec[2], list(rec[3]), list(rec[4])]
                continue
            tgt[0] += rec[0]
            if rec[1] > tgt[1]:
                tgt[1], tgt[2] = rec[1], rec[2]
            tgt[3].extend(rec[3])
            tgt[4].extend(rec[4])

    pairs = pairs_colex(n)
    records: list[ClassRecord] = []
    discrepancies: list[str] = []
    regime2_maxima: dict[int, float] = {}

    for key in sorted(merged):
        count, max_rho, argmax_mask, top, near = merged[key]
        pred = predictions[key]
        bound = bounds[key]
        label = "2beta*" if fractional else "2beta"
        bound_holds = max_rho <= bound + RHO_TOL
        if not bound_holds:
            bad = Graph._from_rows_unchecked(n, tuple(_rows_from_mask(n, argmax_mask, pairs)))
            discrepancies.append(
                f"class {label}={key}: max rho {max_rho:.12g} exceeds bound {bound:.12g} at {to_graph6(bad)}"
            )
        maximizer_masks = sorted(mk for r, mk in top if r >= max_rho - RHO_TOL)
        n_maximizers = len(maximizer_masks)
        argmax_mask = maximizer_masks[0] if maximizer_masks else argmax_mask
        argmax_g6 = (
            to_graph6(Graph._from_rows_unchecked(n, tuple(_rows_from_mask(n, argmax_mask, pairs))))
            if argmax_mask >= 0
            else ""
        )

        # predicted graphs that genuinely belong to this class
        in_class: list[Graph] = []
        for pg in pred.extremal_graphs:
            if connected_only and not is_connected(pg):
                continue
            if fractional:
                member = fractional_matching_number(pg).doubled == key
            else:
                member = 2 * matching_number(pg).size == key
            if member:
                in_class.append(pg)

        at_bound = sorted((mk, r) for r, mk in near if r >= bound - RHO_TOL)
        argmax_matches = True
        if in_class:
            hit = [False] * len(in_class)
            for mk, screened in at_bound:
                cand = Graph._from_rows_unchecked(n, tuple(_rows_from_mask(n, mk, pairs)))
                # confirm the screened eigenvalue with the power-iteration route
                pi = spectral_radius(cand).value
                if abs(pi - screened) > 1e-6:
                    discrepancies.append(
                        f"class {label}={key}: eigensolver/power-iteration disagree on {to_graph6(cand)}"
                    )
                matched = False
                for idx, pg in enumerate(in_class):
                    if is_isomorphic(cand, pg):
                        hit[idx] = True
                        matched = True
                        break
                if not matched:
                    argmax_matches = False
                    discrepancies.append(
                        f"class {label}={key}: graph {to_graph6(cand)} attains the bound but is not a predicted extremal graph"
                    )
            for idx, pg in enumerate(in_class):
                if not hit[idx]:
                    argmax_matches = False
                    discrepancies.append(
                        f"class {label}={key}: predicted extremal graph {to_graph6(pg)} does not attain the class maximum"
                    )
        else:
            # the bound is strict for this class; nothing may reach it
            if at_bound:
                argmax_matches = False
                mk = at_bound[0][0]
                cand = Graph._from_rows_unchecked(n, tuple(_rows_from_mask(n, mk, pairs)))
                discrepancies.append(
                    f"class {label}={key}: bound expected strict but {to_graph6(cand)} attains it"
                )
        if pred.regime in ("2", "3") and theorem == "t33":
            regime2_maxima[key] = max_rho
        records.append(
            ClassRecord(
                n,
                key,
                pred.regime,
                bound,
                max_rho,
                n_maximizers,
                argmax_g6,
                tuple(to_graph6(pg) for pg in pred.extremal_graphs),
                bound_holds,
                argmax_matches,
            )
        )

    resolutions: list[str] = []
    if theorem == "t33":
        for key, mx in sorted(regime2_maxima.items()):
            resolutions.append(
                f"class 2beta*={key}: empirical max rho = {mx:.12g} = 2beta*-1 = {key - 1}; "
                f"the stated bound 2beta* = {key} is not attained"
            )
        if regime2_maxima:
            resolutions.append("bound constant for the clique-union regimes resolves to 2beta*-1")
    if theorem == "t13":
        for rec in records:
            pred = predictions[rec.class_doubled]
            if pred.regime == "2":
                resolutions.append(
                    f"class 2beta={rec.class_doubled}: empirical max rho = {rec.max_rho:.12g} matches the "
                    f"hub-family quotient threshold {pred.bound:.12g}; {pred.notes[0]}"
                )

    labeled = 1 << (n * (n - 1) // 2)
    return VerificationReport(
        theorem,
        n,
        connected_only,
        labeled,
        connected_count,
        tuple(records),
        tuple(discrepancies),
        tuple(resolutions),
    )


# ---------------------------------------------------------------------------
# certificate soundness sweep


@dataclass(frozen=True)
class CertSweepReport:
    n: int
    connected_examined: int
    counts: tuple[tuple[str, int, int], ...]  # (name, applicable, fired)
    unsound: tuple[tuple[str, str], ...]  # (graph6, certificate)
    certify_samples: int

    @property
    def passed(self) -> bool:
        return not self.unsound


def _cert_chunk(args: tuple) -> tuple:
    n, lo, hi, stride = args
    xf = (float((n + 1) / (n - 1))) ** 0.5 if n >= 2 else None
    fpm_thr = fpm_threshold(n)
    pm_thr = pm_threshold(n)
    bsi = [(k, case[1]) for k in range(1, n) if (case := beta_star_increment_case(n, k)) is not None]
    bi = [(b, case[1]) for b in range(1, (n - 2) // 2 + 1) if (case := beta_increment_case(n, b)) is not None]
    rho_arr, conn_arr, rows_packed = _batch_arrays(n, lo, hi)
    rho_list = rho_arr.tolist()
    conn_list = conn_arr.tolist()
    packed = rows_packed.tolist()
    counts: dict[str, list[int]] = {}
    unsound: list[tuple[str, str]] = []
    examined = 0
    samples = 0
    conn_index = -1
    for i in range(hi - lo):
        if not conn_list[i]:
            continue
        conn_index += 1
        examined += 1
        rows = packed[i]
        rho = rho_list[i]
        bsd = _beta_star_doubled_rows(rows, n)
        beta = _beta_rows(rows, n)
        fired_map: dict[str, bool] = {}

        def check(name: str, fired: bool, holds: bool) -> None:
            c = counts.setdefault(name, [0, 0])
            c[0] += 1
            if fired:
                c[1] += 1
            fired_map[name] = fired
            if fired and not holds:
                g6 = to_graph6(Graph._from_rows_unchecked(n, tuple(rows)))
                unsound.append((g6, name))

        if xf is not None:
            delta = min(r.bit_count() for r in rows)
            check("min-degree-fpm", rho < delta * xf - GUARD, bsd == n)
        if fpm_thr is not None:
            check("fpm-spectral", rho > fpm_thr + GUARD, bsd == n)
        if pm_thr is not None:
            check("pm-spectral", rho > pm_thr + GUARD, beta == n // 2)
        for k, thr in bsi:
            check(f"beta-star-increment({HalfIntegral(k)})", rho > thr + GUARD, bsd >= k + 1)
        for b, thr in bi:
            check(f"beta-increment({b})", rho > thr + GUARD, beta >= b + 1)

        if stride and conn_index % stride == 0:
            # cross-check the fast path against the full certify_all route
            g = Graph._from_rows_unchecked(n, tuple(rows))
            report = certify_all(g, verify_truth=True)
            for rec in report.certificates:
                if rec.name in fired_map and rec.applicable and rec.fired != fired_map[rec.name]:
                    unsound.append((to_graph6(g), f"fast-path mismatch on {rec.name}"))
            samples += 1
    return examined, counts, unsound, samples


def verify_certificates(n: int, jobs: int = 1, certify_stride: int = 4096) -> CertSweepReport:
    """Run every certificate over all connected labeled graphs on n vertices.

    Thresholds and truth are evaluated in a tight loop; every
    ``certify_stride``-th graph additionally goes through certify_all as a
    cross-check.  Any fired-but-false certificate is reported.
    """
    if n < 1:
        raise GraphError("verification needs n >= 1")
    if n > 7:
        raise GraphError("certificate sweep capped at n <= 7")
    chunk_args = [(n, lo, hi, certify_stride) for lo, hi in _chunk_ranges(n)]
    partials = _run_chunks(_cert_chunk, jobs, chunk_args)
    counts: dict[str, list[int]] = {}
    unsound: list[tuple[str, str]] = []
    samples = 0
    examined = 0
    for ex, c, u, s in partials:
        examined += ex
        for name, (app, fired) in c.items():
            tgt = counts.setdefault(name, [0, 0])
            tgt[0] += app
            tgt[1] += fired
        unsound.extend(u)
        samples += s
    return CertSweepReport(
        n,
        examined,
        tuple((name, c[0], c[1]) for name, c in sorted(counts.items())),
        tuple(unsound),
        samples,
    )


# ---------------------------------------------------------------------------
# structural audits


@dataclass(frozen=True)
class AuditReport:
    n: int
    graphs: int
    connected_graphs: int
    fpm_graphs: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def _audit_chunk(args: tuple) -> tuple:
    n, lo, hi = args
    pairs = pairs_colex(n)
    violations: list[str] = []
    connected_graphs = 0
    fpm_graphs = 0
    for mask in range(lo, hi):
        rows = tuple(_rows_from_mask(n, mask, pairs))
        g = Graph._from_rows_unchecked(n, rows)
        bsd = _dc_matching_size(rows, n)

        def complain(msg: str) -> None:
            violations.append(f"{to_graph6(g)}: {msg}")

        if bsd == n:
            fpm_graphs += 1
            try:
                fm = optimal_fractional_matching(g)
                if fm.total.doubled != bsd:
                    complain("canonical witness total disagrees with the fractional matching number")
                fpm_partition(g, fm)
            except GraphError as exc:
                complain(f"fractional perfect matching partition failed: {exc}")
        if _rows_connected(list(rows), n):
            connected_graphs += 1
            t = fractional_transversal(g)
            if t.total.doubled != bsd:
                complain("transversal total disagrees with the fractional matching number (duality)")
            rep = wrc_decomposition(g, t, beta_star_doubled=bsd)
            if not rep.r_independent:
                complain("zero-weight class is not independent")
            if not rep.no_rc_edges:
                complain("edge between the zero- and half-weight classes")
            if not rep.connected_rule_ok:
                complain("connected graph has exactly one of W, R empty")
            if rep.eq1_holds is not True:
                complain("optimal transversal violates total = (n - (|R|-|W|))/2")
            if rep.r_geq_w is not True:
                complain("optimal transversal has |R| < |W|")
    return connected_graphs, fpm_graphs, violations


def audit_structures(n: int, jobs: int = 1) -> AuditReport:
    """Per labeled graph: duality, W/R/C properties, and the perfect-matching
    partition succeeding exactly when 2*beta_star = n."""
    if n < 1:
        raise GraphError("audit needs n >= 1")
    if n > 7:
        raise GraphError("structure audit capped at n <= 7")
    chunk_args = [(n, lo, hi) for lo, hi in _chunk_ranges(n)]
    partials = _run_chunks(_audit_chunk, jobs, chunk_args)
    connected_graphs = sum(p[0] for p in partials)
    fpm_graphs = sum(p[1] for p in partials)
    violations: list[str] = []
    for p in partials:
        violations.extend(p[2])
    return AuditReport(n, 1 << (n * (n - 1) // 2), connected_graphs, fpm_graphs, tuple(violations))


def audit_duality(n: int, jobs: int = 1) -> AuditReport:
    """Primal/dual equality and canonical witness shape on every labeled graph."""
    if n < 0 or n > 6:
        raise GraphError("duality audit runs exhaustively for n <= 6 only")
    violations: list[str] = []
    fpm_graphs = 0
    connected_graphs = 0
    for g in enumerate_graphs(n):
        bsd = _dc_matching_size(g.rows, g.n)
        fm = optimal_fractional_matching(g)
        tv = fractional_transversal(g)
        label = to_graph6(g)
        if fm.total.doubled != bsd or tv.total.doubled != bsd:
            violations.append(f"{label}: primal {fm.total} / dual {tv.total} / matching {HalfIntegral(bsd)} differ")
        adj = fm.half_support_adjacency()
        bad_support = any(len(nbrs) != 2 for nbrs in adj.values())
        if not bad_support:
            seen: set[int] = set()
            for v0 in sorted(adj):
                if v0 in seen:
                    continue
                comp = [v0]
                prev, cur = None, v0
                while True:
                    nxt = [x for x in adj[cur] if x != prev][0]
                    if nxt == v0:
                        break
                    comp.append(nxt)
                    prev, cur = cur, nxt
                seen |= set(comp)
                if len(comp) % 2 == 0:
                    bad_support = True
        if bad_support:
            violations.append(f"{label}: half-weight support is not a disjoint union of odd cycles")
        if bsd == n:
            fpm_graphs += 1
        if is_connected(g):
            connected_graphs += 1
    return AuditReport(n, 1 << (n * (n - 1) // 2), connected_graphs, fpm_graphs, tuple(violations))


# ---------------------------------------------------------------------------
# implementation cross-checks


@dataclass(frozen=True)
class CrossCheckReport:
    n: int
    exhaustive: bool
    graphs_checked: int
    mismatches: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _cross_check_one(g: Graph) -> list[str]:
    out = []
    fast = fractional_matching_number(g)
    slow = oracle_beta_star(g)
    if fast != slow:
        out.append(f"{to_graph6(g)}: fractional matching number {fast} != oracle {slow}")
    bfast = matching_number(g).size
    bslow = oracle_beta(g)
    if bfast != bslow:
        out.append(f"{to_graph6(g)}: matching number {bfast} != oracle {bslow}")
    return out


def _cross_chunk(args: tuple) -> list[str]:
    n, lo, hi = args
    pairs = pairs_colex(n)
    out: list[str] = []
    for mask in range(lo, hi):
        g = Graph._from_rows_unchecked(n, tuple(_rows_from_mask(n, mask, pairs)))
        out.extend(_cross_check_one(g))
    return out


def cross_check_matching_implementations(
    n: int, samples: int = 1000, seed: int = 2024, jobs: int = 1
) -> CrossCheckReport:
    """Exhaustive (n <= 6) or sampled comparison of both matching numbers
    against the brute-force oracles."""
    if n < 0:
        raise GraphError("n must be non-negative")
    if n <= 6:
        chunk_args = [(n, lo, hi) for lo, hi in _chunk_ranges(n)]
        partials = _run_chunks(_cross_chunk, jobs, chunk_args)
        mism: list[str] = []
        for p in partials:
            mism.extend(p)
        return CrossCheckReport(n, True, 1 << (n * (n - 1) // 2), tuple(mism))
    if n > 10:
        raise GraphError("sampled cross-check capped at n <= 10")
    rng = random.Random(seed)
    pairs = pairs_colex(n)
    mism = []
    checked = 0
    while checked < samples:
        p = rng.uniform(0.05, 0.95)
        edges = [pair for pair in pairs if rng.random() < p]
        if len(edges) > ORACLE_BETA_STAR_EDGE_CAP:
            continue
        g = Graph(n, edges)
        mism.extend(_cross_check_one(g))
        checked += 1
    return CrossCheckReport(n, False, checked, tuple(mism))


# ---------------------------------------------------------------------------
# the n=8 tie class: 2*beta_star = 5


@dataclass(frozen=True)
class TieCaseReport:
    bound: float
    predicted_g6: tuple[str, ...]
    predicted_rho: tuple[float, ...]
    predicted_in_class: tuple[bool, ...]
    class_graphs_checked: int
    max_rho_in_class: float
    maximizers_match_clique_union: bool
    notes: tuple[str, ...]
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_tie_class_n8(samples: int = 4000, seed: int = 2024) -> TieCaseReport:
    """Check the n=8, 2*beta_star=5 class without the full 2^28 sweep.

    Every graph in the class embeds into one of the two transversal shapes
    K_5 u 3K_1 (s=0) or K_1 v (K_3 u 4K_1) (s=1); the s=2 shape would force
    fractional matching number 2.  Both shape closures are enumerated
    exhaustively (all edge subsets), then random graphs confirm the bound.
    """
    n, d = 8, 5
    pred = predicted_maximizer_general(n, HalfIntegral(d))
    rng = random.Random(seed)
    violations: list[str] = []
    notes = list(pred.notes)

    predicted_rho = tuple(spectral_radius(g).value for g in pred.extremal_graphs)
    predicted_in_class = tuple(fractional_matching_number(g).doubled == d for g in pred.extremal_graphs)
    for g, r in zip(pred.extremal_graphs, predicted_rho):
        if abs(r - pred.bound) > RHO_TOL:
            violations.append(f"predicted graph {to_graph6(g)} has rho {r:.12g}, bound {pred.bound:.12g}")

    clique_union = pred.extremal_graphs[-1]  # K_5 u 3K_1
    max_rho = -1.0
    checked = 0
    maximizers_ok = True

    def consider(g: Graph) -> None:
        nonlocal max_rho, checked, maximizers_ok
        if fractional_matching_number(g).doubled != d:
            return
        checked += 1
        r = spectral_radius(g).value
        if r > pred.bound + RHO_TOL:
            violations.append(f"class graph {to_graph6(g)} exceeds the bound: rho {r:.12g}")
        if r > max_rho:
            max_rho = r
        if r >= pred.bound - RHO_TOL and not is_isomorphic(g, clique_union):
            maximizers_ok = False
            violations.append(f"class graph {to_graph6(g)} attains the bound but is not the clique union")

    # exhaustive over both shape closures (every subset of each shape's edges)
    for shape in (
        clique_union,
        Graph(8, [(0, v) for v in range(1, 8)] + [(1, 2), (1, 3), (2, 3)]),  # K_1 v (K_3 u 4K_1)
    ):
        edges = list(shape.edges())
        for mask in range(1 << len(edges)):
            sub = Graph(8, [e for i, e in enumerate(edges) if mask >> i & 1])
            consider(sub)

    pairs = pairs_colex(n)
    for _ in range(samples):
        p = rng.uniform(0.1, 0.5)
        consider(Graph(n, [pair for pair in pairs if rng.random() < p]))

    if abs(max_rho - pred.bound) > RHO_TOL:
        violations.append(f"class maximum {max_rho:.12g} does not reach the bound {pred.bound:.12g}")
    notes.append(
        "class maximum equals 2beta*-1 = 4, attained only by the clique union; "
        "the split join K_2 v 6K_1 also has rho 4 but lies in the 2beta*=4 class"
    )
    return TieCaseReport(
        pred.bound,
        tuple(to_graph6(g) for g in pred.extremal_graphs),
        predicted_rho,
        predicted_in_class,
        checked,
        max_rho,
        maximizers_ok,
        tuple(notes),
        tuple(violations),
    )
