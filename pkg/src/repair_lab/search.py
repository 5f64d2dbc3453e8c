"""Exhaustive minimum-I/O search over all linear repair schemes, plus bound checks.

A scheme's cost depends only on the B-span of its ell dual codewords, so the
search enumerates ell-dimensional subspaces of the dual code (an (r*ell)-dimensional
space over B, where r = n - k), one reduced-echelon basis per subspace.  Candidates
whose span projects rank-deficiently onto the failed node cannot repair and are
skipped before costing.  Enumeration is partitioned by echelon pivot pattern across
worker processes and merged by (cost, canonical basis) so the result is
deterministic regardless of scheduling; REPAIR_LAB_THREADS caps the workers.

A hard cap (default 10^7 subspaces, pre-checked with the Gaussian binomial
coefficient) refuses searches that cannot finish at interactive scale.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product

from . import linalg
from .construction import build_low_io_scheme, predicted_cost
from .fieldmath import FieldContext
from .rs import RSCode
from .scheme import RepairScheme

SUBSPACE_CAP = 10_000_000
_PARALLEL_THRESHOLD = 50_000


class VerificationError(Exception):
    """A certified bound or cross-check failed; nothing should ever raise this."""


def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an m-dimensional space over GF(q)."""
    if not 0 <= k <= m:
        return 0
    num = den = 1
    for i in range(k):
        num *= q**m - q**i
        den *= q**k - q**i
    assert num % den == 0
    return num // den


# ---- reduced-echelon enumeration ------------------------------------------------


def _free_cells(pivots: tuple[int, ...], m: int) -> list[tuple[int, int]]:
    """Unconstrained matrix positions for a pivot pattern, row-major order."""
    pivset = set(pivots)
    return [
        (r, c)
        for r, p in enumerate(pivots)
        for c in range(p + 1, m)
        if c not in pivset
    ]


def iter_echelon_bases(m: int, k: int, q: int, patterns=None):
    """Every k x m reduced-echelon basis matrix over GF(q), one per subspace,
    as tuples of row tuples.  Restrict to the given pivot patterns if any."""
    if patterns is None:
        patterns = combinations(range(m), k)
    for pivots in patterns:
        cells = _free_cells(pivots, m)
        base = [[0] * m for _ in range(k)]
        for r, p in enumerate(pivots):
            base[r][p] = 1
        for assignment in product(range(q), repeat=len(cells)):
            rows = [row[:] for row in base]
            for (r, c), v in zip(cells, assignment):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


# ---- candidate spaces -------------------------------------------------------------


def _dual_space_data(ctx: FieldContext, r: int, star: int):
    """Per B-basis-vector data for the dual code: the stacked subsymbol-coordinate
    row (length n*ell over B) and the value at the failed node.  Basis vector
    d*ell + t is the polynomial basis[t] * x^d."""
    n = ctx.order
    alpha_star = star - 1  # full-length points are 0..n-1 in order
    rows = []
    vals = []
    for d in range(r):
        powers = [ctx.power(a, d) for a in range(n)]
        for t in range(ctx.ell):
            b = ctx.basis[t]
            values = [ctx.mul(b, p) for p in powers]
            rows.append(tuple(c for v in values for c in ctx.dual_coords(v)))
            vals.append(values[alpha_star])
    return rows, vals


def _rows_to_scheme(ctx: FieldContext, rows, r: int, star: int) -> RepairScheme:
    code = RSCode.full_length(ctx, ctx.order - r)
    duals = []
    for row in rows:
        coeffs = [
            ctx.from_basis_coords(row[d * ctx.ell : (d + 1) * ctx.ell])
            for d in range(r)
        ]
        duals.append(coeffs)
    return RepairScheme(code, star, duals)


def iter_valid_schemes(ctx: FieldContext, r: int, star: int = 1):
    """All distinct valid schemes (one per dual-codeword span) — small spaces only."""
    for rows in iter_echelon_bases(r * ctx.ell, ctx.ell, ctx.q):
        scheme = _rows_to_scheme(ctx, rows, r, star)
        if scheme.validate() is None:
            yield scheme


def _gf2_rank(vectors) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _scan_patterns_gf2(ctx: FieldContext, r: int, star: int, patterns):
    """q = 2 fast path: subsymbol rows and node values packed into bit masks."""
    ell, m = ctx.ell, r * ctx.ell
    rows_data, vals_data = _dual_space_data(ctx, r, star)
    packed = [sum(bit << pos for pos, bit in enumerate(row)) for row in rows_data]
    count = 0
    best = None  # (cost, key, rows)
    for pivots in patterns:
        cells = _free_cells(pivots, m)
        for assignment in product((0, 1), repeat=len(cells)):
            count += 1
            masks = [1 << p for p in pivots]
            for (rr, c), v in zip(cells, assignment):
                if v:
                    masks[rr] |= 1 << c
            vals = []
            for mask in masks:
                acc, mm = 0, mask
                while mm:
                    low = mm & -mm
                    acc ^= vals_data[low.bit_length() - 1]
                    mm ^= low
                vals.append(acc)
            if _gf2_rank(vals) != ell:
                continue
            supp = 0
            for mask in masks:
                acc, mm = 0, mask
                while mm:
                    low = mm & -mm
                    acc ^= packed[low.bit_length() - 1]
                    mm ^= low
                supp |= acc
            cost = bin(supp).count("1") - ell
            if best is None or cost < best[0]:
                key = tuple((mask >> c) & 1 for mask in masks for c in range(m))
                best = (cost, key, tuple(masks))
            elif cost == best[0]:
                key = tuple((mask >> c) & 1 for mask in masks for c in range(m))
                if key < best[1]:
                    best = (cost, key, tuple(masks))
    if best is not None:
        cost, key, masks = best
        rows = tuple(
            tuple((mask >> c) & 1 for c in range(m)) for mask in masks
        )
        best = (cost, key, rows)
    return count, best


def _scan_patterns_generic(ctx: FieldContext, r: int, star: int, patterns):
    q, ell, m = ctx.q, ctx.ell, r * ctx.ell
    rows_data, vals_data = _dual_space_data(ctx, r, star)
    width = len(rows_data[0])
    count = 0
    best = None
    for rows in iter_echelon_bases(m, ell, q, patterns):
        count += 1
        vals = []
        for row in rows:
            acc = 0
            for c, coeff in enumerate(row):
                if coeff:
                    acc = ctx.add(acc, ctx.mul(coeff, vals_data[c]))
            vals.append(acc)
        if linalg.rank([list(ctx.digits(v)) for v in vals], q) != ell:
            continue
        stacked = []
        for row in rows:
            acc = [0] * width
            for c, coeff in enumerate(row):
                if coeff:
                    data = rows_data[c]
                    acc = [(x + coeff * y) % q for x, y in zip(acc, data)]
            stacked.append(acc)
        cost = sum(1 for pos in range(width) if any(g[pos] for g in stacked)) - ell
        if best is None or cost < best[0]:
            best = (cost, tuple(x for row in rows for x in row), rows)
        elif cost == best[0]:
            key = tuple(x for row in rows for x in row)
            if key < best[1]:
                best = (cost, key, rows)
    return count, best


def _scan_chunk(args):
    q, ell, modulus, basis, r, star, patterns = args
    ctx = FieldContext(q, ell, modulus, basis)
    scan = _scan_patterns_gf2 if q == 2 else _scan_patterns_generic
    return scan(ctx, r, star, patterns)


def _resolve_workers(workers: int | None, npatterns: int) -> int:
    if workers is None:
        workers = os.cpu_count() or 1
    env = os.environ.get("REPAIR_LAB_THREADS")
    if env:
        workers = min(workers, max(1, int(env)))
    return max(1, min(workers, npatterns))


def min_io_exhaustive(
    ctx: FieldContext,
    r: int,
    star: int = 1,
    workers: int | None = None,
    cap: int = SUBSPACE_CAP,
) -> tuple[int, RepairScheme]:
    """Certified minimum I/O cost over every linear repair scheme for the
    full-length code with n - k = r parities, plus a witness scheme achieving it
    (the one with lexicographically smallest echelon basis).

    Raises ValueError when the subspace count exceeds the cap.
    """
    n, ell, q = ctx.order, ctx.ell, ctx.q
    if not 2 <= r <= n - 1:
        raise ValueError(f"need 2 <= r <= n-1, got r={r}")
    if not 1 <= star <= n:
        raise ValueError(f"node index must be in 1..{n}, got {star}")
    m = r * ell
    expected = gaussian_binomial(m, ell, q)
    if expected > cap:
        raise ValueError(
            f"search space has {expected} subspaces, over the cap of {cap}"
        )
    patterns = list(combinations(range(m), ell))
    workers = _resolve_workers(workers, len(patterns))
    if workers > 1 and expected >= _PARALLEL_THRESHOLD:
        chunks = [patterns[w::workers] for w in range(workers)]
        args = [
            (q, ell, ctx.modulus, ctx.basis, r, star, chunk) for chunk in chunks
        ]
        results = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, args))
    else:
        scan = _scan_patterns_gf2 if q == 2 else _scan_patterns_generic
        results = [scan(ctx, r, star, patterns)]
    total = sum(count for count, _ in results)
    if total != expected:
        raise VerificationError(
            f"enumerated {total} subspaces, expected {expected}"
        )
    candidates = [best for _, best in results if best is not None]
    if not candidates:
        raise VerificationError("no valid scheme found; the dual code spans F")
    cost, _, rows = min(candidates, key=lambda b: (b[0], b[1]))
    scheme = _rows_to_scheme(ctx, rows, r, star)
    if scheme.validate() is not None or scheme.io_cost_direct() != cost:
        raise VerificationError("witness scheme does not reproduce the minimum")
    return cost, scheme


def verify_bound(
    ctx: FieldContext,
    r: int,
    workers: int | None = None,
    cap: int = SUBSPACE_CAP,
) -> dict:
    """Check a certified lower bound against the construction and, when the
    space is small enough, the exhaustive minimum.

    Bounds: r=2 for any q; r=3 for q=2 (and ell >= 3).  Raises
    VerificationError if the exhaustive minimum ever undercuts the bound or the
    construction undercuts the minimum.
    """
    n, ell, q = ctx.order, ctx.ell, ctx.q
    if r == 2:
        bound = (n - 1) * ell - q ** (ell - 1)
    elif r == 3:
        if q != 2:
            raise ValueError("the r=3 bound is only certified for q=2")
        if ell < 3:
            raise ValueError("the r=3 bound needs ell >= 3")
        bound = (n - 1) * ell - n - 2 ** (ell - 3)
    else:
        raise ValueError(f"no certified bound for r={r}")
    s = 0
    while q ** (s + 1) <= r - 1:
        s += 1
    scheme = build_low_io_scheme(ctx, n - r, s)
    construction = scheme.io_cost_direct()
    if construction != predicted_cost(q, ell, s):
        raise VerificationError(
            f"construction cost {construction} != predicted {predicted_cost(q, ell, s)}"
        )
    subspaces = gaussian_binomial(r * ell, ell, q)
    report = {
        "q": q,
        "ell": ell,
        "r": r,
        "n": n,
        "bound": bound,
        "construction": construction,
        "subspaces": subspaces,
        "searched": subspaces <= cap,
        "min": None,
    }
    if report["searched"]:
        minimum, _ = min_io_exhaustive(ctx, r, workers=workers, cap=cap)
        if minimum < bound:
            raise VerificationError(
                f"exhaustive minimum {minimum} beats the certified bound {bound}"
            )
        if construction < minimum:
            raise VerificationError(
                f"construction cost {construction} beats the exhaustive minimum {minimum}"
            )
        report["min"] = minimum
        report["gap"] = minimum - bound
    else:
        report["gap"] = construction - bound
    return report
