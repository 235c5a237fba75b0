"""Common neighbours, 2-path neighbourhoods and exhaustive censuses on AQ_n.

Set algebra in the censuses runs on Python ints used as ``2^n``-bit
vertex masks; ``int.bit_count`` gives set sizes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal

from augcube.core import (
    EdgeKind,
    check_dim,
    check_vertex,
    classify_edge,
    comp_neighbor,
    hyper_neighbor,
    neighbor_masks,
    neighbors,
)
from augcube.errors import ArgumentError, CapacityError, UnsupportedDimension

Family = Literal["HH", "CC", "HC"]

MAX_VIOLATIONS_KEPT = 100


def common_neighbors(x: int, y: int, n: int) -> set[int]:
    """Brute-force ``N(x) ∩ N(y)``."""
    if x == y:
        raise ArgumentError("common_neighbors needs two distinct vertices")
    return neighbors(x, n) & neighbors(y, n)


def common_neighbors_formula(x: int, kind: EdgeKind, n: int) -> set[int]:
    """Closed-form common neighbourhood of the edge ``x -- kind.endpoint(x)``."""
    check_dim(n)
    if kind.dim > n or n < 2:
        raise ArgumentError(f"{kind} is not an edge of AQ_{n}")
    i = kind.dim
    h = lambda k: hyper_neighbor(x, k, n)  # noqa: E731
    c = lambda k: comp_neighbor(x, k, n)  # noqa: E731
    if kind.is_hypercube:
        if i == 1:
            return {h(2), c(2)}
        return {c(i), c(i - 1)}
    if i < n:
        return {h(i), h(i + 1), c(i - 1), c(i + 1)}
    return {c(n - 1), h(n)}


def neighborhood_of_set(vertices: Iterable[int], n: int) -> set[int]:
    """``N(T)``: every neighbour of some member of ``T``, minus ``T`` itself."""
    t = set(vertices)
    if not t:
        raise ArgumentError("vertex set must be nonempty")
    out: set[int] = set()
    for v in t:
        out |= neighbors(v, n)
    return out - t


def edge_boundary(vertices: Iterable[int], n: int) -> set[tuple[int, int]]:
    """Edges with exactly one endpoint in ``T``, each as ``(min, max)``."""
    t = set(vertices)
    if not t:
        raise ArgumentError("vertex set must be nonempty")
    out = set()
    for u in t:
        for v in neighbors(u, n):
            if v not in t:
                out.add((min(u, v), max(u, v)))
    return out


# --- 2-path classification -------------------------------------------------
#
# Rows are tested top to bottom; the first matching row wins. Offsets are the
# ``k`` in ``|N(P)| = 6n - k``.

_HH_ROWS = (
    ("i=1,j=2,3", lambda i, j, n: i == 1 and j in (2, 3), 13),
    ("i>1,j=i+1", lambda i, j, n: i > 1 and j == i + 1, 13),
    ("otherwise", lambda i, j, n: True, 12),
)

_CC_ROWS = (
    ("j=i+1,j<n", lambda i, j, n: j == i + 1 and j < n, 15),
    ("j=i+1,j=n", lambda i, j, n: j == i + 1 and j == n, 13),
    ("j=i+2,j<n", lambda i, j, n: j == i + 2 and j < n, 17),
    ("j=i+2,j=n", lambda i, j, n: j == i + 2 and j == n, 15),
    ("j>=i+3,j<n", lambda i, j, n: j >= i + 3 and j < n, 16),
    ("j>=i+3,j=n", lambda i, j, n: j >= i + 3 and j == n, 14),
)

_HC_ROWS = (
    ("i=1,j=2", lambda i, j, n: i == 1 and j == 2, 13),
    ("i=1,j=3", lambda i, j, n: i == 1 and j == 3, 15),
    ("i=1,4<=j<n", lambda i, j, n: i == 1 and 4 <= j < n, 14),
    ("i=1,j=n", lambda i, j, n: i == 1 and j == n, 12),
    ("i=j=2", lambda i, j, n: i == j == 2, 13),
    ("3<=i=j<=n-1", lambda i, j, n: i == j and 3 <= i <= n - 1, 15),
    ("i=j=n", lambda i, j, n: i == j == n, 13),
    (
        "j=i-1,3<=i<=n-1|j=i+1,2<=i<=n-2",
        lambda i, j, n: (j == i - 1 and 3 <= i <= n - 1) or (j == i + 1 and 2 <= i <= n - 2),
        15,
    ),
    ("j=i-1,i=n", lambda i, j, n: j == i - 1 and i == n, 13),
    ("j=n,i=n-1", lambda i, j, n: j == n and i == n - 1, 13),
    ("j=i-2,i>=4", lambda i, j, n: j == i - 2 and i >= 4, 15),
    (
        "j<=i-3,i>=5|j>=i+2,j<n",
        lambda i, j, n: (j <= i - 3 and i >= 5) or (j >= i + 2 and j < n),
        14,
    ),
    ("j>=i+2,j=n", lambda i, j, n: j >= i + 2 and j == n, 12),
)

_ROWS = {"HH": _HH_ROWS, "CC": _CC_ROWS, "HC": _HC_ROWS}
_OFFSETS = {(fam, label): k for fam, rows in _ROWS.items() for label, _, k in rows}


@dataclass(frozen=True)
class PathClass:
    family: Family
    row: str
    i: int
    j: int

    @property
    def key(self) -> str:
        return f"{self.family}:{self.row}"


@dataclass(frozen=True)
class PathTriple:
    """An unordered 2-path ``(Y, X, Z)`` centred at ``X``."""

    center: int
    ends: tuple[int, int]

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.ends[0], self.center, self.ends[1])


def match_row(family: Family, i: int, j: int, n: int) -> str:
    for label, pred, _ in _ROWS[family]:
        if pred(i, j, n):
            return label
    raise ArgumentError(f"no {family} row matches i={i}, j={j}, n={n}")


def expected_size(cls: PathClass | str, n: int) -> int:
    """Tabulated ``|N(P)|`` for a path class at dimension ``n``."""
    if isinstance(cls, PathClass):
        family, row = cls.family, cls.row
    else:
        family, row = cls.split(":", 1)
    try:
        return 6 * n - _OFFSETS[(family, row)]
    except KeyError:
        raise ArgumentError(f"unknown path class {family}:{row}") from None


def canonical_path(p: PathTriple, n: int) -> tuple[PathTriple, PathClass]:
    """Normalize end order (hypercube end first, lower dimension first) and classify."""
    if n < 5:
        raise UnsupportedDimension(f"2-path tables hold for n >= 5, got n={n}")
    x = p.center
    y, z = p.ends
    if y == z:
        raise ArgumentError("path ends must differ")
    ky, kz = classify_edge(x, y, n), classify_edge(x, z, n)
    if ky is None or kz is None:
        raise ArgumentError("path ends must be neighbours of the centre")
    if ky.is_hypercube != kz.is_hypercube:
        if not ky.is_hypercube:
            y, z, ky, kz = z, y, kz, ky
        family = "HC"
    else:
        if ky.dim > kz.dim:
            y, z, ky, kz = z, y, kz, ky
        family = "HH" if ky.is_hypercube else "CC"
    i, j = ky.dim, kz.dim
    return PathTriple(x, (y, z)), PathClass(family, match_row(family, i, j, n), i, j)


def path2_class(p: PathTriple, n: int) -> PathClass:
    return canonical_path(p, n)[1]


# --- census reports --------------------------------------------------------


@dataclass
class CensusReport:
    """Outcome of one exhaustive scan.

    ``extras`` holds scalar statistics; on merge keys ending in ``_max`` take
    the max, keys ending in ``_min`` take the min, anything else must agree.
    """

    check: str
    n: int
    total: int = 0
    class_counts: dict[str, int] = field(default_factory=dict)
    class_sizes: dict[str, list[int]] = field(default_factory=dict)
    min_observed: int | None = None
    max_observed: int | None = None
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0
    extras: dict[str, int | None] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def observe(self, key: str, size: int) -> None:
        self.total += 1
        self.class_counts[key] = self.class_counts.get(key, 0) + 1
        sizes = self.class_sizes.setdefault(key, [])
        if size not in sizes:
            sizes.append(size)
        if self.min_observed is None or size < self.min_observed:
            self.min_observed = size
        if self.max_observed is None or size > self.max_observed:
            self.max_observed = size

    def violate(self, **witness) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_VIOLATIONS_KEPT:
            self.violations.append(witness)

    def merge(self, other: CensusReport) -> CensusReport:
        if (self.check, self.n) != (other.check, other.n):
            raise ArgumentError("cannot merge reports of different checks")
        out = CensusReport(self.check, self.n)
        out.total = self.total + other.total
        for key in sorted(set(self.class_counts) | set(other.class_counts)):
            out.class_counts[key] = self.class_counts.get(key, 0) + other.class_counts.get(key, 0)
            out.class_sizes[key] = sorted(
                set(self.class_sizes.get(key, [])) | set(other.class_sizes.get(key, []))
            )
        out.min_observed = _pick(min, self.min_observed, other.min_observed)
        out.max_observed = _pick(max, self.max_observed, other.max_observed)
        out.violation_count = self.violation_count + other.violation_count
        out.violations = (self.violations + other.violations)[:MAX_VIOLATIONS_KEPT]
        for key in sorted(set(self.extras) | set(other.extras)):
            a, b = self.extras.get(key), other.extras.get(key)
            if key.endswith("_max"):
                out.extras[key] = _pick(max, a, b)
            elif key.endswith("_min"):
                out.extras[key] = _pick(min, a, b)
            elif a is not None and b is not None and a != b:
                raise ArgumentError(f"extras[{key!r}] disagree: {a} vs {b}")
            else:
                out.extras[key] = a if a is not None else b
        out.elapsed = self.elapsed + other.elapsed
        return out

    def normalized(self) -> CensusReport:
        """Sorted keys and size lists, for deterministic serialization."""
        self.class_counts = dict(sorted(self.class_counts.items()))
        self.class_sizes = {k: sorted(v) for k, v in sorted(self.class_sizes.items())}
        self.extras = dict(sorted(self.extras.items()))
        return self


def _pick(fn, a, b):
    if a is None:
        return b
    if b is None:
        return a
    return fn(a, b)


@lru_cache(maxsize=4)
def vertex_masks(n: int) -> tuple[int, ...]:
    """Neighbour bitmask of every vertex of AQ_n."""
    check_dim(n, 16)
    out = []
    for x in range(1 << n):
        m = 0
        for d in neighbor_masks(n):
            m |= 1 << (x ^ d)
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _pair_table(n: int) -> tuple[tuple[int, int, str, int, bool], ...]:
    """Per unordered neighbour-pair of a centre: (mask_y, mask_z, class, expected, z_is_xbar_n).

    Independent of the centre because neighbours are ``X ^ mask``.
    """
    ms = neighbor_masks(n)
    xbar_n = (1 << n) - 1
    rows = []
    for a in range(len(ms)):
        for b in range(a + 1, len(ms)):
            # masks are listed hypercube dims first, so Y is canonical already
            _, cls = canonical_path(PathTriple(0, (ms[a], ms[b])), n)
            rows.append((ms[a], ms[b], cls.key, expected_size(cls, n), ms[b] == xbar_n))
    return tuple(rows)


def _check_range(n: int, lo: int, hi: int, what: str, exploratory: bool = False) -> None:
    check_dim(n)
    if n < lo and not exploratory:
        raise UnsupportedDimension(f"{what} is defined for n >= {lo}, got n={n}")
    if n > hi:
        raise CapacityError(f"{what} exhaustive budget is n <= {hi}, got n={n}")


def _centers(n: int, centers: range | None) -> range:
    full = range(1 << n)
    if centers is None:
        return full
    if centers.start < 0 or centers.stop > full.stop:
        raise ArgumentError(f"centre range {centers} outside 0..{full.stop}")
    return centers


def _path2_scan(n: int, lo: int, hi: int) -> CensusReport:
    t0 = time.perf_counter()
    rep = CensusReport("path2", n)
    masks = vertex_masks(n)
    table = _pair_table(n)
    bound = 6 * n - 17
    sub_bound = 6 * n - 15
    triple_max = 0
    sub_min = None
    for x in range(lo, hi):
        mx = masks[x]
        bx = 1 << x
        for my, mz, key, expected, z_is_xbar_n in table:
            y, z = x ^ my, x ^ mz
            m_y, m_z = masks[y], masks[z]
            size = ((mx | m_y | m_z) & ~(bx | (1 << y) | (1 << z))).bit_count()
            triple = (mx & m_y & m_z).bit_count()
            rep.observe(key, size)
            if triple > triple_max:
                triple_max = triple
            if size != expected:
                rep.violate(check="table", X=x, Y=y, Z=z, cls=key, observed=size, expected=expected)
            if size < bound:
                rep.violate(check="bound", X=x, Y=y, Z=z, cls=key, observed=size, expected=bound)
            if triple > 1:
                rep.violate(check="triple", X=x, Y=y, Z=z, cls=key, observed=triple, expected=1)
            if z_is_xbar_n:
                if sub_min is None or size < sub_min:
                    sub_min = size
                if size < sub_bound:
                    rep.violate(
                        check="xbar_n-bound", X=x, Y=y, Z=z, cls=key, observed=size, expected=sub_bound
                    )
    rep.extras = {"triple_max": triple_max, "xbar_n_min": sub_min}
    rep.elapsed = time.perf_counter() - t0
    return rep


def _run_ranges(fn, n: int, centers: range, workers: int) -> CensusReport:
    if workers <= 1 or len(centers) < 2:
        return fn(n, centers.start, centers.stop)
    step = max(1, -(-len(centers) // (workers * 4)))
    bounds = [(s, min(s + step, centers.stop)) for s in range(centers.start, centers.stop, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, [n] * len(bounds), *zip(*bounds)))
    out = parts[0]
    for part in parts[1:]:
        out = out.merge(part)
    return out


def census_path2(
    n: int, centers: range | None = None, workers: int = 1, exploratory: bool = False
) -> CensusReport:
    """Scan every unordered 2-path of AQ_n and compare ``|N(P)|`` with the case tables.

    Checks, per path: tabulated size, ``|N(P)| >= 6n-17``, triple common
    neighbourhood ``<= 1`` and ``|N(P)| >= 6n-15`` when ``Z = X̄_n``. A full scan
    also requires the minimum ``6n-17`` to be attained. ``exploratory`` lets
    ``n = 4`` through; those results carry no pass/fail meaning.
    """
    if exploratory and n == 4:
        check_dim(n)
        rep = _exploratory_path2(n)
    else:
        _check_range(n, 5, 12, "2-path census")
        span = _centers(n, centers)
        rep = _run_ranges(_path2_scan, n, span, workers)
        if centers is None and rep.min_observed != 6 * n - 17:
            rep.violate(check="attained", observed=rep.min_observed, expected=6 * n - 17)
    rep.extras["bound"] = 6 * n - 17
    return rep.normalized()


def _exploratory_path2(n: int) -> CensusReport:
    t0 = time.perf_counter()
    rep = CensusReport("path2-exploratory", n)
    masks = vertex_masks(n)
    ms = neighbor_masks(n)
    triple_max = 0
    for x in range(1 << n):
        for a in range(len(ms)):
            for b in range(a + 1, len(ms)):
                y, z = x ^ ms[a], x ^ ms[b]
                size = ((masks[x] | masks[y] | masks[z]) & ~((1 << x) | (1 << y) | (1 << z))).bit_count()
                ky, kz = classify_edge(x, y, n), classify_edge(x, z, n)
                rep.observe(f"{ky}/{kz}", size)
                triple_max = max(triple_max, (masks[x] & masks[y] & masks[z]).bit_count())
    rep.extras = {"triple_max": triple_max}
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_edge_common_neighbors(n: int) -> CensusReport:
    """Every edge has 2 or 4 common neighbours, and they match the closed forms."""
    _check_range(n, 3, 10, "edge common-neighbour check")
    t0 = time.perf_counter()
    rep = CensusReport("edge-common", n)
    masks = vertex_masks(n)
    max_seen = 0
    for x in range(1 << n):
        for d in neighbor_masks(n):
            y = x ^ d
            if y < x:
                continue
            common = masks[x] & masks[y]
            size = common.bit_count()
            max_seen = max(max_seen, size)
            rep.observe(f"common={size}", size)
            kind = classify_edge(x, y, n)
            formula = sum(1 << v for v in common_neighbors_formula(x, kind, n))
            if size not in (2, 4):
                rep.violate(check="two-or-four", X=x, Y=y, kind=str(kind), observed=size)
            if formula != common:
                rep.violate(
                    check="formula",
                    X=x,
                    Y=y,
                    kind=str(kind),
                    observed=_bits(common),
                    expected=_bits(formula),
                )
    rep.extras = {"common_max": max_seen}
    rep.elapsed = time.perf_counter() - t0
    return rep.normalized()


def verify_pair_common_neighbors(n: int) -> CensusReport:
    """Any two distinct vertices share at most four neighbours."""
    _check_range(n, 3, 8, "pair common-neighbour check")
    t0 = time.perf_counter()
    rep = CensusReport("pair-common", n)
    masks = vertex_masks(n)
    size_v = 1 << n
    max_seen = 0
    for x in range(size_v):
        mx = masks[x]
        for y in range(x + 1, size_v):
            size = (mx & masks[y]).bit_count()
            rep.observe(f"common={size}", size)
            if size > max_seen:
                max_seen = size
            if size > 4:
                rep.violate(check="at-most-four", X=x, Y=y, observed=size)
    rep.extras = {"common_max": max_seen}
    rep.elapsed = time.perf_counter() - t0
    return rep.normalized()


def _quad_scan(n: int, lo: int, hi: int) -> CensusReport:
    t0 = time.perf_counter()
    rep = CensusReport("quad", n)
    masks = vertex_masks(n)
    table = _pair_table(n)
    bound, sub_bound = 8 * n - 31, 8 * n - 29
    sub_min = None
    for x in range(lo, hi):
        mx = masks[x]
        for my, mz, key, _, z_is_xbar_n in table:
            y, z = x ^ my, x ^ mz
            p_bits = (1 << x) | (1 << y) | (1 << z)
            n_p = (mx | masks[y] | masks[z]) & ~p_bits
            need = sub_bound if z_is_xbar_n else bound
            rest = n_p
            while rest:
                low = rest & -rest
                rest ^= low
                u = low.bit_length() - 1
                size = ((n_p | masks[u]) & ~(p_bits | low)).bit_count()
                rep.observe(key, size)
                if z_is_xbar_n and (sub_min is None or size < sub_min):
                    sub_min = size
                if size < need:
                    rep.violate(check="quad-bound", X=x, Y=y, Z=z, U=u, cls=key, observed=size, expected=need)
    rep.extras = {"xbar_n_min": sub_min}
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_quad_bound(n: int, centers: range | None = None, workers: int = 1) -> CensusReport:
    """``|N({X, Y, Z, U})| >= 8n-31`` for every 2-path and every ``U`` in ``N(P)``.

    The bound rises to ``8n-29`` when ``Z = X̄_n``. Observed minima are
    reported; tightness is not asserted.
    """
    _check_range(n, 5, 9, "quad bound check")
    rep = _run_ranges(_quad_scan, n, _centers(n, centers), workers)
    rep.extras["bound"] = 8 * n - 31
    rep.extras["xbar_n_bound"] = 8 * n - 29
    return rep.normalized()


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def path_neighborhood(p: PathTriple, n: int) -> set[int]:
    for v in p.vertices:
        check_vertex(v, n)
    return neighborhood_of_set(p.vertices, n)
