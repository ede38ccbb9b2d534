"""Euler characteristics computed without the Chow ring.

chi_recursive runs the inductive difference identity as an algorithm:
χ(O(D)) − χ(O(D−D_ρ)) equals χ of the restriction on the star fan of ρ.
Divisors are first replaced by a canonical coset representative modulo the
lattice of principal divisors (Hermite reduction), which doubles as the
memoization key and as the termination measure: stepping the first nonzero
coefficient toward zero keeps the representative canonical and strictly
drops its L1 norm. Base cases: dimension ≤ 1 (χ = deg + 1 on the line) and
the trivial class (χ = 1, the Todd-genus fact taken as input).

chi_graded_cohomology sums, over lattice characters m, the alternating sum
of graded cohomology via face counting: the contribution of m is
1 − χ_face(Δ) where Δ is the fan's face complex induced on the rays with
⟨m, u_ρ⟩ < −a_ρ. The scan region is the bounding box of the hyperplane
arrangement's vertices padded by 2, then grown shell by shell until two
consecutive shells contribute exactly 0 (heuristic made safe by checking).

count_lattice_points is the nef-case oracle: when the Cartier data pass the
nef inequalities, χ equals the number of lattice points of the divisor
polytope, counted by bounded enumeration.
"""

from __future__ import annotations

import math
import os
import sys
from functools import lru_cache
from itertools import combinations, product

from . import kernel
from .divisor import TorusDivisor, canonical_divisor, restrict_divisor
from .errors import RecursionBudgetExceeded, ScanRegionError, ToricError
from .fan import Fan, enumerate_faces
from .intlinalg import (
    det_int,
    dot,
    lattice_basis_hnf,
    reduce_mod_lattice,
    solve_rational,
    solve_unimodular,
)
from .todd import chi_hrr

DEFAULT_RECURSION_BUDGET = 1_000_000

# the descend/ascend chains are recursive; keep Python's limit out of the way
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


@lru_cache(maxsize=None)
def _principal_lattice_basis(fan: Fan):
    rows = [[u[i] for u in fan.rays] for i in range(fan.dim)]
    return tuple(tuple(r) for r in lattice_basis_hnf(rows, len(fan.rays)))


def canonical_representative(fan: Fan, coeffs) -> tuple[int, ...]:
    """Unique representative of the divisor class, by Hermite floor-reduction
    against the lattice of principal divisors."""
    return reduce_mod_lattice(tuple(coeffs), [list(r) for r in _principal_lattice_basis(fan)])


_chi_memo: dict = {}


def chi_recursive(fan: Fan, d: TorusDivisor, ray_order=None) -> int:
    """χ(O(D)) by running the induction: descend on positive coefficients
    (χ(D) = χ(D−D_ρ) + χ of the restriction), ascend on negative ones
    (χ(D) = χ(D+D_ρ) − χ of the restriction of D+D_ρ).

    ray_order optionally overrides the scan order used to pick ρ (top fan
    only); the result is provably order-independent, and passing an order
    uses a fresh memo table so different orders genuinely recompute.
    """
    budget = [int(os.environ.get("TORIC_RECURSION_BUDGET", DEFAULT_RECURSION_BUDGET))]
    if ray_order is not None:
        ray_order = tuple(ray_order)
        if sorted(ray_order) != list(range(len(fan.rays))):
            raise ToricError(f"ray_order {ray_order} is not a permutation of the rays")
        memo: dict = {}
    else:
        memo = _chi_memo
    try:
        return _chi(fan, d.coeffs, ray_order, memo, budget)
    except RecursionError:
        raise RecursionBudgetExceeded("python recursion limit hit") from None


def _chi(fan: Fan, coeffs, order, memo, budget) -> int:
    if fan.dim == 0:
        return 1
    if fan.dim == 1:
        # on the line, χ = degree + 1; the coefficient sum is equivalence-invariant
        return sum(coeffs) + 1
    rep = canonical_representative(fan, coeffs)
    if not any(rep):
        return 1
    key = (fan, rep)
    if key in memo:
        return memo[key]
    budget[0] -= 1
    if budget[0] < 0:
        raise RecursionBudgetExceeded(
            "recursion budget exhausted (set TORIC_RECURSION_BUDGET to raise it)"
        )
    scan = order if order is not None else range(len(fan.rays))
    rho = next(i for i in scan if rep[i])
    a = rep[rho]
    if a > 0:
        stepped = tuple(c - 1 if i == rho else c for i, c in enumerate(rep))
        restricted = restrict_divisor(TorusDivisor(fan, rep), rho)
        val = _chi(fan, stepped, order, memo, budget) + _chi(
            restricted.fan, restricted.coeffs, None, memo, budget
        )
    else:
        stepped = tuple(c + 1 if i == rho else c for i, c in enumerate(rep))
        restricted = restrict_divisor(TorusDivisor(fan, stepped), rho)
        val = _chi(fan, stepped, order, memo, budget) - _chi(
            restricted.fan, restricted.coeffs, None, memo, budget
        )
    memo[key] = val
    return val


@lru_cache(maxsize=None)
def _contribution_table(fan: Fan):
    """table[mask] = 1 − χ_face(subcomplex induced on the rays in mask).

    Built for all 2^r masks with a subset-sum sweep; only used for fans
    with at most 16 rays (catalog fans are far smaller).
    """
    r = len(fan.rays)
    size = 1 << r
    chi_face = [0] * size
    for k in range(1, fan.dim + 1):
        sign = 1 if k % 2 == 1 else -1
        for face in enumerate_faces(fan, k):
            mask = 0
            for i in face:
                mask |= 1 << i
            chi_face[mask] += sign
    for b in range(r):
        bit = 1 << b
        for mask in range(size):
            if mask & bit:
                chi_face[mask] += chi_face[mask ^ bit]
    return tuple(1 - v for v in chi_face)


def _arrangement_box(fan: Fan, coeffs):
    """Bounding box of all vertices of {⟨m, u_ρ⟩ = −a_ρ}, padded by 2."""
    n = fan.dim
    los = [None] * n
    his = [None] * n
    for sub in combinations(range(len(fan.rays)), n):
        a = [list(fan.rays[i]) for i in sub]
        if det_int(a) == 0:
            continue
        rhs = [-coeffs[i] for i in sub]
        m = solve_rational(a, rhs)
        for i, x in enumerate(m):
            lo = math.floor(x)
            hi = math.ceil(x)
            los[i] = lo if los[i] is None or lo < los[i] else los[i]
            his[i] = hi if his[i] is None or hi > his[i] else his[i]
    if any(x is None for x in los):
        raise ToricError("no arrangement vertices; fan rays do not span")
    return tuple(x - 2 for x in los), tuple(x + 2 for x in his)


def _shell_slabs(lo, hi):
    """The shell around [lo, hi] as disjoint boxes: for each axis j, the two
    slabs where coordinate j sits just outside, axes < j stay inside, and
    axes > j range over the grown box."""
    n = len(lo)
    for j in range(n):
        head_lo = [lo[i] if i < j else lo[i] - 1 for i in range(n)]
        head_hi = [hi[i] if i < j else hi[i] + 1 for i in range(n)]
        for side in (lo[j] - 1, hi[j] + 1):
            s_lo = list(head_lo)
            s_hi = list(head_hi)
            s_lo[j] = s_hi[j] = side
            yield tuple(s_lo), tuple(s_hi)


_MAX_SHELLS = 32


def _scan(fan: Fan, coeffs):
    n = fan.dim
    if n == 0:
        return 1, (), (), 0
    rays = [list(u) for u in fan.rays]
    bounds = [-a for a in coeffs]
    lo, hi = _arrangement_box(fan, coeffs)
    if len(fan.rays) <= 16:
        table = list(_contribution_table(fan))
        def region_sum(rlo, rhi):
            return kernel.box_sum(rlo, rhi, rays, bounds, table)
    else:
        region_sum = _lazy_region_sum(fan, bounds)
    total = region_sum(lo, hi)
    zeros = 0
    for shells in range(_MAX_SHELLS):
        s = sum(region_sum(slo, shi) for slo, shi in _shell_slabs(lo, hi))
        total += s
        if s == 0:
            zeros += 1
            if zeros == 2:
                return total, lo, hi, shells + 1
        else:
            zeros = 0
        lo = tuple(x - 1 for x in lo)
        hi = tuple(x + 1 for x in hi)
    raise ScanRegionError(
        f"cohomology scan did not stabilize within {_MAX_SHELLS} shells"
    )


def _lazy_region_sum(fan: Fan, bounds):
    """Fallback for many-ray fans: per-mask contributions computed on demand."""
    faces = [
        (sum(1 << i for i in face), 1 if len(face) % 2 == 1 else -1)
        for k in range(1, fan.dim + 1)
        for face in enumerate_faces(fan, k)
    ]
    cache: dict[int, int] = {}
    rays = fan.rays

    def contribution(mask: int) -> int:
        got = cache.get(mask)
        if got is None:
            chi_face = sum(s for fmask, s in faces if fmask & mask == fmask)
            got = cache[mask] = 1 - chi_face
        return got

    def region_sum(rlo, rhi):
        if any(l > h for l, h in zip(rlo, rhi)):
            return 0
        total = 0
        for m in product(*(range(l, h + 1) for l, h in zip(rlo, rhi))):
            mask = 0
            for k, u in enumerate(rays):
                if dot(m, u) < bounds[k]:
                    mask |= 1 << k
            total += contribution(mask)
        return total

    return region_sum


def chi_graded_cohomology(fan: Fan, d: TorusDivisor) -> int:
    """χ(O(D)) as Σ_m (1 − χ_face(Δ_{D,m})) over the verified scan region."""
    total, _, _, _ = _scan(fan, d.coeffs)
    return total


def cohomology_scan_detail(fan: Fan, d: TorusDivisor):
    """(chi, final box lo, final box hi, shells examined) — for inspection
    and for tests of the shell-stability invariant."""
    return _scan(fan, d.coeffs)


def cartier_data(fan: Fan, d: TorusDivisor) -> list[tuple[int, ...]]:
    """m_σ per maximal cone with ⟨m_σ, u_ρ⟩ = −a_ρ on the cone's rays."""
    out = []
    for cone in fan.max_cones:
        rhs = [-d.coeffs[i] for i in cone]
        out.append(solve_unimodular(fan.ray_matrix(cone), rhs))
    return out


def is_nef(fan: Fan, d: TorusDivisor) -> bool:
    """Cartier-data inequalities ⟨m_σ, u_γ⟩ ≥ −a_γ at every cone, every ray."""
    if fan.dim == 0:
        return True
    for m in cartier_data(fan, d):
        for g, u in enumerate(fan.rays):
            if dot(m, u) < -d.coeffs[g]:
                return False
    return True


def count_lattice_points(fan: Fan, d: TorusDivisor):
    """|P_D ∩ M| for nef D (P_D = {m : ⟨m, u_ρ⟩ ≥ −a_ρ}); None if not nef.

    For nef divisors on complete fans the polytope is the convex hull of
    the Cartier data, so their bounding box bounds the enumeration.
    """
    if fan.dim == 0:
        return 1
    if not is_nef(fan, d):
        return None
    data = cartier_data(fan, d)
    lo = [min(m[i] for m in data) for i in range(fan.dim)]
    hi = [max(m[i] for m in data) for i in range(fan.dim)]
    count = 0
    for m in product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if all(dot(m, u) >= -a for u, a in zip(fan.rays, d.coeffs)):
            count += 1
    return count


CHI_METHODS = {
    "hrr": chi_hrr,
    "recursive": chi_recursive,
    "cohomology": chi_graded_cohomology,
}


def chi_by_method(fan: Fan, d: TorusDivisor, method: str) -> int:
    try:
        fn = CHI_METHODS[method]
    except KeyError:
        raise ToricError(f"unknown chi method {method!r}") from None
    return fn(fan, d)


def serre_duality_check(fan: Fan, d: TorusDivisor, method: str = "hrr") -> bool:
    """χ(D) == (−1)^n · χ(K − D) with both sides by the selected method."""
    k = canonical_divisor(fan)
    lhs = chi_by_method(fan, d, method)
    rhs = chi_by_method(fan, k - d, method)
    return lhs == (-1) ** fan.dim * rhs
