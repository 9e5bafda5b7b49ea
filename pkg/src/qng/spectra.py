"""Spectra of graph matrices: float screening plus exact certification.

Float eigenvalues come from LAPACK's dense symmetric solver through numpy and
are used only for screening.  Whenever a quantity sits within the escalation
window of a bound, decisions are re-made exactly: integer characteristic
polynomials via the Faddeev-LeVerrier recurrence, Sturm-sequence root
counting, and isolating-interval comparisons of algebraic eigenvalues.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from . import polys
from .graph import Graph, complement
from .polys import Poly, RootWindow

#: Default float screening tolerance for inequality checks.
DEFAULT_TOL = 1e-9

#: Any bound within this distance of equality is decided exactly.
ESCALATION_WINDOW = 1e-6

MatrixLike = Union[np.ndarray, Sequence[Sequence]]


def screening_tol() -> float:
    """Float tolerance for inequality screening; QNG_TOL overrides the default."""
    raw = os.environ.get("QNG_TOL")
    if raw is None:
        return DEFAULT_TOL
    return float(raw)


# ---------------------------------------------------------------------------
# Matrix builders


def a_matrix(g: Graph) -> np.ndarray:
    mat = np.zeros((g.n, g.n), dtype=np.int64)
    for v in range(g.n):
        row = g.rows[v]
        for u in range(g.n):
            if row >> u & 1:
                mat[v, u] = 1
    return mat


def d_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degrees(), dtype=np.int64))


def q_matrix(g: Graph) -> np.ndarray:
    """Signless Laplacian D + A."""
    return d_matrix(g) + a_matrix(g)


def l_matrix(g: Graph) -> np.ndarray:
    """Laplacian D - A."""
    return d_matrix(g) - a_matrix(g)


_KIND_BUILDERS = {"A": a_matrix, "L": l_matrix, "Q": q_matrix}


def matrix_of_kind(g: Graph, kind: str) -> np.ndarray:
    try:
        return _KIND_BUILDERS[kind](g)
    except KeyError:
        raise ValueError(f"unknown matrix kind {kind!r}") from None


# ---------------------------------------------------------------------------
# Float spectra


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of a symmetric matrix, sorted in non-increasing order."""

    values: tuple[float, ...]
    source: str
    tol: float

    def value(self, k: int) -> float:
        """The k-th largest eigenvalue, 1-based."""
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)


def eigenvalues_sym(mat: MatrixLike, source: str = "?", tol: float | None = None) -> Spectrum:
    """All eigenvalues of a symmetric matrix, descending."""
    arr = np.asarray(mat, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix must be symmetric")
    vals = np.linalg.eigvalsh(arr)[::-1]
    return Spectrum(tuple(float(v) for v in vals), source, tol if tol is not None else screening_tol())


@lru_cache(maxsize=1 << 15)
def spectrum(g: Graph, kind: str = "Q") -> Spectrum:
    return eigenvalues_sym(matrix_of_kind(g, kind), source=kind)


def q_spectrum(g: Graph) -> Spectrum:
    return spectrum(g, "Q")


def ng_sum(g: Graph, kind: str = "Q", k: int = 2) -> float:
    """k-th eigenvalue of the kind-matrix of g plus the same of its complement."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} outside 1..{g.n}")
    return spectrum(g, kind).value(k) + spectrum(complement(g), kind).value(k)


# ---------------------------------------------------------------------------
# Exact characteristic polynomials


@dataclass(frozen=True)
class CharPoly:
    """Exact monic characteristic polynomial det(xI - M), ascending coefficients."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_poly(self) -> Poly:
        return list(self.coeffs)

    def eval(self, x) -> Fraction:
        return polys.poly_eval(self.as_poly(), Fraction(x))


def _exact_rows(mat: MatrixLike) -> list[list[Fraction]]:
    if isinstance(mat, np.ndarray):
        return [[Fraction(int(v)) for v in row] for row in mat]
    return [[Fraction(v) for v in row] for row in mat]


def char_poly_exact(mat: MatrixLike) -> CharPoly:
    """Faddeev-LeVerrier recurrence over exact rationals.

    For M of order k: N_1 = M, c_j = -trace(M N_j)/j, N_{j+1} = M N_j + c_j I;
    the characteristic polynomial is x^k + c_1 x^{k-1} + ... + c_k.  For
    integer matrices every c_j is an integer.
    """
    rows = _exact_rows(mat)
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ValueError("matrix must be square")
    coeffs_desc = [Fraction(1)]
    acc = [[Fraction(1) if i == j else Fraction(0) for j in range(k)] for i in range(k)]
    for step in range(1, k + 1):
        prod = [
            [sum(rows[i][t] * acc[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
        c = -sum(prod[i][i] for i in range(k)) / step
        coeffs_desc.append(c)
        for i in range(k):
            prod[i][i] += c
        acc = prod
    return CharPoly(tuple(reversed(coeffs_desc)))


@lru_cache(maxsize=1 << 14)
def kind_char_poly(g: Graph, kind: str) -> CharPoly:
    return char_poly_exact(matrix_of_kind(g, kind))


def q_char_poly(g: Graph) -> CharPoly:
    return kind_char_poly(g, "Q")


# ---------------------------------------------------------------------------
# Exact root counting and certification


def sturm_count(p: CharPoly | Poly, lo, hi) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("lo > hi")
    coeffs = p.as_poly() if isinstance(p, CharPoly) else polys.poly(p)
    return polys.SturmChain(coeffs).count_halfopen(lo, hi)


def multiplicity_at(p: CharPoly | Poly, r) -> int:
    """Exact multiplicity of the rational ``r`` as a root."""
    coeffs = p.as_poly() if isinstance(p, CharPoly) else polys.poly(p)
    return polys.multiplicity_at(coeffs, Fraction(r))


def certify_qk(g: Graph, k: int, r) -> bool:
    """Exact certificate that the k-th largest Q-eigenvalue equals rational r.

    Requires r to be a root of the characteristic polynomial with fewer than
    k eigenvalues strictly above it and at least k eigenvalues at or above
    it, all counted with multiplicity.  Never consults floating point.
    """
    if not 1 <= k <= g.n:
        return False
    r = Fraction(r)
    p = q_char_poly(g).as_poly()
    mult = polys.multiplicity_at(p, r)
    if mult < 1:
        return False
    counter = polys.RootCounter(p)
    above = counter.count_gt(r)
    return above < k <= above + mult


def qk_window(g: Graph, k: int) -> RootWindow:
    """Isolating window for the k-th largest Q-eigenvalue (with multiplicity)."""
    return polys.isolate_kth_largest(q_char_poly(g).as_poly(), k)


def compare_qk_with(g: Graph, k: int, c) -> int:
    """Exact sign of (k-th largest Q-eigenvalue of g) - c for rational c."""
    c = Fraction(c)
    p = q_char_poly(g).as_poly()
    counter = polys.RootCounter(p)
    above = counter.count_gt(c)
    if above >= k:
        return 1
    if above + polys.multiplicity_at(p, c) >= k:
        return 0
    return -1


def compare_sum_with(g: Graph, kind: str, k: int, c, k_complement: int | None = None) -> int:
    """Exact sign of (k-th eigenvalue of g plus k_complement-th of complement) - c.

    Writes the sum condition as a comparison between the k_complement-th
    largest root of the complement's characteristic polynomial and the k-th
    smallest root of p(c - x), where p belongs to the kind-matrix of G; equal
    roots are certified via a common factor, so equality is decided exactly.
    """
    kc = k if k_complement is None else k_complement
    if not 1 <= k <= g.n or not 1 <= kc <= g.n:
        raise ValueError(f"eigenvalue index outside 1..{g.n}")
    c = Fraction(c)
    p = kind_char_poly(g, kind).as_poly()
    pb = kind_char_poly(complement(g), kind).as_poly()
    reflected = polys.poly_compose_linear(p, Fraction(-1), c)
    if reflected[-1] < 0:
        reflected = polys.poly_neg(reflected)
    return polys.compare_kth_roots(pb, kc, reflected, g.n - k + 1)


def compare_q2_sum_with(g: Graph, c) -> int:
    """Exact sign of (q_2(G) + q_2(complement G)) - c for rational c."""
    return compare_sum_with(g, "Q", 2, c)


def compare_q1(g: Graph, h: Graph) -> int:
    """Exact sign of q_1(g) - q_1(h)."""
    return polys.compare_kth_roots(q_char_poly(g).as_poly(), 1, q_char_poly(h).as_poly(), 1)


def compare_sum_vs_radical(g: Graph, kind: str, k: int, base, rad) -> int:
    """Exact sign of (eigenvalue sum of g and complement) - (base + sqrt(rad)).

    ``base`` and ``rad`` are rational with rad >= 0.  Interval refinement
    separates the algebraic sum from the radical; an exact hit on an
    irrational bound cannot terminate and raises ArithmeticError.
    """
    base, rad = Fraction(base), Fraction(rad)
    if rad < 0:
        raise ValueError("radicand must be nonnegative")
    if rad == 0:
        return compare_sum_with(g, kind, k, base)
    wa = polys.isolate_kth_largest(kind_char_poly(g, kind).as_poly(), k)
    wb = polys.isolate_kth_largest(kind_char_poly(complement(g), kind).as_poly(), k)
    for _ in range(512):
        tlo = wa.lo + wb.lo - base
        thi = wa.hi + wb.hi - base
        if thi < 0:
            return -1
        if tlo >= 0:
            if thi * thi < rad:
                return -1
            if tlo * tlo > rad:
                return 1
        wa.refine()
        wb.refine()
    raise ArithmeticError("cannot separate eigenvalue sum from radical bound")
