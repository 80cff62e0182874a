"""Finite-dimensional gl(N) tensor-density representations and trace invariants.

The engine's gl(N) basis T^mu_nu obeys

    [T^mu_nu, T^sigma_tau] = d^sigma_nu T^mu_tau - d^mu_tau T^sigma_nu.

The tensor-density matrices are stored in the unique sign convention for
which (a) the matrices represent this bracket exactly, (b) the closed
trace forms (dim, k0, k1, k2) hold as stated, and (c) the jet-matrix
composition rule closes.  Concretely, on a density with `upper` upper
indices, `lower` lower indices and weight kappa:

    rho(T^mu_nu) phi^{s..}_{t..} = kappa d^mu_nu phi
        - sum_i d^{s_i}_nu phi^{..mu at i..}
        + sum_j d^mu_{t_j} phi_{..nu at j..}

Basis order for tensor components is lexicographic over the index tuple
(upper indices first).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .linalg import mat_commutator, mat_eq, mat_mul, mat_trace, mat_zero
from .multiindex import mi_abs, mi_sub, mi_unit, multi_indices
from .scalars import GR, ZERO


@dataclass(frozen=True)
class TensorRepSpec:
    """An unconstrained gl(N) tensor density: N, index counts, weight."""

    N: int
    upper: int = 0
    lower: int = 0
    weight: Fraction = Fraction(0)

    @property
    def dim(self) -> int:
        return self.N ** (self.upper + self.lower)

    def basis(self) -> list:
        """Component index tuples (s_1..s_upper, t_1..t_lower), lex order."""
        return list(itertools.product(range(self.N), repeat=self.upper + self.lower))

    def label(self) -> str:
        if self.upper == 0 and self.lower == 0:
            return f"scalar(k={self.weight})"
        if self.upper == 1 and self.lower == 0 and self.weight == 0:
            return "vector"
        if self.upper == 0 and self.lower == 1 and self.weight == 0:
            return "covector"
        return f"tensor(u={self.upper},l={self.lower},k={self.weight})"


def scalar_rep(N: int, weight=0) -> TensorRepSpec:
    return TensorRepSpec(N, 0, 0, Fraction(weight))


def vector_rep(N: int) -> TensorRepSpec:
    return TensorRepSpec(N, 1, 0)


def covector_rep(N: int) -> TensorRepSpec:
    return TensorRepSpec(N, 0, 1)


def rho_matrix(rep: TensorRepSpec, mu: int, nu: int) -> list:
    """Dense matrix of rho(T^mu_nu) on the lex component basis."""
    if not (0 <= mu < rep.N and 0 <= nu < rep.N):
        raise ValueError("index out of range")
    basis = rep.basis()
    pos = {b: i for i, b in enumerate(basis)}
    d = len(basis)
    kappa = GR(rep.weight)
    m = mat_zero(d, d)
    for r, comp in enumerate(basis):
        if mu == nu and kappa:
            m[r][r] = m[r][r] + kappa
        for i in range(rep.upper):
            if comp[i] == nu:
                src = comp[:i] + (mu,) + comp[i + 1:]
                c = pos[src]
                m[r][c] = m[r][c] - 1
        for j in range(rep.upper, rep.upper + rep.lower):
            if comp[j] == mu:
                src = comp[:j] + (nu,) + comp[j + 1:]
                c = pos[src]
                m[r][c] = m[r][c] + 1
    return m


def rho_matrices(rep: TensorRepSpec) -> dict:
    return {(mu, nu): rho_matrix(rep, mu, nu)
            for mu in range(rep.N) for nu in range(rep.N)}


def check_gl_bracket(matrices: dict, N: int) -> None:
    """Assert [rho(T^mu_nu), rho(T^sig_tau)] closes on the gl(N) bracket."""
    for mu, nu, sig, tau in itertools.product(range(N), repeat=4):
        lhs = mat_commutator(matrices[(mu, nu)], matrices[(sig, tau)])
        d = len(lhs)
        rhs = mat_zero(d, d)
        if nu == sig:
            rhs = [[x + y for x, y in zip(ra, rb)]
                   for ra, rb in zip(rhs, matrices[(mu, tau)])]
        if mu == tau:
            rhs = [[x - y for x, y in zip(ra, rb)]
                   for ra, rb in zip(rhs, matrices[(sig, nu)])]
        if not mat_eq(lhs, rhs):
            raise AssertionError(
                f"gl(N) bracket failed at (mu,nu,sig,tau)=({mu},{nu},{sig},{tau})"
            )


def _extract_invariants(matrices: dict, N: int, dim: int):
    """Read (k0, k1, k2) off trace patterns, asserting the patterns hold."""
    k0 = None
    for mu in range(N):
        for nu in range(N):
            t = mat_trace(matrices[(mu, nu)])
            if mu == nu:
                if k0 is None:
                    k0 = t
                elif t != k0:
                    raise AssertionError("tr T^mu_mu not proportional to delta")
            elif t:
                raise AssertionError("tr T^mu_nu nonzero off the diagonal")
    # tr T^mu_nu T^sig_tau = k1 d^mu_tau d^sig_nu + k2 d^mu_nu d^sig_tau
    if N == 1:
        # Both delta patterns coincide; only k1 + k2 is trace-measurable.
        k12 = mat_trace(mat_mul(matrices[(0, 0)], matrices[(0, 0)]))
        return k0, None, k12
    k1 = mat_trace(mat_mul(matrices[(0, 1)], matrices[(1, 0)]))
    k2 = mat_trace(mat_mul(matrices[(0, 0)], matrices[(1, 1)]))
    for mu, nu, sig, tau in itertools.product(range(N), repeat=4):
        t = mat_trace(mat_mul(matrices[(mu, nu)], matrices[(sig, tau)]))
        expect = ZERO
        if mu == tau and sig == nu:
            expect = expect + k1
        if mu == nu and sig == tau:
            expect = expect + k2
        if t != expect:
            raise AssertionError("quadratic trace pattern violated")
    return k0, k1, k2


def closed_invariants(rep: TensorRepSpec):
    """(dim, k0, k1, k2) closed forms for an unconstrained tensor density."""
    N, p, q = rep.N, rep.upper, rep.lower
    kap = Fraction(rep.weight)
    npq = Fraction(N) ** (p + q)
    dim = GR(npq)
    k0 = GR(-(p - q - kap * N) * npq / N)
    k1 = GR((p + q) * npq / N)
    k2 = GR(((p - q - kap * N) ** 2 - p - q) * npq / N / N)
    return dim, k0, k1, k2


def trace_invariants(rep: TensorRepSpec):
    """(dim, k0, k1, k2): brute-force traces cross-checked against closed forms.

    A mismatch means an implementation bug, so it raises rather than
    returning a report.  For N = 1 the two quadratic delta patterns
    coincide and only k1 + k2 is trace-measurable; the closed forms are
    used for the split and the brute force checks their sum.
    """
    mats = rho_matrices(rep)
    check_gl_bracket(mats, rep.N)
    dim_b = GR(rep.dim)
    k0_b, k1_b, k2_b = _extract_invariants(mats, rep.N, rep.dim)
    dim_c, k0_c, k1_c, k2_c = closed_invariants(rep)
    if dim_b != dim_c or k0_b != k0_c:
        raise AssertionError(f"dim/k0 mismatch for {rep}")
    if rep.N == 1:
        if k2_b != k1_c + k2_c:
            raise AssertionError(f"k1+k2 mismatch for {rep}")
    elif k1_b != k1_c or k2_b != k2_c:
        raise AssertionError(f"k1/k2 mismatch for {rep}")
    return dim_c, k0_c, k1_c, k2_c


# -- symmetric representations on multi-indices -----------------------------


def sym_action_matrix(N: int, ell: int, mu: int, nu: int) -> list:
    """Action matrix of T^mu_nu on multi-indices of length ell.

    These are the identity-part coefficients of the top jet blocks: the
    entry (m, n) is binom(n, m - mu_bar) for n - m + mu_bar = nu_bar,
    with the self-pairing n = m - mu_bar excluded.
    """
    from .multiindex import multi_binomial

    idx = [m for m in multi_indices(N, ell) if mi_abs(m) == ell]
    pos = {m: i for i, m in enumerate(idx)}
    out = mat_zero(len(idx), len(idx))
    ubar_mu = mi_unit(N, mu)
    ubar_nu = mi_unit(N, nu)
    for n in idx:
        # n - m + mu_bar == nu_bar  <=>  m == n + mu_bar - nu_bar
        m = mi_sub(tuple(a + b for a, b in zip(n, ubar_mu)), ubar_nu)
        if m is None or m not in pos:
            continue
        mm = mi_sub(m, ubar_mu)
        if mm is None or mm == n:
            continue
        out[pos[m]][pos[n]] = out[pos[m]][pos[n]] + multi_binomial(n, mm)
    return out


def sym_closed_invariants(N: int, ell: int):
    dim = GR(comb(N - 1 + ell, ell))
    k0 = GR(comb(N - 1 + ell, ell - 1) if ell >= 1 else 0)
    k1 = GR(comb(N + ell, ell - 1) if ell >= 1 else 0)
    k2 = GR(comb(N - 1 + ell, ell - 2) if ell >= 2 else 0)
    return dim, k0, k1, k2


def sym_rep_invariants(N: int, ell: int):
    """(dim, k0, k1, k2) of S_ell, brute traces vs closed binomials."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    mats = {(mu, nu): sym_action_matrix(N, ell, mu, nu)
            for mu in range(N) for nu in range(N)}
    dim_b = GR(len([m for m in multi_indices(N, ell) if mi_abs(m) == ell]))
    k0_b, k1_b, k2_b = _extract_invariants(mats, N, None)
    dim_c, k0_c, k1_c, k2_c = sym_closed_invariants(N, ell)
    if dim_b != dim_c or k0_b != k0_c:
        raise AssertionError(f"S_ell dim/k0 mismatch at N={N}, ell={ell}")
    if N == 1:
        if k2_b != k1_c + k2_c:
            raise AssertionError(f"S_ell k1+k2 mismatch at N={N}, ell={ell}")
    elif k1_b != k1_c or k2_b != k2_c:
        raise AssertionError(f"S_ell k1/k2 mismatch at N={N}, ell={ell}")
    return dim_c, k0_c, k1_c, k2_c


def summed_sym_invariants(N: int, p: int):
    """Sums over ell = 0..p, verified against the closed binomial forms."""
    if p < 0:
        raise ValueError("p must be >= 0")
    tot = [ZERO, ZERO, ZERO, ZERO]
    for ell in range(p + 1):
        vals = sym_rep_invariants(N, ell)
        tot = [a + b for a, b in zip(tot, vals)]
    closed = (
        GR(comb(N + p, p)),
        GR(comb(N + p, p - 1) if p >= 1 else 0),
        GR(comb(N + p + 1, p - 1) if p >= 1 else 0),
        GR(comb(N + p, p - 2) if p >= 2 else 0),
    )
    if tuple(tot) != closed:
        raise AssertionError(f"summed S_ell invariants mismatch at N={N}, p={p}")
    return closed
