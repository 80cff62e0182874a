"""Jet-action matrices for diffeomorphisms and gauge maps.

The block T^m_n(xi) gives the action of a vector field on the order-n
jet component of a tensor density, mixing it into order-m components:

    T^m_n(xi) = binom(n, m) d_{n-m+nu_bar} xi^mu rho(T^nu_mu)
              + binom(n, m - mu_bar) (1 - d^{m-mu_bar}_n)
                d_{n-m+mu_bar} xi^mu * Id

with summation over mu, nu.  Entries are trig polynomials in the base
point, so every relation check here is an exact symbolic identity; no
numeric base points are needed.  Blocks vanish when |m| > |n|.

Gauge maps act through J^m_n(X) = binom(n, m) d_{n-m} X_a M^a.

Flattened jet components are ordered multi-index-major: the pair
(alpha, m) sits at position (grlex position of m) * dim + alpha.
"""

from __future__ import annotations

from math import comb
from typing import Dict, List, Optional, Tuple

from .fields import GaugeMap, LieAlgebraSpec, PolyVectorField, TrigPoly, vf_commutator
from .glreps import TensorRepSpec, closed_invariants, rho_matrices
from .linalg import mat_eq
from .multiindex import (
    MultiIndex,
    mi_abs,
    mi_add,
    mi_sub,
    mi_unit,
    multi_binomial,
    multi_indices,
)
from .scalars import GR, ONE, ZERO

Blocks = Dict[Tuple[MultiIndex, MultiIndex], List[List[TrigPoly]]]


def d_multi(f: TrigPoly, m: MultiIndex) -> TrigPoly:
    """Iterated spatial derivative d_m f."""
    out = f
    for mu, k in enumerate(m):
        for _ in range(k):
            out = out.d_x(mu)
    return out


def _zero_block(dim: int, N: int) -> list:
    z = TrigPoly.zero(N)
    return [[z for _ in range(dim)] for _ in range(dim)]


def jet_matrix_T(
    xi: PolyVectorField,
    rep: TensorRepSpec,
    p: int,
    module_dim: int = 1,
) -> Blocks:
    """All blocks T^m_n(xi) for |m|, |n| <= p.

    With module_dim > 1 the blocks act on rho (x) M with the identity on
    the M factor; the combined component index is alpha * module_dim + u.
    """
    N = xi.N
    rmats = rho_matrices(rep)
    dim = rep.dim * module_dim
    mis = multi_indices(N, p)
    blocks: Blocks = {}
    for n in mis:
        for m in mis:
            if mi_abs(m) > mi_abs(n):
                continue
            blk = _zero_block(dim, N)
            nonzero = False
            bnm = multi_binomial(n, m)
            if bnm:
                for nu in range(N):
                    shift = mi_add(mi_sub(n, m), mi_unit(N, nu))
                    for mu in range(N):
                        df = d_multi(xi.comps[mu], shift)
                        if df.is_zero():
                            continue
                        rho = rmats[(nu, mu)]
                        for a in range(rep.dim):
                            for b in range(rep.dim):
                                c = rho[a][b]
                                if not c:
                                    continue
                                w = df.scale(c * bnm)
                                for u in range(module_dim):
                                    r = a * module_dim + u
                                    s = b * module_dim + u
                                    blk[r][s] = blk[r][s] + w
                                nonzero = True
            for mu in range(N):
                mm = mi_sub(m, mi_unit(N, mu))
                if mm is None or mm == n:
                    continue
                b2 = multi_binomial(n, mm)
                if not b2:
                    continue
                shift = mi_sub(n, mm)
                df = d_multi(xi.comps[mu], shift)
                if df.is_zero():
                    continue
                w = df.scale(GR(b2))
                for r in range(dim):
                    blk[r][r] = blk[r][r] + w
                nonzero = True
            if nonzero:
                blocks[(m, n)] = blk
    return blocks


def jet_matrix_J(
    X: GaugeMap,
    g: LieAlgebraSpec,
    p: int,
    rep_dim: int = 1,
) -> Blocks:
    """All blocks J^m_n(X) = binom(n, m) d_{n-m} X_a M^a for |m|,|n| <= p.

    Acts on rho (x) M with the identity on the rho factor (rep_dim
    copies); combined component index alpha * dim(M) + u.
    """
    N = X.N
    md = g.module_dim
    dim = rep_dim * md
    mis = multi_indices(N, p)
    blocks: Blocks = {}
    for n in mis:
        for m in mis:
            sub = mi_sub(n, m)
            if sub is None:
                continue
            bnm = multi_binomial(n, m)
            if not bnm:
                continue
            blk = _zero_block(dim, N)
            nonzero = False
            for a in range(g.dim):
                df = d_multi(X.comps[a], sub)
                if df.is_zero():
                    continue
                mod = g.module[a]
                for u in range(md):
                    for v in range(md):
                        c = mod[u][v]
                        if not c:
                            continue
                        w = df.scale(c * bnm)
                        for alpha in range(rep_dim):
                            r = alpha * md + u
                            s = alpha * md + v
                            blk[r][s] = blk[r][s] + w
                        nonzero = True
            if nonzero:
                blocks[(m, n)] = blk
    return blocks


def _get_block(blocks: Blocks, m, n, dim, N) -> list:
    return blocks.get((m, n)) or _zero_block(dim, N)


def _blocks_dim(rep: TensorRepSpec, module_dim: int) -> int:
    return rep.dim * module_dim


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_mul_tp(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), TrigPoly.zero(a[0][0].N))
             for j in range(n)] for i in range(n)]


def _mat_scale_tp(f: TrigPoly, a):
    return [[f * x for x in row] for row in a]


def _mat_is_zero_tp(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def check_td_relations(
    xi: PolyVectorField,
    eta: PolyVectorField,
    rep: TensorRepSpec,
    p: int,
) -> dict:
    """Exact verification of the five jet-matrix relations for T^m_n.

    Returns {relation name: bool}; callers assert all values.  The
    recursion needs order p+1 blocks, so those are built as well.
    """
    N = xi.N
    dim = rep.dim
    tx = jet_matrix_T(xi, rep, p + 1)
    te = jet_matrix_T(eta, rep, p)
    mis = multi_indices(N, p)
    mis1 = multi_indices(N, p + 1)
    results = {}

    # vanishing: |m| > |n| blocks are identically zero (by construction,
    # but assert over the stored keys anyway).
    results["vanishing"] = all(
        mi_abs(m) <= mi_abs(n) for (m, n) in tx
    )

    # base case T^m_0
    mi_zero = (0,) * N
    base = _get_block(tx, mi_zero, mi_zero, dim, N)
    expect = _zero_block(dim, N)
    rmats = rho_matrices(rep)
    for nu in range(N):
        for mu in range(N):
            df = xi.comps[mu].d_x(nu)
            if df.is_zero():
                continue
            rho = rmats[(nu, mu)]
            for a in range(dim):
                for b in range(dim):
                    if rho[a][b]:
                        expect[a][b] = expect[a][b] + df.scale(rho[a][b])
    ok = all(base[a][b] == expect[a][b] for a in range(dim) for b in range(dim))
    for m in mis:
        if m != mi_zero and (m, mi_zero) in tx:
            ok = ok and _mat_is_zero_tp(tx[(m, mi_zero)])
    results["base_case"] = ok

    # recursion: T^m_{n+nu_bar}(xi) = d_nu xi^mu d^m_{n+mu_bar}
    #            + T^m_n(d_nu xi) + T^{m-nu_bar}_n(xi)
    ok = True
    for n in mis:
        for nu in range(N):
            nnu = mi_add(n, mi_unit(N, nu))
            if mi_abs(nnu) > p + 1:
                continue
            dxi = PolyVectorField(N, tuple(c.d_x(nu) for c in xi.comps))
            tdx = jet_matrix_T(dxi, rep, p)
            for m in mis1:
                lhs = _get_block(tx, m, nnu, dim, N)
                rhs = _zero_block(dim, N)
                for mu in range(N):
                    if m == mi_add(n, mi_unit(N, mu)):
                        df = xi.comps[mu].d_x(nu)
                        for a in range(dim):
                            rhs[a][a] = rhs[a][a] + df
                if mi_abs(m) <= p:
                    rhs = _mat_add(rhs, _get_block(tdx, m, n, dim, N))
                mnu = mi_sub(m, mi_unit(N, nu))
                if mnu is not None:
                    rhs = _mat_add(rhs, _get_block(tx, mnu, n, dim, N))
                if not all(lhs[a][b] == rhs[a][b]
                           for a in range(dim) for b in range(dim)):
                    ok = False
    results["recursion"] = ok

    # derivative rule: d_nu T^m_n(xi) = T^m_n(d_nu xi)
    ok = True
    for nu in range(N):
        dxi = PolyVectorField(N, tuple(c.d_x(nu) for c in xi.comps))
        tdx = jet_matrix_T(dxi, rep, p)
        for n in mis:
            for m in mis:
                lhs = [[e.d_x(nu) for e in row]
                       for row in _get_block(tx, m, n, dim, N)]
                rhs = _get_block(tdx, m, n, dim, N)
                if not all(lhs[a][b] == rhs[a][b]
                           for a in range(dim) for b in range(dim)):
                    ok = False
    results["derivative"] = ok

    # composition rule for [xi, eta]
    ok = True
    comm = vf_commutator(xi, eta)
    tc = jet_matrix_T(comm, rep, p)
    tx_p = jet_matrix_T(xi, rep, p)
    for n in mis:
        for m in mis:
            lhs = _get_block(tc, m, n, dim, N)
            rhs = _zero_block(dim, N)
            for mu in range(N):
                dmu_eta = PolyVectorField(N, tuple(c.d_x(mu) for c in eta.comps))
                dmu_xi = PolyVectorField(N, tuple(c.d_x(mu) for c in xi.comps))
                t1 = _get_block(jet_matrix_T(dmu_eta, rep, p), m, n, dim, N)
                t2 = _get_block(jet_matrix_T(dmu_xi, rep, p), m, n, dim, N)
                rhs = _mat_add(rhs, _mat_scale_tp(xi.comps[mu], t1))
                rhs = _mat_sub(rhs, _mat_scale_tp(eta.comps[mu], t2))
            for r in mis:
                if not (mi_abs(m) <= mi_abs(r) <= mi_abs(n)):
                    continue
                a1 = _get_block(tx_p, r, n, dim, N)
                b1 = _get_block(te, m, r, dim, N)
                a2 = _get_block(te, r, n, dim, N)
                b2 = _get_block(tx_p, m, r, dim, N)
                rhs = _mat_add(rhs, _mat_mul_tp(a1, b1))
                rhs = _mat_sub(rhs, _mat_mul_tp(a2, b2))
            if not all(lhs[a][b] == rhs[a][b]
                       for a in range(dim) for b in range(dim)):
                ok = False
    results["composition"] = ok
    return results


def check_jmn_relations(
    X: GaugeMap,
    Y: GaugeMap,
    xi: PolyVectorField,
    g: LieAlgebraSpec,
    rep: TensorRepSpec,
    p: int,
) -> dict:
    """Exact verification of the J^m_n relations, including the mixed rule."""
    N = X.N
    md = g.module_dim
    dim = rep.dim * md
    jx = jet_matrix_J(X, g, p + 1, rep.dim)
    jy = jet_matrix_J(Y, g, p, rep.dim)
    mis = multi_indices(N, p)
    mis1 = multi_indices(N, p + 1)
    results = {}

    results["vanishing"] = all(mi_abs(m) <= mi_abs(n) for (m, n) in jx)

    # top blocks: J^m_n = X_a M^a d^m_n when |m| = |n|
    ok = True
    for n in mis:
        for m in mis:
            if mi_abs(m) != mi_abs(n):
                continue
            blk = _get_block(jx, m, n, dim, N)
            if m != n:
                ok = ok and _mat_is_zero_tp(blk)
                continue
            expect = _zero_block(dim, N)
            for a in range(g.dim):
                for u in range(md):
                    for v in range(md):
                        c = g.module[a][u][v]
                        if not c:
                            continue
                        w = X.comps[a].scale(c)
                        for alpha in range(rep.dim):
                            expect[alpha * md + u][alpha * md + v] = (
                                expect[alpha * md + u][alpha * md + v] + w)
            ok = ok and all(blk[r][s] == expect[r][s]
                            for r in range(dim) for s in range(dim))
    results["top_diagonal"] = ok

    # recursion: J^m_{n+mu_bar}(X) = J^m_n(d_mu X) + J^{m-mu_bar}_n(X)
    ok = True
    for mu in range(N):
        dX = GaugeMap(N, g.dim, tuple(c.d_x(mu) for c in X.comps))
        jdx = jet_matrix_J(dX, g, p, rep.dim)
        for n in mis:
            nmu = mi_add(n, mi_unit(N, mu))
            if mi_abs(nmu) > p + 1:
                continue
            for m in mis1:
                lhs = _get_block(jx, m, nmu, dim, N)
                rhs = _zero_block(dim, N)
                if mi_abs(m) <= p:
                    rhs = _mat_add(rhs, _get_block(jdx, m, n, dim, N))
                mmu = mi_sub(m, mi_unit(N, mu))
                if mmu is not None:
                    rhs = _mat_add(rhs, _get_block(jx, mmu, n, dim, N))
                if not all(lhs[a][b] == rhs[a][b]
                           for a in range(dim) for b in range(dim)):
                    ok = False
    results["recursion"] = ok

    # derivative rule
    ok = True
    for mu in range(N):
        dX = GaugeMap(N, g.dim, tuple(c.d_x(mu) for c in X.comps))
        jdx = jet_matrix_J(dX, g, p, rep.dim)
        for n in mis:
            for m in mis:
                lhs = [[e.d_x(mu) for e in row]
                       for row in _get_block(jx, m, n, dim, N)]
                rhs = _get_block(jdx, m, n, dim, N)
                if not all(lhs[a][b] == rhs[a][b]
                           for a in range(dim) for b in range(dim)):
                    ok = False
    results["derivative"] = ok

    # composition: J^m_n([X, Y]) = sum_r J^r_n(X) J^m_r(Y) - J^r_n(Y) J^m_r(X)
    ok = True
    jx_p = jet_matrix_J(X, g, p, rep.dim)
    jc = jet_matrix_J(g.bracket_map(X, Y), g, p, rep.dim)
    for n in mis:
        for m in mis:
            lhs = _get_block(jc, m, n, dim, N)
            rhs = _zero_block(dim, N)
            for r in mis:
                if not (mi_abs(m) <= mi_abs(r) <= mi_abs(n)):
                    continue
                rhs = _mat_add(rhs, _mat_mul_tp(
                    _get_block(jx_p, r, n, dim, N), _get_block(jy, m, r, dim, N)))
                rhs = _mat_sub(rhs, _mat_mul_tp(
                    _get_block(jy, r, n, dim, N), _get_block(jx_p, m, r, dim, N)))
            if not all(lhs[a][b] == rhs[a][b]
                       for a in range(dim) for b in range(dim)):
                ok = False
    results["composition"] = ok

    # mixed rule: J^m_n(xi^mu d_mu X) =
    #   xi^mu J^m_n(d_mu X) + sum_r T^r_n(xi) J^m_r(X) - J^r_n(X) T^m_r(xi)
    ok = True
    tx = jet_matrix_T(xi, rep, p, md)
    lie_X = GaugeMap(N, g.dim, tuple(
        sum((xi.comps[mu] * X.comps[a].d_x(mu) for mu in range(N)),
            TrigPoly.zero(N))
        for a in range(g.dim)))
    jlie = jet_matrix_J(lie_X, g, p, rep.dim)
    for n in mis:
        for m in mis:
            lhs = _get_block(jlie, m, n, dim, N)
            rhs = _zero_block(dim, N)
            for mu in range(N):
                dX = GaugeMap(N, g.dim, tuple(c.d_x(mu) for c in X.comps))
                blk = _get_block(jet_matrix_J(dX, g, p, rep.dim), m, n, dim, N)
                rhs = _mat_add(rhs, _mat_scale_tp(xi.comps[mu], blk))
            for r in mis:
                if not (mi_abs(m) <= mi_abs(r) <= mi_abs(n)):
                    continue
                rhs = _mat_add(rhs, _mat_mul_tp(
                    _get_block(tx, r, n, dim, N), _get_block(jx_p, m, r, dim, N)))
                rhs = _mat_sub(rhs, _mat_mul_tp(
                    _get_block(jx_p, r, n, dim, N), _get_block(tx, m, r, dim, N)))
            if not all(lhs[a][b] == rhs[a][b]
                       for a in range(dim) for b in range(dim)):
                ok = False
    results["mixed"] = ok
    return results


def prolong_label(alpha: int, m: MultiIndex, mu: int) -> Tuple[int, MultiIndex]:
    """The prolongation map on jet labels: phi_{alpha,m} -> phi_{alpha,m+mu_bar}."""
    return alpha, mi_add(m, mi_unit(len(m), mu))


def check_prolong_intertwining(xi: PolyVectorField, rep: TensorRepSpec, p: int) -> bool:
    """d-check_mu L_xi = L_xi d-check_mu + d_mu xi^nu d-check_nu on jets.

    At the level of jet matrices this is the statement

        T^m_{n+mu_bar}(xi) = d_mu xi^nu d^m_{n+nu_bar}
                             + T^m_n(d_mu xi) + T^{m-mu_bar}_n(xi)

    verified symbolically for all |n| <= p.
    """
    N = xi.N
    dim = rep.dim
    tx = jet_matrix_T(xi, rep, p + 1)
    mis = multi_indices(N, p)
    mis1 = multi_indices(N, p + 1)
    for mu in range(N):
        dxi = PolyVectorField(N, tuple(c.d_x(mu) for c in xi.comps))
        tdx = jet_matrix_T(dxi, rep, p)
        for n in mis:
            nmu = mi_add(n, mi_unit(N, mu))
            for m in mis1:
                lhs = _get_block(tx, m, nmu, dim, N)
                rhs = _zero_block(dim, N)
                for nu in range(N):
                    if m == mi_add(n, mi_unit(N, nu)):
                        df = xi.comps[nu].d_x(mu)
                        for a in range(dim):
                            rhs[a][a] = rhs[a][a] + df
                if mi_abs(m) <= p:
                    rhs = _mat_add(rhs, _get_block(tdx, m, n, dim, N))
                mmu = mi_sub(m, mi_unit(N, mu))
                if mmu is not None:
                    rhs = _mat_add(rhs, _get_block(tx, mmu, n, dim, N))
                if not all(lhs[a][b] == rhs[a][b]
                           for a in range(dim) for b in range(dim)):
                    return False
    return True


# -- combinatorial lemmas ----------------------------------------------------


def _tp_trace(blk) -> TrigPoly:
    acc = blk[0][0]
    for i in range(1, len(blk)):
        acc = acc + blk[i][i]
    return acc


def lemma_trace_sums(
    xi: PolyVectorField,
    eta: PolyVectorField,
    rep: TensorRepSpec,
    p: int,
) -> dict:
    """Brute-force trace sums (i)-(iii) against their closed forms.

    All three are symbolic TrigPoly identities in the base point, so
    they hold for every vector field iff they hold here.
    """
    N = xi.N
    dim, k0, k1, k2 = closed_invariants(rep)
    tx = jet_matrix_T(xi, rep, p)
    te = jet_matrix_T(eta, rep, p)
    mis = multi_indices(N, p)
    d = rep.dim
    results = {}

    bp = GR(comb(N + p, p))
    bp1 = GR(comb(N + p, p - 1) if p >= 1 else 0)
    bp2 = GR(comb(N + p, p - 2) if p >= 2 else 0)
    bq1 = GR(comb(N + p + 1, p - 1) if p >= 1 else 0)

    # (i)
    results["i"] = GR(len(mis) * rep.dim) == bp * dim

    # (ii)
    acc = TrigPoly.zero(N)
    for m in mis:
        blk = tx.get((m, m))
        if blk:
            acc = acc + _tp_trace(blk)
    expect = xi.divergence().scale(bp * k0 + bp1 * dim)
    results["ii"] = acc == expect

    # (iii)
    acc = TrigPoly.zero(N)
    for m in mis:
        for n in mis:
            b1 = tx.get((m, n))
            b2 = te.get((n, m))
            if not b1 or not b2:
                continue
            for a in range(d):
                for b in range(d):
                    acc = acc + b1[a][b] * b2[b][a]
    cross = TrigPoly.zero(N)
    for mu in range(N):
        for nu in range(N):
            cross = cross + xi.comps[mu].d_x(nu) * eta.comps[nu].d_x(mu)
    expect = cross.scale(bp * k1 + bq1 * dim)
    expect = expect + (xi.divergence() * eta.divergence()).scale(
        bp * k2 + bp2 * dim + GR(2) * bp1 * k0)
    results["iii"] = acc == expect
    return results


def lemma_gauge_trace_sums(
    X: GaugeMap,
    Y: GaugeMap,
    xi: PolyVectorField,
    g: LieAlgebraSpec,
    rep: TensorRepSpec,
    p: int,
) -> dict:
    """Gauge-sector analogues (i)-(iii) against (zM, yM, wM, k0) closed forms."""
    N = X.N
    dim_r, k0, _, _ = closed_invariants(rep)
    md = g.module_dim
    jx = jet_matrix_J(X, g, p, rep.dim)
    jy = jet_matrix_J(Y, g, p, rep.dim)
    tx = jet_matrix_T(xi, rep, p, md)
    mis = multi_indices(N, p)
    full = rep.dim * md
    bp = GR(comb(N + p, p))
    bp1 = GR(comb(N + p, p - 1) if p >= 1 else 0)
    results = {}

    # (i): sum tr J^m_m(X) = X_a zM delta^a binom dim
    acc = TrigPoly.zero(N)
    for m in mis:
        blk = jx.get((m, m))
        if blk:
            acc = acc + _tp_trace(blk)
    expect = TrigPoly.zero(N)
    for a in range(g.dim):
        c = g.zM * g.trace_vec[a] * bp * dim_r
        if c:
            expect = expect + X.comps[a].scale(c)
    results["i"] = acc == expect

    # (ii): sum tr J^m_n(X) J^n_m(Y)
    acc = TrigPoly.zero(N)
    for m in mis:
        for n in mis:
            b1 = jx.get((m, n))
            b2 = jy.get((n, m))
            if not b1 or not b2:
                continue
            for a in range(full):
                for b in range(full):
                    acc = acc + b1[a][b] * b2[b][a]
    expect = TrigPoly.zero(N)
    for a in range(g.dim):
        for b in range(g.dim):
            c = (g.yM * g.metric[a][b]
                 + g.wM * g.trace_vec[a] * g.trace_vec[b]) * bp * dim_r
            if c:
                expect = expect + (X.comps[a] * Y.comps[b]).scale(c)
    results["ii"] = acc == expect

    # (iii): sum tr T^m_n(xi) J^n_m(X)
    acc = TrigPoly.zero(N)
    for m in mis:
        for n in mis:
            b1 = tx.get((m, n))
            b2 = jx.get((n, m))
            if not b1 or not b2:
                continue
            for a in range(full):
                for b in range(full):
                    acc = acc + b1[a][b] * b2[b][a]
    expect = TrigPoly.zero(N)
    div = xi.divergence()
    for a in range(g.dim):
        c = g.zM * g.trace_vec[a] * (bp * k0 + bp1 * dim_r)
        if c:
            expect = expect + (div * X.comps[a]).scale(c)
    results["iii"] = acc == expect
    return results
