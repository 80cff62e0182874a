"""Vector fields, gauge maps and finite Lie algebra data.

Scalar functions are finite "trigonometric polynomials": linear
combinations of

    e^{i*tf*t} * e^{i*xf*x^0} * x^e      (e a multi-exponent)

with Gaussian-rational coefficients.  The tf slot is explicit
time-dependence (used by smearing densities), the xf slot is periodic
x^0-dependence (used by gauge-fixed fields, where the substitution
q^0(t) = t turns xf into tf).  Plain polynomial fields have tf = xf = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .linalg import mat_commutator, mat_eq, mat_mul, mat_scale, mat_trace, mat_zero
from .scalars import GR, I, ONE, ZERO

TermKey = Tuple[int, int, Tuple[int, ...]]


class TrigPoly:
    """Sum of e^{i*tf*t} e^{i*xf*x^0} x^e monomials over Q(i)."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Optional[Dict[TermKey, GR]] = None):
        self.N = N
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(N: int) -> "TrigPoly":
        return TrigPoly(N)

    @staticmethod
    def const(N: int, c) -> "TrigPoly":
        c = GR.of(c)
        t = TrigPoly(N)
        if c:
            t.terms[(0, 0, (0,) * N)] = c
        return t

    @staticmethod
    def mono(N: int, exps: Iterable[int], coeff=ONE, tf: int = 0, xf: int = 0) -> "TrigPoly":
        c = GR.of(coeff)
        t = TrigPoly(N)
        if c:
            t.terms[(tf, xf, tuple(exps))] = c
        return t

    @staticmethod
    def coord(N: int, mu: int) -> "TrigPoly":
        e = [0] * N
        e[mu] = 1
        return TrigPoly.mono(N, e)

    def copy(self) -> "TrigPoly":
        return TrigPoly(self.N, dict(self.terms))

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        t = TrigPoly(self.N)
        t.terms = out
        return t

    def __neg__(self) -> "TrigPoly":
        t = TrigPoly(self.N)
        t.terms = {k: -v for k, v in self.terms.items()}
        return t

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + (-other)

    def scale(self, c) -> "TrigPoly":
        c = GR.of(c)
        t = TrigPoly(self.N)
        if c:
            t.terms = {k: c * v for k, v in self.terms.items()}
        return t

    def __mul__(self, other: "TrigPoly") -> "TrigPoly":
        out: Dict[TermKey, GR] = {}
        for (tf1, xf1, e1), c1 in self.terms.items():
            for (tf2, xf2, e2), c2 in other.terms.items():
                k = (tf1 + tf2, xf1 + xf2, tuple(a + b for a, b in zip(e1, e2)))
                c = c1 * c2
                s = out.get(k)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        t = TrigPoly(self.N)
        t.terms = out
        return t

    # -- calculus ---------------------------------------------------------

    def d_t(self) -> "TrigPoly":
        """Derivative in the explicit time slot."""
        out = {}
        for (tf, xf, e), c in self.terms.items():
            if tf:
                out[(tf, xf, e)] = c * GR(0, tf)
        t = TrigPoly(self.N)
        t.terms = out
        return t

    def d_x(self, mu: int) -> "TrigPoly":
        """Spatial derivative d/dx^mu (mu = 0 also hits the xf factor)."""
        out: Dict[TermKey, GR] = {}
        for (tf, xf, e), c in self.terms.items():
            if mu == 0 and xf:
                k = (tf, xf, e)
                v = c * GR(0, xf)
                s = out.get(k)
                s = v if s is None else s + v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
            if e[mu]:
                e2 = list(e)
                e2[mu] -= 1
                k = (tf, xf, tuple(e2))
                v = c * e[mu]
                s = out.get(k)
                s = v if s is None else s + v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        t = TrigPoly(self.N)
        t.terms = out
        return t

    def substitute_time_gauge(self) -> "TrigPoly":
        """Apply q^0(t) = t: fold the periodic x^0 frequency into tf.

        Requires every term with xf != 0 to carry no polynomial x^0
        factor, which is the gauge-fixed field format.
        """
        out: Dict[TermKey, GR] = {}
        for (tf, xf, e), c in self.terms.items():
            if e[0] != 0:
                raise ValueError(
                    "polynomial x^0 dependence cannot survive q^0 = t; "
                    "use e^{i k x^0} factors instead"
                )
            k = (tf + xf, 0, e)
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        t = TrigPoly(self.N)
        t.terms = out
        return t

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(tf == 0 and xf == 0 for (tf, xf, _) in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (tf, xf, e), c in sorted(self.terms.items()):
            s = f"({c})"
            if tf:
                s += f"*e^[{tf}it]"
            if xf:
                s += f"*e^[{xf}ix0]"
            for mu, k in enumerate(e):
                if k:
                    s += f"*x{mu}^{k}" if k > 1 else f"*x{mu}"
            bits.append(s)
        return " + ".join(bits)


@dataclass(frozen=True)
class PolyVectorField:
    """xi = xi^mu(x) d_mu with trig-polynomial components."""

    N: int
    comps: Tuple[TrigPoly, ...]

    def __post_init__(self):
        if len(self.comps) != self.N:
            raise ValueError("component count must equal N")

    @staticmethod
    def build(N: int, entries: Dict[int, TrigPoly]) -> "PolyVectorField":
        comps = tuple(entries.get(mu, TrigPoly.zero(N)) for mu in range(N))
        return PolyVectorField(N, comps)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.comps)

    def divergence(self) -> TrigPoly:
        out = TrigPoly.zero(self.N)
        for mu in range(self.N):
            out = out + self.comps[mu].d_x(mu)
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)


def vf_commutator(xi: PolyVectorField, eta: PolyVectorField) -> PolyVectorField:
    """[xi, eta]^nu = xi^mu d_mu eta^nu - eta^mu d_mu xi^nu, exactly."""
    if xi.N != eta.N:
        raise ValueError("dimension mismatch")
    N = xi.N
    comps = []
    for nu in range(N):
        acc = TrigPoly.zero(N)
        for mu in range(N):
            acc = acc + xi.comps[mu] * eta.comps[nu].d_x(mu)
            acc = acc - eta.comps[mu] * xi.comps[nu].d_x(mu)
        comps.append(acc)
    return PolyVectorField(N, tuple(comps))


@dataclass(frozen=True)
class CircleVectorField:
    """f(t) d/dt as a finite Fourier mode table f_m of f(t) = sum f_m e^{imt}."""

    modes: Tuple[Tuple[int, GR], ...]

    @staticmethod
    def build(modes: Dict[int, GR]) -> "CircleVectorField":
        return CircleVectorField(tuple(sorted((m, GR.of(c)) for m, c in modes.items() if c)))

    def commutator(self, other: "CircleVectorField") -> "CircleVectorField":
        # [f, g] = f g' - g f';  d/dt e^{imt} = im e^{imt}
        out: Dict[int, GR] = {}
        a, b = dict(self.modes), dict(other.modes)
        for m, fm in a.items():
            for n, gn in b.items():
                c = fm * gn * (GR(0, n) - GR(0, m))
                k = m + n
                out[k] = out.get(k, ZERO) + c
        return CircleVectorField.build(out)


@dataclass(frozen=True)
class GaugeMap:
    """X = X_a(x) J^a: one trig-polynomial scalar per Lie algebra direction."""

    N: int
    dim_g: int
    comps: Tuple[TrigPoly, ...]

    def __post_init__(self):
        if len(self.comps) != self.dim_g:
            raise ValueError("component count must equal dim(g)")

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.comps)


@dataclass
class LieAlgebraSpec:
    """Finite-dimensional g with bracket [J^a, J^b] = i f^{ab}_c J^c.

    Carries the invariant metric delta^{ab}, the privileged trace vector
    delta^a (annihilated by the structure constants), a module M with
    matrices M^a, and the stored invariants tr M^a = zM delta^a,
    tr M^a M^b = yM delta^{ab} + wM delta^a delta^b.  For single-generator
    algebras only yM + wM is determined by M; the stored split is then a
    documented convention.
    """

    name: str
    dim: int
    struct: List[List[List[GR]]]
    metric: List[List[GR]]
    trace_vec: List[GR]
    module: List[List[List[GR]]]
    yM: GR
    zM: GR
    wM: GR
    split_is_convention: bool = False

    @property
    def module_dim(self) -> int:
        return len(self.module[0])

    def bracket_map(self, X: GaugeMap, Y: GaugeMap) -> GaugeMap:
        """[X, Y]_c = i f^{ab}_c X_a Y_b."""
        comps = []
        for c in range(self.dim):
            acc = TrigPoly.zero(X.N)
            for a in range(self.dim):
                for b in range(self.dim):
                    f = self.struct[a][b][c]
                    if f:
                        acc = acc + (X.comps[a] * Y.comps[b]).scale(I * f)
            comps.append(acc)
        return GaugeMap(X.N, self.dim, tuple(comps))

    def validate(self) -> None:
        d = self.dim
        f = self.struct
        for a in range(d):
            for b in range(d):
                for c in range(d):
                    if f[a][b][c] != -f[b][a][c]:
                        raise AssertionError(f"{self.name}: f not antisymmetric")
        # Jacobi: sum_d f^{bc}_d f^{ad}_e + cyclic = 0
        for a in range(d):
            for b in range(d):
                for c in range(d):
                    for e in range(d):
                        acc = ZERO
                        for k in range(d):
                            acc = acc + f[b][c][k] * f[a][k][e]
                            acc = acc + f[c][a][k] * f[b][k][e]
                            acc = acc + f[a][b][k] * f[c][k][e]
                        if acc:
                            raise AssertionError(f"{self.name}: Jacobi fails")
        for a in range(d):
            for b in range(d):
                acc = ZERO
                for c in range(d):
                    acc = acc + f[a][b][c] * self.trace_vec[c]
                if acc:
                    raise AssertionError(f"{self.name}: f.delta != 0")
        # module: [M^a, M^b] = i f^{ab}_c M^c
        md = self.module_dim
        for a in range(d):
            for b in range(d):
                lhs = mat_commutator(self.module[a], self.module[b])
                rhs = mat_zero(md, md)
                for c in range(d):
                    if f[a][b][c]:
                        rhs = [[x + I * f[a][b][c] * y for x, y in zip(rx, ry)]
                               for rx, ry in zip(rhs, self.module[c])]
                if not mat_eq(lhs, rhs):
                    raise AssertionError(f"{self.name}: M is not a g-module")
        for a in range(d):
            t = mat_trace(self.module[a])
            if t != self.zM * self.trace_vec[a]:
                raise AssertionError(f"{self.name}: tr M^a != zM delta^a")
        for a in range(d):
            for b in range(d):
                t = mat_trace(mat_mul(self.module[a], self.module[b]))
                want = self.yM * self.metric[a][b] \
                    + self.wM * self.trace_vec[a] * self.trace_vec[b]
                if t != want:
                    raise AssertionError(
                        f"{self.name}: tr M^a M^b != yM d^ab + wM d^a d^b")

    def adjoint_module(self) -> List[List[List[GR]]]:
        """(M^a)^b_c = -i f^{ab}_c, used for connection jets."""
        d = self.dim
        return [[[GR(0, -1) * self.struct[a][b][c] for c in range(d)]
                 for b in range(d)] for a in range(d)]


def _gm(rows) -> List[List[GR]]:
    return [[GR.of(x) for x in row] for row in rows]


def u1_algebra(charge: int = 1) -> LieAlgebraSpec:
    """u(1) with nonzero trace vector; module = charge q on a 1-dim space.

    tr M M = q^2 determines only yM + wM; the stored split (yM, wM) =
    (q^2, 0) is a convention recorded on the spec.
    """
    q = GR(charge)
    spec = LieAlgebraSpec(
        name=f"u1(q={charge})",
        dim=1,
        struct=[[[ZERO]]],
        metric=_gm([[1]]),
        trace_vec=[GR(charge)],
        module=[_gm([[charge]])],
        yM=q * q,
        zM=GR(1),
        wM=ZERO,
        split_is_convention=True,
    )
    spec.validate()
    return spec


def sl2_algebra(adjoint: bool = False) -> LieAlgebraSpec:
    """sl(2) with hermitian basis J^a = sigma_a / 2, f^{ab}_c = eps_abc.

    Module: defining (2-dim) by default, adjoint (3-dim) on request.
    Semisimple: trace vector vanishes, so zM = wM = 0.
    """
    half = GR(1) / 2
    eps = [[[0, 0, 0], [0, 0, 1], [0, -1, 0]],
           [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
           [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]]
    struct = [[[GR(eps[a][b][c]) for c in range(3)] for b in range(3)]
              for a in range(3)]
    if not adjoint:
        module = [
            _gm([[0, half], [half, 0]]),
            [[ZERO, GR(0, -1) * half], [GR(0, 1) * half, ZERO]],
            _gm([[half, 0], [0, -half]]),
        ]
        yM = half
        name = "sl2(defining)"
    else:
        module = [[[GR(0, -1) * struct[a][b][c] for c in range(3)]
                   for b in range(3)] for a in range(3)]
        yM = GR(2)
        name = "sl2(adjoint)"
    spec = LieAlgebraSpec(
        name=name,
        dim=3,
        struct=struct,
        metric=_gm([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        trace_vec=[ZERO, ZERO, ZERO],
        module=module,
        yM=yM,
        zM=ZERO,
        wM=ZERO,
    )
    spec.validate()
    return spec


def gl2_algebra(twist: int = 1) -> LieAlgebraSpec:
    """gl(2) in basis J^{ij} ~ E_ij, module M(J^{ij}) = E_ij + twist*d_ij.

    The trace-character twist leaves the bracket untouched but makes
    wM = 2*twist*(1+twist) nonzero, so the c5/c8 structures separate.
    Basis order: (00, 01, 10, 11).  With [J^a,J^b] = i f^{ab}_c J^c the
    structure constants are purely imaginary.
    """
    pairs = [(0, 0), (0, 1), (1, 0), (1, 1)]
    pos = {p: k for k, p in enumerate(pairs)}
    d = 4
    struct = [[[ZERO for _ in range(d)] for _ in range(d)] for _ in range(d)]
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            # [E_ij, E_kl] = d_jk E_il - d_li E_kj
            if j == k:
                c = pos[(i, l)]
                struct[a][b][c] = struct[a][b][c] + GR(0, -1)
            if l == i:
                c = pos[(k, j)]
                struct[a][b][c] = struct[a][b][c] - GR(0, -1)
    module = []
    for (i, j) in pairs:
        m = mat_zero(2, 2)
        m[i][j] = m[i][j] + 1
        if i == j:
            m[0][0] = m[0][0] + twist
            m[1][1] = m[1][1] + twist
        module.append(m)
    metric = [[GR(1) if (pairs[a][0] == pairs[b][1] and pairs[a][1] == pairs[b][0])
               else ZERO for b in range(d)] for a in range(d)]
    trace_vec = [GR(1) if pairs[a][0] == pairs[a][1] else ZERO for a in range(d)]
    spec = LieAlgebraSpec(
        name=f"gl2(twist={twist})",
        dim=d,
        struct=struct,
        metric=metric,
        trace_vec=trace_vec,
        module=module,
        yM=GR(1),
        zM=GR(1 + 2 * twist),
        wM=GR(2 * twist * (1 + twist)),
    )
    spec.validate()
    return spec


# -- JSON wire format --------------------------------------------------------


def trigpoly_to_obj(t: TrigPoly) -> list:
    return [
        {"tfreq": tf, "frequency": xf, "exponents": list(e),
         "coefficient": c.to_quad()}
        for (tf, xf, e), c in sorted(t.terms.items())
    ]


def trigpoly_from_obj(N: int, obj: list) -> TrigPoly:
    t = TrigPoly(N)
    for item in obj:
        k = (item.get("tfreq", 0), item.get("frequency", 0),
             tuple(item["exponents"]))
        t.terms[k] = GR.from_quad(item["coefficient"])
    return t


def vf_to_json(xi: PolyVectorField) -> str:
    obj = {
        "type": "PolyVectorField",
        "N": xi.N,
        "components": [
            {"component": mu, "terms": trigpoly_to_obj(xi.comps[mu])}
            for mu in range(xi.N)
        ],
    }
    return json.dumps(obj, sort_keys=True)


def vf_from_json(s: str) -> PolyVectorField:
    obj = json.loads(s)
    if obj.get("type") != "PolyVectorField":
        raise ValueError("not a PolyVectorField document")
    N = obj["N"]
    comps = [TrigPoly.zero(N)] * N
    for entry in obj["components"]:
        comps[entry["component"]] = trigpoly_from_obj(N, entry["terms"])
    return PolyVectorField(N, tuple(comps))


def gauge_map_to_json(X: GaugeMap) -> str:
    obj = {
        "type": "GaugeMap",
        "N": X.N,
        "dim_g": X.dim_g,
        "components": [
            {"component": a, "terms": trigpoly_to_obj(X.comps[a])}
            for a in range(X.dim_g)
        ],
    }
    return json.dumps(obj, sort_keys=True)


def gauge_map_from_json(s: str) -> GaugeMap:
    obj = json.loads(s)
    if obj.get("type") != "GaugeMap":
        raise ValueError("not a GaugeMap document")
    N, dg = obj["N"], obj["dim_g"]
    comps = [TrigPoly.zero(N)] * dg
    for entry in obj["components"]:
        comps[entry["component"]] = trigpoly_from_obj(N, entry["terms"])
    return GaugeMap(N, dg, tuple(comps))


def _mat_to_obj(m):
    return [[x.to_quad() for x in row] for row in m]


def _mat_from_obj(o):
    return [[GR.from_quad(x) for x in row] for row in o]


def lie_algebra_to_json(g: LieAlgebraSpec) -> str:
    obj = {
        "type": "LieAlgebraSpec",
        "name": g.name,
        "dim": g.dim,
        "structure": [[[x.to_quad() for x in row] for row in plane]
                      for plane in g.struct],
        "metric": _mat_to_obj(g.metric),
        "trace_vector": [x.to_quad() for x in g.trace_vec],
        "module": [_mat_to_obj(m) for m in g.module],
        "yM": g.yM.to_quad(),
        "zM": g.zM.to_quad(),
        "wM": g.wM.to_quad(),
        "split_is_convention": g.split_is_convention,
    }
    return json.dumps(obj, sort_keys=True)


def lie_algebra_from_json(s: str) -> LieAlgebraSpec:
    obj = json.loads(s)
    if obj.get("type") != "LieAlgebraSpec":
        raise ValueError("not a LieAlgebraSpec document")
    g = LieAlgebraSpec(
        name=obj["name"],
        dim=obj["dim"],
        struct=[[[GR.from_quad(x) for x in row] for row in plane]
                for plane in obj["structure"]],
        metric=_mat_from_obj(obj["metric"]),
        trace_vec=[GR.from_quad(x) for x in obj["trace_vector"]],
        module=[_mat_from_obj(m) for m in obj["module"]],
        yM=GR.from_quad(obj["yM"]),
        zM=GR.from_quad(obj["zM"]),
        wM=GR.from_quad(obj["wM"]),
        split_is_convention=obj.get("split_is_convention", False),
    )
    g.validate()
    return g
