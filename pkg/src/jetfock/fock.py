"""Exact Fock-space mode algebra.

Mode conventions (the one normalization dictionary for the whole engine):

* Fourier expansion A(t) = sum_n A-hat(n) e^{-int} for every field.
* The position-type modes q-hat^mu(n), phi-hat_{alpha,m}(n) are kept as
  in the continuum; the momentum-type modes are rescaled by 2*pi,
  P-hat = 2*pi p-hat, Pi-hat = 2*pi pi-hat, so the canonical brackets are

      [P-hat_mu(m), q-hat^nu(n)]        = d^nu_mu d_{m+n,0}
      [Pi-hat^A(m), phi-hat_B(n)]_grade = d^A_B d_{m+n,0}

  and every circle integral int dt e^{i k t} = 2*pi d_{k,0} cancels the
  same 2*pi, leaving Gaussian-rational coefficients everywhere.
* Vacuum: q-hat(n<0), phi-hat(n<0), P-hat(n<=0), Pi-hat(n<=0) annihilate
  |0>; all other modes are creators (note the asymmetric zero modes:
  phi-hat(0) creates while Pi-hat(0) annihilates).
* Monomial order: field kind q < p < phi < pi, then component tuple
  lexicographically, then frequency ascending.  Fermionic reordering is
  tracked by signs relative to this fixed order.

Operators are stored normal ordered: every term is (coefficient,
creator monomial, annihilator tuple).  Infinite families (all operators
built from integrals of fields) are stored as term-family descriptors
with a fixed total frequency; given a target state the enumerator lists
the finitely many terms that can act on it, which is the finiteness
argument made algorithmic: creator frequencies are bounded below, the
total frequency is fixed, and annihilator frequencies are restricted to
the conjugate mode support of the state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dfield
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .glreps import TensorRepSpec
from .fields import LieAlgebraSpec
from .multiindex import multi_indices
from .scalars import GR, ONE, ZERO

Q, P, PHI, PI = 0, 1, 2, 3
KIND_NAMES = {Q: "q", P: "p", PHI: "phi", PI: "pi"}

ModeOp = Tuple[int, Tuple[int, ...], int]  # (kind, component, frequency)
Monomial = Tuple[Tuple[ModeOp, int], ...]  # ((op, multiplicity), ...)

_CMIN = {Q: 0, P: 1, PHI: 0, PI: 1}  # lowest creator frequency per kind
_CONJ = {Q: P, P: Q, PHI: PI, PI: PHI}


def mode(kind: int, comp, freq: int) -> ModeOp:
    return (kind, tuple(comp) if not isinstance(comp, tuple) else comp, freq)


def is_creator(op: ModeOp) -> bool:
    return op[2] >= _CMIN[op[0]]


def _is_fermionic(op: ModeOp, fermionic: bool) -> bool:
    return fermionic and op[0] >= PHI


def mode_commutator(a: ModeOp, b: ModeOp, fermionic: bool = False) -> GR:
    """Graded bracket [a, b] with the engine's +-1 normalization."""
    ka, ca, fa = a
    kb, cb, fb = b
    if ca != cb or fa + fb != 0:
        return ZERO
    if ka == P and kb == Q:
        return ONE
    if ka == Q and kb == P:
        return -ONE
    if ka == PI and kb == PHI:
        return ONE
    if ka == PHI and kb == PI:
        return ONE if fermionic else -ONE
    return ZERO


def _contract(a: ModeOp, c: ModeOp, fermionic: bool) -> Optional[GR]:
    """Bracket value used when annihilator a passes creator c; None if zero."""
    v = mode_commutator(a, c, fermionic)
    return v if v else None


class State:
    """Finite linear combination of creator monomials over the vacuum."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, GR]] = None):
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    @staticmethod
    def vacuum() -> "State":
        return State({(): ONE})

    @staticmethod
    def zero() -> "State":
        return State()

    def __add__(self, other: "State") -> "State":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        st = State()
        st.terms = out
        return st

    def __sub__(self, other: "State") -> "State":
        return self + other.scale(-ONE)

    def scale(self, c) -> "State":
        c = GR.of(c)
        st = State()
        if c:
            st.terms = {k: c * v for k, v in self.terms.items()}
        return st

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return self.dumps()

    def coefficient(self, mono: Monomial) -> GR:
        return self.terms.get(mono, ZERO)

    def dumps(self) -> str:
        """Stable one-monomial-per-line debug format."""
        if not self.terms:
            return "0"
        lines = []
        for mono in sorted(self.terms):
            bits = []
            for (kind, comp, freq), mult in mono:
                s = f"{KIND_NAMES[kind]}[{','.join(map(str, comp))}]({freq})"
                if mult > 1:
                    s += f"^{mult}"
                bits.append(s)
            body = " ".join(bits) if bits else "|0>"
            lines.append(f"({self.terms[mono]}) {body}")
        return "\n".join(lines)

    def support(self) -> Dict[Tuple[int, Tuple[int, ...]], set]:
        """Creator frequencies present, per (kind, component)."""
        sup: Dict[Tuple[int, Tuple[int, ...]], set] = {}
        for mono in self.terms:
            for (kind, comp, freq), _ in mono:
                sup.setdefault((kind, comp), set()).add(freq)
        return sup


def mono_from_creator(op: ModeOp) -> Monomial:
    return ((op, 1),)


def creator_state(*ops: ModeOp, fermionic: bool = False) -> State:
    """Apply the given creators (left to right) to the vacuum."""
    st = State.vacuum()
    for op in reversed(ops):
        st = _apply_creator_state(op, st, fermionic)
    return st


# -- single-mode actions ------------------------------------------------------


def _annihilate(a: ModeOp, mono: Monomial, coeff: GR, fermionic: bool):
    """All contractions of annihilator a against monomial mono."""
    out = []
    sign = ONE
    a_ferm = _is_fermionic(a, fermionic)
    for i, (c_op, mult) in enumerate(mono):
        v = _contract(a, c_op, fermionic)
        if v is not None:
            if mult == 1:
                m2 = mono[:i] + mono[i + 1:]
            else:
                m2 = mono[:i] + ((c_op, mult - 1),) + mono[i + 1:]
            out.append((m2, coeff * sign * v * mult))
        if a_ferm and _is_fermionic(c_op, fermionic):
            sign = -sign
    return out


def _create(c: ModeOp, mono: Monomial, coeff: GR, fermionic: bool):
    """Prepend creator c, reordering into canonical position with signs."""
    pos = 0
    sign = ONE
    c_ferm = _is_fermionic(c, fermionic)
    for (op, mult) in mono:
        if op >= c:
            break
        pos += 1
        if c_ferm and _is_fermionic(op, fermionic):
            sign = -sign
    if pos < len(mono) and mono[pos][0] == c:
        if c_ferm:
            return None
        op, mult = mono[pos]
        m2 = mono[:pos] + ((op, mult + 1),) + mono[pos + 1:]
    else:
        m2 = mono[:pos] + ((c, 1),) + mono[pos:]
    return m2, coeff * sign


def _apply_creator_state(c: ModeOp, st: State, fermionic: bool) -> State:
    out: Dict[Monomial, GR] = {}
    for mono, v in st.terms.items():
        r = _create(c, mono, v, fermionic)
        if r is None:
            continue
        m2, v2 = r
        s = out.get(m2)
        s = v2 if s is None else s + v2
        if s:
            out[m2] = s
        else:
            out.pop(m2, None)
    res = State()
    res.terms = out
    return res


# -- normal-ordered terms -----------------------------------------------------


@dataclass(frozen=True)
class OpTerm:
    """coefficient x (sorted creators) x (sorted annihilators)."""

    coeff: GR
    cre: Monomial
    ann: Tuple[ModeOp, ...]


def normal_order(seq: Sequence[ModeOp], coeff: GR, fermionic: bool) -> Optional[OpTerm]:
    """Normal order a written sequence of modes, dropping contractions.

    Reordering tracks fermionic transposition signs; a repeated
    fermionic mode makes the term vanish.  This is exactly the ::
    prescription: creators to the left, annihilators to the right, each
    group in canonical order.
    """
    creators = []
    annihil = []
    ferm_written = []
    for op in seq:
        c = is_creator(op)
        if c:
            creators.append(op)
        else:
            annihil.append(op)
        if _is_fermionic(op, fermionic):
            ferm_written.append((not c, op))
    if ferm_written:
        target = sorted(ferm_written)
        if any(target[i] == target[i + 1] for i in range(len(target) - 1)):
            return None
        # parity of the permutation taking the written fermionic
        # subsequence to the target order
        perm = [target.index(x) for x in ferm_written]
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                  if perm[i] > perm[j])
        if inv % 2:
            coeff = -coeff
    if not coeff:
        return None
    creators.sort()
    mono: List[Tuple[ModeOp, int]] = []
    for op in creators:
        if mono and mono[-1][0] == op:
            mono[-1] = (op, mono[-1][1] + 1)
        else:
            mono.append((op, 1))
    return OpTerm(coeff, tuple(mono), tuple(sorted(annihil)))


def apply_term(term: OpTerm, st: State, fermionic: bool) -> State:
    cur = {mono: v * term.coeff for mono, v in st.terms.items()}
    for a in reversed(term.ann):
        nxt: Dict[Monomial, GR] = {}
        for mono, v in cur.items():
            for m2, v2 in _annihilate(a, mono, v, fermionic):
                s = nxt.get(m2)
                s = v2 if s is None else s + v2
                if s:
                    nxt[m2] = s
                else:
                    nxt.pop(m2, None)
        cur = nxt
        if not cur:
            break
    if cur:
        for c_op, mult in reversed(term.cre):
            for _ in range(mult):
                nxt = {}
                for mono, v in cur.items():
                    r = _create(c_op, mono, v, fermionic)
                    if r is None:
                        continue
                    m2, v2 = r
                    s = nxt.get(m2)
                    s = v2 if s is None else s + v2
                    if s:
                        nxt[m2] = s
                    else:
                        nxt.pop(m2, None)
                cur = nxt
                if not cur:
                    break
            if not cur:
                break
    out = State()
    out.terms = cur
    return out


# -- term families ------------------------------------------------------------


@dataclass(frozen=True)
class Slot:
    """One mode factor of a family: fixed kind/component, open frequency.

    weight is the coefficient tuple of a polynomial in the slot's own
    frequency (time derivatives of the underlying field); () means the
    constant 1.
    """

    kind: int
    comp: Tuple[int, ...]
    weight: Tuple[GR, ...] = ()

    def eval_weight(self, n: int) -> GR:
        if not self.weight:
            return ONE
        acc = ZERO
        pw = 1
        for c in self.weight:
            if c:
                acc = acc + c * pw
            pw *= n
        return acc


@dataclass(frozen=True)
class TermFamily:
    """coefficient x product of slots, summed over frequencies with fixed total.

    affine, when present, is (const, per-slot coefficients) multiplying
    the term by const + sum_j coef_j * n_j; it carries the frequency
    dependence that couples different slots (reparametrization weights).
    """

    base: GR
    slots: Tuple[Slot, ...]
    shift: int
    affine: Optional[Tuple[GR, Tuple[GR, ...]]] = None

    def enumerate_terms(self, st: State, fermionic: bool) -> Iterable[OpTerm]:
        if not self.base or not st.terms:
            return
        sup = st.support()
        nslots = len(self.slots)
        ann_cands: List[List[int]] = []
        lows: List[int] = []
        for sl in self.slots:
            conj = _CONJ[sl.kind]
            amax = _CMIN[sl.kind] - 1
            cands = sorted(
                -f for f in sup.get((conj, sl.comp), ()) if -f <= amax
            )
            ann_cands.append(cands)
            lo = _CMIN[sl.kind]
            if cands:
                lo = min(lo, cands[0])
            lows.append(lo)
        suffix_low = [0] * (nslots + 1)
        for j in range(nslots - 1, -1, -1):
            suffix_low[j] = suffix_low[j + 1] + lows[j]

        freqs = [0] * nslots

        def rec(j: int, partial: int):
            if j == nslots:
                if partial == self.shift:
                    yield tuple(freqs)
                return
            budget = self.shift - partial - suffix_low[j + 1]
            sl = self.slots[j]
            for f in ann_cands[j]:
                if f <= budget:
                    freqs[j] = f
                    yield from rec(j + 1, partial + f)
            f0 = _CMIN[sl.kind]
            for f in range(f0, budget + 1):
                freqs[j] = f
                yield from rec(j + 1, partial + f)

        for choice in rec(0, 0):
            coeff = self.base
            for sl, n in zip(self.slots, choice):
                w = sl.eval_weight(n)
                if not w:
                    coeff = ZERO
                    break
                coeff = coeff * w
            if not coeff:
                continue
            if self.affine is not None:
                a0, acoef = self.affine
                acc = a0
                for c, n in zip(acoef, choice):
                    if c and n:
                        acc = acc + c * n
                coeff = coeff * acc
                if not coeff:
                    continue
            seq = [(sl.kind, sl.comp, n) for sl, n in zip(self.slots, choice)]
            t = normal_order(seq, coeff, fermionic)
            if t is not None:
                yield t


class NormalOrderedOperator:
    """A finite list of explicit terms plus generated term families."""

    __slots__ = ("terms", "families", "fermionic")

    def __init__(
        self,
        terms: Optional[List[OpTerm]] = None,
        families: Optional[List[TermFamily]] = None,
        fermionic: bool = False,
    ):
        self.terms = list(terms or [])
        self.families = list(families or [])
        self.fermionic = fermionic

    def __add__(self, other: "NormalOrderedOperator") -> "NormalOrderedOperator":
        if self.fermionic != other.fermionic:
            raise ValueError("cannot mix statistics")
        return NormalOrderedOperator(
            self.terms + other.terms, self.families + other.families,
            self.fermionic)

    def scale(self, c) -> "NormalOrderedOperator":
        c = GR.of(c)
        return NormalOrderedOperator(
            [OpTerm(c * t.coeff, t.cre, t.ann) for t in self.terms],
            [TermFamily(c * f.base, f.slots, f.shift, f.affine)
             for f in self.families],
            self.fermionic)

    def apply(self, st: State) -> State:
        out = State.zero()
        for t in self.terms:
            out = out + apply_term(t, st, self.fermionic)
        for fam in self.families:
            for t in fam.enumerate_terms(st, self.fermionic):
                out = out + apply_term(t, st, self.fermionic)
        return out

    def __call__(self, st: State) -> State:
        return self.apply(st)


def commutator_apply(
    A: NormalOrderedOperator, B: NormalOrderedOperator, st: State
) -> State:
    """[A, B] applied to st; generator-level operators are bosonic."""
    return A.apply(B.apply(st)) - B.apply(A.apply(st))


def op_equal_on(A: NormalOrderedOperator, B: NormalOrderedOperator,
                probes: Sequence[State]) -> bool:
    return all((A.apply(s) - B.apply(s)).is_zero() for s in probes)


# -- field specifications and probe batteries ---------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """One jet family on the trajectory phase space.

    rep is None for the observer-only sector.  module attaches a gauge
    module M, enlarging the internal index to dim(rep) * dim(M).
    lam and w are the reparametrization weights of phi.
    """

    N: int
    p: int = 0
    rep: Optional[TensorRepSpec] = None
    fermion: bool = False
    lam: Fraction = Fraction(0)
    w: Fraction = Fraction(0)
    include_observer: bool = True
    module: Optional[LieAlgebraSpec] = None

    @property
    def internal_dim(self) -> int:
        if self.rep is None:
            return 0
        d = self.rep.dim
        if self.module is not None:
            d *= self.module.module_dim
        return d

    def jet_components(self) -> List[Tuple[int, ...]]:
        """Flattened (internal, *multi-index) component tuples, stable order."""
        if self.rep is None:
            return []
        out = []
        for m in multi_indices(self.N, self.p):
            for a in range(self.internal_dim):
                out.append((a,) + m)
        return out

    def label(self) -> str:
        stat = "fermion" if self.fermion else "boson"
        rep = self.rep.label() if self.rep else "none"
        s = f"N={self.N},p={self.p},rep={rep},{stat},lam={self.lam},w={self.w}"
        if self.module is not None:
            s += f",g-module={self.module.name}"
        if not self.include_observer:
            s += ",no-observer"
        return s


def creator_energy(op: ModeOp, spec: FieldSpec) -> Fraction:
    """H-grading of a creator: frequency plus +-w for the jet pair."""
    kind, _, freq = op
    if kind == PHI:
        return freq + spec.w
    if kind == PI:
        return freq - spec.w
    return Fraction(freq)


def monomial_energy(mono: Monomial, spec: FieldSpec) -> Fraction:
    return sum((creator_energy(op, spec) * mult for op, mult in mono),
               Fraction(0))


def probe_battery(spec: FieldSpec, extended: bool = False) -> List[State]:
    """Vacuum, selected single-creator states, and two-creator states.

    Small and deterministic: spans the coefficient systems the charge
    measurements solve, per the documented default battery.
    """
    singles: List[ModeOp] = []
    if spec.include_observer:
        for mu in range(spec.N):
            singles.append(mode(Q, (mu,), 0))
            singles.append(mode(Q, (mu,), 1))
        singles.append(mode(P, (0,), 1))
        if extended:
            singles.append(mode(Q, (0,), 2))
            singles.append(mode(P, (spec.N - 1,), 2))
    comps = spec.jet_components()
    if comps:
        first, last = comps[0], comps[-1]
        singles.append(mode(PHI, first, 0))
        singles.append(mode(PI, first, 1))
        if extended or last != first:
            singles.append(mode(PHI, last, 1))
    battery = [State.vacuum()]
    for op in singles:
        battery.append(creator_state(op, fermionic=spec.fermion))
    pair_pool = []
    if spec.include_observer:
        pair_pool = [mode(Q, (0,), 0), mode(Q, (0,), 1), mode(P, (0,), 1)]
        if comps:
            pair_pool.append(mode(PHI, comps[0], 0))
    for a, b in itertools.combinations_with_replacement(pair_pool, 2):
        st = creator_state(a, b, fermionic=spec.fermion)
        if not st.is_zero():
            battery.append(st)
    return battery
