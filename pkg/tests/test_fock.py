import itertools
import random
from fractions import Fraction

import pytest

from jetfock.fock import (
    PHI,
    PI,
    P,
    Q,
    FieldSpec,
    NormalOrderedOperator,
    OpTerm,
    Slot,
    State,
    TermFamily,
    apply_term,
    commutator_apply,
    creator_state,
    mode,
    mode_commutator,
    monomial_energy,
    normal_order,
    probe_battery,
)
from jetfock.glreps import scalar_rep
from jetfock.scalars import GR, ONE, ZERO


def single_op(m, fermionic=False):
    t = normal_order([m], ONE, fermionic)
    return NormalOrderedOperator([t], fermionic=fermionic)


def test_mode_commutators():
    assert mode_commutator(mode(P, (0,), 1), mode(Q, (0,), -1)) == ONE
    assert mode_commutator(mode(P, (0,), 1), mode(Q, (1,), -1)) == ZERO
    assert mode_commutator(mode(PI, (0, 0), 2), mode(PI, (0, 0), -2)) == ZERO
    assert mode_commutator(mode(Q, (0,), -1), mode(P, (0,), 1)) == -ONE
    assert mode_commutator(mode(PHI, (0, 0), -1), mode(PI, (0, 0), 1)) == -ONE
    assert mode_commutator(mode(PHI, (0, 0), -1), mode(PI, (0, 0), 1), True) == ONE


def test_vacuum_annihilation():
    vac = State.vacuum()
    for m in [mode(P, (0,), 0), mode(P, (0,), -2), mode(Q, (0,), -1),
              mode(PI, (0, 0), 0), mode(PHI, (0, 0), -3)]:
        assert single_op(m).apply(vac).is_zero()


def test_creator_on_vacuum():
    st = single_op(mode(Q, (0,), 1)).apply(State.vacuum())
    assert st == creator_state(mode(Q, (0,), 1))
    assert list(st.terms.values()) == [ONE]


def test_wick_contraction():
    # normal-ordered P(1) q(-1) term on q(1)|0>: the annihilator q(-1)
    # contracts P... it must contract nothing (no P creator present), so
    # only the P(1)q(-1)-term path through the q(1) creator matters.
    st = creator_state(mode(Q, (0,), 1))
    term = normal_order([mode(P, (0,), 1), mode(Q, (0,), -1)], ONE, False)
    out = apply_term(term, st, False)
    assert out.is_zero()
    # p(0).. on q(0)|0>: contraction [P(0), q(0)] -> vacuum multiple
    st2 = creator_state(mode(Q, (0,), 0))
    term2 = normal_order([mode(P, (0,), 0)], ONE, False)
    out2 = apply_term(term2, st2, False)
    assert out2 == State.vacuum()


def test_bosonic_multiplicity():
    st = creator_state(mode(Q, (0,), 0), mode(Q, (0,), 0))
    out = single_op(mode(P, (0,), 0)).apply(st)
    # [P(0), q(0)^2] = 2 q(0)
    assert out == creator_state(mode(Q, (0,), 0)).scale(2)


def test_fermionic_exclusion_and_signs():
    a = mode(PHI, (0, 0), 0)
    b = mode(PHI, (0, 0), 1)
    st = creator_state(a, a, fermionic=True)
    assert st.is_zero()
    # anticommuting creators: phi(1) phi(0)|0> = -phi(0) phi(1)|0>
    st1 = creator_state(b, a, fermionic=True)
    st2 = creator_state(a, b, fermionic=True)
    assert st1 == st2.scale(-1)


def test_normal_order_signs_fermion():
    # pi(1) phi(0) written order vs canonical (phi before pi): one swap
    t = normal_order([mode(PI, (0, 0), 1), mode(PHI, (0, 0), 0)], ONE, True)
    assert t.coeff == -ONE
    assert t.cre == ((mode(PHI, (0, 0), 0), 1), (mode(PI, (0, 0), 1), 1))
    # bosonic: no sign
    t2 = normal_order([mode(PI, (0, 0), 1), mode(PHI, (0, 0), 0)], ONE, False)
    assert t2.coeff == ONE


def test_normal_order_idempotent_on_explicit_terms():
    seq = [mode(PHI, (0, 0), 2), mode(PI, (0, 0), 1), mode(PHI, (0, 0), -1)]
    t = normal_order(seq, GR(3), True)
    written = [op for op, k in t.cre for _ in range(k)] + list(t.ann)
    t2 = normal_order(written, t.coeff, True)
    assert t2 == t


def test_repeated_fermionic_mode_vanishes():
    t = normal_order([mode(PHI, (0, 0), 1), mode(PHI, (0, 0), 1)], ONE, True)
    assert t is None


def _random_mode(rng, fermionic_pool=True):
    kind = rng.choice([Q, P, PHI, PI] if fermionic_pool else [Q, P])
    comp = (0,) if kind in (Q, P) else (0, 0)
    freq = rng.randint(-2, 2)
    return (kind, comp, freq)


@pytest.mark.parametrize("fermionic", [False, True])
def test_application_realizes_graded_bracket(fermionic):
    """a(b(st)) -+ b(a(st)) == [a,b] st for single modes: the engine's
    application machinery realizes the canonical (anti)commutators."""
    rng = random.Random(20240811)
    pool = [mode(Q, (0,), 1), mode(Q, (0,), 0), mode(P, (0,), 1)]
    states = [State.vacuum(),
              creator_state(mode(Q, (0,), 1), fermionic=fermionic),
              creator_state(mode(PHI, (0, 0), 0), mode(PI, (0, 0), 1),
                            fermionic=fermionic)]
    for _ in range(120):
        a = _random_mode(rng)
        b = _random_mode(rng)
        Aop = single_op(a, fermionic)
        Bop = single_op(b, fermionic)
        graded = (-1) ** ((a[0] >= PHI) * (b[0] >= PHI)) if fermionic else 1
        for st in states:
            lhs = Aop.apply(Bop.apply(st)) - Bop.apply(Aop.apply(st)).scale(graded)
            rhs = st.scale(mode_commutator(a, b, fermionic))
            assert (lhs - rhs).is_zero(), (a, b)
    del pool


def test_family_enumerator_soundness():
    # family: sum_{r+s=0} q(r) P(s): acting on q(1)|0> only finitely many
    # terms fire; compare against a wide explicit window.
    fam = TermFamily(ONE, (Slot(Q, (0,)), Slot(P, (0,))), 0)
    op = NormalOrderedOperator(families=[fam])
    st = creator_state(mode(Q, (0,), 1), mode(P, (0,), 2))
    out = op.apply(st)
    explicit = NormalOrderedOperator(
        [t for r in range(-8, 9)
         for t in [normal_order([mode(Q, (0,), r), mode(P, (0,), -r)], ONE, False)]
         if t is not None])
    out2 = explicit.apply(st)
    assert (out - out2).is_zero()


def test_family_weights_and_affine():
    # slot weight n on q-slot: only n = 1 creator contributes on vacuum at
    # shift 2 with P-slot at 1
    fam = TermFamily(ONE, (Slot(Q, (0,), (ZERO, ONE)), Slot(P, (0,))), 2,
                     affine=(GR(10), (ZERO, GR(1))))
    op = NormalOrderedOperator(families=[fam])
    out = op.apply(State.vacuum())
    want = creator_state(mode(Q, (0,), 1), mode(P, (0,), 1)).scale(GR(11))
    assert (out - want).is_zero()


def test_commutator_apply_self_is_zero():
    fam = TermFamily(GR(2), (Slot(Q, (0,)), Slot(P, (0,))), 1)
    op = NormalOrderedOperator(families=[fam])
    for st in probe_battery(FieldSpec(N=1)):
        assert commutator_apply(op, op, st).is_zero()


def test_energy_bookkeeping():
    spec = FieldSpec(N=2, p=1, rep=scalar_rep(2, 0), w=Fraction(1, 2))
    comps = spec.jet_components()
    mono = ((mode(PHI, comps[0], 2), 1), (mode(PI, comps[1], 1), 2))
    assert monomial_energy(mono, spec) == Fraction(2) + Fraction(1, 2) + 2 * Fraction(1, 2)


def test_probe_battery_shapes():
    spec = FieldSpec(N=2, p=0, rep=scalar_rep(2, 0))
    probes = probe_battery(spec)
    assert probes[0] == State.vacuum()
    assert len(probes) > 6
    fspec = FieldSpec(N=1, p=0, rep=scalar_rep(1, 0), fermion=True)
    for st in probe_battery(fspec):
        assert not st.is_zero()


def test_state_dump_stable():
    st = creator_state(mode(Q, (1,), 2), mode(PHI, (0, 0), 0))
    d = st.dumps()
    assert "q[1](2)" in d and "phi[0,0](0)" in d
