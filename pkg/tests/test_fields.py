from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jetfock.fields import (
    CircleVectorField,
    GaugeMap,
    PolyVectorField,
    TrigPoly,
    gauge_map_from_json,
    gauge_map_to_json,
    gl2_algebra,
    lie_algebra_from_json,
    lie_algebra_to_json,
    sl2_algebra,
    u1_algebra,
    vf_commutator,
    vf_from_json,
    vf_to_json,
)
from jetfock.scalars import GR, I


def x(N, mu):
    return TrigPoly.coord(N, mu)


def test_trigpoly_ring():
    N = 2
    f = x(N, 0) * x(N, 0) + x(N, 1).scale(3)
    g = x(N, 1)
    assert f * g == g * f
    assert (f + g) - g == f
    assert f.d_x(0) == x(N, 0).scale(2)
    assert f.d_x(1) == TrigPoly.const(N, 3)


def test_trig_factors():
    N = 1
    f = TrigPoly.mono(N, (0,), coeff=1, tf=2)
    assert f.d_t() == f.scale(GR(0, 2))
    g = TrigPoly.mono(N, (0,), coeff=1, xf=3)
    assert g.d_x(0) == g.scale(GR(0, 3))
    h = TrigPoly.mono(N, (2,), coeff=1, xf=1)
    # product rule: trig factor and polynomial factor both contribute
    assert h.d_x(0) == h.scale(GR(0, 1)) + TrigPoly.mono(N, (1,), coeff=2, xf=1)


def test_time_gauge_substitution():
    N = 2
    f = TrigPoly.mono(N, (0, 2), coeff=5, xf=3)
    g = f.substitute_time_gauge()
    assert g == TrigPoly.mono(N, (0, 2), coeff=5, tf=3)
    bad = TrigPoly.mono(N, (1, 0), coeff=1, xf=1)
    with pytest.raises(ValueError):
        bad.substitute_time_gauge()


def test_vf_commutator_basic():
    # [x^0 d_0, d_0] = -d_0
    N = 1
    xi = PolyVectorField.build(N, {0: x(N, 0)})
    eta = PolyVectorField.build(N, {0: TrigPoly.const(N, 1)})
    c = vf_commutator(xi, eta)
    assert c.comps[0] == TrigPoly.const(N, -1)


def test_vf_commutator_antisymmetry_and_witt():
    N = 1
    # Fourier fields e^{imx} d: [e^{imx} d, e^{inx} d] = i(n - m) e^{i(m+n)x} d
    for m in (-2, 1, 3):
        for n in (-1, 2):
            xi = PolyVectorField.build(N, {0: TrigPoly.mono(N, (0,), xf=m)})
            eta = PolyVectorField.build(N, {0: TrigPoly.mono(N, (0,), xf=n)})
            c = vf_commutator(xi, eta)
            want = TrigPoly.mono(N, (0,), coeff=GR(0, n - m), xf=m + n)
            assert c.comps[0] == want
    xi = PolyVectorField.build(2, {0: x(2, 0) * x(2, 1), 1: x(2, 1)})
    assert vf_commutator(xi, xi).is_zero()


def _random_poly_vf(N, rng):
    comps = {}
    for mu in range(N):
        t = TrigPoly.zero(N)
        for _ in range(2):
            exps = tuple(rng.randint(0, 2) for _ in range(N))
            t = t + TrigPoly.mono(N, exps, coeff=GR(rng.randint(-3, 3)))
        comps[mu] = t
    return PolyVectorField.build(N, comps)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_vf_jacobi_random(seed):
    import random

    rng = random.Random(seed)
    N = 2
    a, b, c = (_random_poly_vf(N, rng) for _ in range(3))
    j = vf_commutator(a, vf_commutator(b, c))
    j2 = vf_commutator(b, vf_commutator(c, a))
    j3 = vf_commutator(c, vf_commutator(a, b))
    total = PolyVectorField(N, tuple(
        j.comps[mu] + j2.comps[mu] + j3.comps[mu] for mu in range(N)))
    assert total.is_zero()


def test_circle_field_commutator():
    f = CircleVectorField.build({1: GR(1)})
    g = CircleVectorField.build({-1: GR(1)})
    c = f.commutator(g)
    # [e^{it}, e^{-it}] modes: f g' - g f' = -i e^{0} - i e^{0} = -2i
    assert dict(c.modes) == {0: GR(0, -2)}


def test_lie_algebras_validate():
    for g in (u1_algebra(), sl2_algebra(), sl2_algebra(adjoint=True),
              gl2_algebra()):
        g.validate()


def test_gl2_has_separable_structures():
    g = gl2_algebra()
    assert g.wM == GR(4)
    assert g.yM == GR(1)
    assert g.zM == GR(3)
    assert any(v for v in g.trace_vec)


def test_bracket_map_matches_structure():
    g = sl2_algebra()
    N = 1
    X = GaugeMap(N, 3, (TrigPoly.const(N, 1), TrigPoly.zero(N), TrigPoly.zero(N)))
    Y = GaugeMap(N, 3, (TrigPoly.zero(N), TrigPoly.const(N, 1), TrigPoly.zero(N)))
    Z = g.bracket_map(X, Y)
    assert Z.comps[2] == TrigPoly.const(N, I)
    assert Z.comps[0].is_zero() and Z.comps[1].is_zero()


def test_json_roundtrips():
    N = 2
    xi = PolyVectorField.build(N, {
        0: TrigPoly.mono(N, (0, 1), coeff=GR(Fraction(1, 3), 2), xf=1),
        1: x(N, 1) * x(N, 1),
    })
    assert vf_from_json(vf_to_json(xi)) == xi

    X = GaugeMap(N, 1, (TrigPoly.mono(N, (0, 2), coeff=GR(-2)),))
    back = gauge_map_from_json(gauge_map_to_json(X))
    assert back.comps[0] == X.comps[0]

    g = gl2_algebra()
    g2 = lie_algebra_from_json(lie_algebra_to_json(g))
    assert g2.name == g.name and g2.yM == g.yM and g2.wM == g.wM
