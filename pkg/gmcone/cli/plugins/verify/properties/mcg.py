# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
from gmcone.cli.plugins.verify.registry import register, worst
from gmcone.cli.plugins.verify.sampling import (
    random_cone_point,
    random_integer_foliation,
    random_slope,
    random_teich_point,
)
from gmcone.geometry.cone import (
    Boundary,
    BoundaryPt,
    InteriorPt,
    e_function,
    null_test,
    pairing_i,
)
from gmcone.geometry.foliation import intersection_number, projectively_equal
from gmcone.geometry.mcg import (
    act_on_cone,
    act_on_foliation,
    act_on_ideal_point,
    act_on_teich,
    random_word,
)
from gmcone.geometry.numeric import relative_error
from gmcone.geometry.teich import boundary_slope, extremal_length, teich_distance


TEST_FOLIATIONS = 6


@register('mcg', 'mapping classes act by isometries', exact=True, trials=0.4)
def check_isometry(run, rng, trials):
    def errors():
        for _ in range(trials):
            _, A = random_word(rng)
            tau1 = random_teich_point(rng, exact=True)
            tau2 = random_teich_point(rng, exact=True)
            yield abs(teich_distance(act_on_teich(A, tau1), act_on_teich(A, tau2)) - teich_distance(tau1, tau2))

    return worst(errors())


@register('mcg', 'mapping classes preserve intersection numbers', exact=True, trials=0.4)
def check_intersection_invariance(run, rng, trials):
    def errors():
        for _ in range(trials):
            _, A = random_word(rng)
            F, G = random_integer_foliation(rng), random_integer_foliation(rng)
            yield abs(
                intersection_number(act_on_foliation(A, F), act_on_foliation(A, G))
                - intersection_number(F, G),
            )

    return worst(errors())


@register('mcg', 'extremal length is invariant under the joint action', exact=True, trials=0.4)
def check_extremal_length_invariance(run, rng, trials):
    def errors():
        for _ in range(trials):
            _, A = random_word(rng)
            tau, F = random_teich_point(rng, exact=True), random_integer_foliation(rng)
            yield abs(extremal_length(act_on_teich(A, tau), act_on_foliation(A, F)) - extremal_length(tau, F))

    return worst(errors())


@register('mcg', 'the action on Teichmueller space is a group action', exact=True, trials=0.4)
def check_action_homomorphism(run, rng, trials):
    def errors():
        for _ in range(trials):
            (_, A), (_, B) = random_word(rng), random_word(rng)
            tau = random_teich_point(rng, exact=True)
            composed = act_on_teich(A @ B, tau)
            iterated = act_on_teich(A, act_on_teich(B, tau))
            yield abs(composed.x - iterated.x) + abs(composed.y - iterated.y)
            back = act_on_teich(A.inverse(), act_on_teich(A, tau))
            yield abs(back.x - tau.x) + abs(back.y - tau.y)

    return worst(errors())


@register('mcg', 'the pairing is equivariant', exact=True, trials=0.4)
def check_pairing_equivariance(run, rng, trials):
    def errors():
        for _ in range(trials):
            _, A = random_word(rng)
            a, b = random_cone_point(rng, exact=True), random_cone_point(rng, exact=True)
            yield abs(pairing_i(act_on_cone(A, a), act_on_cone(A, b)) - pairing_i(a, b))

    return worst(errors())


@register('mcg', 'Gardiner-Masur functions are equivariant up to scale', trials=0.4)
def check_e_function_projective(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for i in range(trials):
            _, A = random_word(rng)
            inverse = A.inverse()
            if i % 2:
                tau = random_teich_point(rng, exact=True)
                moved, original = InteriorPt(act_on_teich(A, tau)), InteriorPt(tau)
            else:
                G = random_integer_foliation(rng)
                moved, original = BoundaryPt(act_on_foliation(A, G)), BoundaryPt(G)
            foliations = [random_integer_foliation(rng) for _ in range(TEST_FOLIATIONS)]
            pairs = [
                (
                    float(e_function(x0, moved, F)),
                    float(e_function(x0, original, act_on_foliation(inverse, F))),
                )
                for F in foliations
            ]
            reference = max(pairs, key=lambda pair: pair[1])
            if reference[1] == 0:
                continue
            scale = reference[0] / reference[1]
            for value, expected in pairs:
                yield relative_error(value, scale * expected)

    return worst(errors())


@register('mcg', 'the induced boundary action matches the action on slopes', exact=True, trials=0.4)
def check_boundary_commutation(run, rng, trials):
    def errors():
        for _ in range(trials):
            _, A = random_word(rng)
            r = random_slope(rng)
            image = boundary_slope(act_on_ideal_point(A, r), projective=False)
            yield float(not projectively_equal(image, act_on_foliation(A, boundary_slope(r, projective=False))))

    return worst(errors())


@register('mcg', 'null spaces are equivariant', exact=True, trials=0.4)
def check_null_space_equivariance(run, rng, trials):
    def errors():
        for i in range(trials):
            _, A = random_word(rng)
            F = random_integer_foliation(rng)
            G = F.scaled(int(rng.integers(1, 4))) if i % 2 else random_integer_foliation(rng)
            before = null_test(Boundary(F), Boundary(G))
            after = null_test(Boundary(act_on_foliation(A, F)), Boundary(act_on_foliation(A, G)))
            yield float(before != after)

    return worst(errors())
