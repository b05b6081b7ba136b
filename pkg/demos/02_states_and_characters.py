"""The central state family: values, degenerations, factor types.

Run:  python demos/02_states_and_characters.py
"""

from fractions import Fraction

from rookchar import (
    classify_factor_type,
    enumerate_rn,
    evaluate,
    make_state,
    parse_element,
    thoma_character,
)

# alpha/beta are the restriction-to-permutations parameters; the mark (i, t)
# weights the quasi-cycle values t * alpha_i^len.
state = make_state(alpha=["1/2", "1/3"], beta=["1/6"], mark=(1, "1/2"))
print("character on a 2-cycle:", thoma_character(state.thoma, 2))
print("character on a 3-cycle:", thoma_character(state.thoma, 3))

r = parse_element("[2,3,_,4,_]")
print(f"\nvalue on {r.literal()}:", evaluate(state, r))
print("  = (t a^3) * (t a) with a = 1/2, t = 1/2:", Fraction(1, 64))

# The sign state is the markless alpha=(), beta=(1,) point of the family.
sign_state = make_state(beta=["1"])
for lit in ["(1 2)", "(1 2 3)", "(1 2)e{1}", "e{4}"]:
    print(f"sign state on {lit}:", evaluate(sign_state, parse_element(lit)))

# Weight 1 on alpha_1 = 1 gives the constant state; weight 0 kills every
# non-permutation.
print("\ntrivial state constant:", {
    evaluate(make_state(alpha=["1"], mark=(1, 1)), r) for r in enumerate_rn(3)
})

# The parameter region determines the factor type of the generated
# representation.
for spec in [
    make_state(alpha=["1"], mark=(1, "1/2")),
    make_state(alpha=["1/2", "1/4"], mark=(1, "1/3")),
    make_state(alpha=["1/2", "1/4"], mark=(2, 1)),
    sign_state,
    make_state(alpha=["1"], mark=(1, 1)),
]:
    verdict = classify_factor_type(spec)
    print(f"alpha={spec.thoma.alpha} mark={spec.mark}: {verdict.kind} ({verdict.note})")
