"""Finite probability spaces from first principles: sigma-algebras built by
closure, the probability axioms checked mechanically, and independence as a
property you verify rather than assume."""

from cltlab import (
    are_independent,
    expectation,
    fair_die_space,
    generate_sigma_algebra,
    is_probability_measure,
    product_space,
    pushforward,
)
from cltlab.finite_space import variance


def main():
    die = fair_die_space()
    faces = [float(o) for o in die.outcomes]
    print("fair die:", die.outcomes)
    print(f"mean {expectation(die, faces)}, variance {variance(die, faces):.6f}")

    print()
    print("== sigma-algebra generated by {1,2,3} and {3,4} (0-indexed below) ==")
    family = generate_sigma_algebra(6, [[0, 1, 2], [2, 3]])
    events = sorted((sorted(e) for e in family.events), key=lambda e: (len(e), e))
    for e in events:
        print("  ", set(e) if e else "{}")
    print(f"{len(events)} events; every complement and union stays inside")

    print()
    print("== checking the axioms ==")
    check = is_probability_measure(die, family, lambda e: sum(die.weights[i] for i in e))
    print("induced measure on the family:", check)

    # scale everything by 0.9 and additivity survives but total mass breaks
    check = is_probability_measure(
        die, family, lambda e: 0.9 * sum(die.weights[i] for i in e))
    print("scaled by 0.9:                ", check)

    print()
    print("== independence on a two-die product space ==")
    two = product_space(die, die)
    first = [float(a) for a, _ in two.outcomes]
    second = [float(b) for _, b in two.outcomes]
    total = [a + b for a, b in zip(first, second)]
    print("X1 vs X2:      ", are_independent(two, [first, second]))
    print("X1 vs X1:      ", are_independent(two, [first, first]))
    print("X1 vs X1 + X2: ", are_independent(two, [first, total]))

    print()
    print("law of X1 + X2 (pushforward onto the sum):")
    law = pushforward(two, total)
    for x, w in zip(law.points, law.weights):
        print(f"  P(S = {x:2.0f}) = {w:.6f}  ({round(w * 36):d}/36)")


if __name__ == "__main__":
    main()
