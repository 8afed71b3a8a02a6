"""From Seifert matrix pairs to the twist-move identity.

Each pair (S, N) holds the linking numbers of middle-dimension basis
cycles with push-offs of the dual cycles.  The normalized polynomial is
the exact determinant of t^(1/2)*S - t^(-1/2)*N; unlike the balanced
classes it is an honest polynomial, so its values can sit in an exact
skein identity with no unit ambiguity.
"""
from alexpoly import (
    NormalizedInput,
    SeifertPair,
    check_twist_move,
    normalized_alexander,
    normalized_matrix,
    pseudo_twinkling_from_pair,
    second_order_at_one,
)

pairs = {
    "plus": SeifertPair(S=[[0, -1], [0, -1]], N=[[0, 0], [-1, -1]], p=1, n=1),
    "minus": SeifertPair(S=[[-1, -1], [0, -1]], N=[[-1, 0], [-1, -1]], p=1, n=1),
    "zero": SeifertPair(S=[[-1]], N=[[-1]], p=1, n=1),
}

values = {}
for label, pair in pairs.items():
    matrix = normalized_matrix(pair)
    values[label] = normalized_alexander(NormalizedInput(pair, middle_condition=True))
    print(f"{label}: S = {pair.S}, N = {pair.N}")
    for row in matrix.entries:
        print("   [" + ", ".join(str(e) for e in row) + "]")
    print(f"   normalized polynomial: {values[label]}\n")

verdict = check_twist_move(values["plus"], values["minus"], values["zero"])
print(f"twist identity holds: {verdict.holds}")

# The second-order value of the difference recovers the self-pairing of
# the distinguished cycle on the zero member of the triple.
diff = values["plus"] - values["minus"]
print(f"second-order value of (plus - minus): {second_order_at_one(diff)}")
print(f"pairing s(tau, tau) from the matrix:  {pseudo_twinkling_from_pair(pairs['zero'])}")
