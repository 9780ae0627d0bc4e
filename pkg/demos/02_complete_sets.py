"""Building complete sets of mutually orthogonal frequency squares.

At most (n-1)^2 / (m-1) squares of type F(n; lam) can be mutually
orthogonal; a set meeting the bound is complete.  Two classical
constructions reach it:

* finite fields: (q-1)^2/(m-1) squares of F(q; q/m) for q = m^h a prime
  power, built from a surjective linear map down to the m-element field;
* Hadamard matrices: (4c-1)^2 binary squares of F(4c; 2c) from the rows
  of a normalized Hadamard matrix of order 4c.
"""

import mofs

print("prime-power construction")
for m, h in [(3, 1), (2, 2), (5, 1), (3, 2)]:
    mset = mofs.construct_prime_power(m, h)
    bound = mofs.upper_bound(mset.params)
    print(
        f"  F({mset.params.n};{mset.params.lam}): {mset.t} squares,"
        f" bound {bound.value} ({'exact' if bound.exact else 'floor'})"
    )

print("\nHadamard construction")
for order in (4, 8, 12):
    mset = mofs.construct_federer(mofs.hadamard(order))
    print(f"  F({order};{order // 2}): {mset.t} squares")

# A complete set leaves a fingerprint: summing the indicators of every
# symbol except the one in the top-left corner over all squares gives a
# matrix that is 0 in the corner, lam*(n-1) on the rest of the first row
# and column, and lam*(n-2) everywhere else.
mset = mofs.construct_federer(mofs.hadamard(4))
rep = mofs.completeness_structure(mset)
print(f"\ncomplete: {rep.is_complete}, structure matches: {rep.structure_matches}")
print(rep.t_matrix)

# The two order-3 MOLS admit no third square: the bound (3-1)^2/(3-1) = 2
# is already met, and an exhaustive extension search agrees.
mols = mofs.construct_prime_power(3, 1)
print(f"\nextensions of the order-3 MOLS pair: {list(mofs.extensions(mols))}")
