"""The full pipeline: unimodular trace forms on A, exact enumeration of
self-dual generators, the inverse and product laws for those witnesses, and
the factorization of resolvent ratios at the ramified prime."""

from gform_lab import (
    build_field,
    find_self_dual_generator,
    gform_from_A,
    inverse_resolvend,
    is_self_dual_generator,
    isometry_equivalence,
    sqrt_inverse_different,
    standard_form,
    stickelberger_factorization_check,
    verify_inverse_law,
    verify_weak_multiplicativity,
    witness_element,
)
from gform_lab.groups import FiniteAbelianGroup

# the standard form: the identity is its own witness
std = standard_form(FiniteAbelianGroup((3,)))
w = find_self_dual_generator(std)
print("standard form witness:", w.coords)

# conductor 7: the trace form on A is unimodular and has a self-dual generator
K7 = build_field(3, 7)
form7 = gform_from_A(K7)
w7 = find_self_dual_generator(form7)
print(f"\nconductor 7: Gram {[list(r) for r in form7.gram]}")
print("witness coords over the A-basis:", w7.coords, " verified:", w7.verify())
print("G-isometric to the standard form:", isometry_equivalence(form7, std).value)

a7 = witness_element(form7, w7)
A7 = sqrt_inverse_different(K7)
print("witness is a self-dual generator of A:", is_self_dual_generator(a7, A7))

# inverting the resolvend gives a generator for the inverse identification
a7_inv = inverse_resolvend(a7)
print("\ninverse-resolvend element generates A for h^(-1):",
      is_self_dual_generator(a7_inv, A7))
print("packaged check:", verify_inverse_law(K7))

# the product law across coprime conductors lands in the conductor-91 field
K13 = build_field(3, 13)
print("\nproduct law for (7, 13) in the conductor-91 field:",
      verify_weak_multiplicativity(K7, K13))

# resolvent ratios factor through the branch map at the ramified prime
result = stickelberger_factorization_check(a7)
print(f"\nfactorization at 7: {result.passed}, branch witness {result.witness}")
form13 = gform_from_A(K13)
a13 = witness_element(form13, find_self_dual_generator(form13))
result13 = stickelberger_factorization_check(a13)
print(f"factorization at 13: {result13.passed}, branch witness {result13.witness}")
