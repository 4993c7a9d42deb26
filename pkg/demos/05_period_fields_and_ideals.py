"""Cyclic cubic (and quintic) fields from Gaussian periods, with exact ideal
arithmetic: the different two independent ways, and the self-dual square root
of its inverse."""

from gform_lab import (
    build_field,
    compose_fields,
    different,
    dual_lattice,
    prime_above,
    sqrt_inverse_different,
    trace_gram,
)
from gform_lab import linalg

K = build_field(3, 7)
print(f"{K}: periods")
for j, eta in enumerate(K.periods):
    print(f"  eta_{j} = {eta}")
print("trace Gram of the periods:", [list(r) for r in K.gram])
print("disc =", K.discriminant, "= 7^2")

L = prime_above(K, 7)
print("\nprime over 7 (HNF rows):", [list(r) for r in L.num], "norm", L.norm())
print("totally ramified: L^3 equals (7):", (L**3).norm() == 343)

d = different(K)  # Hilbert exponents, cross-checked against the trace dual
print("different = L^2:", d == L * L, " norm", d.norm())
print("trace dual of O_K is the inverse different:",
      dual_lattice(K.maximal_order()) == d.inverse())

A = sqrt_inverse_different(K)
print("\nA = L^(-1):", A == L.inverse())
print("A * A = different^(-1):", A * A == d.inverse())
print("A is self-dual:", dual_lattice(A) == A)
print("Gram det of an A-basis:", linalg.det(trace_gram(K, A.basis_elements())))

# quintic instance
K11 = build_field(5, 11)
A11 = sqrt_inverse_different(K11)
print(f"\n{K11}: disc = {K11.discriminant} = 11^4, A = L^(-2) with A*A = d^(-1):",
      A11 * A11 == different(K11).inverse())

# composite conductor 91 = 7 * 13, cut by the product character
K91 = compose_fields(build_field(3, 7), build_field(3, 13))
print(f"\ncomposite field: conductor {K91.conductor}, disc {K91.discriminant} = 91^2")
A91 = sqrt_inverse_different(K91)
print("A has norm", A91.norm(), "and is self-dual:", dual_lattice(A91) == A91)
