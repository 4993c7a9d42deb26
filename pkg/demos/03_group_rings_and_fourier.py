"""Group algebras: the inversion involution, the character transform, exact
invertibility tests, and the self-duality classes of units."""

from gform_lab import (
    FiniteAbelianGroup,
    GroupRingElement,
    NotInvertible,
    class_membership,
    fourier,
    fourier_inverse,
    invert_by_linear_solve,
    try_invert,
)

G = FiniteAbelianGroup((3,))
s = GroupRingElement.from_element(G.element((1,)))

gamma = 1 + s - s * s
print("gamma =", gamma)
print("gamma^[-1] =", gamma.involute())

# the transform turns convolution into pointwise values
v = fourier(gamma)
for chi, val in v.values.items():
    print(f"  value at {chi}: {val}")
print("round trip recovers gamma:", fourier_inverse(v) == gamma)

# inversion through nonvanishing character values, verified by the product
inv = try_invert(gamma)
print("\ngamma^(-1) =", inv)
print("product:", inv * gamma)
print("regular-representation oracle agrees:", invert_by_linear_solve(gamma) == inv)

total = sum((GroupRingElement.from_element(t) for t in G.elements()), GroupRingElement.zero(G))
try:
    try_invert(total)
except NotInvertible as exc:
    print(f"sum over the group is not invertible; vanishing character: {exc.character}")

# self-duality classes: group elements are strictly self-dual, 2 is nothing
print("\nclass of s:", class_membership(s).value)
print("class of 2:", class_membership(GroupRingElement.scalar(G, 2)).value)
print("class of gamma:", class_membership(gamma).value)
