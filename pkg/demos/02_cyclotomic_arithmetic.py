"""Exact arithmetic in Q(zeta_n): normal forms, the compatible root system,
Galois action, and Gaussian periods as subgroup traces."""

from gform_lab import CyclotomicNumber, compatible_root, trace_to_subfield

Z = CyclotomicNumber.zeta

# unique normal forms make identities decidable
print("zeta_3 + zeta_3^2 =", Z(3) + Z(3, 2))          # -1
print("zeta_7 * zeta_7^6 =", Z(7) * Z(7, 6))          # 1

x = 1 + Z(5)
print("(1 + zeta_5)^(-1) =", x.inverse())
print("product with itself:", x * x.inverse())

# the compatible system pins zeta_n inside any ambient level
print("\nzeta_3 inside Q(zeta_21):", compatible_root(3, 21))
print("matches raising levels:", Z(3).raise_level(21) == compatible_root(3, 21))

# mixed-level arithmetic lands at the lcm level and can come back down
y = Z(3) + Z(7)
print(f"zeta_3 + zeta_7 lives at level {y.level}")
print("subtracting zeta_7 recovers zeta_3:", (y - Z(7)).lower_level(3) == Z(3))

# Galois action is a ring homomorphism fixing Q
a = Z(7) + Z(7, 6)
print("\nsigma_3 of zeta_7 + zeta_7^6:", a.galois(3))

# Gaussian periods are orbit sums under a subgroup of (Z/f)^x
eta = trace_to_subfield(Z(7), [6])
print("orbit sum of zeta_7 under <6>:", eta)
print("fixed by sigma_6:", eta.galois(6) == eta)
print("full trace of zeta_7:", Z(7).trace_to_rational())
print("norm of 1 - zeta_7:", (1 - Z(7)).norm_to_rational())
