"""Finite abelian groups and their exact characters.

Characters never materialize complex numbers: chi(s) is reported as the
exponent k with chi(s) = zeta_m^k, m = exp(G), so every identity downstream
is an integer identity.
"""

from gform_lab import FiniteAbelianGroup, character_value_exponent, galois_twist

G = FiniteAbelianGroup((3, 9))
print(f"group {G}: order {G.order}, exponent {G.exponent}")

elements = G.elements()
print("first five elements (lexicographic, identity first):")
for s in elements[:5]:
    print(f"  {s}  order {s.order()}")

chi = G.character((1, 2))
s = G.element((2, 5))
k = character_value_exponent(chi, s)
print(f"\n{chi} evaluated at {s}: zeta_{G.exponent}^{k}")

# the pairing is bilinear in exponents
t = G.element((1, 1))
lhs = character_value_exponent(chi, s * t)
rhs = (character_value_exponent(chi, s) + character_value_exponent(chi, t)) % G.exponent
print(f"chi(st) exponent {lhs} == chi(s)+chi(t) exponent {rhs}: {lhs == rhs}")

# the dual pairing separates points
nontrivial = G.element((0, 3))
witness = next(c for c in G.characters() if character_value_exponent(c, nontrivial))
print(f"{witness} detects {nontrivial} (exponent {character_value_exponent(witness, nontrivial)})")

# residues act on elements through powering; exponent -1 is the inverse twist
u = G.element((1, 4))
print(f"\ntwist of {u} by k=2:     {galois_twist(u, 2, 1)}")
print(f"twist back by k=2, -1:  {galois_twist(galois_twist(u, 2, 1), 2, -1)} (round trip)")
