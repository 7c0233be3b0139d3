"""
One descent step
================

From ``z`` we pick a direction that points the lowest term of the
expansion straight against ``y(z)``, then halve the step length until that
term dominates the rest but stays shorter than ``y(z)`` itself.
"""

from argand import DirectedLine, Polynomial, argand_step, modulus

p = Polynomial([1, -2, 2])          # roots 1 +/- i
z = DirectedLine(0.0, 0.0)
out = argand_step(p, z)
print("step        :", out.step)
print("|y| before  :", out.old_modulus)
print("|y| after   :", out.new_modulus)
print("halvings    :", out.halvings)

# The broken line K, P, A, ..., H: K the origin, P = y(z), H = y(z + i).
names = ["K", "P", "A", "H"]
for name, v in zip(names, out.vertices):
    print(f"  {name} = {v}")

# H lies inside the circle about A through P, hence closer to K than P is.
K, P, A, H = out.vertices
print("|AH| < |AP| :", modulus(H - A) < modulus(P - A))
