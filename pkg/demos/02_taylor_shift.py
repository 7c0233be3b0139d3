"""
Expanding a polynomial about a point
====================================

``y(z + i)`` rewritten as a polynomial in the small increment ``i``.  The
constant term is ``y(z)``; the rest are what the descent step plays with.
"""

from argand import DirectedLine, Polynomial, taylor_shift

# y(x) = x^3 - 2x + 2, expanded about z = 1.
p = Polynomial([1, 0, -2, 2])
z = DirectedLine(1.0, 0.0)
shift = taylor_shift(p, z)
print("y(z)      =", shift.base)
for k, c in shift.terms:
    print(f"i^{k} coeff =", c)

# The lowest surviving power decides the step direction.
k, R = shift.lowest
print("lowest term: exponent", k, "coefficient", R)

# Near z = 0 the linear term of x^3 + 1 vanishes: lowest power is 3.
q = Polynomial([1, 0, 0, 1])
print("x^3 + 1 about 0:", taylor_shift(q, DirectedLine(0.0, 0.0)).terms)
