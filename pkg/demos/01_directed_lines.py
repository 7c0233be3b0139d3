"""
Arithmetic on directed lines
============================

A directed line is a length plus a direction in the plane.  Adding two of
them chains them tip to tail; multiplying multiplies the lengths and adds
the angles.
"""

import math

from argand import DirectedLine, argument, from_polar, int_pow, modulus, principal_nth_root

a = DirectedLine(3.0, 4.0)
b = from_polar(2.0, math.pi / 2)
print("a       =", a)
print("|a|     =", modulus(a))
print("a + b   =", a + b)

# Multiplication: lengths multiply, directions add.
prod = a * b
print("a * b   =", prod)
print("lengths :", modulus(a) * modulus(b), "vs", modulus(prod))
print("angles  :", argument(a) + argument(b), "vs", argument(prod))

# Every nonzero line has n distinct n-th roots; the principal one is returned.
w = principal_nth_root(DirectedLine(-8.0, 0.0), 3)
print("cbrt(-8) =", w, " cubed back:", int_pow(w, 3))
