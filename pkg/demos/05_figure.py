"""
Drawing the descent
===================

Record every accepted step, then write an SVG: the path in the ``z``-plane
on the left and, on the right, the broken line of the first step.
"""

from argand import Polynomial, find_all_roots
from argand.io import TraceRecord, write_trace
from argand.svg import emit_svg

p = Polynomial([1, 0, -2, 2, (1, 1)])
trace = []
find_all_roots(p, on_step=lambda k, it, z, out: trace.append(
    TraceRecord.from_outcome(k, it, z, out)))

print(len(trace), "steps recorded")
write_trace(trace, "descent.jsonl")
emit_svg(trace, "descent.svg")
print("wrote descent.jsonl and descent.svg")
