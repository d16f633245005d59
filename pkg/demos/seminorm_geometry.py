"""Shapes of the fundamental ball of a seminorm sum |phi_x(v)|.

Two or more independent kernels give a balanced polygon whose vertices sit
on the kernel lines; a single kernel gives an infinite band; no functionals
give the whole plane.  The polygon is written to ball.svg.
"""
from pathlib import Path

from csfill.seminorm import (CullerShalenSeminorm, classify, evaluate, fundamental_ball,
                             minimal_vector, vertex_slopes)
from csfill.svg import ball_svg

examples = {
    "square": [(1, 0), (0, 1)],
    "hexagon": [(1, 0), (0, 1), (1, 1)],
    "lopsided": [(3, -1), (1, 4), (-2, 5)],
    "band": [(1, -6), (2, -12)],
    "zero": [],
}

for name, pairs in examples.items():
    sn = CullerShalenSeminorm.from_pairs(pairs)
    s, v = minimal_vector(sn)
    print(f"{name:<9} {classify(sn)!s:<22} s = {s:<3} attained at {v}")
    ball = fundamental_ball(sn)
    print(f"          ball: {ball.to_json()}")
    if pairs and str(classify(sn)) == "Norm":
        print(f"          vertex slopes: {', '.join(map(str, vertex_slopes(sn)))}")

sn = CullerShalenSeminorm.from_pairs(examples["lopsided"])
print("\nnorms of a few slopes for 'lopsided':",
      {f"{a}/{b}": evaluate(sn, (a, b)) for a, b in [(1, 0), (0, 1), (1, 1), (2, 1), (1, -1)]})

out = Path("ball.svg")
out.write_text(ball_svg(fundamental_ball(sn), viewport=2))
print(f"wrote {out}")
