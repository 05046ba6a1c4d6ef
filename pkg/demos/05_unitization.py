"""Freely adjoining identity cells to the Moore composition structure.

Since no genuine Moore identity exists (see 04_law_lab), a formal
identity ⊥ is adjoined at every alphabet and made a strict unit.  The
triangle and pentagon laws then hold on the nose.
"""

import itertools

from mealymoore import (
    FormalId,
    UMap,
    check_triangle,
    check_upentagon,
    identity_map,
    load_machine,
    ucompose,
    ucompose2,
)

cpar = load_machine("demos/machines/cpar.machine")
u2 = load_machine("demos/machines/u2.machine")
bot = FormalId(cpar.input)

print("⊥ ⋄ CPAR == CPAR:", ucompose(bot, cpar) == cpar)
print("CPAR ⋄ ⊥ == CPAR:", ucompose(cpar, bot) == cpar)

cells = {"⊥": bot, "cpar": cpar, "u2": u2}
for (n2, c2), (n1, c1) in itertools.product(cells.items(), repeat=2):
    print("triangle(%s, %s):" % (n2, n1), check_triangle(c2, c1))

quads = [(bot, cpar, u2, cpar), (u2, bot, bot, cpar), (bot, bot, bot, bot)]
for quad in quads:
    names = "/".join("⊥" if isinstance(c, FormalId) else "m" for c in quad)
    print("pentagon %s:" % names, check_upentagon(*quad))

# Horizontal composition of 2-cells, with the formal token as unit.
two_cell = UMap(cpar, cpar, identity_map(cpar))
composed = ucompose2(two_cell, ucompose2(UMap(bot, bot, None), two_cell))
print("whiskered 2-cell lives on %d states" % len(composed.statemap.map))
