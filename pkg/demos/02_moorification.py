"""Turning a Mealy machine into a Moore machine by buffering one output.

moorify(m) pairs each state with the last emitted letter, so its trace
is the original trace shifted by the chosen initial letter.  apply_D1
goes the other way: it reads a Moore machine's output one step ahead.
"""

from mealymoore import (
    PointedMachine,
    apply_D1,
    embed_j,
    load_machine,
    moorify,
    trace,
)

par = load_machine("demos/machines/par.machine")
cpar = load_machine("demos/machines/cpar.machine")

m = moorify(par)
w = ("1", "0", "1")
print("PAR trace           :", " ".join(trace(PointedMachine(par, "q0"), w)))
print("moorify(PAR) trace  :", " ".join(trace(PointedMachine(m, ("0", "q0")), w)))

print("apply_D1(CPAR) == PAR:", apply_D1(cpar) == par)

j = embed_j(cpar)
print("embedded CPAR output ignores the letter:",
      all(j.out[(e, "0")] == j.out[(e, "1")] for e in cpar.states))
