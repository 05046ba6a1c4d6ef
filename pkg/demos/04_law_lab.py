"""Exhaustive law checking at desk scale.

Hom-sets between small machines are enumerated outright, so structural
claims (transposition bijections, counit, functoriality, absence of an
identity cell) are decided rather than sampled.
"""

from mealymoore import (
    check_adjunction_D1,
    check_counit,
    check_moorify_functorial,
    enumerate_homs,
    identity_cell,
    load_machine,
    search_moore_identity,
)

par = load_machine("demos/machines/par.machine")
cpar = load_machine("demos/machines/cpar.machine")

homset = enumerate_homs(par, par)
print("homs PAR → PAR:", homset.maps())

report = check_adjunction_D1(cpar, par)
print("adjunction bijection for (CPAR, PAR):",
      "SUCCESS" if report.success else "FAILURE",
      "| left %d, right %d" % (len(report.left.homs), len(report.right.homs)))

print("counit projection for PAR is a homomorphism:", check_counit(par))
for phi in homset.homs:
    print("moorify lifts", phi.map, "to a homomorphism:", check_moorify_functorial(phi))

# No Moore machine acts as an identity for composition: every candidate
# with up to 2 states fails against a letter-dependent probe.
search = search_moore_identity(par.input, [par, identity_cell(par.input)], 2)
print("identity search: %d candidates, %d survivors"
      % (search.candidates_checked, len(search.survivors)))
