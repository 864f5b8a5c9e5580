"""
Connections in a delay equation attractor
=========================================

Three Morse sets: a stable periodic orbit, a periodic orbit with two
unstable directions, and an equilibrium with four.  The attractor is
contractible, and that alone forces both adjacent connections.
"""

from conley_kit import delay_scenario, solve, total_space
from conley_kit.io import report_to_dot, report_to_text

d, constraints = delay_scenario()

for s in d.sets:
    print(s.id, dict(s.betti))

# basis of the direct sum of index homologies, in solver order
for label in total_space(d):
    print(f"  {label.set_id} degree {label.degree}")

report = solve(d, constraints)
print(report_to_text(report, list_admissible=True))

# Graphviz input for the connection graph; solid edges are forced
print(report_to_dot(report))
