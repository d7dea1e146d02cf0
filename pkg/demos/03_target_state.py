"""Check which target kets the graph's perfect matchings can produce."""

from qnetinterp import data, enumerate_matchings, ket_spectrum, load_bundle, verify_target
from qnetinterp.statespec import TargetState

config, graph = load_bundle(data.config_path("bell"), data.graph_path("bell"))
matchings = enumerate_matchings(graph)
print(f"bell: {len(matchings)} perfect matchings")

# project onto the two parties, leave the ancilla modes free
spectrum = ket_spectrum(matchings, restrict_to=[0, 1])
for ket, amp in sorted(spectrum.nonzero().items()):
    print(f"  |{ket}>  {amp:+.4f}")

report = verify_target(spectrum, TargetState.from_config(config))
print("convention:", report.convention)
print("all target kets reachable:", report.all_reachable)

# heralding: keep only matchings that leave both ancillas in mode 0
heralded = ket_spectrum(matchings, restrict_to=[0, 1], ancilla_condition={6: 0, 7: 0})
print("heralded spectrum:", {k: round(a, 4) for k, a in sorted(heralded.nonzero().items())})
