"""Target-state parsing, entanglement classification and compatibility checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ingest import NetworkConfig, NetworkGraph
from .roles import RoleAssignment
from .topology import components, simple_projection

W, GHZ, BELL, OTHER = "W", "GHZ", "Bell", "other"

PASS, WARN, INFO = "pass", "warn", "info"


@dataclass(frozen=True)
class TargetState:
    kets: tuple[str, ...]
    coefficients: tuple[float, ...]

    @classmethod
    def from_config(cls, c: NetworkConfig) -> "TargetState":
        kets = tuple(c.target_state or ())
        if not kets:
            raise ValueError("config has no target_state")
        if c.amplitudes:
            coeffs = tuple(c.amplitudes)
        else:
            coeffs = (1.0 / math.sqrt(len(kets)),) * len(kets)
        return cls(kets, coeffs)

    @property
    def party_count(self) -> int:
        return len(self.kets[0])

    @property
    def dimension(self) -> int:
        return 1 + max(int(ch) for k in self.kets for ch in k)


@dataclass(frozen=True)
class StateAnalysis:
    target: TargetState
    photon_numbers: frozenset[int]
    entanglement_class: str

    @property
    def uniform_photon_number(self) -> int | None:
        if len(self.photon_numbers) == 1:
            return next(iter(self.photon_numbers))
        return None

    @property
    def dimension(self) -> int:
        return self.target.dimension

    @property
    def party_count(self) -> int:
        return self.target.party_count

    @property
    def ket_count(self) -> int:
        return len(self.target.kets)

    @property
    def max_photon_number(self) -> int:
        return max(self.photon_numbers)


@dataclass(frozen=True)
class Finding:
    check: str
    status: str
    message: str


def photon_number(ket: str) -> int:
    """Excitations in a ket: every non-zero digit is one photon in that mode."""
    return sum(1 for ch in ket if ch != "0")


def classify_entanglement(kets: tuple[str, ...] | list[str]) -> str:
    kets = list(kets)
    parties = len(kets[0])
    distinct = len(set(kets)) == len(kets)
    if (
        parties >= 3
        and len(kets) == parties
        and distinct
        and all(k.count("1") == 1 and k.count("0") == parties - 1 for k in kets)
    ):
        return W
    if (
        parties >= 3
        and len(kets) >= 2
        and all(len(set(k)) == 1 for k in kets)
        and len({k[0] for k in kets}) == len(kets)
    ):
        return GHZ
    if parties == 2 and len(kets) == 2:
        return BELL
    return OTHER


def analyze_state(c: NetworkConfig) -> StateAnalysis | None:
    """Analyse the config's target state; ``None`` when there is none to analyse."""
    if not c.target_state:
        return None
    target = TargetState.from_config(c)
    return StateAnalysis(
        target=target,
        photon_numbers=frozenset(photon_number(k) for k in target.kets),
        entanglement_class=classify_entanglement(target.kets),
    )


def correlates_all_parties(kets: tuple[str, ...]) -> bool:
    """True when every party position varies across the superposition."""
    if len(kets) < 2:
        return False
    return all(len({k[i] for k in kets}) > 1 for i in range(len(kets[0])))


def check_compatibility(
    s: StateAnalysis,
    r: RoleAssignment,
    g: NetworkGraph,
    heralding_required: bool = False,
) -> list[Finding]:
    """Check that the identified architecture can support the target state.

    Returns one :class:`Finding` per check (parties, photons, connectivity,
    heralding); problems are reported as ``warn`` rather than raised.
    """
    findings = []

    parties = len(r.parties)
    if s.party_count <= parties:
        findings.append(Finding("parties", PASS, f"{s.party_count} parties <= {parties} non-ancilla detectors"))
    else:
        findings.append(Finding("parties", WARN, f"{s.party_count} parties > {parties} non-ancilla detectors"))

    photons = s.max_photon_number
    if r.sources and r.sources.isdisjoint(r.detectors):
        # single-emitter regime: each source emits one photon
        status = PASS if photons <= len(r.sources) else WARN
        rel = "<=" if status == PASS else ">"
        findings.append(Finding("photons", status, f"photon number {photons} {rel} {len(r.sources)} single-photon sources"))
    else:
        pairs_fired = len(g.vertices) // 2
        findings.append(
            Finding(
                "photons",
                INFO,
                f"pair-source regime: {len(g.edges)} edge sources, each perfect matching fires "
                f"{pairs_fired} pairs ({2 * pairs_fired} photons) for a photon number of {photons}",
            )
        )

    if correlates_all_parties(s.target.kets):
        n_comp = len(components(simple_projection(g)))
        status = PASS if n_comp == 1 else WARN
        findings.append(Finding("connectivity", status, f"target correlates all parties; graph has {n_comp} component(s)"))
    else:
        findings.append(Finding("connectivity", INFO, "target does not correlate every party"))

    if heralding_required:
        status = PASS if r.ancillas else WARN
        findings.append(Finding("heralding", status, f"heralding required; {len(r.ancillas)} ancilla detector(s) available"))
    else:
        findings.append(Finding("heralding", INFO, "heralding not required"))
    return findings
