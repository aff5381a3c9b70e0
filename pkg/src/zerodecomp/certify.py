"""Pointwise multiplicity certification of a decomposition."""

from dataclasses import dataclass, field

from .dualspace import multiplicity
from .solve import component_zeros, degree_count, system_zeros


@dataclass
class CertifiedZero:
    point: tuple
    component: int
    multiplicity: int
    """Oracle multiplicity with respect to the original system."""
    component_multiplicity: int

    @property
    def certified(self):
        return self.multiplicity == self.component_multiplicity


@dataclass
class ComponentReport:
    index: int
    component: object
    zeros: list
    complete: bool
    degree_count: int = None

    @property
    def count(self):
        """Zeros with multiplicity when known exactly, else None."""
        if self.degree_count is not None:
            return self.degree_count
        if self.complete:
            return sum(z.multiplicity for z in self.zeros)
        return None


@dataclass
class Certification:
    components: list
    bound: int
    system_zeros: list = field(default_factory=list)
    disjoint: bool = True
    overlaps: list = field(default_factory=list)

    @property
    def zeros(self):
        return [z for rep in self.components for z in rep.zeros]

    @property
    def certified_count(self):
        return sum(z.multiplicity for z in self.zeros if z.certified)

    @property
    def all_certified(self):
        return all(z.certified for z in self.zeros)

    @property
    def completeness(self):
        return all(rep.complete for rep in self.components)

    @property
    def total(self):
        counts = [rep.count for rep in self.components]
        return None if any(c is None for c in counts) else sum(counts)


def certify(polys, result, cap=None):
    """Enumerate rational zeros per component and compare the oracle
    multiplicity in the component with that in ``polys``.

    Also checks that each rational zero of ``polys`` lies in exactly one
    component.
    """
    reports = []
    for idx, comp in enumerate(result.components):
        scan = component_zeros(comp)
        zeros = []
        for z in scan.zeros:
            m_sys = multiplicity(polys, z.point, cap)
            m_comp = multiplicity(comp.polys, z.point, cap)
            zeros.append(CertifiedZero(z.point, idx, m_sys, m_comp))
        reports.append(ComponentReport(idx, comp, zeros, scan.complete, degree_count(comp)))
    cert = Certification(reports, result.bound_used)
    sys_scan = system_zeros(polys)
    cert.system_zeros = [z.point for z in sys_scan.zeros]
    for pt in cert.system_zeros:
        owners = [i for i, comp in enumerate(result.components) if comp.contains(pt)]
        if len(owners) != 1:
            cert.disjoint = False
            cert.overlaps.append((pt, owners))
    listed = {z.point for z in cert.zeros}
    if listed - set(cert.system_zeros):
        cert.disjoint = False
    return cert
