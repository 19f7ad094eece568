"""Automorphism group order and shape for Frobenius groups V:C_n with V
elementary abelian.

Aut(G) = V.M where M is the normalizer of H = <h> in Aut(V).  M is the
centralizer C (a product of GL(e, p^f) over the isotypic components) extended
by the automizer: the group of units lam mod n for which h^lam is conjugate
to h, i.e. lam permutes the multiset of cyclotomic classes preserving
multiplicities.  That automizer is computed here by scanning (Z/n)^*.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import prod

from .numtheory import abelian_invariants, cyclic_subgroup, factorize, gl_order, units
from .repdecomp import (
    DecompositionData,
    KernelActionSpec,
    ValidationError,
    canonical_class,
    is_homogeneous,
    unit_classes,
    validate_and_decompose,
)


class TheoremInvariantError(AssertionError):
    """A structural identity forced by the theory failed; this is a bug."""


@dataclass(frozen=True)
class StabilizerSubgroup:
    n: int
    elements: tuple[int, ...]
    invariants: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))
        object.__setattr__(self, "invariants", tuple(abelian_invariants(self.elements, self.n)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, lam: int) -> bool:
        return lam % self.n in self.elements

    def intersect(self, other: StabilizerSubgroup) -> StabilizerSubgroup:
        return StabilizerSubgroup(self.n, tuple(sorted(set(self.elements) & set(other.elements))))

    def render(self) -> str:
        return " x ".join(f"C{d}" for d in self.invariants) if self.invariants else "1"


@dataclass(frozen=True)
class FusionData:
    ell: int
    s: int
    field_auto_order: int
    orbits: tuple[tuple[int, ...], ...]  # class representatives
    e_per_orbit: tuple[int, ...]


def preserves_multiset(lam: int, data: DecompositionData) -> bool:
    mult = data.multiset()
    for cls, e in data.classes:
        if mult.get(canonical_class(cls.rep * lam, data.p, data.n).rep) != e:
            return False
    return True


def component_stabilizer(data: DecompositionData) -> StabilizerSubgroup:
    return StabilizerSubgroup(data.n, tuple(lam for lam in units(data.n) if preserves_multiset(lam, data)))


def global_stabilizer(datas) -> StabilizerSubgroup:
    datas = list(datas)
    if not datas:
        raise ValueError("need at least one component")
    lam = component_stabilizer(datas[0])
    for data in datas[1:]:
        lam = lam.intersect(component_stabilizer(data))
    return lam


def fusion(lam: StabilizerSubgroup, data: DecompositionData) -> FusionData:
    """Orbits of the automizer on one component's classes.

    A class is fixed exactly by the field automorphisms, so every orbit has
    size |lam| / |lam n <p>|; that and constant multiplicity on orbits are
    checked rather than assumed.
    """
    field_autos = set(cyclic_subgroup(data.p, data.n)) & set(lam.elements)
    ell, rem = divmod(lam.order, len(field_autos))
    if rem:
        raise TheoremInvariantError("theorem invariant violated: |lam n <p>| does not divide |lam|")
    mult = data.multiset()
    seen: set[int] = set()
    orbits, es = [], []
    for cls, e in data.classes:
        if cls.rep in seen:
            continue
        orbit = sorted({canonical_class(cls.rep * x, data.p, data.n).rep for x in lam.elements})
        if len(orbit) != ell:
            raise TheoremInvariantError(
                f"theorem invariant violated: orbit of class {cls.rep} has size {len(orbit)}, expected {ell}")
        if any(r not in mult for r in orbit) or len({mult[r] for r in orbit}) != 1:
            raise TheoremInvariantError(
                f"theorem invariant violated: multiplicity not constant on orbit {orbit}")
        seen.update(orbit)
        orbits.append(tuple(orbit))
        es.append(e)
    s = len(orbits)
    if s * ell != data.t or sum(es) * data.f * ell != data.d:
        raise TheoremInvariantError("theorem invariant violated: fusion bookkeeping")
    return FusionData(ell, s, len(field_autos), tuple(orbits), tuple(es))


def centralizer_order(data: DecompositionData) -> int:
    return prod(gl_order(e, data.p, data.f) for _, e in data.classes)


def normalizer_order(datas, lam: StabilizerSubgroup) -> int:
    return prod(centralizer_order(d) for d in datas) * lam.order


def kernel_order(datas) -> int:
    return prod(d.p**d.d for d in datas)


@dataclass(frozen=True)
class AutReport:
    spec: KernelActionSpec
    components: tuple[DecompositionData, ...]
    fusions: tuple[FusionData, ...]
    stabilizer: StabilizerSubgroup
    centralizer_order: int
    normalizer_order: int
    kernel_order: int
    aut_order: int
    homogeneous: tuple[bool, ...]
    m_irreducible: tuple[bool, ...]
    structure: str = ""

    @property
    def notes(self) -> tuple[str, ...]:
        return tuple(note for d in self.components for note in d.notes)


def analyze(spec: KernelActionSpec) -> AutReport:
    datas = validate_and_decompose(spec)
    lam = global_stabilizer(datas)
    fusions = tuple(fusion(lam, d) for d in datas)
    cent = prod(centralizer_order(d) for d in datas)
    norm = cent * lam.order
    kern = kernel_order(datas)
    report = AutReport(
        spec=spec,
        components=tuple(datas),
        fusions=fusions,
        stabilizer=lam,
        centralizer_order=cent,
        normalizer_order=norm,
        kernel_order=kern,
        aut_order=kern * norm,
        homogeneous=tuple(is_homogeneous(d) for d in datas),
        m_irreducible=tuple(fu.s == 1 for fu in fusions),
    )
    _check_report(report)
    return _with_structure(report)


def aut_order(spec: KernelActionSpec) -> int:
    return analyze(spec).aut_order


def _check_report(report: AutReport) -> None:
    if report.aut_order != report.kernel_order * report.normalizer_order:
        raise TheoremInvariantError("theorem invariant violated: |Aut| != |V| |M|")
    if len(report.components) == 1:
        data = report.components[0]
        if not set(cyclic_subgroup(data.p, data.n)) <= set(report.stabilizer.elements):
            raise TheoremInvariantError("theorem invariant violated: field automorphisms missing")
        if report.homogeneous[0]:
            (_, e), = data.classes
            if report.normalizer_order != data.f * gl_order(e, data.p, data.f):
                raise TheoremInvariantError("theorem invariant violated: homogeneous case is not GammaL")
    for fu in report.fusions:
        if fu.ell * fu.field_auto_order != report.stabilizer.order:
            raise TheoremInvariantError("theorem invariant violated: ell |lam n <p>| != |lam|")


def _with_structure(report: AutReport) -> AutReport:
    return replace(report, structure=structure_string(report))


def _gl(e: int, q: int) -> str:
    return f"GL({e},{q})"


def structure_string(report: AutReport) -> str:
    kernel = " x ".join(f"C_{d.p}^{d.d}" for d in report.components)
    if len(report.components) == 1 and report.homogeneous[0]:
        data = report.components[0]
        (_, e), = data.classes
        q = data.p**data.f
        return f"{kernel} : " + (_gl(e, q) if data.f == 1 else f"GammaL({e},{q})")
    factors = []
    for data, fu in zip(report.components, report.fusions):
        q = data.p**data.f
        for e in fu.e_per_orbit:
            factors.append(_gl(e, q) + (f"^{fu.ell}" if fu.ell > 1 else ""))
    return f"{kernel} : (({' x '.join(factors)}) . [{report.stabilizer.render()}])"


def semiregular(p: int, n: int) -> bool:
    """No unit outside <p> maps a faithful class onto itself."""
    field_autos = set(cyclic_subgroup(p, n))
    classes = [set(c.elements) for c in unit_classes(p, n)]
    for lam in units(n):
        if lam in field_autos:
            continue
        for cls in classes:
            if min(cls) * lam % n in cls:
                return False
    return True


@dataclass(frozen=True)
class PrimePowerReport:
    q: int
    m: int
    p: int
    stabilizer: StabilizerSubgroup
    field_autos: tuple[int, ...]
    bound: str

    def __str__(self):
        return (f"n = {self.q}^{self.m}, p = {self.p}: automizer of order {self.stabilizer.order}"
                f" = [{self.stabilizer.render()}], contains <p> of order {len(self.field_autos)}; {self.bound}")


def prime_power_complement_report(spec: KernelActionSpec) -> PrimePowerReport:
    """Automizer bounds when n is a prime power q^m.

    q odd: the automizer is cyclic, between <p> and (Z/q^m)^*.
    q = 2, m >= 3: it embeds in C_2 x C_{2^{m-2}}.
    """
    fac = factorize(spec.n)
    if len(fac) != 1 or len(spec.components) != 1:
        raise ValidationError("not applicable: needs n a prime power and a single-prime kernel")
    (q, m), = fac
    report = analyze(spec)
    data = report.components[0]
    lam = report.stabilizer
    inv = lam.invariants
    field_autos = tuple(cyclic_subgroup(data.p, data.n))
    ok = set(field_autos) <= set(lam.elements)
    if q % 2:
        ok = ok and len(inv) <= 1 and (q ** (m - 1) * (q - 1)) % lam.order == 0
        bound = f"cyclic, C_{len(field_autos)} <= C_{lam.order} <= C_{q ** (m - 1) * (q - 1)}"
    elif m >= 3:
        top = 2 ** (m - 2)
        ok = ok and len(inv) <= 2 and all(top % d == 0 for d in inv[-1:]) and all(2 % d == 0 for d in inv[:-1])
        bound = f"embeds in C2 x C{top}"
    else:
        ok = ok and len(inv) <= 1
        bound = "cyclic (n divides 4)"
    if not ok:
        raise TheoremInvariantError(f"theorem invariant violated: prime-power bound fails for {spec}")
    return PrimePowerReport(q, m, data.p, lam, field_autos, bound)
