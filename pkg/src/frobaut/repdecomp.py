"""Symbolic input for the kernel action and its isotypic decomposition.

A component over F_p is given as constituents (r, e): the generator h of
C_n acts on e copies of the irreducible module on which it has eigenvalue
omega^r.  Two residues give isomorphic modules exactly when they lie in the
same orbit {r p^j mod n}, so each orbit (a cyclotomic class) names one
irreducible faithful F_pH-module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .numtheory import euler_phi, is_prime, mul_order


class ValidationError(ValueError):
    pass


class FrobeniusConditionError(ValidationError):
    pass


@dataclass(frozen=True)
class PrimeComponentSpec:
    p: int
    constituents: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple((int(r), int(e)) for r, e in self.constituents))


@dataclass(frozen=True)
class KernelActionSpec:
    n: int
    components: tuple[PrimeComponentSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @classmethod
    def from_dict(cls, doc) -> KernelActionSpec:
        """Parse the JSON form ``{"n": .., "components": [{"p": .., "constituents": [{"r": .., "e": ..}]}]}``."""
        if not isinstance(doc, dict):
            raise ValidationError("spec must be a JSON object")
        n = doc.get("n")
        comps = doc.get("components")
        if not _is_int(n):
            raise ValidationError("'n' must be an integer")
        if not isinstance(comps, list):
            raise ValidationError("'components' must be a list")
        out = []
        for i, comp in enumerate(comps):
            if not isinstance(comp, dict) or not _is_int(comp.get("p")):
                raise ValidationError(f"component #{i}: needs an integer 'p'")
            cons = comp.get("constituents")
            if not isinstance(cons, list):
                raise ValidationError(f"component #{i} (p={comp['p']}): 'constituents' must be a list")
            pairs = []
            for j, c in enumerate(cons):
                if not isinstance(c, dict) or not _is_int(c.get("r")) or not _is_int(c.get("e")):
                    raise ValidationError(
                        f"component p={comp['p']}, constituent #{j}: needs integer 'r' and 'e'")
                pairs.append((c["r"], c["e"]))
            out.append(PrimeComponentSpec(comp["p"], tuple(pairs)))
        return cls(n, tuple(out))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": [
                {"p": c.p, "constituents": [{"r": r, "e": e} for r, e in c.constituents]}
                for c in self.components
            ],
        }


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class CyclotomicClass:
    n: int
    p: int
    rep: int
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def scaled(self, lam: int) -> CyclotomicClass:
        return canonical_class(self.rep * lam, self.p, self.n)


@dataclass(frozen=True)
class DecompositionData:
    p: int
    n: int
    f: int
    classes: tuple[tuple[CyclotomicClass, int], ...]
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def d(self) -> int:
        return self.f * sum(e for _, e in self.classes)

    @property
    def t(self) -> int:
        return len(self.classes)

    def multiset(self) -> dict[int, int]:
        """class representative -> multiplicity"""
        return {c.rep: e for c, e in self.classes}


def canonical_class(r: int, p: int, n: int) -> CyclotomicClass:
    return _canonical_class(r % n, p, n)


@lru_cache(maxsize=1 << 16)
def _canonical_class(r: int, p: int, n: int) -> CyclotomicClass:
    if gcd(p, n) != 1:
        raise ValidationError(f"p divides n (p={p}, n={n})")
    if gcd(r, n) != 1:
        raise FrobeniusConditionError(
            f"constituent not faithful: Frobenius condition fails (r={r}, gcd(r, {n}) = {gcd(r, n)})")
    orbit = {r}
    x = r * p % n
    while x not in orbit:
        orbit.add(x)
        x = x * p % n
    elems = tuple(sorted(orbit))
    return CyclotomicClass(n, p, elems[0], elems)


def unit_classes(p: int, n: int) -> list[CyclotomicClass]:
    """All faithful classes for (p, n), by representative."""
    seen: set[int] = set()
    out = []
    for r in range(1, n):
        if gcd(r, n) == 1 and r not in seen:
            c = canonical_class(r, p, n)
            seen.update(c.elements)
            out.append(c)
    return out


def decompose_component(comp: PrimeComponentSpec, n: int) -> DecompositionData:
    p = comp.p
    if not is_prime(p):
        raise ValidationError(f"component p={p}: {p} is not prime")
    if gcd(p, n) != 1:
        raise ValidationError(f"component p={p}: p divides n={n}")
    if not comp.constituents:
        raise ValidationError(f"component p={p}: no constituents")
    f = mul_order(p, n)
    mult: dict[int, int] = {}
    by_rep: dict[int, CyclotomicClass] = {}
    notes = []
    for j, (r, e) in enumerate(comp.constituents):
        if e < 1:
            raise ValidationError(f"component p={p}, constituent #{j} (r={r}): multiplicity must be >= 1")
        try:
            cls = canonical_class(r, p, n)
        except FrobeniusConditionError as exc:
            raise FrobeniusConditionError(f"component p={p}, constituent #{j} (r={r}): {exc}") from None
        if cls.rep in mult:
            notes.append(f"p={p}: r={r % n} lies in the class of {cls.rep}; multiplicities merged")
        mult[cls.rep] = mult.get(cls.rep, 0) + e
        by_rep[cls.rep] = cls
    classes = tuple((by_rep[rep], mult[rep]) for rep in sorted(mult))
    data = DecompositionData(p, n, f, classes, tuple(notes))
    assert data.t <= euler_phi(n) // f
    return data


def validate_and_decompose(spec: KernelActionSpec) -> list[DecompositionData]:
    if spec.n < 2:
        raise ValidationError("complement must be nontrivial (n >= 2)")
    if not spec.components:
        raise ValidationError("kernel needs at least one prime component")
    primes = [c.p for c in spec.components]
    if len(set(primes)) != len(primes):
        raise ValidationError(f"duplicate primes in components: {primes}")
    return sorted((decompose_component(c, spec.n) for c in spec.components), key=lambda d: d.p)


def is_homogeneous(data: DecompositionData) -> bool:
    return data.t == 1
