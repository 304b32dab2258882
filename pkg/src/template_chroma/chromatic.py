"""Symbolic chromatic numbers of template hypergraphs over the reals.

The central formula: the chromatic number of the hypergraph a template
generates on real d-space is the least kappa whose (s-1)-fold successor
reaches the continuum, where s is the template's minimum distinguisher
size.  Under a continuum setting everything therefore reduces to aleph
index arithmetic; forbidden families and the named-polynomial registry
evaluate the same way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, default_budget
from .cardinals import (
    aleph,
    ALEPH_0,
    AlephIndex,
    card_sum,
    Cardinal,
    ContinuumSetting,
    least_aleph_reaching,
    OMEGA,
    successor_n,
)
from .distinguishers import min_distinguisher_size
from .errors import IndexOutOfRange, Unachievable, UnsupportedIndex
from .templates import basis_template, enumerate_templates, Template


@dataclass(frozen=True)
class ChromaticVerdict:
    chi: Cardinal
    distinguisher_size: int
    template: Template
    setting: ContinuumSetting

    def __post_init__(self):
        assert self.chi == least_aleph_reaching(self.setting, self.distinguisher_size - 1)
        assert 1 <= self.distinguisher_size <= self.template.k - 1

    def rule(self) -> str:
        return (
            f"least kappa with kappa^{{+{self.distinguisher_size - 1}}} >= 2^aleph_0 "
            f"under 2^aleph_0 = aleph_{self.setting.c}"
        )


def chi_template(template: Template, setting: ContinuumSetting) -> ChromaticVerdict:
    """Symbolic chromatic number of the hypergraph the template generates
    on real d-space; depends only on the minimum distinguisher size."""
    e = min_distinguisher_size(template)
    return ChromaticVerdict(
        chi=least_aleph_reaching(setting, e - 1),
        distinguisher_size=e,
        template=template,
        setting=setting,
    )


def chi_simple_dim(d: int, setting: ContinuumSetting) -> Cardinal:
    """Chromatic number shared by all simple d-dimensional templates."""
    if d < 1:
        raise IndexOutOfRange(f"dimension must be >= 1, got {d}", d=d)
    return least_aleph_reaching(setting, d - 1)


@dataclass(frozen=True)
class AchievableSet:
    """Chromatic numbers realized by k-ary algebraic hypergraphs under the
    given continuum setting: every finite n >= 1, aleph_0, and the aleph
    range [max(0, c-k+2), c]."""

    k: int
    setting: ContinuumSetting

    @property
    def aleph_min(self) -> int:
        return max(0, self.setting.c - self.k + 2)

    @property
    def aleph_max(self) -> int:
        return self.setting.c

    def contains(self, kappa: Cardinal) -> bool:
        if kappa.is_finite:
            return kappa.finite >= 1  # type: ignore[operator]
        if kappa.aleph == OMEGA:
            return False
        if kappa == ALEPH_0:
            return True
        return self.aleph_min <= kappa.aleph <= self.aleph_max  # type: ignore[operator]

    def infinite_members(self) -> list[Cardinal]:
        indices = {0} | set(range(self.aleph_min, self.aleph_max + 1))
        return [aleph(i) for i in sorted(indices)]


def achievable_chromatics(k: int, setting: ContinuumSetting) -> AchievableSet:
    if k < 2:
        raise IndexOutOfRange(f"k must be >= 2, got {k}", k=k)
    return AchievableSet(k=k, setting=setting)


def construct_template_with_chi(
    k: int, kappa: Cardinal, setting: ContinuumSetting
) -> Template:
    """Simple (c-a+1)-dimensional k-template whose symbolic chromatic number
    is kappa = aleph_a; requires aleph_a <= aleph_c <= aleph_{a+k-2}."""
    if k < 2:
        raise IndexOutOfRange(f"k must be >= 2, got {k}", k=k)
    if kappa.is_finite or kappa.aleph == OMEGA:
        raise Unachievable(
            f"{kappa.render()} is not an aleph with finite index", kappa=kappa.render()
        )
    a = kappa.aleph
    c = setting.c
    if not (a <= c <= a + k - 2):  # type: ignore[operator]
        raise Unachievable(
            f"need aleph_{a} <= aleph_{c} <= aleph_{a}+{k - 2} steps; "
            f"no k={k} template reaches {kappa.render()} under 2^aleph_0 = aleph_{c}",
            kappa=kappa.render(),
            continuum=c,
            k=k,
        )
    d = c - a + 1  # type: ignore[operator]
    return basis_template(d, k)


@dataclass(frozen=True)
class ForbiddenFamily:
    """Simple templates whose symbolic chromatic number exceeds kappa; an
    algebraic k-hypergraph is kappa-colorable iff it contains the hypergraph
    of no member."""

    k: int
    kappa: Cardinal
    setting: ContinuumSetting
    members: tuple[tuple[int, Template], ...]  # (dimension e, template)


def forbidden_family(
    k: int, kappa: Cardinal, setting: ContinuumSetting, budget: Budget | None = None
) -> ForbiddenFamily:
    if kappa.is_finite:
        raise UnsupportedIndex("kappa must be infinite", kappa=kappa.render())
    budget = budget or default_budget()
    members: list[tuple[int, Template]] = []
    for e in range(1, k):
        if chi_simple_dim(e, setting) > kappa:
            for tpl in enumerate_templates(e, k, simple_only=True, budget=budget):
                members.append((e, tpl))
    return ForbiddenFamily(k=k, kappa=kappa, setting=setting, members=tuple(members))


# ---------------------------------------------------------------------------
# registry of named polynomial families with known avoidability offsets


@dataclass(frozen=True)
class RegistryEntry:
    """kappa-avoidable iff kappa^{+offset} >= 2^aleph_0.

    offset OMEGA encodes families avoidable for every infinite kappa
    (kappa^{+omega} = aleph_omega dominates every finite continuum index).
    """

    name: str
    parameter: int | None
    offset: AlephIndex
    description: str


def _fox(k: int) -> RegistryEntry:
    if k < 0:
        raise IndexOutOfRange(f"fox parameter must be >= 0, got {k}", param=k)
    return RegistryEntry(
        name="fox",
        parameter=k,
        offset=k,
        description=(
            f"linear ({k + 3},1)-ary polynomial "
            f"x_0 + ... + x_{k} - x_{k + 1} - {k}*x_{k + 2}"
        ),
    )


def _simplex(n: int) -> RegistryEntry:
    if n < 2:
        raise IndexOutOfRange(f"simplex dimension must be >= 2, got {n}", param=n)
    return RegistryEntry(
        name="simplex",
        parameter=n,
        offset=n - 1,
        description=f"orthogonal {n}-simplex vertex sets in real {n}-space",
    )


def _isosceles(_: int | None) -> RegistryEntry:
    return RegistryEntry(
        name="isosceles",
        parameter=None,
        offset=OMEGA,
        description="(3,n)-ary |x-y|^2 - |y-z|^2: avoidable for every infinite kappa",
    )


def _pythagorean(_: int | None) -> RegistryEntry:
    return RegistryEntry(
        name="pythagorean",
        parameter=None,
        offset=1,
        description="(3,2)-ary |x-y|^2 + |y-z|^2 - |x-z|^2: avoidable iff 2^aleph_0 <= aleph_1",
    )


_REGISTRY = {
    "fox": (_fox, True),
    "simplex": (_simplex, True),
    "isosceles": (_isosceles, False),
    "pythagorean": (_pythagorean, False),
}


def registry_names() -> list[str]:
    return sorted(_REGISTRY)


def registry_entry(name: str, parameter: int | None = None) -> RegistryEntry:
    if name not in _REGISTRY:
        raise IndexOutOfRange(
            f"unknown registry entry {name!r}; known: {registry_names()}", name=name
        )
    factory, needs_param = _REGISTRY[name]
    if needs_param and parameter is None:
        raise IndexOutOfRange(f"registry entry {name!r} requires a parameter", name=name)
    return factory(parameter)


def registry_avoidable(
    entry: RegistryEntry, kappa: Cardinal, setting: ContinuumSetting
) -> bool:
    """True iff kappa^{+offset} >= 2^aleph_0 under the setting."""
    if kappa.is_finite:
        raise UnsupportedIndex("kappa must be infinite", kappa=kappa.render())
    if kappa >= setting.continuum:
        return True
    # here kappa < aleph_c with c finite, so kappa has a finite index
    return successor_n(kappa, entry.offset) >= setting.continuum


def distance_chromatic_upper(card_d: Cardinal) -> Cardinal:
    """Upper bound |D| + aleph_0 for the D-distance graph on real n-space."""
    return card_sum(card_d, ALEPH_0)
