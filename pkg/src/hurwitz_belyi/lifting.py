"""Lifting invariants through central extensions, extension masses, Serre's parity sign."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import class_algebra
from .group_atlas import CentralExtensionSpec, InertClass
from .nielsen import HurwitzParameter
from .perm_core import pidentity, pmul


class LiftingError(ValueError):
    pass


NOT_APPLICABLE = "NotApplicable"


def _check_base(h: HurwitzParameter, ext: CentralExtensionSpec) -> None:
    if ext.base is not h.atlas and ext.base.name != h.atlas.name:
        raise LiftingError(f"extension {ext.name} does not cover {h.atlas.name}")


def lift_product(t: Sequence[Sequence[int]], ext: CentralExtensionSpec) -> tuple[int, ...]:
    """Product of the designated lifts of the entries of t; an element of the kernel."""
    cd = ext.base.classes
    acc = pidentity(ext.cover.degree)
    for g in t:
        acc = pmul(acc, ext.designated_lift(g, cd.class_of(g)))
    if acc not in ext.kernel:
        raise LiftingError("product of lifts is not central; the tuple is not product-one")
    return acc


def lifting_invariant(t: Sequence[Sequence[int]], ext: CentralExtensionSpec) -> str:
    """Kernel label ('+' for the identity) of the product of designated lifts.

    Raises :class:`InertClass` when some entry's class has no designated lift.
    """
    return ext.kernel_label(lift_product(t, ext))


def extension_mass(h: HurwitzParameter, ext: CentralExtensionSpec, kernel_element: Sequence[int] | str) -> Fraction:
    """Mass over the cover, restricted to designated lift classes with product z.

    ``kernel_element`` is a kernel permutation or its label ('+', '-', 'z<i>').
    """
    _check_base(h, ext)
    if isinstance(kernel_element, str):
        hits = [z for z in ext.kernel if ext.kernel_label(z) == kernel_element]
        if not hits:
            raise LiftingError(f"no kernel element labelled {kernel_element!r}")
        z = hits[0]
    else:
        z = tuple(kernel_element)
        if z not in ext.kernel:
            raise LiftingError("element is not in the kernel")
    ccd = ext.cover_classes
    lifted = [ccd.classes[ext.designated_class(c)] for c in h.position_classes()]
    v = class_algebra.class_vector(ccd, lifted)
    # the count is of tuples with product equal to z, i.e. with z^-1 appended
    count = v[ccd.lookup[z]]
    return Fraction(count * ccd.center_order(), ext.cover.order())


def extension_masses(h: HurwitzParameter, ext: CentralExtensionSpec) -> dict[str, Fraction]:
    return {ext.kernel_label(z): extension_mass(h, ext, z) for z in ext.kernel}


def serre_sign(h: HurwitzParameter, *, formal: bool = False) -> str:
    """Serre's parity sign for A_n with classes of odd cycle type e 1^(n-e).

    The criterion assumes the genus-zero count sum nu_i (e_i - 1) = 2n - 2; when
    it fails the answer is NotApplicable unless ``formal`` is set, in which case
    the mod-8 rule is applied regardless.
    """
    n = h.atlas.group.degree
    prod, total = 1, 0
    for c, nu in zip(h.classes, h.nu):
        parts = [p for p in c.cycle_type if p != 1]
        if len(parts) != 1:
            raise LiftingError(f"class {c.label} is not of type e 1^(n-e)")
        e = parts[0]
        if e % 2 == 0:
            raise LiftingError(f"class {c.label} has even cycle length {e}")
        prod *= e ** nu
        total += nu * (e - 1)
    if total != 2 * n - 2 and not formal:
        return NOT_APPLICABLE
    r = prod % 8
    return "+" if r in (1, 7) else "-"


__all__ = [
    "InertClass",
    "LiftingError",
    "NOT_APPLICABLE",
    "extension_mass",
    "extension_masses",
    "lift_product",
    "lifting_invariant",
    "serre_sign",
]
