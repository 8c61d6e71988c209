"""Admissibility gate for groups: degree duality, binary-form root counts, sign rule.

A group can carry self-dual equations only if its invariant degrees satisfy
d_k + d_{n-k} = d_n and its top invariant can be brought to a monomial.  For
binary forms the latter means at most two distinct roots.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import UnknownGroupError

Form = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# exact univariate helpers (coefficients in descending degree)

def _trim(p: list[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        c = a[0] / b[0]
        for i, bi in enumerate(b):
            a[i] -= c * bi
        a = _trim(a)
        if not a:
            break
    return a


def poly_gcd(a: Sequence, b: Sequence) -> list[Fraction]:
    """Monic gcd of two polynomials given in descending degree."""
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    while b:
        a, b = b, _poly_rem(a, b)
    if not a:
        return []
    return [c / a[0] for c in a]


def _derivative(p: list[Fraction]) -> list[Fraction]:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])]


def distinct_root_count(form: Sequence) -> int:
    """Distinct projective roots of a binary form.

    ``form[i]`` is the coefficient of x1^(d-i) x2^i.  Setting x2 = 1 gives a
    univariate F(t); its distinct roots number deg F - deg gcd(F, F').  A zero
    x1^d coefficient adds the root at x2 = 0.
    """
    coeffs = [Fraction(c) for c in form]
    if not any(coeffs):
        raise ValueError("the zero form has no well-defined root set")
    at_infinity = 1 if coeffs[0] == 0 else 0
    f = _trim(coeffs)
    deg = len(f) - 1
    if deg <= 0:
        return at_infinity
    g = poly_gcd(f, _derivative(f))
    return deg - (len(g) - 1) + at_infinity


def is_monomializable(form: Sequence) -> bool:
    return distinct_root_count(form) <= 2


def descartes_sign_changes(coeffs: Sequence[float]) -> int:
    """Sign changes between consecutive nonzero coefficients."""
    if len(coeffs) == 0:
        raise ValueError("empty coefficient list")
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ---------------------------------------------------------------------------
# binary forms used by the planar groups

def form_power_real(n: int) -> Form:
    """Re (x1 + i x2)^n."""
    out = [Fraction(0)] * (n + 1)
    for j in range(0, n // 2 + 1):
        out[2 * j] = Fraction((-1) ** j * comb(n, 2 * j))
    return tuple(out)


def form_power_imag(n: int) -> Form:
    """Im (x1 + i x2)^n."""
    out = [Fraction(0)] * (n + 1)
    for j in range(0, (n - 1) // 2 + 1):
        out[2 * j + 1] = Fraction((-1) ** j * comb(n, 2 * j + 1))
    return tuple(out)


def form_radius_power(k: int) -> Form:
    """(x1^2 + x2^2)^k."""
    out = [Fraction(0)] * (2 * k + 1)
    for j in range(k + 1):
        out[2 * j] = Fraction(comb(k, j))
    return tuple(out)


def _sub(a: Form, b: Form) -> Form:
    return tuple(x - y for x, y in zip(a, b))


def planar_top_forms(n: int) -> tuple[Form, ...]:
    """Candidate degree-n invariants of the planar rotation/dihedral groups.

    Re z^n and Im z^n, plus (x1^2+x2^2)^{n/2} - Re z^n for even n: the
    invariant of top degree is only fixed up to lower-invariant terms.
    """
    forms = [form_power_real(n), form_power_imag(n)]
    if n % 2 == 0:
        forms.append(_sub(form_radius_power(n // 2), form_power_real(n)))
    return tuple(forms)


# ---------------------------------------------------------------------------
# catalog

@dataclass(frozen=True)
class GroupDegrees:
    name: str
    degrees: tuple[int, ...]
    expected_admits: bool
    dependent_extra: str | None = None
    effective_degrees: tuple[int, ...] | None = None
    correspondence: str | None = None
    top_forms: tuple[Form, ...] | None = field(default=None, repr=False)
    top_non_monomial: bool = False
    note: str = ""

    def __post_init__(self) -> None:
        degs = tuple(sorted(int(d) for d in self.degrees))
        if not degs or degs[0] < 1:
            raise ValueError("degrees must be a nonempty list of positive integers")
        object.__setattr__(self, "degrees", degs)
        if self.effective_degrees is not None:
            object.__setattr__(self, "effective_degrees", tuple(sorted(self.effective_degrees)))

    @property
    def rank(self) -> int:
        return len(self.degrees)


def degree_duality_check(g: GroupDegrees | Sequence[int]) -> bool:
    """d_k + d_{n-k} == d_n for k = 1..n-1 (degrees sorted ascending)."""
    degs = sorted(g.degrees if isinstance(g, GroupDegrees) else g)
    if not degs:
        raise ValueError("empty degree list")
    n = len(degs)
    top = degs[-1]
    return all(degs[k - 1] + degs[n - k - 1] == top for k in range(1, n))


def symmetric(n: int) -> GroupDegrees:
    return GroupDegrees(f"S_{n}", tuple(range(1, n + 1)), True)


def cyclic_perm(n: int) -> GroupDegrees:
    return GroupDegrees(
        f"Z_{n}", tuple(range(1, n + 1)), True,
        dependent_extra="prod (x_i - x_{i+1}): its square lies in the S_n invariants",
    )


def alternating(n: int) -> GroupDegrees:
    return GroupDegrees(
        f"A_{n}", tuple(range(1, n + 1)), True,
        dependent_extra="Vandermonde product: its square lies in the S_n invariants",
    )


def hyperoctahedral(n: int) -> GroupDegrees:
    return GroupDegrees(f"B_{n}", tuple(2 * r for r in range(1, n + 1)), True)


def demihypercube(n: int) -> GroupDegrees:
    if n < 2:
        raise ValueError("D_n needs n >= 2")
    degs = tuple(2 * r for r in range(1, n)) + (n,)
    return GroupDegrees(
        f"D_{n}", degs, True,
        effective_degrees=tuple(2 * r for r in range(1, n + 1)),
        correspondence="acts like S_n on the squares x_i^2",
        note="listed degrees fail the duality test for n > 2; admitted through the squares",
    )


def dihedral(m: int) -> GroupDegrees:
    if m < 2:
        raise ValueError("I_{2,m} needs m >= 2")
    name = "G_2" if m == 6 else f"I_{{2,{m}}}"
    extra = {}
    if m == 2:
        extra = dict(
            effective_degrees=(2, 4),
            correspondence="I_{2,2} = D_2 acts like S_2 on the squares",
        )
    return GroupDegrees(name, (2, m), m in (2, 4), top_forms=planar_top_forms(m), **extra)


def axial(n: int) -> GroupDegrees:
    if n < 2:
        raise ValueError("C_n needs n >= 2")
    return GroupDegrees(
        f"C_{n}", (2, n), n in (2, 4), top_forms=planar_top_forms(n),
        note="syzygy I_2^2 + I_3^2 = I_1^n; only the sign-rule check is made",
    )


def octahedral() -> GroupDegrees:
    return GroupDegrees("O_h", (2, 4, 6), True)


def icosahedral() -> GroupDegrees:
    return GroupDegrees(
        "H_3", (2, 6, 10), False, top_non_monomial=True,
        note="top invariant factors into tau-dependent quadrics; no monomial form",
    )


_PARAMETRIC = {
    "S": symmetric,
    "Z": cyclic_perm,
    "A": alternating,
    "B": hyperoctahedral,
    "D": demihypercube,
    "C": axial,
}
_FIXED = {"O_H": octahedral, "OH": octahedral, "H_3": icosahedral, "H3": icosahedral,
          "G_2": lambda: dihedral(6), "G2": lambda: dihedral(6)}


def lookup_group(name: str) -> GroupDegrees:
    """Instantiate a catalog group from names like S_4, B3, D_5, I_{2,5}, I2,5, O_h, H_3."""
    key = name.strip().upper().replace(" ", "")
    if key in _FIXED:
        return _FIXED[key]()
    mt = re.fullmatch(r"I_?\{?2,(\d+)\}?", key)
    if mt:
        return dihedral(int(mt.group(1)))
    mt = re.fullmatch(r"([SZABDC])_?\{?(\d+)\}?", key)
    if mt:
        return _PARAMETRIC[mt.group(1)](int(mt.group(2)))
    raise UnknownGroupError(name)


def builtin_catalog(max_rank: int = 6, max_dihedral: int = 8) -> list[GroupDegrees]:
    """Every family instantiated at small parameters."""
    out: list[GroupDegrees] = []
    for n in range(1, max_rank + 1):
        out += [symmetric(n), cyclic_perm(n), alternating(n), hyperoctahedral(n)]
    out += [demihypercube(n) for n in range(4, max_rank + 1)]
    out += [dihedral(m) for m in range(2, max_dihedral + 1)]
    out += [axial(n) for n in range(2, max_dihedral + 1)]
    out += [octahedral(), icosahedral()]
    return out


@dataclass(frozen=True)
class Classification:
    name: str
    degrees: tuple[int, ...]
    duality_raw: bool
    duality_effective: bool
    top_monomializable: bool | None
    admits: bool
    expected_admits: bool

    @property
    def agrees(self) -> bool:
        return self.admits == self.expected_admits


def classify(g: GroupDegrees) -> Classification:
    """Apply the gate: degree duality (via the square correspondence if any)
    and, where known, monomiality of the top invariant."""
    raw = degree_duality_check(g.degrees)
    eff = degree_duality_check(g.effective_degrees) if g.effective_degrees else raw
    if g.top_forms:
        top: bool | None = min(distinct_root_count(f) for f in g.top_forms) <= 2
    elif g.top_non_monomial:
        top = False
    else:
        top = None
    return Classification(g.name, g.degrees, raw, eff, top, eff and top is not False, g.expected_admits)
