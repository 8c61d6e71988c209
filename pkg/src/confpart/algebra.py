"""Self-dual polynomials over elementary symmetric invariants.

A monomial ``I_{n,1}^{e_1} ... I_{n,n}^{e_n} lam^j`` is stored as the pair
``(e, j)``.  Every monomial of a degree-m polynomial has the form

    T+(alpha) = prod_r I_{n,r}^{alpha_r} lam^{mn - s},  s = sum r alpha_r

and the conformal map x -> 1/x, lam -> 1/lam sends it (after clearing
denominators) to its counter-partner

    T-(alpha) = I_{n,n}^{m - sum alpha} prod_r I_{n,n-r}^{alpha_r} lam^s.

On exponent vectors this is the involution ``e'_{n-r} = e_r (r < n)``,
``e'_n = m - sum e``.  Reciprocal polynomials give partners equal
coefficients, skew ones opposite coefficients.

Product groups S_{n_1} x ... x S_{n_k} use one block of invariants per factor;
the exponent vector is the concatenation of the blocks and the involution
acts blockwise.

Coefficients are either numbers (Fraction, int or float) or symbolic linear
forms: a tuple of ``(symbol, Fraction)`` pairs sorted by symbol, with symbols
``(s, l)``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, isclose, prod
from typing import Iterable, Mapping, Sequence

from .errors import InternalInconsistencyError, RankMismatchError
from .partitions import _check_nonneg, _check_pos

RECIPROCAL = "reciprocal"
SKEW = "skew"
_KIND_ALIASES = {"reciprocal": RECIPROCAL, "r": RECIPROCAL, "skew": SKEW, "s": SKEW}
SCHEMA = "confpart.selfdual/1"

Symbol = tuple[int, int]
LinearForm = tuple[tuple[Symbol, Fraction], ...]
Key = tuple[tuple[int, ...], int]


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind.strip().lower()]
    except (KeyError, AttributeError):
        raise ValueError(f"kind must be 'reciprocal' or 'skew', got {kind!r}")


def product_kind(a: str, b: str) -> str:
    """Sign rule: R*R = S*S = R, R*S = S*R = S."""
    return RECIPROCAL if normalize_kind(a) == normalize_kind(b) else SKEW


# ---------------------------------------------------------------------------
# alpha tuples and counter-partner monomials

@lru_cache(maxsize=4096)
def _alpha_cached(n: int, m: int, s: int) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    cur = [0] * n

    def rec(r: int, rem_s: int, rem_w: int) -> None:
        if r == n:
            if rem_s % n == 0 and rem_s // n <= rem_w:
                cur[n - 1] = rem_s // n
                out.append(tuple(cur))
            return
        for a in range(min(rem_w, rem_s // r) + 1):
            cur[r - 1] = a
            rec(r + 1, rem_s - r * a, rem_w - a)
        cur[r - 1] = 0

    rec(1, s, m)
    return tuple(out)


def enumerate_alpha(n: int, m: int, s: int) -> list[tuple[int, ...]]:
    """All alpha with sum r*alpha_r = s and sum alpha_r <= m, ascending lex order.

    The 1-based position in this list is the coefficient index l.

    >>> enumerate_alpha(4, 2, 4)
    [(0, 0, 0, 1), (0, 2, 0, 0), (1, 0, 1, 0)]
    """
    _check_pos(n=n, m=m)
    _check_nonneg(s=s)
    return list(_alpha_cached(n, m, s))


@dataclass(frozen=True)
class InvMonomial:
    """coeff * prod I_r^{exponents[r-1]} * lam^lam_power"""

    exponents: tuple[int, ...]
    lam_power: int
    coeff: object = 1

    @property
    def key(self) -> Key:
        return (self.exponents, self.lam_power)

    def degree(self, ranks: Sequence[int] | None = None) -> int:
        """x-degree with lam counted as degree 1."""
        ranks = ranks or (len(self.exponents),)
        total, off = self.lam_power, 0
        for n in ranks:
            total += sum(r * e for r, e in enumerate(self.exponents[off:off + n], 1))
            off += n
        return total


def _validate_alpha(alpha: Sequence[int], n: int, m: int) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != n or any(a < 0 for a in alpha):
        raise ValueError(f"alpha must be {n} nonnegative integers, got {alpha}")
    if sum(alpha) > m:
        raise ValueError(f"alpha weight {sum(alpha)} exceeds m={m}")
    return alpha


def term_plus(alpha: Sequence[int], n: int, m: int) -> InvMonomial:
    """T+ = prod_r I_{n,r}^{alpha_r} lam^{mn - s}."""
    alpha = _validate_alpha(alpha, n, m)
    s = sum(r * a for r, a in enumerate(alpha, 1))
    return InvMonomial(alpha, m * n - s)


def term_minus(alpha: Sequence[int], n: int, m: int) -> InvMonomial:
    """T- = I_{n,n}^{m - sum alpha} prod_r I_{n,n-r}^{alpha_r} lam^s  (I_{n,0} = 1)."""
    alpha = _validate_alpha(alpha, n, m)
    s = sum(r * a for r, a in enumerate(alpha, 1))
    e = [0] * n
    for r, a in enumerate(alpha, 1):
        if r < n:
            e[n - r - 1] += a
    e[n - 1] += m - sum(alpha)
    return InvMonomial(tuple(e), s)


def constitutive_check(alpha: Sequence[int], n: int, m: int) -> bool:
    """T+ * T- == I_{n,n}^{m - sum alpha} prod_r (I_{n,r} I_{n,n-r})^{alpha_r} lam^{mn}."""
    alpha = _validate_alpha(alpha, n, m)
    p, q = term_plus(alpha, n, m), term_minus(alpha, n, m)
    got = (tuple(a + b for a, b in zip(p.exponents, q.exponents)), p.lam_power + q.lam_power)
    want = [0] * n
    want[n - 1] = m - sum(alpha)
    for r, a in enumerate(alpha, 1):
        want[r - 1] += a
        if r < n:
            want[n - r - 1] += a
    return got == (tuple(want), m * n)


def _dual_block(seg: Sequence[int], n: int, m: int) -> tuple[int, ...]:
    out = [0] * n
    for r in range(1, n):
        out[n - r - 1] = seg[r - 1]
    out[n - 1] = m - sum(seg)
    return tuple(out)


def dual_key(key: Key, blocks: Sequence[tuple[int, int]]) -> Key:
    """Counter-partner of a monomial under the conformal involution."""
    exps, lam = key
    out: list[int] = []
    off = 0
    total = 0
    for n, m in blocks:
        out.extend(_dual_block(exps[off:off + n], n, m))
        off += n
        total += n * m
    return tuple(out), total - lam


# ---------------------------------------------------------------------------
# linear forms

def _lf_add(acc: dict, form: Iterable[tuple[Symbol, Fraction]], scale=1) -> None:
    for sym, c in form:
        v = acc.get(sym, 0) + scale * c
        if v:
            acc[sym] = v
        else:
            acc.pop(sym, None)


def _lf_freeze(acc: Mapping[Symbol, Fraction]) -> LinearForm:
    return tuple(sorted((k, Fraction(v)) for k, v in acc.items() if v))


def _lf_neg(form: LinearForm) -> LinearForm:
    return tuple((k, -v) for k, v in form)


def _rank(rows: Iterable[Mapping[Symbol, Fraction]]) -> int:
    pivots: dict[Symbol, dict[Symbol, Fraction]] = {}
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while True:
            hit = next((k for k in row if k in pivots), None)
            if hit is None:
                break
            factor = row[hit]
            for k, v in pivots[hit].items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if row:
            p = min(row)
            inv = 1 / row[p]
            pivots[p] = {k: v * inv for k, v in row.items()}
    return len(pivots)


# ---------------------------------------------------------------------------
# the polynomial

def _fmt_num(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return repr(c)


def _parse_num(text):
    if isinstance(text, (int, float)):
        return text
    text = str(text)
    try:
        return Fraction(text)
    except ValueError:
        return float(text)


def elementary_values(x: Sequence) -> list:
    """I_{n,0}..I_{n,n} with the arithmetic of the inputs (exact for Fractions)."""
    e = [1] + [0] * len(x)
    for i, xi in enumerate(x):
        for r in range(i + 1, 0, -1):
            e[r] = e[r] + xi * e[r - 1]
    return e


@dataclass(frozen=True)
class SelfDualPoly:
    """Reciprocal or skew-reciprocal polynomial in lam over the invariants.

    ``blocks`` is ``((n, m),)`` for S_n; several pairs for a product group.
    Terms are kept in canonical order: lam power descending, then exponent
    vector ascending.
    """

    blocks: tuple[tuple[int, int], ...]
    kind: str
    terms: tuple[InvMonomial, ...]
    symbolic: bool
    symmetrized: bool = False
    _index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple((int(n), int(m)) for n, m in self.blocks))
        object.__setattr__(self, "kind", normalize_kind(self.kind))
        ordered = tuple(sorted(self.terms, key=lambda t: (-t.lam_power, t.exponents)))
        object.__setattr__(self, "terms", ordered)
        object.__setattr__(self, "_index", {t.key: t.coeff for t in ordered})

    # -- shape ------------------------------------------------------------
    @property
    def n(self) -> int:
        if len(self.blocks) != 1:
            raise AttributeError("n is defined for single-group polynomials only")
        return self.blocks[0][0]

    @property
    def m(self) -> int:
        if len(self.blocks) != 1:
            raise AttributeError("m is defined for single-group polynomials only")
        return self.blocks[0][1]

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.blocks)

    @property
    def order(self) -> int:
        return sum(n * m for n, m in self.blocks)

    @property
    def sign(self) -> int:
        return 1 if self.kind == RECIPROCAL else -1

    def coefficient(self, key: Key):
        """Coefficient of a monomial (0 or the empty form when absent)."""
        return self._index.get(key, () if self.symbolic else 0)

    def __len__(self) -> int:
        return len(self.terms)

    # -- symbols ----------------------------------------------------------
    def symbols(self) -> list[Symbol]:
        if not self.symbolic:
            return []
        return sorted({sym for t in self.terms for sym, _ in t.coeff})

    def independent_count(self) -> int:
        """Number of independent coefficient symbols (the unimodality index)."""
        if not self.symbolic:
            raise ValueError("independent_count needs a symbolic polynomial")
        return _rank(dict(t.coeff) for t in self.terms)

    def bind(self, values: Mapping[Symbol, object], default=None) -> "SelfDualPoly":
        """Substitute numbers for the coefficient symbols."""
        if not self.symbolic:
            raise ValueError("polynomial is already numeric")
        terms = []
        for t in self.terms:
            total = 0
            for sym, w in t.coeff:
                if sym in values:
                    v = values[sym]
                elif default is not None:
                    v = default
                else:
                    raise KeyError(f"no binding for coefficient symbol {sym}")
                total = total + w * v
            if total != 0:
                terms.append(InvMonomial(t.exponents, t.lam_power, total))
        return SelfDualPoly(self.blocks, self.kind, tuple(terms), False, self.symmetrized)

    def bindings(self) -> dict[Symbol, object]:
        """Recover c_{s,l} values that reassemble this numeric single-group polynomial.

        Below the middle degree c_{s,l} is the coefficient of T+(alpha); at the
        middle degree the partners share the coefficient, so half of it is used.
        """
        if self.symbolic or len(self.blocks) != 1:
            raise ValueError("bindings() needs a numeric single-group polynomial")
        n, m = self.blocks[0]
        out: dict[Symbol, object] = {}
        for s in range(n * m // 2 + 1):
            for l, alpha in enumerate(enumerate_alpha(n, m, s), 1):
                c = self.coefficient((alpha, n * m - s))
                if 2 * s == n * m:
                    c = c / 2 if not isinstance(c, int) else Fraction(c, 2)
                out[(s, l)] = c
        return out

    # -- checks -----------------------------------------------------------
    def structure_violations(self, rel_tol: float = 1e-12) -> list[str]:
        """Empty list when every structural invariant of the kind holds."""
        problems: list[str] = []
        N = self.order
        ranks = self.ranks
        for t in self.terms:
            if len(t.exponents) != sum(ranks):
                problems.append(f"term {t.key} has wrong exponent length")
                continue
            if t.lam_power < 0 or any(e < 0 for e in t.exponents):
                problems.append(f"term {t.key} has a negative exponent")
            if t.degree(ranks) != N:
                problems.append(f"term {t.key} has degree {t.degree(ranks)} != {N}")
            off = 0
            for n, m in self.blocks:
                if sum(t.exponents[off:off + n]) > m:
                    problems.append(f"term {t.key} exceeds weight {m} in a block")
                off += n
        for t in self.terms:
            dk = dual_key(t.key, self.blocks)
            partner = self.coefficient(dk)
            if self.symbolic:
                want = t.coeff if self.sign > 0 else _lf_neg(t.coeff)
                ok = partner == want
            else:
                want = self.sign * t.coeff
                if isinstance(want, float) or isinstance(partner, float):
                    ok = isclose(float(partner), float(want), rel_tol=rel_tol, abs_tol=0.0)
                else:
                    ok = partner == want
            if not ok:
                problems.append(f"term {t.key} partner {dk} has {partner!r}, expected {want!r}")
        return problems

    def check_structure(self) -> bool:
        return not self.structure_violations()

    # -- evaluation -------------------------------------------------------
    def _split(self, x: Sequence) -> list[Sequence]:
        ranks = self.ranks
        if len(x) != sum(ranks):
            raise ValueError(f"expected {sum(ranks)} variables, got {len(x)}")
        parts, off = [], 0
        for n in ranks:
            parts.append(x[off:off + n])
            off += n
        return parts

    def invariant_values(self, x: Sequence) -> list:
        """Flattened I values (I_{n,1}..I_{n,n} per block) at x."""
        out = []
        for part in self._split(x):
            out.extend(elementary_values(part)[1:])
        return out

    def lambda_coefficients(self, x: Sequence) -> list:
        """Coefficients of the univariate polynomial in lam at x, ascending powers."""
        if self.symbolic:
            raise ValueError("bind the coefficients before evaluating")
        inv = self.invariant_values(x)
        out = [0] * (self.order + 1)
        for t in self.terms:
            out[t.lam_power] += t.coeff * prod(v**e for v, e in zip(inv, t.exponents) if e)
        return out

    def evaluate(self, lam, x: Sequence):
        return sum(c * lam**j for j, c in enumerate(self.lambda_coefficients(x)))

    def magnitude(self, lam, x: Sequence):
        """Sum of absolute term values; the natural scale for rounding error."""
        inv = self.invariant_values(x)
        return sum(
            abs(t.coeff * prod(v**e for v, e in zip(inv, t.exponents) if e) * lam**t.lam_power)
            for t in self.terms
        )

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        def coeff_out(c):
            if self.symbolic:
                return {f"{s},{l}": _fmt_num(v) for (s, l), v in c}
            return _fmt_num(c)

        return {
            "schema": SCHEMA,
            "blocks": [list(b) for b in self.blocks],
            "kind": self.kind,
            "symbolic": self.symbolic,
            "symmetrized": self.symmetrized,
            "terms": [
                {"inv": list(t.exponents), "lambda": t.lam_power, "coeff": coeff_out(t.coeff)}
                for t in self.terms
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: Mapping) -> "SelfDualPoly":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        symbolic = bool(data["symbolic"])
        terms = []
        for t in data["terms"]:
            if symbolic:
                coeff = tuple(
                    sorted(
                        (tuple(int(p) for p in k.split(",")), Fraction(v))
                        for k, v in t["coeff"].items()
                    )
                )
            else:
                coeff = _parse_num(t["coeff"])
            terms.append(InvMonomial(tuple(t["inv"]), int(t["lambda"]), coeff))
        return cls(
            tuple(tuple(b) for b in data["blocks"]),
            data["kind"],
            tuple(terms),
            symbolic,
            bool(data.get("symmetrized", False)),
        )

    def pretty(self) -> str:
        names = []
        for j, (n, _) in enumerate(self.blocks):
            prefix = "I" if len(self.blocks) == 1 else "XYZUVW"[j] if j < 6 else f"I{j}_"
            names.extend(f"{prefix}{n},{r}" for r in range(1, n + 1))
        letter = "c" if self.kind == RECIPROCAL else "C"
        lines = []
        for t in self.terms:
            if self.symbolic:
                parts = []
                for (s, l), w in t.coeff:
                    w_txt = "" if w == 1 else "-" if w == -1 else f"{_fmt_num(w)}*"
                    parts.append(f"{w_txt}{letter}[{s},{l}]")
                coeff = " + ".join(parts).replace("+ -", "- ")
            else:
                coeff = _fmt_num(t.coeff)
            mono = " ".join(
                f"{nm}" if e == 1 else f"{nm}^{e}" for nm, e in zip(names, t.exponents) if e
            )
            lam = "" if t.lam_power == 0 else "lam" if t.lam_power == 1 else f"lam^{t.lam_power}"
            body = " * ".join(p for p in (mono, lam) if p) or "1"
            lines.append(f"({coeff}) * {body}")
        return "\n".join(lines) if lines else "0"


# ---------------------------------------------------------------------------
# assembly

def enumerate_product_alpha(
    blocks: Sequence[tuple[int, int]], s: int
) -> list[tuple[tuple[int, ...], ...]]:
    """Tuples (alpha^(1), ..., alpha^(k)) with total degree s, ascending lex order."""
    out = []

    def rec(j: int, rem: int, acc: tuple) -> None:
        if j == len(blocks):
            if rem == 0:
                out.append(acc)
            return
        n, m = blocks[j]
        for sj in range(min(rem, n * m) + 1):
            for alpha in _alpha_cached(n, m, sj):
                rec(j + 1, rem - sj, acc + (alpha,))

    rec(0, s, ())
    out.sort(key=lambda combo: tuple(itertools.chain.from_iterable(combo)))
    return out


def _orbit_canonical(blocks: Sequence[tuple[int, int]], combo: tuple) -> tuple:
    # Permuting identical (n, m) blocks permutes their alpha vectors; pick the
    # sorted arrangement as the orbit representative.
    groups: dict[tuple[int, int], list[int]] = {}
    for j, b in enumerate(blocks):
        groups.setdefault(b, []).append(j)
    out = list(combo)
    for idx in groups.values():
        vals = sorted((combo[j] for j in idx), reverse=True)
        for j, v in zip(idx, vals):
            out[j] = v
    return tuple(out)


def _assemble(
    blocks: tuple[tuple[int, int], ...], kind: str, symmetrized: bool
) -> SelfDualPoly:
    kind = normalize_kind(kind)
    sign = 1 if kind == RECIPROCAL else -1
    N = sum(n * m for n, m in blocks)
    acc: dict[Key, dict] = {}
    for s in range(N // 2 + 1):
        combos = enumerate_product_alpha(blocks, s)
        if symmetrized:
            reps = sorted({_orbit_canonical(blocks, c) for c in combos},
                          key=lambda c: tuple(itertools.chain.from_iterable(c)))
            label = {rep: (s, l) for l, rep in enumerate(reps, 1)}
            syms = [label[_orbit_canonical(blocks, c)] for c in combos]
        else:
            syms = [(s, l) for l in range(1, len(combos) + 1)]
        for combo, sym in zip(combos, syms):
            key = (tuple(itertools.chain.from_iterable(combo)), N - s)
            _lf_add(acc.setdefault(key, {}), ((sym, Fraction(1)),))
            _lf_add(acc.setdefault(dual_key(key, blocks), {}), ((sym, Fraction(sign)),))
    terms = tuple(
        InvMonomial(key[0], key[1], _lf_freeze(form)) for key, form in acc.items() if form
    )
    return SelfDualPoly(blocks, kind, terms, True, symmetrized)


@lru_cache(maxsize=256)
def _assemble_cached(blocks, kind, symmetrized):
    return _assemble(blocks, kind, symmetrized)


def assemble(
    n: int, m: int, kind: str, bindings: Mapping[Symbol, object] | None = None, default=None
) -> SelfDualPoly:
    """Build the reciprocal or skew polynomial of S_n and degree parameter m.

    Without bindings the coefficients stay symbolic, ``c[s,l]`` being the
    coefficient of the l-th alpha at degree s.  Middle-degree partners that
    coincide cancel in the skew kind.
    """
    _check_pos(n=n, m=m)
    poly = _assemble_cached(((n, m),), normalize_kind(kind), False)
    return poly if bindings is None else poly.bind(bindings, default)


def assemble_product(
    pairs: Sequence[tuple[int, int]],
    kind: str,
    symmetrized: bool = False,
    bindings: Mapping[Symbol, object] | None = None,
    default=None,
) -> SelfDualPoly:
    """Polynomial for S_{n_1} x ... x S_{n_k}, one invariant block per factor.

    With ``symmetrized`` the coefficient symbols are shared across
    permutations of identical (n, m) factors.
    """
    blocks = tuple((int(n), int(m)) for n, m in pairs)
    if not blocks:
        raise ValueError("need at least one (n, m) pair")
    for n, m in blocks:
        _check_pos(n=n, m=m)
    poly = _assemble_cached(blocks, normalize_kind(kind), bool(symmetrized))
    return poly if bindings is None else poly.bind(bindings, default)


def multiply(p: SelfDualPoly, q: SelfDualPoly) -> SelfDualPoly:
    """Product of two numeric polynomials of the same group.

    The result has degree parameter m_p + m_q and the kind given by the sign
    rule; its structure is verified before returning.
    """
    if p.symbolic or q.symbolic:
        raise ValueError("multiply needs numeric coefficient bindings")
    if p.ranks != q.ranks:
        raise RankMismatchError(f"group ranks differ: {p.ranks} vs {q.ranks}")
    acc: dict[Key, object] = {}
    for a in p.terms:
        for b in q.terms:
            key = (tuple(x + y for x, y in zip(a.exponents, b.exponents)), a.lam_power + b.lam_power)
            acc[key] = acc.get(key, 0) + a.coeff * b.coeff
    blocks = tuple((n, m1 + m2) for (n, m1), (_, m2) in zip(p.blocks, q.blocks))
    terms = tuple(InvMonomial(k[0], k[1], c) for k, c in acc.items() if c != 0)
    out = SelfDualPoly(blocks, product_kind(p.kind, q.kind), terms, False)
    problems = out.structure_violations(rel_tol=1e-9)
    if problems:
        raise InternalInconsistencyError("product breaks structure: " + "; ".join(problems[:3]))
    return out


def conformal_transform_sides(p: SelfDualPoly, x: Sequence, lam) -> tuple:
    """(p(1/lam, 1/x), +-lam^{-N} prod I_{n,n}^{-m} p(lam, x)) and a rounding scale."""
    if p.symbolic:
        raise ValueError("bind the coefficients before evaluating")
    if lam <= 0 or any(v <= 0 for v in x):
        raise ValueError("lam and x must be strictly positive")
    inv_x = [1 / v for v in x]
    left = p.evaluate(1 / lam, inv_x)
    factor = lam ** (-p.order)
    for part, (n, m) in zip(p._split(list(x)), p.blocks):
        factor = factor * prod(part) ** (-m)
    right = p.sign * factor * p.evaluate(lam, x)
    scale = max(p.magnitude(1 / lam, inv_x), abs(factor) * p.magnitude(lam, x))
    return left, right, scale


def conformal_transform_check(p: SelfDualPoly, x: Sequence, lam, tol: float = 1e-10) -> bool:
    """Check p(1/lam, 1/x) == +-lam^{-N} I_{n,n}^{-m} p(lam, x).

    The difference is measured against the summed absolute term values, the
    scale of floating-point error in the evaluation.
    """
    left, right, scale = conformal_transform_sides(p, x, lam)
    if left == right:
        return True
    return abs(left - right) <= tol * scale


# ---------------------------------------------------------------------------
# unimodality indices

def mu_by_count(n: int, m: int, kind: str) -> int:
    """Independent coefficients of the assembled symbolic polynomial."""
    return assemble(n, m, kind).independent_count()


def q_by_count(n: int, m: int) -> int:
    """Middle-degree alpha tuples that are their own counter-partner."""
    _check_pos(n=n, m=m)
    if (n * m) % 2:
        return 0
    s = n * m // 2
    return sum(
        1 for a in enumerate_alpha(n, m, s) if dual_key((a, n * m - s), ((n, m),))[0] == a
    )


def q_closed(n: int, m: int) -> int:
    """Q(n, m): binom(u+v, v) with n = 2u or 2u+1 and m = 2v or 2v+1.

    Zero when n*m is odd; Q(n, 0) = Q(0, m) = 1.
    """
    _check_nonneg(n=n, m=m)
    if (n * m) % 2:
        return 0
    u, v = n // 2, m // 2
    return comb(u + v, v)


def mu_closed(n: int, m: int, kind: str) -> int:
    """(binom(m+n, n) +- Q(n, m)) / 2."""
    _check_pos(n=n, m=m)
    kind = normalize_kind(kind)
    total = comb(m + n, n)
    q = q_closed(n, m)
    value = total + q if kind == RECIPROCAL else total - q
    if value % 2:
        raise InternalInconsistencyError(f"odd unimodality total for n={n} m={m}")
    return value // 2


def mu_product_closed(pairs: Sequence[tuple[int, int]], kind: str) -> int:
    """(prod binom(m_j+n_j, n_j) +- prod Q(n_j, m_j)) / 2."""
    if not pairs:
        raise ValueError("need at least one (n, m) pair")
    kind = normalize_kind(kind)
    total = prod(comb(m + n, n) for n, m in pairs)
    q = prod(q_closed(n, m) for n, m in pairs)
    value = total + q if kind == RECIPROCAL else total - q
    if value % 2:
        raise InternalInconsistencyError(f"odd unimodality total for {pairs}")
    return value // 2
