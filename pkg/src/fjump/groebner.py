"""Ideals and reduced Groebner bases.

Buchberger's algorithm with the Gebauer-Moeller pair-elimination criteria
and normal (smallest lcm degree first) selection.  All tie-breaking goes
through the monomial order, so the reduced basis of an ideal is not just
mathematically unique but reproduced bit-for-bit across runs.  Reduced
bases are memoized per (ideal, order); the fill is idempotent, so
concurrent readers can at worst duplicate work.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import FjumpError, ResourceLimitError, RingMismatchError
from .multipoly import (GREVLEX, MonomialOrder, Poly, RingCtx,
                        elimination_order, parse)

DEFAULT_STEP_LIMIT = 500_000
DEFAULT_GEN_LIMIT = 100_000
POWER_TERM_BUDGET = 2_000_000


class Ideal:
    """An ideal given by generators; the zero ideal has none.

    Equality, containment and membership are decided through the cached
    reduced Groebner basis, so ``==`` means mathematical equality.
    """

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring: RingCtx, gens=()):
        seen = set()
        kept = []
        for g in gens:
            if not isinstance(g, Poly):
                raise TypeError(f"expected Poly generators, got {type(g).__name__}")
            if g.ring != ring:
                raise RingMismatchError("generator lives in a different ring")
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            kept.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(kept))
        object.__setattr__(self, "_gb_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    @classmethod
    def of(cls, ring: RingCtx, *gens) -> "Ideal":
        polys = [parse(g, ring) if isinstance(g, str) else g for g in gens]
        return cls(ring, polys)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb.polys) == 1 and gb.polys[0].is_constant() and not gb.polys[0].is_zero()

    def groebner_basis(self, order: MonomialOrder = GREVLEX, *,
                       step_limit: int | None = None) -> "GroebnerBasis":
        gb = self._gb_cache.get(order)
        if gb is None:
            gb = buchberger(self, order, step_limit=step_limit)
            self._gb_cache[order] = gb
        return gb

    def contains(self, f: Poly) -> bool:
        return is_member(f, self)

    __contains__ = contains

    def is_subset_of(self, other: "Ideal") -> bool:
        return is_subset(self, other)

    def __le__(self, other):
        return is_subset(self, other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner_basis().polys == other.groebner_basis().polys

    __hash__ = None

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, r: int):
        return ideal_power(self, r)

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens) if self.gens else "0"
        return f"Ideal({inner})"


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced basis: monic, pairwise lead-indivisible, tails in normal
    form, sorted ascending by lead monomial."""

    ring: RingCtx
    order: MonomialOrder
    polys: tuple[Poly, ...]

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self)

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self).is_zero()


def _check_same_ring(*ideals: Ideal):
    ring = ideals[0].ring
    for I in ideals[1:]:
        if I.ring != ring:
            raise RingMismatchError("ideals live in different rings")
    return ring


# ---------------------------------------------------------------------------
# Raw-dict polynomial helpers (hot path of the reducer).


def _dict_submul(h: dict, c: int, shift: tuple[int, ...], g: dict, p: int):
    """h -= c * x^shift * g, in place."""
    if any(shift):
        for e, gc in g.items():
            key = tuple(a + b for a, b in zip(e, shift))
            nc = (h.get(key, 0) - c * gc) % p
            if nc:
                h[key] = nc
            else:
                h.pop(key, None)
    else:
        for e, gc in g.items():
            nc = (h.get(e, 0) - c * gc) % p
            if nc:
                h[e] = nc
            else:
                h.pop(e, None)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, n: int = 1):
        self.left -= n
        if self.left < 0:
            raise ResourceLimitError("Groebner step limit exceeded"
                                     " (raise the step cap to continue)")


def _normal_form_dict(h: dict, basis: list, keyf, p: int, budget: _Budget) -> dict:
    """Full normal form of h against basis entries (lead, inv_lead_coeff, terms)."""
    h = dict(h)
    out: dict = {}
    while h:
        lead = max(h, key=keyf)
        c = h[lead]
        reduced = False
        for blead, binv, bterms in basis:
            if all(a >= b for a, b in zip(lead, blead)):
                shift = tuple(a - b for a, b in zip(lead, blead))
                _dict_submul(h, (c * binv) % p, shift, bterms, p)
                budget.spend()
                reduced = True
                break
        if not reduced:
            out[lead] = c
            del h[lead]
    return out


def _poly_sort_key(f: Poly, order: MonomialOrder):
    return tuple(sorted(((order.key(e), c) for e, c in f.sorted_terms(order))))


def buchberger(source, order: MonomialOrder = GREVLEX, *,
               step_limit: int | None = None) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal, deterministically.

    ``source`` is an Ideal or a sequence of Poly.  Raises
    ResourceLimitError when the configured step cap runs out; never
    returns a wrong basis.
    """
    if isinstance(source, Ideal):
        ring, gens = source.ring, source.gens
    else:
        gens = tuple(source)
        if not gens:
            raise FjumpError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    budget = _Budget(DEFAULT_STEP_LIMIT if step_limit is None else step_limit)
    p = ring.p
    keyf = order.key

    seed = sorted({g for g in gens if not g.is_zero()},
                  key=lambda f: (keyf(f.lead_term(order)[0]), _poly_sort_key(f, order)))

    # basis entries: (lead_exps, inverted lead coeff, terms dict)
    basis: list = []
    leads: list = []
    pairs: list = []  # (i, j, lcm) with i < j

    def lcm_of(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    def add_poly(terms: dict):
        lead = max(terms, key=keyf)
        inv = ring.field.inv(terms[lead])
        t = len(basis)
        # Gebauer-Moeller update: prune the new pairs among themselves,
        # then drop old pairs whose lcm strictly contains the new lead.
        cand = []
        for i in range(t):
            l = lcm_of(leads[i], lead)
            cand.append((keyf(l), i, l))
        cand.sort()
        kept: list = []
        for sk, i, l in cand:
            coprime = all(min(x, y) == 0 for x, y in zip(leads[i], lead))
            dominated = any(divides(l2, l) and l2 != l for _, _, l2 in kept)
            duplicate = any(l2 == l for _, _, l2 in kept)
            if coprime or not (dominated or duplicate):
                kept.append((sk, i, l))
        survivors = [(i, t, l) for sk, i, l in kept
                     if not all(min(x, y) == 0 for x, y in zip(leads[i], lead))]
        retained = []
        for (i, j, l) in pairs:
            if divides(lead, l) and lcm_of(leads[i], lead) != l and lcm_of(leads[j], lead) != l:
                continue
            retained.append((i, j, l))
        pairs[:] = retained + survivors
        basis.append((lead, inv, terms))
        leads.append(lead)

    for f in seed:
        nf = _normal_form_dict(dict(f._terms), basis, keyf, p, budget)
        if nf:
            add_poly(nf)

    while pairs:
        pairs.sort(key=lambda t: (sum(t[2]), keyf(t[2]), t[0], t[1]))
        i, j, l = pairs.pop(0)
        budget.spend()
        li, inv_i, ti = basis[i]
        lj, inv_j, tj = basis[j]
        s: dict = {}
        _dict_submul(s, (-inv_i) % p, tuple(a - b for a, b in zip(l, li)), ti, p)
        _dict_submul(s, inv_j, tuple(a - b for a, b in zip(l, lj)), tj, p)
        nf = _normal_form_dict(s, basis, keyf, p, budget)
        if nf:
            add_poly(nf)

    # Minimalize: drop entries whose lead another lead divides.
    order_idx = sorted(range(len(basis)), key=lambda i: keyf(leads[i]))
    minimal: list[int] = []
    for i in order_idx:
        if not any(divides(leads[j], leads[i]) for j in minimal):
            minimal.append(i)

    # Tail-reduce every survivor against the others, then make monic.
    final: list[Poly] = []
    for i in minimal:
        others = [basis[j] for j in minimal if j != i]
        nf = _normal_form_dict(basis[i][2], others, keyf, p, budget)
        inv = ring.field.inv(nf[max(nf, key=keyf)])
        final.append(Poly.from_terms(ring, [(e, c * inv) for e, c in nf.items()]))
    final.sort(key=lambda f: keyf(f.lead_term(order)[0]))
    return GroebnerBasis(ring, order, tuple(final))


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    """The remainder of f on division by the basis; zero iff f lies in
    the ideal the basis generates."""
    if f.ring != gb.ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    p = gb.ring.p
    keyf = gb.order.key
    entries = [(g.lead_term(gb.order)[0], gb.ring.field.inv(g.lead_term(gb.order)[1]),
                g._terms) for g in gb.polys]
    budget = _Budget(DEFAULT_STEP_LIMIT)
    nf = _normal_form_dict(dict(f._terms), entries, keyf, p, budget)
    return Poly.from_terms(gb.ring, nf.items())


def is_member(f: Poly, I: Ideal, *, step_limit: int | None = None) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    if I.is_zero():
        return False
    return normal_form(f, I.groebner_basis(step_limit=step_limit)).is_zero()


def is_subset(I: Ideal, J: Ideal, *, step_limit: int | None = None) -> bool:
    _check_same_ring(I, J)
    if I.is_zero():
        return True
    gb = J.groebner_basis(step_limit=step_limit)
    return all(normal_form(g, gb).is_zero() for g in I.gens)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return I == J


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    ring = _check_same_ring(I, J)
    return Ideal(ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    ring = _check_same_ring(I, J)
    return Ideal(ring, [f * g for f in I.gens for g in J.gens])


def ideal_power(I: Ideal, r: int, *, gen_limit: int | None = None) -> Ideal:
    """Generated by all r-fold products of generators; I^0 is the unit
    ideal, and the zero ideal stays zero for positive r."""
    if r < 0:
        raise FjumpError("ideal powers need a nonnegative exponent")
    if r == 0:
        return Ideal(I.ring, [I.ring.one()])
    if I.is_zero():
        return Ideal(I.ring, [])
    m = len(I.gens)
    limit = DEFAULT_GEN_LIMIT if gen_limit is None else gen_limit
    count = comb(r + m - 1, m - 1)
    if count > limit:
        raise ResourceLimitError(
            f"I^{r} would need {count} generators (cap {limit})")
    powers: dict = {}  # (gen index, k) -> gens[i]^k, via the sparse digit path

    def power_of(g: int, k: int) -> Poly:
        got = powers.get((g, k))
        if got is None:
            got = I.gens[g] ** k
            powers[(g, k)] = got
        return got

    out = []
    terms_seen = 0
    for combo in combinations_with_replacement(range(m), r):
        prod = None
        idx = 0
        while idx < r:
            g = combo[idx]
            k = 1
            while idx + k < r and combo[idx + k] == g:
                k += 1
            piece = power_of(g, k)
            prod = piece if prod is None else prod * piece
            idx += k
        out.append(prod)
        terms_seen += prod.num_terms()
        if terms_seen > POWER_TERM_BUDGET:
            raise ResourceLimitError(
                f"I^{r} exceeds {POWER_TERM_BUDGET} total terms")
    return Ideal(I.ring, out)


def ideal_intersect(I: Ideal, J: Ideal, *, step_limit: int | None = None) -> Ideal:
    """I ∩ J through the single auxiliary variable trick: eliminate t from
    t*I + (1-t)*J."""
    ring = _check_same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    ext, lift = _extend_ring(ring, first=True)
    one = (0,) * ext.nvars
    t_exp = (1,) + (0,) * ring.nvars

    gens = []
    for f in I.gens:
        gens.append(Poly.from_terms(ext, [((1,) + e, c) for e, c in f._terms.items()]))
    for g in J.gens:
        items = [((0,) + e, c) for e, c in g._terms.items()]
        items += [((1,) + e, -c) for e, c in g._terms.items()]
        gens.append(Poly.from_terms(ext, items))
    gb = buchberger(Ideal(ext, gens), elimination_order(1), step_limit=step_limit)
    kept = []
    for f in gb.polys:
        if all(e[0] == 0 for e in f._terms):
            kept.append(Poly.from_terms(ring, [(e[1:], c) for e, c in f._terms.items()]))
    return Ideal(ring, kept)


def radical_member(f: Poly, I: Ideal, *, step_limit: int | None = None) -> bool:
    """f in rad(I), by the Rabinowitsch trick: adjoin t and ask whether
    1 lies in I + (1 - t*f)."""
    if f.ring != I.ring:
        raise RingMismatchError("polynomial and ideal live in different rings")
    ring = I.ring
    if f.is_zero():
        return True
    ext, _ = _extend_ring(ring, first=False)
    gens = [Poly.from_terms(ext, [(e + (0,), c) for e, c in g._terms.items()])
            for g in I.gens]
    items = [((0,) * ext.nvars, 1)]
    items += [(e + (1,), -c) for e, c in f._terms.items()]
    gens.append(Poly.from_terms(ext, items))
    gb = buchberger(Ideal(ext, gens), GREVLEX, step_limit=step_limit)
    return len(gb.polys) == 1 and gb.polys[0].is_constant()


def _extend_ring(ring: RingCtx, *, first: bool):
    """Adjoin one fresh variable, in front (for elimination) or at the end."""
    base = "t"
    name = base
    k = 0
    while name in ring.var_names:
        name = f"{base}{k}"
        k += 1
    names = (name,) + ring.var_names if first else ring.var_names + (name,)
    return RingCtx(ring.field, names), name


def generated_in_degree(I: Ideal, d: int) -> bool:
    """Whether the elements of I of total degree <= d already generate I.

    The degree-d slice of I is the kernel of the normal-form map on the
    (finite dimensional) space of polynomials of degree <= d; a basis of
    that kernel is extracted by Gaussian elimination and compared against
    I itself.
    """
    if I.is_zero():
        return True
    if d < 0:
        return False
    ring = I.ring
    gb = I.groebner_basis()
    monos = _monomials_up_to(ring.nvars, d)
    # Rows: coordinates of NF(mu) over the standard monomials, augmented by
    # the identity so the eliminated rows remember their mu-combination.
    cols: dict = {}
    rows = []
    for mu in monos:
        nf = normal_form(ring.monomial(mu), gb)
        vec = {}
        for e, c in nf._terms.items():
            cols.setdefault(e, len(cols))
            vec[cols[e]] = c
        rows.append((vec, {mu: 1}))
    p = ring.p
    kernel = []
    pivots: dict = {}
    for vec, combo in rows:
        vec = dict(vec)
        combo = dict(combo)
        for col in sorted(vec):
            if col not in pivots:
                continue
            pvec, pcombo = pivots[col]
            c = vec[col]
            for k, v in pvec.items():
                nv = (vec.get(k, 0) - c * v) % p
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for k, v in pcombo.items():
                nv = (combo.get(k, 0) - c * v) % p
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)
        if vec:
            col = min(vec)
            inv = ring.field.inv(vec[col])
            vec = {k: (v * inv) % p for k, v in vec.items()}
            combo = {k: (v * inv) % p for k, v in combo.items()}
            pivots[col] = (vec, combo)
        elif combo:
            kernel.append(combo)
    candidates = [Poly.from_terms(ring, combo.items()) for combo in kernel]
    return Ideal(ring, candidates) == I


def _monomials_up_to(n: int, d: int):
    out = []

    def rec(prefix, left):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e)

    rec([], d)
    return out
