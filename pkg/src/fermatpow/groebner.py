"""Buchberger Groebner engine and ideal-level operations.

Monomials are packed into single integers whose field layout makes
multiplication an integer addition and order comparison an integer
comparison; divisibility uses a guard-bit trick on a parallel
exponent packing.  S-pairs follow the normal (degree-then-order)
selection strategy and are pruned with the Gebauer-Moeller installation
of Buchberger's coprimality and chain criteria.  Reduced bases are
monic, fully tail-reduced and unique per order, and are cached both in
memory and on disk (versioned files keyed by a generator-content hash).
"""

from __future__ import annotations

import hashlib
import heapq
import os
import tempfile
import time
from itertools import combinations, combinations_with_replacement

from .fields import QQ
from .poly import (
    GREVLEX,
    MonomialOrder,
    Poly,
    PolyRing,
    RingMismatch,
    elimination_order,
    monomials_of_degree,
)
from .textio import parse_poly, render_poly

_FIELD_BITS = 16
_FIELD_MASK = (1 << _FIELD_BITS) - 1


class GBTimeout(Exception):
    """Raised when a basis computation exceeds its deadline."""


class _EngineSpec:
    """Packed-monomial layout for one (ring, order) combination."""

    def __init__(self, ring: PolyRing, order: MonomialOrder):
        nv = ring.nvars
        self.ring = ring
        self.order = order
        self.nv = nv
        if order.kind == "grevlex":
            blocks = [(0, nv)]
        elif order.kind == "elim":
            blocks = [(0, order.block), (order.block, nv)]
        else:  # lex: one field per variable
            blocks = [(i, i + 1) for i in range(nv)]
        self.blocks = blocks
        self.nfields = sum(b - a for a, b in blocks)
        self.guard = 0
        for i in range(nv):
            self.guard |= 1 << (_FIELD_BITS * i + _FIELD_BITS - 1)
        # Selection weights: eliminated block weighs zero, so the weighted
        # degree is an honest grading for w*I + (1-w)*J inputs.
        if order.kind == "elim":
            self.weights = (0,) * order.block + (1,) * (nv - order.block)
        else:
            self.weights = (1,) * nv

    def key_of_exps(self, exps) -> int:
        key = 0
        for a, b in self.blocks:
            fields = []
            s = 0
            for i in range(a, b):
                s += exps[i]
                fields.append(s)
            for f in reversed(fields):
                key = (key << _FIELD_BITS) | f
        return key

    def exps_of_key(self, key: int) -> tuple:
        fields = []
        for _ in range(self.nfields):
            fields.append(key & _FIELD_MASK)
            key >>= _FIELD_BITS
        fields.reverse()
        exps = [0] * self.nv
        pos = 0
        for a, b in self.blocks:
            width = b - a
            block_fields = fields[pos : pos + width]  # [s_w, ..., s_1]
            pos += width
            prev = 0
            for j in range(width - 1, -1, -1):
                s = block_fields[j]
                exps[a + (width - 1 - j)] = s - prev
                prev = s
        return tuple(exps)

    def epack_of_exps(self, exps) -> int:
        ep = 0
        for e in exps:
            ep = (ep << _FIELD_BITS) | e
        return ep

    def epack_of_key(self, key: int) -> int:
        return self.epack_of_exps(self.exps_of_key(key))

    def exps_of_epack(self, ep: int) -> tuple:
        out = []
        for _ in range(self.nv):
            out.append(ep & _FIELD_MASK)
            ep >>= _FIELD_BITS
        out.reverse()
        return tuple(out)

    def lcm_epack(self, a: int, b: int) -> int:
        out = 0
        for i in range(self.nv):
            shift = _FIELD_BITS * i
            fa = (a >> shift) & _FIELD_MASK
            fb = (b >> shift) & _FIELD_MASK
            out |= (fa if fa >= fb else fb) << shift
        return out

    def wdeg_of_exps(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))


def _make_spec(ring: PolyRing, order: MonomialOrder) -> _EngineSpec:
    spec = _EngineSpec(ring, order)
    # Fast paths for the two hot layouts.
    if order.kind == "grevlex" and ring.nvars == 3:
        def epack_of_key(key: int) -> int:
            s1 = key & _FIELD_MASK
            s2 = (key >> _FIELD_BITS) & _FIELD_MASK
            d = key >> (2 * _FIELD_BITS)
            return (s1 << (2 * _FIELD_BITS)) | ((s2 - s1) << _FIELD_BITS) | (d - s2)

        spec.epack_of_key = epack_of_key  # type: ignore[method-assign]
        spec.sdeg_of_key = lambda key: key >> (2 * _FIELD_BITS)  # type: ignore[attr-defined]
    elif order.kind == "elim" and order.block == 1 and ring.nvars == 4:
        def epack_of_key(key: int) -> int:
            s1 = key & _FIELD_MASK
            s2 = (key >> _FIELD_BITS) & _FIELD_MASK
            d = (key >> (2 * _FIELD_BITS)) & _FIELD_MASK
            w = key >> (3 * _FIELD_BITS)
            return (
                (w << (3 * _FIELD_BITS))
                | (s1 << (2 * _FIELD_BITS))
                | ((s2 - s1) << _FIELD_BITS)
                | (d - s2)
            )

        spec.epack_of_key = epack_of_key  # type: ignore[method-assign]
        spec.sdeg_of_key = lambda key: (key >> (2 * _FIELD_BITS)) & _FIELD_MASK  # type: ignore[attr-defined]
    else:
        spec.sdeg_of_key = lambda key, s=spec: s.wdeg_of_exps(s.exps_of_key(key))  # type: ignore[attr-defined]
    return spec


def _poly_to_lists(p: Poly, spec: _EngineSpec):
    pairs = sorted(
        ((spec.key_of_exps(e), c) for e, c in p.terms.items()), reverse=True
    )
    return [k for k, _ in pairs], [c for _, c in pairs]


def _lists_to_poly(keys, coeffs, spec: _EngineSpec, ring: PolyRing | None = None) -> Poly:
    ring = ring or spec.ring
    return Poly(ring, {spec.exps_of_key(k): c for k, c in zip(keys, coeffs)})


def _nf_dict(pdict, heap, spec, red_eps, red_sdegs, red_lts, red_keys, red_coeffs):
    """Full normal form of the polynomial in (pdict, heap) against monic
    reducers; returns (keys, coeffs) strictly descending."""
    guard = spec.guard
    epack_of_key = spec.epack_of_key
    sdeg_of_key = spec.sdeg_of_key
    pop = heapq.heappop
    push = heapq.heappush
    out_k: list[int] = []
    out_c: list = []
    nred = len(red_eps)
    while heap:
        k = -pop(heap)
        c = pdict.pop(k, None)
        if c is None:
            continue
        ep = epack_of_key(k)
        sd = sdeg_of_key(k)
        epg = ep | guard
        red = -1
        for pos in range(nred):
            if red_sdegs[pos] > sd:
                break
            if (epg - red_eps[pos]) & guard == guard:
                red = pos
                break
        if red < 0:
            out_k.append(k)
            out_c.append(c)
            continue
        shift = k - red_lts[red]
        gks = red_keys[red]
        gcs = red_coeffs[red]
        for t in range(1, len(gks)):
            kk = gks[t] + shift
            v = pdict.get(kk)
            if v is None:
                pdict[kk] = -c * gcs[t]
                push(heap, -kk)
            else:
                v = v - c * gcs[t]
                if v:
                    pdict[kk] = v
                else:
                    del pdict[kk]
    return out_k, out_c


def buchberger(
    generators,
    order: MonomialOrder = GREVLEX,
    *,
    deadline: float | None = None,
    max_weighted_degree: int | None = None,
    stats: dict | None = None,
):
    """Reduced Groebner basis of the given generators.

    ``max_weighted_degree`` truncates the run to S-pairs of weighted degree
    up to the bound; for inputs homogeneous under the engine weights the
    result is then a degree-truncated basis (every ideal element of weighted
    degree <= bound still reduces to zero).
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("Groebner basis of the zero ideal is not defined here")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
    if ring.field != QQ:
        raise NotImplementedError("Groebner bases are computed over QQ only")
    spec = _make_spec(ring, order)
    sdeg_of_key = spec.sdeg_of_key
    lcm_epack = spec.lcm_epack
    guard = spec.guard

    # Entry storage (never shrinks; indices are stable).
    e_keys: list[list[int]] = []
    e_coeffs: list[list] = []
    e_lt: list[int] = []
    e_ep: list[int] = []
    e_sdeg: list[int] = []

    alive: list[int] = []  # current basis indices, sorted by (sdeg, lt)
    red_eps: list[int] = []
    red_sdegs: list[int] = []
    red_lts: list[int] = []
    red_keys: list[list[int]] = []
    red_coeffs: list[list] = []

    def rebuild_reducers():
        red_eps.clear()
        red_sdegs.clear()
        red_lts.clear()
        red_keys.clear()
        red_coeffs.clear()
        for i in alive:
            red_eps.append(e_ep[i])
            red_sdegs.append(e_sdeg[i])
            red_lts.append(e_lt[i])
            red_keys.append(e_keys[i])
            red_coeffs.append(e_coeffs[i])

    pq: list = []
    pairset: set = set()
    n_reductions = 0
    n_zero = 0

    def add_entry(keys, coeffs) -> int:
        lc = coeffs[0]
        if lc != 1:
            inv = 1 / lc
            coeffs = [c * inv for c in coeffs]
        idx = len(e_keys)
        e_keys.append(keys)
        e_coeffs.append(coeffs)
        lt = keys[0]
        e_lt.append(lt)
        e_ep.append(spec.epack_of_key(lt))
        e_sdeg.append(sdeg_of_key(lt))
        return idx

    def update(t: int) -> None:
        """Gebauer-Moeller installation: install entry t into the basis."""
        lt_t = e_ep[t]
        sdeg_t = e_sdeg[t]
        cand = []
        for i in alive:
            lcm = lcm_epack(e_ep[i], lt_t)
            cand.append((i, lcm))
        kept: list[tuple[int, int]] = []
        for pos, (i, lcm) in enumerate(cand):
            if lcm == e_ep[i] + lt_t:  # coprime leading terms
                kept.append((i, lcm))
                continue
            lg = lcm | guard
            dominated = False
            for j in range(pos + 1, len(cand)):
                if (lg - cand[j][1]) & guard == guard:
                    dominated = True
                    break
            if not dominated:
                for _, other in kept:
                    if (lg - other) & guard == guard:
                        dominated = True
                        break
            if not dominated:
                kept.append((i, lcm))
        new_pairs = [(i, lcm) for i, lcm in kept if lcm != e_ep[i] + lt_t]
        # Chain-prune old pairs against the new leading term.
        if pairset:
            drop = []
            for (i, j, lcm) in pairset:
                if ((lcm | guard) - lt_t) & guard == guard:
                    if lcm_epack(e_ep[i], lt_t) != lcm and lcm_epack(e_ep[j], lt_t) != lcm:
                        drop.append((i, j, lcm))
            for item in drop:
                pairset.discard(item)
        # Remove basis elements whose leading term the new one divides.
        survivors = []
        for i in alive:
            if ((e_ep[i] | guard) - lt_t) & guard == guard:
                continue
            survivors.append(i)
        survivors.append(t)
        survivors.sort(key=lambda i: (e_sdeg[i], e_lt[i]))
        alive[:] = survivors
        rebuild_reducers()
        for i, lcm in new_pairs:
            wd = spec.wdeg_of_exps(spec.exps_of_epack(lcm))
            if max_weighted_degree is not None and wd > max_weighted_degree:
                continue
            item = (i, t, lcm)
            pairset.add(item)
            heapq.heappush(pq, (wd, lcm, i, t))

    # Seed with the inputs, smallest first, reducing each against the rest.
    seeds = sorted(
        (_poly_to_lists(g, spec) for g in gens),
        key=lambda kc: (sdeg_of_key(kc[0][0]), kc[0][0]),
    )
    check_counter = 0
    for keys, coeffs in seeds:
        pdict = dict(zip(keys, coeffs))
        heap = [-k for k in keys]
        heapq.heapify(heap)
        rk, rc = _nf_dict(pdict, heap, spec, red_eps, red_sdegs, red_lts, red_keys, red_coeffs)
        if not rk:
            continue
        update(add_entry(rk, rc))

    while pq:
        wd, lcm, i, j = heapq.heappop(pq)
        item = (i, j, lcm)
        if item not in pairset:
            continue
        pairset.discard(item)
        check_counter += 1
        if deadline is not None and check_counter % 64 == 0 and time.monotonic() > deadline:
            raise GBTimeout(f"Groebner computation exceeded deadline ({len(alive)} basis elements)")
        lcm_key = spec.key_of_exps(spec.exps_of_epack(lcm))
        si = lcm_key - e_lt[i]
        sj = lcm_key - e_lt[j]
        pdict: dict = {}
        ki, ci = e_keys[i], e_coeffs[i]
        for t in range(1, len(ki)):
            pdict[ki[t] + si] = ci[t]
        kj, cj = e_keys[j], e_coeffs[j]
        for t in range(1, len(kj)):
            kk = kj[t] + sj
            v = pdict.get(kk)
            if v is None:
                pdict[kk] = -cj[t]
            else:
                v = v - cj[t]
                if v:
                    pdict[kk] = v
                else:
                    del pdict[kk]
        heap = [-k for k in pdict]
        heapq.heapify(heap)
        n_reductions += 1
        rk, rc = _nf_dict(pdict, heap, spec, red_eps, red_sdegs, red_lts, red_keys, red_coeffs)
        if not rk:
            n_zero += 1
            continue
        update(add_entry(rk, rc))

    # Inter-reduce tails: leading terms are already pairwise non-divisible.
    final = []
    for i in alive:
        others = [j for j in alive if j != i]
        oe = [e_ep[j] for j in others]
        os_ = [e_sdeg[j] for j in others]
        ol = [e_lt[j] for j in others]
        ok = [e_keys[j] for j in others]
        oc = [e_coeffs[j] for j in others]
        pdict = dict(zip(e_keys[i], e_coeffs[i]))
        heap = [-k for k in e_keys[i]]
        heapq.heapify(heap)
        rk, rc = _nf_dict(pdict, heap, spec, oe, os_, ol, ok, oc)
        lc = rc[0]
        if lc != 1:
            inv = 1 / lc
            rc = [c * inv for c in rc]
        final.append((rk, rc))
    final.sort(key=lambda kc: kc[0][0])
    if stats is not None:
        stats.update(
            reductions=n_reductions,
            zero_reductions=n_zero,
            basis_size=len(final),
            truncated=max_weighted_degree is not None,
        )
    return tuple(_lists_to_poly(k, c, spec) for k, c in final)


def spolynomial(f: Poly, g: Poly, order: MonomialOrder = GREVLEX) -> Poly:
    """S-polynomial of two polynomials (for the property suites)."""
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = f.ring.monomial(tuple(a - b for a, b in zip(lcm, ef)), 1 / cf)
    mg = g.ring.monomial(tuple(a - b for a, b in zip(lcm, eg)), 1 / cg)
    return mf * f - mg * g


def normal_form(p: Poly, basis, order: MonomialOrder = GREVLEX) -> Poly:
    """Unique remainder of p modulo a reduced Groebner basis."""
    if isinstance(basis, Ideal):
        basis = basis.groebner_basis(order)
    basis = [b for b in basis if not b.is_zero()]
    if p.is_zero() or not basis:
        return p
    spec = _make_spec(p.ring, order)
    red = sorted(
        (_poly_to_lists(b, spec) for b in basis),
        key=lambda kc: (spec.sdeg_of_key(kc[0][0]), kc[0][0]),
    )
    red_eps, red_sdegs, red_lts, red_keys, red_coeffs = [], [], [], [], []
    for keys, coeffs in red:
        lc = coeffs[0]
        if lc != 1:
            inv = 1 / lc
            coeffs = [c * inv for c in coeffs]
        red_keys.append(keys)
        red_coeffs.append(coeffs)
        red_lts.append(keys[0])
        red_eps.append(spec.epack_of_key(keys[0]))
        red_sdegs.append(spec.sdeg_of_key(keys[0]))
    keys, coeffs = _poly_to_lists(p, spec)
    pdict = dict(zip(keys, coeffs))
    heap = [-k for k in keys]
    heapq.heapify(heap)
    rk, rc = _nf_dict(pdict, heap, spec, red_eps, red_sdegs, red_lts, red_keys, red_coeffs)
    return _lists_to_poly(rk, rc, spec, p.ring)


# -- basis cache ---------------------------------------------------------

_CACHE_FORMAT = "fermatpow-gb 1"


class GroebnerCache:
    """Memory plus optional on-disk cache of reduced bases."""

    def __init__(self, directory: str | None = None):
        self.directory = directory
        self.memory: dict[str, tuple] = {}

    def key_for(self, ring: PolyRing, order: MonomialOrder, gens) -> str:
        h = hashlib.sha256()
        h.update(_CACHE_FORMAT.encode())
        h.update(repr(ring.field).encode())
        h.update(",".join(ring.variables).encode())
        h.update(order.name.encode())
        for text in sorted(render_poly(g) for g in gens):
            h.update(b"\n")
            h.update(text.encode())
        return h.hexdigest()

    def lookup(self, key: str, ring: PolyRing, order: MonomialOrder):
        basis = self.memory.get(key)
        if basis is not None:
            return basis
        if not self.directory:
            return None
        path = os.path.join(self.directory, key + ".gb")
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
            if not lines or lines[0] != _CACHE_FORMAT:
                return None
            header = {}
            idx = 1
            while idx < len(lines) and ":" in lines[idx]:
                name, _, value = lines[idx].partition(":")
                header[name.strip()] = value.strip()
                idx += 1
                if name.strip() == "count":
                    break
            if header.get("vars") != ",".join(ring.variables):
                return None
            if header.get("order") != order.name:
                return None
            count = int(header.get("count", "0"))
            polys = tuple(parse_poly(line, ring) for line in lines[idx : idx + count])
            if len(polys) != count:
                return None
        except (OSError, ValueError):
            return None
        self.memory[key] = polys
        return polys

    def store(self, key: str, ring: PolyRing, order: MonomialOrder, basis) -> None:
        self.memory[key] = tuple(basis)
        if not self.directory:
            return
        os.makedirs(self.directory, exist_ok=True)
        path = os.path.join(self.directory, key + ".gb")
        body = [_CACHE_FORMAT]
        body.append(f"vars: {','.join(ring.variables)}")
        body.append(f"field: {ring.field!r}")
        body.append(f"order: {order.name}")
        body.append(f"gens-hash: {key}")
        body.append(f"count: {len(basis)}")
        body.extend(render_poly(g) for g in basis)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write("\n".join(body) + "\n")
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass


def _default_cache_dir() -> str | None:
    env = os.environ.get("FERMAT_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "fermatpow")


_cache = GroebnerCache(_default_cache_dir())


def get_cache() -> GroebnerCache:
    env = os.environ.get("FERMAT_CACHE_DIR")
    if env and _cache.directory != env:
        _cache.directory = env
        _cache.memory.clear()
    return _cache


def set_cache_dir(directory: str | None) -> None:
    _cache.directory = directory
    _cache.memory.clear()


# -- ideals ---------------------------------------------------------------


class Ideal:
    """Homogeneous ideal: generator list plus cached reduced bases."""

    __slots__ = ("ring", "generators", "_bases")

    def __init__(self, ring: PolyRing, generators):
        generators = tuple(generators)
        if not generators:
            raise ValueError("an ideal needs at least one generator")
        for g in generators:
            if not isinstance(g, Poly) or g.ring != ring:
                raise RingMismatch("generator outside the ambient ring")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError("non-homogeneous generator")
        self.ring = ring
        self.generators = generators
        self._bases: dict[MonomialOrder, tuple] = {}

    def groebner_basis(
        self, order: MonomialOrder = GREVLEX, *, deadline: float | None = None
    ) -> tuple:
        basis = self._bases.get(order)
        if basis is not None:
            return basis
        cache = get_cache()
        key = cache.key_for(self.ring, order, self.generators)
        basis = cache.lookup(key, self.ring, order)
        if basis is None:
            basis = buchberger(self.generators, order, deadline=deadline)
            cache.store(key, self.ring, order, basis)
        self._bases[order] = basis
        return basis

    def seed_basis(self, order: MonomialOrder, basis) -> None:
        self._bases[order] = tuple(basis)

    def min_degree(self, *, deadline: float | None = None) -> int:
        """Least degree of a nonzero element (alpha)."""
        basis = self.groebner_basis(GREVLEX, deadline=deadline)
        return min(g.homogeneous_degree() for g in basis)

    def max_basis_degree(self) -> int:
        basis = self.groebner_basis(GREVLEX)
        return max(g.homogeneous_degree() for g in basis)

    def leading_exponents(self, order: MonomialOrder = GREVLEX):
        basis = self.groebner_basis(order)
        return minimalize_monomials([g.leading_term(order)[0] for g in basis])

    def contains(self, p: Poly, order: MonomialOrder = GREVLEX) -> bool:
        return normal_form(p, self.groebner_basis(order), order).is_zero()

    def is_monomial_ideal(self) -> bool:
        return all(len(g.terms) == 1 for g in self.generators)

    def __repr__(self):
        inner = ", ".join(render_poly(g) for g in self.generators[:4])
        if len(self.generators) > 4:
            inner += f", ... {len(self.generators)} generators"
        return f"Ideal({inner})"


def minimalize_monomials(exps_list):
    """Minimal generators among the given monomials (componentwise order)."""
    exps_list = sorted(set(exps_list), key=lambda e: (sum(e), e))
    out = []
    for e in exps_list:
        if not any(all(a >= b for a, b in zip(e, m)) for m in out):
            out.append(e)
    return out


def _dedupe(polys):
    seen = set()
    out = []
    for p in polys:
        lt = p.leading_term(GREVLEX)[1]
        canon = p * (1 / lt) if lt != 1 else p
        key = render_poly(canon)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    if i.ring != j.ring:
        raise RingMismatch("ideal sum across rings")
    return Ideal(i.ring, _dedupe(list(i.generators) + list(j.generators)))


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    if i.ring != j.ring:
        raise RingMismatch("ideal product across rings")
    return Ideal(i.ring, _dedupe([a * b for a in i.generators for b in j.generators]))


def ideal_power(i: Ideal, k: int) -> Ideal:
    if k < 1:
        raise ValueError("ideal_power requires k >= 1 (unit ideal out of scope)")
    gens = []
    for combo in combinations_with_replacement(i.generators, k):
        p = i.ring.one
        for q in combo:
            p = p * q
        gens.append(p)
    return Ideal(i.ring, _dedupe(gens))


def _free_variable(ring: PolyRing) -> str:
    for name in ("w", "u", "v", "t0"):
        if name not in ring.variables:
            return name
    raise ValueError("no free auxiliary variable name")


def ideal_intersect(
    i: Ideal, j: Ideal, *, deadline: float | None = None
) -> Ideal:
    """I intersect J.

    Monomial ideals intersect termwise (pairwise lcms); otherwise adjoin an
    auxiliary variable w, form w*I + (1-w)*J, and eliminate w with a block
    order.  The w-free part of the reduced elimination basis is the reduced
    grevlex basis of the intersection and is seeded into the result.
    """
    if i.ring != j.ring:
        raise RingMismatch("ideal intersection across rings")
    ring = i.ring
    if i.is_monomial_ideal() and j.is_monomial_ideal():
        lcms = []
        for a in i.generators:
            ea = next(iter(a.terms))
            for b in j.generators:
                eb = next(iter(b.terms))
                lcms.append(tuple(max(x, y) for x, y in zip(ea, eb)))
        gens = [ring.monomial(e) for e in minimalize_monomials(lcms)]
        out = Ideal(ring, gens)
        out.seed_basis(GREVLEX, sorted(gens, key=lambda p: GREVLEX.key(next(iter(p.terms)))))
        return out

    aux = _free_variable(ring)
    ering = PolyRing((aux,) + ring.variables, ring.field)
    w = ering.var(aux)
    one = ering.one

    def lift(p: Poly) -> Poly:
        return Poly(ering, {(0,) + e: c for e, c in p.terms.items()})

    big = [w * lift(p) for p in i.generators]
    big += [(one - w) * lift(q) for q in j.generators]
    order = elimination_order(1)

    cache = get_cache()
    key = cache.key_for(ering, order, big)
    basis = cache.lookup(key, ering, order)
    if basis is None:
        basis = buchberger(big, order, deadline=deadline)
        cache.store(key, ering, order, basis)

    kept = []
    for g in basis:
        if all(e[0] == 0 for e in g.terms):
            kept.append(Poly(ring, {e[1:]: c for e, c in g.terms.items()}))
    kept.sort(key=lambda p: GREVLEX.key(p.leading_term(GREVLEX)[0]))
    out = Ideal(ring, kept)
    out.seed_basis(GREVLEX, kept)
    return out


def ideal_equal(i: Ideal, j: Ideal) -> bool:
    if i.ring != j.ring:
        raise RingMismatch("ideal comparison across rings")
    return i.groebner_basis(GREVLEX) == j.groebner_basis(GREVLEX)


def hilbert_dim(ideal: Ideal, t: int) -> int:
    """Dimension of the degree-t graded piece of the ideal: the number of
    degree-t monomials inside the leading-term ideal."""
    if t < 0:
        return 0
    lts = ideal.leading_exponents(GREVLEX)
    count = 0
    for e in monomials_of_degree(ideal.ring.nvars, t):
        for m in lts:
            if all(a >= b for a, b in zip(e, m)):
                count += 1
                break
    return count


def monomial_ideal_dimension(monomials) -> int:
    """Krull dimension of the quotient by the given monomial ideal, by the
    maximal-independent-variable-subset criterion."""
    monomials = list(monomials)
    if not monomials:
        raise ValueError("empty monomial list")
    nv = len(monomials[0])
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monomials]
    if frozenset() in supports:
        raise ValueError("unit monomial in ideal")
    for size in range(nv, 0, -1):
        for subset in combinations(range(nv), size):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                return size
    return 0
