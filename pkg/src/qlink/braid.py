"""Braid words as graded operators and the modified trace.

A braid generator acts by the normalized R-matrix on two adjacent
tensor legs; the closure invariant is the modified trace: contract
against the pivotal diagonal on every strand except the cut one, take
the trace, divide by dim.  Since the cut-strand partial trace is a
scalar on the (symbolically irreducible) module, the engine computes
the single (v0, v0) entry of it: the sum runs over basis states whose
cut digit is the highest weight vector, which avoids the division and
an 8x factor of work.  A literal full-trace reference implementation
is kept for cross-checking.

Hot-path polynomials use a packed integer representation: a term
c * i^z * t1^e1 * t2^e2 (c an integer, z in {0,1}) is a dict entry
key -> c with key = (e1+OFF) << 24 | (e2+OFF) << 2 | z.  Every entry
of R_t and of the pivotal diagonal is integral, so no denominators
appear anywhere in a braid evaluation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .laurent import LaurentPoly
from .reps import RepData
from .rmatrix import TensorOperator, build_rt
from .scalars import GaussianRational

_OFF = 1 << 20
_E1_SHIFT = 24
_E2_SHIFT = 2
_BIAS = (_OFF << _E1_SHIFT) | (_OFF << _E2_SHIFT)
_Z_MASK = 3

PackedPoly = Dict[int, int]


class BraidSyntaxError(ValueError):
    pass


class EngineError(RuntimeError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """Signed generator word: letter k (0 < |k| < strands) is sigma_|k|^sign(k)."""

    strands: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise BraidSyntaxError("strand count must be at least 1")
        for k in self.letters:
            if k == 0:
                raise BraidSyntaxError("zero is not a braid letter")
            if abs(k) >= self.strands:
                raise BraidSyntaxError(
                    f"letter {k} out of range for {self.strands} strands"
                )

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def writhe(self) -> int:
        return sum(1 if k > 0 else -1 for k in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Whitespace-separated signed integers."""
    letters = []
    for tok in text.split():
        try:
            letters.append(int(tok))
        except ValueError as exc:
            raise BraidSyntaxError(f"bad braid letter {tok!r}") from exc
    return BraidWord(strands, tuple(letters))


def components(b: BraidWord) -> int:
    """Number of components of the braid closure."""
    perm = list(range(b.strands))
    for k in b.letters:
        i = abs(k) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = [False] * b.strands
    count = 0
    for s in range(b.strands):
        if seen[s]:
            continue
        count += 1
        j = s
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return count


# -- packed polynomial helpers ------------------------------------------------


def pack_poly(p: LaurentPoly) -> PackedPoly:
    out: PackedPoly = {}
    for (e1, e2), c in p.terms.items():
        base = ((e1 + _OFF) << _E1_SHIFT) | ((e2 + _OFF) << _E2_SHIFT)
        if c.re:
            if c.re.denominator != 1:
                raise EngineError("non-integral coefficient in engine polynomial")
            out[base] = out.get(base, 0) + c.re.numerator
        if c.im:
            if c.im.denominator != 1:
                raise EngineError("non-integral coefficient in engine polynomial")
            out[base | 1] = out.get(base | 1, 0) + c.im.numerator
    return {k: v for k, v in out.items() if v}


def unpack_poly(p: PackedPoly) -> LaurentPoly:
    terms: Dict[Tuple[int, int], GaussianRational] = {}
    for key, c in p.items():
        z = key & _Z_MASK
        e2 = ((key >> _E2_SHIFT) & ((1 << 22) - 1)) - _OFF
        e1 = (key >> _E1_SHIFT) - _OFF
        prev = terms.get((e1, e2), GaussianRational(0))
        terms[(e1, e2)] = prev + (GaussianRational(0, c) if z else GaussianRational(c))
    return LaurentPoly(terms)


def pp_mul(a: PackedPoly, b: PackedPoly) -> PackedPoly:
    if len(a) > len(b):
        a, b = b, a
    out: PackedPoly = {}
    get = out.get
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb - _BIAS
            v = va * vb
            if k & 2:  # i^2 = -1
                k -= 2
                v = -v
            s = get(k)
            if s is None:
                out[k] = v
            else:
                s += v
                if s:
                    out[k] = s
                else:
                    del out[k]
                    get = out.get
    return out


def pp_acc(dst: PackedPoly, src: PackedPoly, scale: int = 1) -> None:
    for k, v in src.items():
        s = dst.get(k)
        sv = v * scale
        if s is None:
            dst[k] = sv
        else:
            s += sv
            if s:
                dst[k] = s
            else:
                del dst[k]


# -- per-representation engine -------------------------------------------------


class _RepEngine:
    """Crossing tables and pivot weights in packed form."""

    def __init__(self, rep: RepData):
        self.rep = rep
        self.dim = rep.dim
        pair = build_rt(rep)
        self.tables = {
            1: _local_table(pair.r, rep.dim),
            -1: _local_table(pair.r_inv, rep.dim),
        }
        self.pivot = [pack_poly(p) for p in rep.pivot]
        self._power_cache: Dict[Tuple[int, int], Dict] = {}

    def table_power(self, sign: int, count: int):
        """Local table for R^(sign*count); collapses runs of equal letters."""
        if count == 1:
            return self.tables[sign]
        key = (sign, count)
        cached = self._power_cache.get(key)
        if cached is None:
            prev = self.table_power(sign, count - 1)
            cached = _compose_local(self.tables[sign], prev, self.dim)
            self._power_cache[key] = cached
        return cached


def _local_table(op: TensorOperator, dim: int):
    table: Dict[int, List[Tuple[int, int, PackedPoly]]] = {}
    for (a, b), col in op.cols.items():
        entries = []
        for (c, d), poly in col.items():
            entries.append((c, d, pack_poly(poly)))
        table[a * dim + b] = entries
    return table


def _compose_local(upper, lower, dim: int):
    """upper o lower for local 2-leg tables."""
    out: Dict[int, List[Tuple[int, int, PackedPoly]]] = {}
    for colkey, entries in lower.items():
        acc: Dict[int, PackedPoly] = {}
        for (c, d, poly) in entries:
            up = upper.get(c * dim + d)
            if not up:
                continue
            for (e, f, poly2) in up:
                k = e * dim + f
                cell = acc.get(k)
                prod = pp_mul(poly, poly2)
                if cell is None:
                    acc[k] = prod
                else:
                    pp_acc(cell, prod)
        out[colkey] = [
            (k // dim, k % dim, poly) for k, poly in acc.items() if poly
        ]
    return out


_ENGINES: Dict[int, _RepEngine] = {}


def _engine(rep: RepData) -> _RepEngine:
    eng = _ENGINES.get(id(rep))
    if eng is None:
        eng = _RepEngine(rep)
        _ENGINES[id(rep)] = eng
    return eng


def _run_length_letters(letters: Sequence[int]) -> Iterable[Tuple[int, int]]:
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        yield letters[i], j - i
        i = j


def _contract(rep: RepData, b: BraidWord, cut: int, pinned: bool) -> LaurentPoly:
    """(v0, v0) entry of the cut-strand partial trace (pinned=True) or the
    full modified trace including the 1/dim normalization (pinned=False)."""
    if not 1 <= cut <= b.strands:
        raise ValueError(f"cut strand {cut} out of range")
    eng = _engine(rep)
    dim, n = eng.dim, b.strands
    cut_pos = cut - 1
    strides = [dim**j for j in range(n)]

    cols: List[int] = []
    for state in range(dim**n):
        if pinned and (state // strides[cut_pos]) % dim != 0:
            continue
        cols.append(state)

    slab: Dict[int, Dict[int, PackedPoly]] = {c: {c: {_BIAS: 1}} for c in cols}

    for letter, count in _run_length_letters(b.letters):
        pos = abs(letter) - 1
        sign = 1 if letter > 0 else -1
        table = eng.table_power(sign, count)
        s_a, s_b = strides[pos], strides[pos + 1]
        for c, rows in slab.items():
            acc: Dict[int, PackedPoly] = {}
            for state, poly in rows.items():
                a = (state // s_a) % dim
                bb = (state // s_b) % dim
                for (r1, r2, rpoly) in table[a * dim + bb]:
                    ns = state + (r1 - a) * s_a + (r2 - bb) * s_b
                    cell = acc.get(ns)
                    prod = pp_mul(poly, rpoly)
                    if cell is None:
                        acc[ns] = prod
                    else:
                        pp_acc(cell, prod)
            slab[c] = {k: v for k, v in acc.items() if v}

    total: PackedPoly = {}
    for c in cols:
        diag = slab[c].get(c)
        if not diag:
            continue
        weight = {_BIAS: 1}
        for j in range(n):
            if j == cut_pos:
                continue
            weight = pp_mul(weight, eng.pivot[(c // strides[j]) % dim])
        pp_acc(total, pp_mul(weight, diag))
    result = unpack_poly(total)
    if not pinned:
        inv_dim = GaussianRational(1) / GaussianRational(dim)
        result = result.scalar_mul(inv_dim)
    return result


def modified_trace(rep: RepData, b: BraidWord, cut: int = 1) -> LaurentPoly:
    """(1/dim) tr((h on all strands but `cut`) psi_n(b))."""
    return _contract(rep, b, cut, pinned=True)


def modified_trace_reference(rep: RepData, b: BraidWord, cut: int = 1) -> LaurentPoly:
    """Literal full-trace formula; slower, used as a cross-check."""
    return _contract(rep, b, cut, pinned=False)


def invariant(rep: RepData, b: BraidWord) -> LaurentPoly:
    """Unframed link invariant of the braid closure.

    For knot inputs every coefficient must be a real integer; a failure
    signals an engine bug, not bad input.
    """
    value = modified_trace(rep, b, cut=1)
    if components(b) == 1 and not value.has_integer_real_coeffs():
        raise EngineError(
            f"knot invariant has non-integral coefficients: {value}"
        )
    return value


# -- graded operator interface -------------------------------------------------


class GradedOperator:
    """Block-sparse operator on rep^(x n), blocks keyed by total drop."""

    __slots__ = ("rep", "strands", "blocks")

    def __init__(self, rep: RepData, strands: int,
                 blocks: Dict[Tuple[int, int], Dict[Tuple[int, int], LaurentPoly]]):
        self.rep = rep
        self.strands = strands
        self.blocks = blocks

    def total_drop(self, state: int) -> Tuple[int, int]:
        d1 = d2 = 0
        for _ in range(self.strands):
            m = self.rep.drop[state % self.rep.dim]
            d1 += m[0]
            d2 += m[1]
            state //= self.rep.dim
        return (d1, d2)

    def entry(self, row: int, col: int) -> LaurentPoly:
        block = self.blocks.get(self.total_drop(col))
        if not block:
            return LaurentPoly.zero()
        return block.get((row, col), LaurentPoly.zero())

    def compose(self, other: "GradedOperator") -> "GradedOperator":
        out: Dict[Tuple[int, int], Dict[Tuple[int, int], LaurentPoly]] = {}
        for tdrop, block in other.blocks.items():
            mine = self.blocks.get(tdrop)
            if not mine:
                continue
            by_col: Dict[int, List[Tuple[int, LaurentPoly]]] = {}
            for (r, c), v in block.items():
                by_col.setdefault(c, []).append((r, v))
            mine_by_col: Dict[int, List[Tuple[int, LaurentPoly]]] = {}
            for (r, c), v in mine.items():
                mine_by_col.setdefault(c, []).append((r, v))
            acc: Dict[Tuple[int, int], LaurentPoly] = {}
            for c, pairs in by_col.items():
                for (k, bv) in pairs:
                    for (r, av) in mine_by_col.get(k, ()):
                        key = (r, c)
                        s = acc.get(key)
                        p = av * bv
                        if s is None:
                            if not p.is_zero():
                                acc[key] = p
                        else:
                            s = s + p
                            if s.is_zero():
                                del acc[key]
                            else:
                                acc[key] = s
            if acc:
                out[tdrop] = acc
        return GradedOperator(self.rep, self.strands, out)

    def equals(self, other: "GradedOperator") -> bool:
        keys = set(self.blocks) | set(other.blocks)
        for k in keys:
            a = self.blocks.get(k, {})
            b = other.blocks.get(k, {})
            if set(a) != set(b):
                return False
            if any(a[kk] != b[kk] for kk in a):
                return False
        return True


def identity_operator(rep: RepData, n: int) -> GradedOperator:
    op = GradedOperator(rep, n, {})
    one = LaurentPoly.one()
    for state in range(rep.dim**n):
        td = op.total_drop(state)
        op.blocks.setdefault(td, {})[(state, state)] = one
    return op


def crossing_operator(rep: RepData, n: int, i: int, sign: int) -> GradedOperator:
    """R_t^(sign) on strands (i, i+1), identity elsewhere."""
    if not 1 <= i < n:
        raise ValueError(f"crossing position {i} out of range for {n} strands")
    eng = _engine(rep)
    dim = rep.dim
    table = eng.tables[1 if sign > 0 else -1]
    s_a, s_b = dim ** (i - 1), dim**i
    op = GradedOperator(rep, n, {})
    for state in range(dim**n):
        a = (state // s_a) % dim
        bb = (state // s_b) % dim
        td = op.total_drop(state)
        block = op.blocks.setdefault(td, {})
        for (r1, r2, rpoly) in table[a * dim + bb]:
            ns = state + (r1 - a) * s_a + (r2 - bb) * s_b
            prev = block.get((ns, state))
            val = unpack_poly(rpoly)
            block[(ns, state)] = val if prev is None else prev + val
    return op


def braid_operator(rep: RepData, b: BraidWord) -> GradedOperator:
    """Ordered product of crossing operators (for small inputs; the
    invariant itself uses the streaming contraction)."""
    out = identity_operator(rep, b.strands)
    for k in b.letters:
        out = crossing_operator(rep, b.strands, abs(k), 1 if k > 0 else -1).compose(out)
    return out


def graded_trace(op: GradedOperator, cut: int = 1) -> LaurentPoly:
    """Modified trace of a materialized operator (cross-check path)."""
    rep = op.rep
    dim = rep.dim
    total = LaurentPoly.zero()
    for block in op.blocks.values():
        for (r, c), v in block.items():
            if r != c:
                continue
            state = c
            weight = LaurentPoly.one()
            for j in range(op.strands):
                digit = (state // dim**j) % dim
                if j != cut - 1:
                    weight = weight * rep.pivot[digit]
            total = total + weight * v
    return total.scalar_mul(GaussianRational(1) / GaussianRational(dim))


# -- Markov move suite -----------------------------------------------------------


@dataclass
class MarkovReport:
    failures: List[str]

    @property
    def ok(self):
        return not self.failures


def markov_suite(rep: RepData, b: BraidWord, trials: int = 5, seed: int = 7) -> MarkovReport:
    """Invariance under conjugation and positive/negative stabilization."""
    rng = random.Random(seed)
    base = invariant(rep, b)
    failures = []
    for trial in range(trials):
        length = rng.randint(1, 2)
        if b.strands >= 2:
            conj = [rng.choice([1, -1]) * rng.randint(1, b.strands - 1) for _ in range(length)]
        else:
            conj = []
        word = tuple(conj) + b.letters + tuple(-k for k in reversed(conj))
        got = invariant(rep, BraidWord(b.strands, word))
        if got != base:
            failures.append(f"conjugation trial {trial} by {conj}")
        sign = 1 if trial % 2 == 0 else -1
        stab = BraidWord(b.strands + 1, b.letters + (sign * b.strands,))
        got = invariant(rep, stab)
        if got != base:
            failures.append(f"stabilization trial {trial} sign {sign}")
    return MarkovReport(failures)
