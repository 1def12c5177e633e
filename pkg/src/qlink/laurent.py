"""Sparse bivariate Laurent polynomials over Gaussian rationals.

Terms are stored as a mapping (e1, e2) -> coefficient with zero
coefficients dropped, so equal polynomials compare equal as dicts.
Single-variable polynomials (Burau, sl2, head representations) embed
with e2 = 0.  Exponents are kept inside a checked bound; braid
evaluations never approach it, so hitting the bound signals a bug.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .scalars import (
    GaussianRational,
    MINUS_ZETA,
    ONE as S_ONE,
    ZETA,
    format_coefficient,
    parse_coefficient,
)

EXPONENT_BOUND = 1_000_000

Exponents = Tuple[int, int]


class ExponentOverflow(ArithmeticError):
    pass


def _check_exp(e1: int, e2: int) -> None:
    if abs(e1) > EXPONENT_BOUND or abs(e2) > EXPONENT_BOUND:
        raise ExponentOverflow(f"exponent pair ({e1}, {e2}) out of range")


class LaurentPoly:
    """Immutable sparse Laurent polynomial in t1, t2."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Exponents, GaussianRational] | None = None):
        clean = {}
        if terms:
            for (e1, e2), c in terms.items():
                if not isinstance(c, GaussianRational):
                    c = GaussianRational(c)
                if not c.is_zero():
                    _check_exp(e1, e2)
                    clean[(int(e1), int(e2))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({(0, 0): c if isinstance(c, GaussianRational) else GaussianRational(c)})

    @staticmethod
    def monomial(e1: int, e2: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({(e1, e2): coeff if isinstance(coeff, GaussianRational) else GaussianRational(coeff)})

    @staticmethod
    def var(i: int) -> "LaurentPoly":
        if i == 1:
            return LaurentPoly({(1, 0): S_ONE})
        if i == 2:
            return LaurentPoly({(0, 1): S_ONE})
        raise ValueError("variable index must be 1 or 2")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): S_ONE}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit_monomial(self) -> bool:
        """Single term whose coefficient is 1, -1, i or -i."""
        if len(self.terms) != 1:
            return False
        ((_, c),) = self.terms.items()
        return c.is_unit()

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def has_integer_real_coeffs(self) -> bool:
        return all(c.is_integer() for c in self.terms.values())

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scalar_mul(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return _ZERO
        out: Dict[Exponents, GaussianRational] = {}
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                k = (a1 + b1, a2 + b2)
                p = c * d
                s = out.get(k)
                if s is None:
                    out[k] = p
                else:
                    s = s + p
                    if s.is_zero():
                        del out[k]
                    else:
                        out[k] = s
        for e1, e2 in out:
            _check_exp(e1, e2)
        return _raw(out)

    __rmul__ = __mul__

    def scalar_mul(self, c) -> "LaurentPoly":
        if not isinstance(c, GaussianRational):
            c = GaussianRational(c)
        if c.is_zero():
            return _ZERO
        return _raw({k: v * c for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.monomial_inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def monomial_inverse(self) -> "LaurentPoly":
        """Inverse of an invertible (single-term, unit-coefficient) monomial."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible in the Laurent ring")
        ((e1, e2), c) = next(iter(self.terms.items()))
        return LaurentPoly({(-e1, -e2): c.inverse()})

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor; raises ValueError if not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_monomial():
            ((e1, e2), c) = next(iter(divisor.terms.items()))
            inv = c.inverse()
            return _raw({(a1 - e1, a2 - e2): v * inv for (a1, a2), v in self.terms.items()})
        rem = dict(self.terms)
        lead = max(divisor.terms)
        lead_c = divisor.terms[lead]
        quot: Dict[Exponents, GaussianRational] = {}
        while rem:
            k = max(rem)
            q = rem[k] / lead_c
            ek = (k[0] - lead[0], k[1] - lead[1])
            quot[ek] = q
            for (b1, b2), d in divisor.terms.items():
                kk = (ek[0] + b1, ek[1] + b2)
                s = rem.get(kk, _SZERO) - q * d
                if s.is_zero():
                    rem.pop(kk, None)
                else:
                    rem[kk] = s
            if len(quot) > 4 * (len(self.terms) + len(divisor.terms) + 4) ** 2:
                raise ValueError("polynomial division does not terminate: not divisible")
        return _raw(quot)

    # -- queries ---------------------------------------------------------

    def coefficient(self, e1: int, e2: int) -> GaussianRational:
        return self.terms.get((e1, e2), _SZERO)

    def degrees(self) -> Tuple[int, int, int, int]:
        """(min e1, max e1, min e2, max e2); zero polynomial gives zeros."""
        if not self.terms:
            return (0, 0, 0, 0)
        e1s = [k[0] for k in self.terms]
        e2s = [k[1] for k in self.terms]
        return (min(e1s), max(e1s), min(e2s), max(e2s))

    def evaluate(self, v1: GaussianRational, v2: GaussianRational) -> GaussianRational:
        out = GaussianRational(0)
        for (e1, e2), c in self.terms.items():
            out = out + c * v1**e1 * v2**e2
        return out

    def swap_vars(self) -> "LaurentPoly":
        return _raw({(e2, e1): c for (e1, e2), c in self.terms.items()})

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"LaurentPoly({emit_canonical(self)!r})"

    def __str__(self):
        return emit_canonical(self)


_ZERO = LaurentPoly()
_ONE = LaurentPoly({(0, 0): S_ONE})
_SZERO = GaussianRational(0)


def _raw(terms: Dict[Exponents, GaussianRational]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(p, "terms", terms)
    return p


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return LaurentPoly.const(x)
    return NotImplemented


T1 = LaurentPoly.var(1)
T2 = LaurentPoly.var(2)


# -- quantum bracket ------------------------------------------------------


def bracket(x: LaurentPoly) -> LaurentPoly:
    """(x - x^-1) / (i - i^-1) for an invertible monomial x.

    The denominator is 2i, so this is (x - x^-1) * (-i/2).
    """
    if not isinstance(x, LaurentPoly):
        x = _coerce(x)
    if not x.is_unit_monomial():
        raise ValueError("bracket requires an invertible unit monomial")
    return (x - x.monomial_inverse()).scalar_mul(GaussianRational(0, Fraction(-1, 2)))


# -- monomial substitutions ------------------------------------------------


class MonomialSubstitution:
    """Ring endomorphism t_i -> gamma_i * t1^a_i * t2^b_i with unit gamma_i."""

    __slots__ = ("images",)

    def __init__(self, image1, image2):
        for gamma, _, _ in (image1, image2):
            if not gamma.is_unit():
                raise ValueError("substitution coefficient must be a fourth root of unity")
        object.__setattr__(self, "images", (image1, image2))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialSubstitution is immutable")

    def apply(self, p: LaurentPoly) -> LaurentPoly:
        (g1, a1, b1), (g2, a2, b2) = self.images
        out: Dict[Exponents, GaussianRational] = {}
        for (e1, e2), c in p.terms.items():
            k = (a1 * e1 + a2 * e2, b1 * e1 + b2 * e2)
            _check_exp(*k)
            v = c * g1**e1 * g2**e2
            s = out.get(k)
            if s is None:
                if not v.is_zero():
                    out[k] = v
            else:
                s = s + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return _raw(out)


def substitute(p: LaurentPoly, s: MonomialSubstitution) -> LaurentPoly:
    return s.apply(p)


_ID1 = (S_ONE, 1, 0)
_ID2 = (S_ONE, 0, 1)

SUBST_T2_ONE = MonomialSubstitution(_ID1, (S_ONE, 0, 0))
SUBST_T2_MINUS_ONE = MonomialSubstitution(_ID1, (GaussianRational(-1), 0, 0))
SUBST_T1_ONE = MonomialSubstitution((S_ONE, 0, 0), _ID2)
SUBST_T1_MINUS_ONE = MonomialSubstitution((GaussianRational(-1), 0, 0), _ID2)
SUBST_T2_ZETA_T1INV = MonomialSubstitution(_ID1, (ZETA, -1, 0))
SUBST_T2_MINUS_ZETA_T1INV = MonomialSubstitution(_ID1, (MINUS_ZETA, -1, 0))
SUBST_INVERSION = MonomialSubstitution(
    (GaussianRational(-1), -1, 0), (GaussianRational(-1), 0, -1)
)
SUBST_SWAP = MonomialSubstitution((S_ONE, 0, 1), (S_ONE, 1, 0))

PLUGIN_SUBSTITUTIONS = {
    "t2->1": SUBST_T2_ONE,
    "t2->-1": SUBST_T2_MINUS_ONE,
    "t1->1": SUBST_T1_ONE,
    "t1->-1": SUBST_T1_MINUS_ONE,
    "t2->i*t1^-1": SUBST_T2_ZETA_T1INV,
    "t2->-i*t1^-1": SUBST_T2_MINUS_ZETA_T1INV,
}


# -- canonical text form ----------------------------------------------------


def emit_canonical(p: LaurentPoly) -> str:
    """Deterministic text form: terms sorted descending by (e1, e2)."""
    if p.is_zero():
        return "0"
    parts = []
    for (e1, e2) in sorted(p.terms, reverse=True):
        c = p.terms[(e1, e2)]
        body = _term_body(c, e1, e2)
        if not parts:
            parts.append(body if not body.startswith("-") else body)
        else:
            if body.startswith("-"):
                parts.append(" - " + body[1:])
            else:
                parts.append(" + " + body)
    return "".join(parts)


def _term_body(c: GaussianRational, e1: int, e2: int) -> str:
    vars_part = "*".join(
        f"{name}^{e}" if e != 1 else name
        for name, e in (("t1", e1), ("t2", e2))
        if e != 0
    )
    if not vars_part:
        return format_coefficient(c)
    if c == S_ONE:
        return vars_part
    if c == GaussianRational(-1):
        return "-" + vars_part
    coeff = format_coefficient(c)
    if c.re and c.im:
        coeff = f"({coeff})"
    return f"{coeff}*{vars_part}"


def parse_canonical(text: str) -> LaurentPoly:
    """Inverse of emit_canonical."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero()
    total: Dict[Exponents, GaussianRational] = {}
    for sign, chunk in _split_terms(text):
        e1, e2, coeff = _parse_term(chunk)
        if sign < 0:
            coeff = -coeff
        k = (e1, e2)
        s = total.get(k, _SZERO) + coeff
        if s.is_zero():
            total.pop(k, None)
        else:
            total[k] = s
    return LaurentPoly(total)


def _split_terms(text: str) -> Iterable[Tuple[int, str]]:
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    depth = 0
    cur = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and i + 1 < len(text) and text[i - 1] == " " and text[i + 1] == " ":
            yield sign, "".join(cur).strip()
            sign = 1 if ch == "+" else -1
            cur = []
            i += 2
            continue
        cur.append(ch)
        i += 1
    yield sign, "".join(cur).strip()


def _parse_term(chunk: str) -> Tuple[int, int, GaussianRational]:
    e1 = e2 = 0
    coeff = S_ONE
    seen_var = False
    # peel a parenthesised mixed coefficient first
    if chunk.startswith("("):
        close = chunk.index(")")
        coeff = parse_coefficient(chunk[1:close])
        chunk = chunk[close + 1 :].lstrip("*")
    factors = chunk.split("*") if chunk else []
    i = 0
    while i < len(factors):
        f = factors[i]
        if f == "i":
            coeff = coeff * ZETA
            i += 1
            continue
        if f.startswith("t1") or f.startswith("t2"):
            var, _, exp = f.partition("^")
            e = int(exp) if exp else 1
            if var == "t1":
                e1 += e
            else:
                e2 += e
            seen_var = True
            i += 1
            continue
        coeff = coeff * parse_coefficient(f)
        i += 1
    if not factors and not seen_var:
        raise ValueError(f"cannot parse term {chunk!r}")
    return e1, e2, coeff


# -- JSON form ---------------------------------------------------------------


def to_json_dict(p: LaurentPoly) -> dict:
    terms = []
    for (e1, e2) in sorted(p.terms, reverse=True):
        c = p.terms[(e1, e2)]
        terms.append(
            {
                "e1": e1,
                "e2": e2,
                "re": _frac_text(c.re),
                "im": _frac_text(c.im),
            }
        )
    return {"terms": terms}


def from_json_dict(d: dict) -> LaurentPoly:
    terms = {}
    for t in d["terms"]:
        terms[(int(t["e1"]), int(t["e2"]))] = GaussianRational(
            Fraction(t["re"]), Fraction(t["im"])
        )
    return LaurentPoly(terms)


def _frac_text(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
