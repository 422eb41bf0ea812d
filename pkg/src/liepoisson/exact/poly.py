"""Sparse multivariate polynomials over Q.

A polynomial is a dict ``monomial -> mpq`` where a monomial is a tuple of
exponents indexed by variable *slot*, with trailing zeros trimmed so that equal
monomials are equal tuples.  Coordinate variable ``i`` lives in slot ``2*i`` and
parameter ``k`` in slot ``2*k + 1``; no registry is needed and the layout is
the same in every process.

Multivariate gcd is delegated to sympy's sparse ring implementation; everything
else is done here.
"""
from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, NamedTuple, Optional, Tuple

import gmpy2
from gmpy2 import mpq, mpz

from ..errors import MissingAssignment, ParseError

COORD = 0
PARAM = 1

Mono = Tuple[int, ...]


class VarId(NamedTuple):
    namespace: int
    index: int

    @property
    def slot(self) -> int:
        return 2 * self.index + self.namespace

    @property
    def is_param(self) -> bool:
        return self.namespace == PARAM

    def __repr__(self):
        return f"x{self.index + 1}" if self.namespace == COORD else f"t{self.index}"


def coord(i: int) -> VarId:
    return VarId(COORD, i)


def param(k: int) -> VarId:
    return VarId(PARAM, k)


def slot_var(slot: int) -> VarId:
    return VarId(slot & 1, slot >> 1)


def to_q(c) -> mpq:
    if isinstance(c, mpq):
        return c
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    if isinstance(c, (int, type(mpz(0)))):
        return mpq(c)
    if isinstance(c, str):
        return mpq(c)
    raise TypeError(f"not a rational scalar: {c!r}")


_SCALARS = (int, type(mpz(0)), type(mpq(0)), Fraction)


# -- monomial helpers ---------------------------------------------------------

def _trim(m: list) -> Mono:
    n = len(m)
    while n and m[n - 1] == 0:
        n -= 1
    return tuple(m[:n])


def mono_mul(a: Mono, b: Mono) -> Mono:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple([x + y for x, y in zip(a, b)]) + a[len(b):]


def mono_div(a: Mono, b: Mono) -> Optional[Mono]:
    if len(b) > len(a):
        return None
    out = list(a)
    for i, e in enumerate(b):
        r = out[i] - e
        if r < 0:
            return None
        out[i] = r
    return _trim(out)


def mono_key(m: Mono):
    """Graded lexicographic sort key (larger key = larger monomial)."""
    return (sum(m), m)


def mono_slot_var(m: Mono, slot: int) -> int:
    return m[slot] if slot < len(m) else 0


# -- the polynomial type ------------------------------------------------------

class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[Mono, mpq]] = None):
        # trusted constructor: terms must already be canonical
        self._terms = terms if terms is not None else {}
        self._hash = None

    # construction
    @classmethod
    def from_dict(cls, d: Mapping) -> "Poly":
        out: Dict[Mono, mpq] = {}
        for m, c in d.items():
            c = to_q(c)
            if c:
                m = _trim(list(m))
                nc = out.get(m, 0) + c
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return cls(out)

    @classmethod
    def const(cls, c) -> "Poly":
        c = to_q(c)
        return cls({(): c} if c else {})

    @classmethod
    def var(cls, v: VarId) -> "Poly":
        m = [0] * (v.slot + 1)
        m[v.slot] = 1
        return cls({tuple(m): mpq(1)})

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, VarId):
            return cls.var(x)
        return cls.const(x)

    # inspection
    @property
    def terms(self) -> Dict[Mono, mpq]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> mpq:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._terms.get((), mpq(0))

    def constant_term(self) -> mpq:
        return self._terms.get((), mpq(0))

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, v: VarId) -> int:
        s = v.slot
        return max((mono_slot_var(m, s) for m in self._terms), default=0)

    def slots(self) -> set:
        out = set()
        for m in self._terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def variables(self) -> set:
        return {slot_var(s) for s in self.slots()}

    def has_coordinates(self) -> bool:
        return any(m[i] for m in self._terms for i in range(0, len(m), 2))

    def leading_term(self) -> Tuple[Mono, mpq]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=mono_key)
        return m, self._terms[m]

    def leading_coeff(self) -> mpq:
        return self.leading_term()[1]

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: mono_key(mc[0]), reverse=True)

    # equality / hashing
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, _SCALARS):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic
    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, _SCALARS):
                other = Poly.const(other)
            else:
                return NotImplemented
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            nc = out.get(m)
            if nc is None:
                out[m] = c
            else:
                nc = nc + c
                if nc:
                    out[m] = nc
                else:
                    del out[m]
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, _SCALARS):
                other = Poly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            nc = out.get(m)
            if nc is None:
                out[m] = -c
            else:
                nc = nc - c
                if nc:
                    out[m] = nc
                else:
                    del out[m]
        return Poly(out)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = to_q(c)
        if not c:
            return Poly()
        if c == 1:
            return self
        return Poly({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if not mb:
                return Poly({m: c * cb for m, c in a.items()})
            return Poly({mono_mul(m, mb): c * cb for m, c in a.items()})
        out: Dict[Mono, mpq] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Poly({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def diff(self, v: VarId) -> "Poly":
        s = v.slot
        out = {}
        for m, c in self._terms.items():
            e = mono_slot_var(m, s)
            if e:
                nm = list(m)
                nm[s] = e - 1
                out[_trim(nm)] = c * e
        return Poly(out)

    def evaluate(self, assignment: Mapping[VarId, object]) -> mpq:
        vals = {v.slot: to_q(x) for v, x in assignment.items()}
        total = mpq(0)
        for m, c in self._terms.items():
            t = c
            for s, e in enumerate(m):
                if e:
                    try:
                        t *= vals[s] ** e
                    except KeyError:
                        raise MissingAssignment(f"no value for {slot_var(s)!r}") from None
            total += t
        return total

    def subs_values(self, assignment: Mapping[VarId, object]) -> "Poly":
        """Substitute rational values for some variables."""
        vals = {v.slot: to_q(x) for v, x in assignment.items()}
        out: Dict[Mono, mpq] = {}
        for m, c in self._terms.items():
            nm = list(m)
            for s, e in enumerate(m):
                if e and s in vals:
                    c = c * vals[s] ** e
                    nm[s] = 0
            if c:
                k = _trim(nm)
                out[k] = out.get(k, 0) + c
        return Poly({k: c for k, c in out.items() if c})

    def rename_slots(self, mapping: Mapping[int, int]) -> "Poly":
        """Monomial-level variable renaming (slot -> slot); must be injective."""
        out = {}
        for m, c in self._terms.items():
            nm: Dict[int, int] = {}
            for s, e in enumerate(m):
                if e:
                    t = mapping.get(s, s)
                    nm[t] = nm.get(t, 0) + e
            lst = [0] * (max(nm) + 1) if nm else []
            for t, e in nm.items():
                lst[t] = e
            k = _trim(lst)
            out[k] = out.get(k, 0) + c
        return Poly({k: c for k, c in out.items() if c})

    # content
    def content(self) -> mpq:
        """Positive rational g with self/g having coprime integer coefficients."""
        if not self._terms:
            return mpq(0)
        num = mpz(0)
        den = mpz(1)
        for c in self._terms.values():
            num = gmpy2.gcd(num, c.numerator)
            den = gmpy2.lcm(den, c.denominator)
        return mpq(num, den)

    def primitive(self) -> "Poly":
        """Integer-coefficient primitive associate with positive leading coefficient."""
        if not self._terms:
            return self
        g = self.content()
        if self.leading_coeff() < 0:
            g = -g
        return self.scale(1 / g)

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coeff())

    # exact division
    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient; raises ValueError when ``other`` does not divide."""
        if not other._terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._terms:
            return Poly()
        b = other._terms
        if len(b) == 1:
            (mb, cb), = b.items()
            out = {}
            for m, c in self._terms.items():
                q = mono_div(m, mb)
                if q is None:
                    raise ValueError("inexact polynomial division")
                out[q] = c / cb
            return Poly(out)
        gm, gc = other.leading_term()
        rest = [(m, c) for m, c in b.items() if m != gm]
        width = max(max(len(m) for m in self._terms), len(gm))

        def key(m):
            return (-sum(m), tuple(-e for e in m) + (0,) * (width - len(m)))

        rem = dict(self._terms)
        heap = [(key(m), m) for m in rem]
        heapq.heapify(heap)
        quo: Dict[Mono, mpq] = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = rem.pop(m, None)
            if c is None:
                continue
            qm = mono_div(m, gm)
            if qm is None:
                raise ValueError("inexact polynomial division")
            qc = c / gc
            quo[qm] = qc
            for rm, rc in rest:
                mm = mono_mul(qm, rm)
                v = rem.get(mm)
                if v is None:
                    rem[mm] = -qc * rc
                    heapq.heappush(heap, (key(mm), mm))
                else:
                    v = v - qc * rc
                    if v:
                        rem[mm] = v
                    else:
                        del rem[mm]
        return Poly(quo)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exquo(self)
        except ValueError:
            return False
        return True

    # printing
    def to_str(self, namer: Optional[Callable[[VarId], str]] = None) -> str:
        return format_poly(self, namer)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


# -- gcd through sympy --------------------------------------------------------

@lru_cache(maxsize=None)
def _sympy_ring(n: int):
    from sympy import QQ
    from sympy.polys.rings import ring

    names = ",".join(f"v{i}" for i in range(n)) if n else "v0"
    return ring(names, QQ)[0]


def _to_ring(polys: Iterable[Poly]):
    polys = list(polys)
    slots = sorted(set().union(*(p.slots() for p in polys)))
    pos = {s: i for i, s in enumerate(slots)}
    R = _sympy_ring(max(len(slots), 1))
    n = R.ngens
    out = []
    for p in polys:
        d = {}
        for m, c in p.terms.items():
            e = [0] * n
            for s, x in enumerate(m):
                if x:
                    e[pos[s]] = x
            d[tuple(e)] = c
        out.append(R.from_dict(d) if d else R.zero)
    return out, slots


def _from_ring(f, slots) -> Poly:
    out = {}
    for e, c in f.items():
        lst = [0] * ((slots[-1] + 1) if slots else 0)
        for i, x in enumerate(e):
            if x:
                lst[slots[i]] = x
        out[_trim(lst)] = mpq(c)
    return Poly({k: v for k, v in out.items() if v})


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (gcd(0, 0) = 0)."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.is_constant or b.is_constant:
        return Poly.const(1)
    (fa, fb), slots = _to_ring([a, b])
    return _from_ring(fa.gcd(fb), slots).monic()


def poly_cofactors(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """(g, a/g, b/g) with g the monic gcd."""
    if a.is_zero or b.is_zero or a.is_constant or b.is_constant:
        g = poly_gcd(a, b)
        if g.is_zero:
            return g, a, b
        return g, a.exquo(g), b.exquo(g)
    (fa, fb), slots = _to_ring([a, b])
    h, ca, cb = fa.cofactors(fb)
    g = _from_ring(h, slots)
    lc = g.leading_coeff()
    return g.scale(1 / lc), _from_ring(ca, slots).scale(lc), _from_ring(cb, slots).scale(lc)


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    g = Poly()
    for p in polys:
        if p.is_zero:
            continue
        g = poly_gcd(g, p) if not g.is_zero else p.monic()
        if g.is_constant:
            return Poly.const(1)
    return g


# -- module-level operations ----------------------------------------------------

def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_diff(p: Poly, v: VarId) -> Poly:
    return p.diff(v)


def poly_eval(p: Poly, assignment: Mapping[VarId, object]) -> mpq:
    return p.evaluate(assignment)


def _as_fraction_pair(image) -> Tuple[Poly, Poly]:
    if isinstance(image, tuple):
        return Poly.coerce(image[0]), Poly.coerce(image[1])
    if hasattr(image, "num") and hasattr(image, "den"):
        return image.num, image.den
    return Poly.coerce(image), Poly.const(1)


def poly_substitute(p: Poly, subst: Mapping[VarId, object]) -> Tuple[Poly, Poly]:
    """Simultaneous substitution of polynomial or rational images.

    Images may be ``Poly``, ``RatFunc`` or ``(num, den)`` pairs.  Returns the
    reduced ``(numerator, denominator)`` with a monic denominator.
    """
    images = {v.slot: _as_fraction_pair(img) for v, img in subst.items()}
    degs = {s: max((mono_slot_var(m, s) for m in p.terms), default=0) for s in images}
    pow_cache: Dict[Tuple[int, int, int], Poly] = {}

    def power(s, which, e):
        key = (s, which, e)
        r = pow_cache.get(key)
        if r is None:
            r = images[s][which] ** e
            pow_cache[key] = r
        return r

    num = Poly()
    for m, c in p.terms.items():
        keep = list(m)
        term = Poly.const(c)
        for s in images:
            e = mono_slot_var(m, s)
            if s < len(keep):
                keep[s] = 0
            n_img, d_img = images[s]
            if e:
                term = term * power(s, 0, e)
            if degs[s] - e and not d_img.is_constant:
                term = term * power(s, 1, degs[s] - e)
            elif degs[s] - e:
                term = term.scale(d_img.constant_value() ** (degs[s] - e))
        rest = _trim(keep)
        if rest:
            term = term * Poly({rest: mpq(1)})
        num = num + term
    den = Poly.const(1)
    for s, (n_img, d_img) in images.items():
        if degs[s]:
            den = den * power(s, 1, degs[s]) if not d_img.is_constant else den.scale(
                d_img.constant_value() ** degs[s])
    if num.is_zero:
        return Poly(), Poly.const(1)
    if not den.is_constant:
        _, num, den = poly_cofactors(num, den)
    lc = den.leading_coeff()
    return num.scale(1 / lc), den.scale(1 / lc)


# -- canonical string grammar --------------------------------------------------

def default_namer(v: VarId) -> str:
    return repr(v)


def _fmt_coeff(c: mpq) -> str:
    return str(c)


def format_poly(p: Poly, namer: Optional[Callable[[VarId], str]] = None) -> str:
    namer = namer or default_namer
    if p.is_zero:
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        factors = []
        # parameters first, then coordinates
        for s in sorted((s for s, e in enumerate(m) if e), key=lambda s: (1 - (s & 1), s)):
            name = namer(slot_var(s))
            factors.append(name if m[s] == 1 else f"{name}^{m[s]}")
        mono = "*".join(factors)
        if not mono:
            s = _fmt_coeff(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{_fmt_coeff(c)}*{mono}"
        if parts:
            parts.append(" - " + s[1:] if s.startswith("-") else " + " + s)
        else:
            parts.append(s)
    return "".join(parts)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_PARAM_NAME = re.compile(r"t(\d+)$")
_NUMBER = re.compile(r"\d+(?:/\d+)?$")


def parse_poly(text: str, names: Optional[Mapping[str, VarId]] = None) -> Poly:
    """Parse the canonical grammar, e.g. ``3/2*x1^2*x3 - t1*x2``.

    ``names`` maps coordinate labels to variables; ``t<k>`` always denotes
    parameter ``k``.  Without ``names``, ``x<i>`` is coordinate ``i-1``.
    """
    s = re.sub(r"\s+", "", text.replace("**", "^"))
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]*", s)
    if "".join(pieces) != s:
        raise ParseError(f"cannot parse polynomial {text!r}")
    total = Poly()
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece[1:]
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        term = Poly.const(sign)
        for factor in body.split("*"):
            if not factor:
                raise ParseError(f"empty factor in {text!r}")
            if _NUMBER.match(factor):
                term = term.scale(mpq(factor))
                continue
            base, _, exp = factor.partition("^")
            if not _NAME.fullmatch(base) or (exp and not exp.isdigit()):
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            v = _lookup(base, names)
            term = term * Poly.var(v) ** (int(exp) if exp else 1)
        total = total + term
    return total


def _lookup(name: str, names: Optional[Mapping[str, VarId]]) -> VarId:
    if names is not None and name in names:
        return names[name]
    m = _PARAM_NAME.match(name)
    if m:
        return param(int(m.group(1)))
    if names is None:
        m = re.fullmatch(r"x(\d+)", name)
        if m and int(m.group(1)) >= 1:
            return coord(int(m.group(1)) - 1)
    raise ParseError(f"unknown variable {name!r}")
