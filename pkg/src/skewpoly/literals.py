"""Parsing and canonical printing of ring, element and polynomial literals.

Ring literals:
    GF(2^8; modulus=x^8+x^4+x^3+x^2+1; var=a); frobenius=2
    GF(2^4)(t); sigma: t -> (a^5)*t
Polynomial literals are sums of terms `(coef)*X^k` with parenthesized
coefficient expressions; coefficients over GF(2^4)(t) are fractions
`((p(t))/(q(t)))`.  Central polynomials use the variable z.
"""

from __future__ import annotations

import re

from .cpoly import ComPoly
from .errors import ParseError
from .ffield import GF
from .ratfun import RatFun, RatFunField
from .skew import FiniteSkewRing, RatSkewRing, SkewPoly

_TOKEN_RE = re.compile(r"\s*(->|\d+|[A-Za-z_][A-Za-z_0-9]*|[-+*/^();:=,])")


def tokenize(text):
    text = text.rstrip()
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            bad = pos
            while bad < len(text) and text[bad].isspace():
                bad += 1
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        tok = m.group(1)
        out.append((tok, m.start(1)))
        pos = m.end()
    return out


class _Parser:
    """Recursive-descent expression evaluator over an algebra adapter."""

    def __init__(self, tokens, adapter, textlen):
        self.toks = tokens
        self.i = 0
        self.ad = adapter
        self.textlen = textlen

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) \
            else self.textlen

    def take(self, expected=None):
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of input, expected "
                             f"{expected or 'more input'}", self.textlen)
        tok, pos = self.toks[self.i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", pos)
        self.i += 1
        return tok, pos

    def take_any(self, what):
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of input, expected {what}",
                             self.textlen)
        tok, pos = self.toks[self.i]
        self.i += 1
        return tok, pos

    def expr(self):
        if self.peek() == "-":
            self.take()
            val = self.ad.neg(self.term())
        else:
            val = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.term()
            val = self.ad.add(val, rhs) if op == "+" else \
                self.ad.sub(val, rhs)
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op, pos = self.take()
            rhs = self.factor()
            if op == "*":
                val = self.ad.mul(val, rhs)
            else:
                val = self.ad.div(val, rhs, pos)
        return val

    def factor(self):
        val = self.atom()
        if self.peek() == "^":
            self.take()
            tok, pos = self.take_any("integer exponent")
            if not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer",
                                 pos)
            val = self.ad.pow(val, int(tok))
        return val

    def atom(self):
        tok, pos = self.take_any("an expression")
        if tok.isdigit():
            return self.ad.from_int(int(tok))
        if tok == "(":
            val = self.expr()
            self.take(")")
            return val
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            return self.ad.var(tok, pos)
        raise ParseError(f"unexpected token {tok!r}", pos)

    def finish(self, val):
        if self.i != len(self.toks):
            tok, pos = self.toks[self.i]
            raise ParseError(f"trailing input starting at {tok!r}", pos)
        return val


class _SkewAdapter:
    """Evaluates expressions as skew polynomials over a ring."""

    def __init__(self, ring):
        self.ring = ring
        self.bind = {"X": ring.x()}
        if ring.kind == "finite":
            if ring.field.m > 1:
                self.bind[ring.field.gen_name] = ring.const(ring.field.gen)
        else:
            base = ring.rf.base
            self.bind[ring.rf.var] = ring.const(ring.rf.t_elem())
            if base.m > 1:
                self.bind[base.gen_name] = ring.const(
                    ring.rf.from_base(base.gen))

    def from_int(self, n):
        ring = self.ring
        if ring.kind == "finite":
            return ring.const(n % ring.field.p)
        return ring.const(ring.rf.from_int(n))

    def var(self, name, pos):
        try:
            return self.bind[name]
        except KeyError:
            raise ParseError(f"unknown symbol {name!r}", pos) from None

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b, pos):
        if b.deg != 0:
            raise ParseError("division only by constant coefficients", pos)
        if a.deg > 0:
            raise ParseError("division of a non-constant", pos)
        c = self.ring.c_mul(a.constant_coefficient(),
                            self.ring.c_inv(b.constant_coefficient()))
        return self.ring.const(c)

    def pow(self, a, e):
        out = self.ring.one()
        base = a
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out


class _CpolyAdapter:
    """Evaluates expressions as commutative polynomials over a field handle."""

    def __init__(self, field, var, extra_bind=None):
        self.field = field
        self.varname = var
        self.bind = {var: ComPoly(field, (field.zero, field.one))}
        if extra_bind:
            self.bind.update(extra_bind)

    def from_int(self, n):
        f = self.field
        if isinstance(f, RatFunField):
            return ComPoly(f, (f.from_int(n),))
        return ComPoly(f, (n % f.p,))

    def var(self, name, pos):
        try:
            return self.bind[name]
        except KeyError:
            raise ParseError(f"unknown symbol {name!r}", pos) from None

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b, pos):
        if b.deg != 0 or a.deg > 0:
            raise ParseError("division only between constants", pos)
        f = self.field
        return ComPoly(f, (f.div(a.c[0] if a.c else f.zero, b.c[0]),))

    def pow(self, a, e):
        out = ComPoly(self.field, (self.field.one,))
        base = a
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out


def _eval(text, adapter):
    toks = tokenize(text)
    p = _Parser(toks, adapter, len(text))
    return p.finish(p.expr())


def parse_poly(ring, text, bindings=None) -> SkewPoly:
    ad = _SkewAdapter(ring)
    if bindings:
        for name, coeff in bindings.items():
            ad.bind[name] = ring.const(coeff)
    return _eval(text, ad)


def parse_zpoly(ring, text, bindings=None) -> ComPoly:
    """A central polynomial in z with coefficients in K."""
    kf = ring.k_field
    if ring.kind == "finite":
        extra = {}
        if kf.m > 1:
            extra[kf.gen_name] = ComPoly(kf, (kf.gen,))
    else:
        base = kf.base
        extra = {kf.var: ComPoly(kf, (kf.t_elem(),))}
        if base.m > 1:
            extra[base.gen_name] = ComPoly(kf, (kf.from_base(base.gen),))
    if bindings:
        for name, val in bindings.items():
            extra[name] = val if isinstance(val, ComPoly) \
                else ComPoly(kf, (val,))
    out = _eval(text, _CpolyAdapter(kf, "z", extra))
    if ring.kind == "ratfun":
        from .errors import FieldError
        for c in out.c:
            try:
                ring.k_section(c)
            except FieldError:
                raise ParseError(
                    "coefficient lies outside the invariant subfield", 0) \
                    from None
    return out


def parse_element(ring, text):
    p = parse_poly(ring, text)
    if p.deg > 0:
        raise ParseError("expected a coefficient, found X terms", 0)
    return p.constant_coefficient()


# ---------------------------------------------------------------------------
# ring literals

def parse_ring(text):
    toks = tokenize(text)
    p = _Parser(toks, None, len(text))
    tok, pos = p.take_any("GF")
    if tok != "GF":
        raise ParseError("ring literal must start with GF", pos)
    p.take("(")
    tok, pos = p.take_any("prime characteristic")
    if not tok.isdigit():
        raise ParseError("expected prime characteristic", pos)
    prime = int(tok)
    m = 1
    if p.peek() == "^":
        p.take()
        tok, pos = p.take_any("extension degree")
        if not tok.isdigit():
            raise ParseError("expected extension degree", pos)
        m = int(tok)
    modulus = None
    gen_name = "a"
    while p.peek() == ";":
        p.take()
        key, kpos = p.take_any("option name")
        p.take("=")
        if key == "modulus":
            depth = 0
            parts = []
            while p.peek() is not None and (p.peek() not in (";", ")")
                                            or depth > 0):
                t, _ = p.take()
                if t == "(":
                    depth += 1
                elif t == ")":
                    depth -= 1
                parts.append(t)
            fp = GF(prime, 1)
            mp = _eval("".join(parts), _CpolyAdapter(fp, "x"))
            modulus = mp.c
        elif key == "var":
            gen_name, _ = p.take_any("generator name")
        else:
            raise ParseError(f"unknown field option {key!r}", kpos)
    p.take(")")
    field = GF(prime, m, modulus=modulus, gen_name=gen_name)
    ratvar = None
    if p.peek() == "(":
        p.take()
        ratvar, _ = p.take_any("function variable")
        p.take(")")
    s = 0
    sigma_c = None
    while p.peek() == ";":
        p.take()
        key, kpos = p.take_any("ring option")
        if key == "frobenius":
            p.take("=")
            tok, pos = p.take_any("frobenius exponent")
            if not tok.isdigit():
                raise ParseError("expected frobenius exponent", pos)
            s = int(tok)
        elif key == "sigma":
            p.take(":")
            tvar, _ = p.take_any("the function variable")
            p.take("->")
            depth = 0
            parts = []
            while p.i < len(p.toks):
                t, _ = p.take()
                parts.append(t)
            rf = RatFunField(field, var=ratvar or tvar)
            val = _eval("".join(parts), _RatConstAdapter(rf))
            sigma_c = _extract_scale(val, rf, kpos)
        else:
            raise ParseError(f"unknown ring option {key!r}", kpos)
    if p.i != len(p.toks):
        tok, pos = p.toks[p.i]
        raise ParseError(f"trailing input starting at {tok!r}", pos)
    if ratvar is not None:
        if sigma_c is None:
            sigma_c = field.one
        return RatSkewRing(RatFunField(field, var=ratvar), sigma_c)
    return FiniteSkewRing(field, s)


class _RatConstAdapter(_CpolyAdapter):
    def __init__(self, rf):
        extra = {}
        if rf.base.m > 1:
            extra[rf.base.gen_name] = ComPoly(rf, (rf.from_base(rf.base.gen),))
        super().__init__(rf, rf.var, extra)
        # here `var` t is degree-1 in the ComPoly sense
        self.bind[rf.var] = ComPoly(rf, (rf.t_elem(),))


def _extract_scale(val: ComPoly, rf: RatFunField, pos):
    """c from an expression evaluating to c*t."""
    if val.deg != 0:
        raise ParseError("sigma image must be c*t", pos)
    x = val.c[0]
    k = rf.base
    if len(x.num) != 2 or x.num[0] != k.zero or x.den != (k.one,):
        raise ParseError("sigma image must be c*t with constant c", pos)
    return x.num[1]


# ---------------------------------------------------------------------------
# canonical printing

def format_elem(field: GF, code) -> str:
    return field.elem_str(code)


def format_tpoly(base: GF, coeffs, var="t") -> str:
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == base.zero:
            continue
        es = base.elem_str(c)
        if k == 0:
            terms.append(f"({es})" if not es.isdigit() else es)
        else:
            vp = var if k == 1 else f"{var}^{k}"
            terms.append(vp if c == base.one else f"({es})*{vp}")
    return "+".join(terms) if terms else "0"


def format_ratfun(rf: RatFunField, x: RatFun) -> str:
    num = format_tpoly(rf.base, x.num, rf.var)
    if x.den == (rf.base.one,):
        return f"({num})"
    den = format_tpoly(rf.base, x.den, rf.var)
    return f"(({num})/({den}))"


def _coeff_str(ring_or_field, c) -> str:
    if isinstance(ring_or_field, RatFunField):
        return format_ratfun(ring_or_field, c)
    return f"({ring_or_field.elem_str(c)})"


def format_skew_poly(f: SkewPoly, var="X") -> str:
    ring = f.ring
    if f.is_zero():
        return "0"
    holder = ring.rf if ring.kind == "ratfun" else ring.field
    one = ring.c_one
    terms = []
    for k in range(len(f.c) - 1, -1, -1):
        c = f.coeff(k)
        if ring.c_is_zero(c):
            continue
        if k == 0:
            terms.append(_coeff_str(holder, c))
            continue
        vp = var if k == 1 else f"{var}^{k}"
        terms.append(vp if c == one else f"{_coeff_str(holder, c)}*{vp}")
    return " + ".join(terms)


def format_cpoly(poly: ComPoly, var="z") -> str:
    field = poly.field
    if poly.is_zero():
        return "0"
    terms = []
    for k in range(len(poly.c) - 1, -1, -1):
        c = poly.c[k]
        if c == field.zero:
            continue
        if isinstance(field, RatFunField):
            cs = format_ratfun(field, c)
        else:
            cs = f"({field.elem_str(c)})"
        if k == 0:
            terms.append(cs)
            continue
        vp = var if k == 1 else f"{var}^{k}"
        terms.append(vp if c == field.one else f"{cs}*{vp}")
    return " + ".join(terms)


def format_ring(ring) -> str:
    if ring.kind == "finite":
        F = ring.field
        mod = format_tpoly(GF(F.p, 1), F.modulus, "x")
        head = f"GF({F.p}^{F.m}; modulus={mod}; var={F.gen_name})" \
            if F.m > 1 else f"GF({F.p})"
        return f"{head}; frobenius={ring.s}"
    base = ring.rf.base
    mod = format_tpoly(GF(base.p, 1), base.modulus, "x")
    head = f"GF({base.p}^{base.m}; modulus={mod}; var={base.gen_name})" \
        if base.m > 1 else f"GF({base.p})"
    c = base.elem_str(ring.sigma_map.c)
    return f"{head}({ring.rf.var}); sigma: {ring.rf.var} -> ({c})*{ring.rf.var}"
