"""Expression parser for the algebra surface language.

Grammar (infix ``*`` is required between factors):

    expr     :=  ['-'] term (('+'|'-') term)*
    term     :=  factor ('*' factor)*
    factor   :=  atom ['^' exponent]
    atom     :=  '(' expr ')' | '[' expr ',' expr ']' | NUMBER | IDENT
    exponent :=  ['-'] INT | '(' ['-'] INT ['/' INT] ')'
    NUMBER   :=  INT ['/' INT]

Identifiers resolve against the presentation first (generators shadow the
central symbols), then declared opaque symbols, then the built-in centrals
``i``, ``hbar``, ``q`` and ``p``.  Half-integer exponents are allowed on q
and p only; generator powers must be nonnegative integers.  ``[a,b]`` is
commutator sugar.
"""

from __future__ import annotations

import difflib
import re
from fractions import Fraction

from .coeffs import Coefficient
from .errors import ParseError
from .ncpoly import NCPoly, commutator

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*^()\[\],/])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, scope):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0
        self.gens = getattr(scope, "generator_map", {}) if scope is not None else {}
        self.opaques = set(getattr(scope, "opaque_names", ())) if scope is not None else set()

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.k]
        if (kind is not None and tok[0] != kind) or \
                (value is not None and tok[1] != value):
            want = repr(value) if value is not None else kind
            found = repr(tok[1]) if tok[1] else "end of input"
            raise ParseError(f"expected {want}, found {found} at {tok[2]}", tok[2])
        self.k += 1
        return tok

    def at_op(self, *ops):
        tok = self.peek()
        return tok[0] == "op" and tok[1] in ops

    # -- grammar -----------------------------------------------------------

    def expr(self):
        negate = False
        if self.at_op("-"):
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.at_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.at_op("*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        base, tag = self.atom()
        if not self.at_op("^"):
            return base
        tok = self.take()
        exp = self.exponent()
        return self._power(base, tag, exp, tok[2])

    def exponent(self):
        if self.at_op("("):
            self.take()
            sign = 1
            if self.at_op("-"):
                self.take()
                sign = -1
            num = int(self.take("int")[1])
            den = 1
            if self.at_op("/"):
                self.take()
                den = int(self.take("int")[1])
            self.take("op", ")")
            return Fraction(sign * num, den)
        sign = 1
        if self.at_op("-"):
            self.take()
            sign = -1
        return Fraction(sign * int(self.take("int")[1]))

    def _power(self, base, tag, exp, pos):
        if tag in ("q", "p"):
            if (2 * exp).denominator != 1:
                raise ParseError(
                    f"exponent {exp} on {tag} must be an integer or half-integer "
                    f"(at {pos})", pos)
            make = Coefficient.q_power if tag == "q" else Coefficient.p_power
            return NCPoly.from_scalar(make(exp))
        if exp.denominator != 1:
            raise ParseError(f"fractional exponent {exp} allowed on q and p only "
                             f"(at {pos})", pos)
        k = int(exp)
        is_scalar = all(len(w) == 0 for w in base.terms)
        if is_scalar and (tag != "generator"):
            coeff = base.coefficient(())
            if k < 0 and coeff.is_zero:
                raise ParseError(f"negative power of zero at {pos}", pos)
            return NCPoly.from_scalar(coeff ** k)
        if k < 0:
            raise ParseError(
                f"negative power of a generator expression at {pos}", pos)
        return base ** k

    def atom(self):
        """Returns (NCPoly value, tag); the tag drives exponent rules."""
        tok = self.peek()
        if self.at_op("("):
            self.take()
            value = self.expr()
            self.take("op", ")")
            return value, "group"
        if self.at_op("["):
            self.take()
            a = self.expr()
            self.take("op", ",")
            b = self.expr()
            self.take("op", "]")
            return commutator(a, b), "group"
        if tok[0] == "int":
            self.take()
            num = int(tok[1])
            if self.at_op("/"):
                self.take()
                den = int(self.take("int")[1])
                return NCPoly.from_scalar(Coefficient.from_gauss(Fraction(num, den))), "scalar"
            return NCPoly.from_scalar(Coefficient.from_gauss(num)), "scalar"
        if tok[0] == "ident":
            self.take()
            return self.resolve(tok[1], tok[2])
        raise ParseError(f"expected an expression, found {tok[1]!r} at {tok[2]}",
                         tok[2])

    def resolve(self, name, pos):
        if name in self.gens:
            return NCPoly.from_generator(self.gens[name]), "generator"
        if name in self.opaques:
            return NCPoly.from_scalar(Coefficient.opaque(name)), "opaque"
        if name == "i":
            return NCPoly.from_scalar(Coefficient.imag()), "scalar"
        if name == "hbar":
            return NCPoly.from_scalar(Coefficient.hbar_power(1)), "hbar"
        if name == "q":
            return NCPoly.from_scalar(Coefficient.q_power(1)), "q"
        if name == "p":
            return NCPoly.from_scalar(Coefficient.p_power(1)), "p"
        if name == "s":
            return NCPoly.from_scalar(Coefficient.monomial({"s": 1})), "scalar"
        if name == "t":
            return NCPoly.from_scalar(Coefficient.monomial({"t": 1})), "scalar"
        known = sorted(set(self.gens) | self.opaques | {"i", "hbar", "q", "p"})
        hint = difflib.get_close_matches(name, known, n=1)
        suggestion = f"; did you mean {hint[0]!r}?" if hint else ""
        raise ParseError(f"unknown symbol {name!r} at {pos}{suggestion}", pos)


def parse_expr(text, scope=None):
    """Parse an expression into an NCPoly over the scope's alphabet.

    ``scope`` is a Presentation (or anything with ``generator_map`` and
    ``opaque_names``); None parses pure coefficient expressions.
    """
    parser = _Parser(text, scope)
    value = parser.expr()
    parser.take("end")
    return value
