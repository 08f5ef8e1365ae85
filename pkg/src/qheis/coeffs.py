"""Exact scalar arithmetic for the deformed Heisenberg algebras.

Scalars are rational functions, with Gaussian-rational coefficients, in the
commuting central variables

    s = q^(1/2),   t = p^(1/2),   h = hbar,

plus any number of declared opaque central symbols (for instance ``D_jk``).
Working in the square roots keeps every stored exponent an integer, so the
half powers that pervade these algebras stay exact.  Monomial exponents may
be negative (Laurent), and denominators such as (q - 1)^2 force a genuine
fraction field.  Equality is decided by cross multiplication, never by
sampling.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, ParamError, PoleAtPoint, UnboundVariable


class GaussRational:
    """Exact complex rational a + b*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = _as_gauss(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_gauss(other))

    def __mul__(self, other):
        other = _as_gauss(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise DivisionByZero("inverse of zero")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * _as_gauss(other).inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}*i"
        return f"({self.re} {sign} {imag})"

    __repr__ = __str__


def _as_gauss(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational(x)
    raise TypeError(f"cannot coerce {x!r} to GaussRational")


G_ZERO = GaussRational(0)
G_ONE = GaussRational(1)
G_I = GaussRational(0, 1)


class CentralMonomial:
    """Product of central-variable powers; zero exponents are never stored."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps=()):
        if isinstance(exps, dict):
            items = exps.items()
        else:
            items = exps
        pairs = tuple(sorted((v, e) for v, e in items if e))
        object.__setattr__(self, "exps", pairs)
        object.__setattr__(self, "_hash", hash(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("CentralMonomial is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, CentralMonomial) and self.exps == other.exps

    def __mul__(self, other):
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return CentralMonomial(d)

    def inverse(self):
        return CentralMonomial(tuple((v, -e) for v, e in self.exps))

    def exponent(self, var):
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    def variables(self):
        return [v for v, _ in self.exps]

    @property
    def is_unit(self):
        return not self.exps

    def __repr__(self):
        if not self.exps:
            return "1"
        return "*".join(f"{v}^{e}" if e != 1 else v for v, e in self.exps)


MONO_UNIT = CentralMonomial()


# ---------------------------------------------------------------------------
# Internal Laurent-polynomial helpers: dict CentralMonomial -> GaussRational,
# zero values never stored.
# ---------------------------------------------------------------------------

def _p_zero():
    return {}


def _p_const(g):
    return {MONO_UNIT: g} if g else {}


def _p_add(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, G_ZERO) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _p_neg(a):
    return {m: -c for m, c in a.items()}


def _p_mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1 * m2
            s = out.get(m, G_ZERO) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _p_scale(a, mono, g):
    if not g:
        return {}
    return {m * mono: c * g for m, c in a.items()}


def _p_vars(a):
    vs = set()
    for m in a:
        vs.update(m.variables())
    return vs


def _mono_vector(m, varlist):
    return tuple(m.exponent(v) for v in varlist)


def _p_lead(a, varlist):
    """Leading (monomial, coeff) under lex order on the given variable list."""
    lead = max(a, key=lambda m: _mono_vector(m, varlist))
    return lead, a[lead]


def _p_shift_mono(a):
    """Monomial m with a*m a genuine polynomial (min exponent 0 per variable)."""
    mins = {}
    for m in a:
        for v, e in m.exps:
            mins[v] = min(mins.get(v, 0), e)
    return CentralMonomial({v: -e for v, e in mins.items() if e < 0})


def _p_divide_exact(a, b):
    """Exact Laurent division a/b, or None when b does not divide a."""
    if not a:
        return {}
    sa = _p_shift_mono(a)
    sb = _p_shift_mono(b)
    num = _p_scale(a, sa, G_ONE)
    den = _p_scale(b, sb, G_ONE)
    varlist = sorted(_p_vars(num) | _p_vars(den))
    lead_b, lc_b = _p_lead(den, varlist)
    inv_lc_b = lc_b.inverse()
    quot = {}
    rem = dict(num)
    while rem:
        lead_r, lc_r = _p_lead(rem, varlist)
        vec = tuple(
            er - eb
            for er, eb in zip(_mono_vector(lead_r, varlist), _mono_vector(lead_b, varlist))
        )
        if any(e < 0 for e in vec):
            return None
        m = CentralMonomial(dict(zip(varlist, vec)))
        c = lc_r * inv_lc_b
        quot[m] = c
        rem = _p_add(rem, _p_scale(den, m, -c))
    # undo the Laurent shifts: a/b = (num/den) * sb/sa
    adj = sb * sa.inverse()
    return _p_scale(quot, adj, G_ONE)


def _p_eval(a, point):
    total = G_ZERO
    for m, c in a.items():
        val = c
        for v, e in m.exps:
            if v not in point:
                raise UnboundVariable(f"no value assigned to central variable {v!r}")
            base = _as_gauss(point[v])
            if e < 0 and not base:
                raise PoleAtPoint(f"variable {v} is 0 but occurs with exponent {e}")
            val = val * base**e
        total = total + val
    return total


def _p_substitute(a, assign):
    out = {}
    for m, c in a.items():
        val = c
        rest = {}
        for v, e in m.exps:
            if v in assign:
                base = _as_gauss(assign[v])
                if e < 0 and not base:
                    raise PoleAtPoint(f"variable {v} is 0 but occurs with exponent {e}")
                val = val * base**e
            else:
                rest[v] = e
        if not val:
            continue
        m2 = CentralMonomial(rest)
        s = out.get(m2, G_ZERO) + val
        if s:
            out[m2] = s
        else:
            out.pop(m2, None)
    return out


_P_ONE = {MONO_UNIT: G_ONE}


class Coefficient:
    """Element of the coefficient field.

    Stored as numerator/denominator Laurent polynomials.  Construction
    canonicalizes: a single-term denominator is folded into the numerator,
    multi-term denominators are content-stripped and made monic, and exact
    division is attempted so common factors like (q^2-1)/(q-1) collapse.
    Equality falls back to cross multiplication, so representation gaps
    never affect comparisons.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        num = {} if num is None else num
        den = dict(_P_ONE) if den is None else den
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            object.__setattr__(self, "num", {})
            object.__setattr__(self, "den", dict(_P_ONE))
            return
        if len(den) == 1:
            ((m, c),) = den.items()
            num = _p_scale(num, m.inverse(), c.inverse())
            den = dict(_P_ONE)
        else:
            shift = _p_shift_mono(den)
            if not shift.is_unit:
                num = _p_scale(num, shift, G_ONE)
                den = _p_scale(den, shift, G_ONE)
            varlist = sorted(_p_vars(num) | _p_vars(den))
            _, lc = _p_lead(den, varlist)
            if lc != G_ONE:
                inv = lc.inverse()
                num = _p_scale(num, MONO_UNIT, inv)
                den = _p_scale(den, MONO_UNIT, inv)
            q = _p_divide_exact(num, den)
            if q is not None:
                num, den = q, dict(_P_ONE)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Coefficient is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return _C_ZERO

    @staticmethod
    def one():
        return _C_ONE

    @staticmethod
    def imag():
        return _C_I

    @staticmethod
    def from_scalar(x):
        if isinstance(x, Coefficient):
            return x
        return Coefficient(_p_const(_as_gauss(x)))

    @staticmethod
    def from_gauss(re, im=0):
        return Coefficient(_p_const(GaussRational(re, im)))

    @staticmethod
    def monomial(exps, scalar=G_ONE):
        return Coefficient({CentralMonomial(exps): _as_gauss(scalar)})

    @staticmethod
    def q_power(exp):
        """q**exp with exp an integer or half-integer (stored on s)."""
        steps = Fraction(exp) * 2
        if steps.denominator != 1:
            raise ParamError(f"q exponent {exp} is not a half-integer")
        return Coefficient.monomial({"s": int(steps)})

    @staticmethod
    def p_power(exp):
        steps = Fraction(exp) * 2
        if steps.denominator != 1:
            raise ParamError(f"p exponent {exp} is not a half-integer")
        return Coefficient.monomial({"t": int(steps)})

    @staticmethod
    def hbar_power(exp):
        if int(exp) != exp:
            raise ParamError(f"hbar exponent {exp} is not an integer")
        return Coefficient.monomial({"h": int(exp)})

    @staticmethod
    def opaque(name, exp=1):
        if int(exp) != exp:
            raise ParamError(f"opaque exponent {exp} is not an integer")
        return Coefficient.monomial({name: int(exp)})

    # -- predicates ---------------------------------------------------

    @property
    def is_zero(self):
        return not self.num

    @property
    def is_one(self):
        return self.num == _P_ONE and self.den == _P_ONE

    def variables(self):
        return sorted(_p_vars(self.num) | _p_vars(self.den))

    # -- field arithmetic ----------------------------------------------

    _SCALARS = (int, Fraction, GaussRational)

    def __add__(self, other):
        if not isinstance(other, (Coefficient,) + Coefficient._SCALARS):
            return NotImplemented
        other = Coefficient.from_scalar(other)
        if self.den == other.den:
            return Coefficient(_p_add(self.num, other.num), dict(self.den))
        return Coefficient(
            _p_add(_p_mul(self.num, other.den), _p_mul(other.num, self.den)),
            _p_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(_p_neg(self.num), dict(self.den))

    def __sub__(self, other):
        if not isinstance(other, (Coefficient,) + Coefficient._SCALARS):
            return NotImplemented
        return self + (-Coefficient.from_scalar(other))

    def __rsub__(self, other):
        if not isinstance(other, (Coefficient,) + Coefficient._SCALARS):
            return NotImplemented
        return Coefficient.from_scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Coefficient,) + Coefficient._SCALARS):
            return NotImplemented
        other = Coefficient.from_scalar(other)
        return Coefficient(_p_mul(self.num, other.num), _p_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise DivisionByZero("inverse of the zero coefficient")
        return Coefficient(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        return self * Coefficient.from_scalar(other).inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = _C_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = Coefficient.from_scalar(other)
        if not isinstance(other, Coefficient):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return _p_mul(self.num, other.den) == _p_mul(other.num, self.den)

    __hash__ = None

    # -- evaluation ------------------------------------------------------

    def evaluate(self, point):
        """Exact value at a full assignment of central variables."""
        d = _p_eval(self.den, point)
        if not d:
            raise PoleAtPoint("denominator vanishes at the evaluation point")
        return _p_eval(self.num, point) * d.inverse()

    def substitute(self, assign):
        """Partial substitution of central variables; other variables stay."""
        den = _p_substitute(self.den, assign)
        if not den:
            raise PoleAtPoint("denominator vanishes under the substitution")
        return Coefficient(_p_substitute(self.num, assign), den)

    # -- canonical serialization (used for hashing polynomial states) ----

    def key(self):
        num = tuple(sorted((m.exps, (c.re, c.im)) for m, c in self.num.items()))
        den = tuple(sorted((m.exps, (c.re, c.im)) for m, c in self.den.items()))
        return (num, den)

    def __repr__(self):
        from .printer import format_coefficient

        return format_coefficient(self)


_C_ZERO = Coefficient()
_C_ONE = Coefficient(_p_const(G_ONE))
_C_I = Coefficient(_p_const(G_I))


def qnumber(k):
    """Two-parameter quantum integer: sum_{i=0}^{k-1} q^i * p^-(k-1-i).

    Agrees with the closed form (q^k - p^-k)/(q - p^-1).
    """
    if k < 0 or int(k) != k:
        raise ParamError(f"qnumber index must be a nonnegative integer, got {k}")
    total = _C_ZERO
    for i in range(int(k)):
        total = total + Coefficient.monomial({"s": 2 * i, "t": -2 * (k - 1 - i)})
    return total
