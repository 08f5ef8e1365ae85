"""Catalog of deformed Heisenberg algebra presentations.

Families
--------
classical             canonical quantization, indexed positions/momenta
wess                  q-deformed algebra with a grouplike scaling generator
schmudgen             four-generator q-algebra with an invertible unitary-like u
wess_schwenk          q-algebra over the quantum plane with a conjugate position
gaddis                two-parameter quantum Heisenberg enveloping algebra
gha / q_gha           generalized Heisenberg algebras driven by polynomials f, g
qhbar                 q-hbar algebra on the quantum phase space
qhbar_quantization    q-hbar quantization with an opaque structure function
unified               the three-parameter family with dynamical functions
                      (psi, pi, phi) that specializes to all of the above

Precedences are chosen so that oriented rules rewrite toward the ordered
basis of each family's iterated Ore extension.  Generator inverses carry
their commutation relations explicitly: they are forced by the defining
relations and the rewrite systems are not confluent without them.
"""

from __future__ import annotations

import re as _re

from dataclasses import dataclass, field

from .coeffs import Coefficient
from .errors import (AlphabetError, NotOreShaped, ParamError, UnknownFamily)
from .ncpoly import Generator, NCPoly, Word
from .rewrite import normalize, orient

C = Coefficient
I = C.imag()
HBAR = C.hbar_power(1)


def _q(exp=1):
    return C.q_power(exp)


def _p(exp=1):
    return C.p_power(exp)


def _w(*gens):
    return NCPoly.from_word(gens)


class Presentation:
    """A named algebra: generators with precedence, inverse pairs, relations
    (each polynomial meaning ``poly = 0``), parameters and free metadata."""

    def __init__(self, name, generators, relations, inverse_pairs=(),
                 parameters=None, metadata=None, order_kind="deglex"):
        self.name = name
        self.generators = tuple(generators)
        self.relations = tuple((label, NCPoly.from_scalar(p)) for label, p in relations)
        self.inverse_pairs = tuple(inverse_pairs)
        self.parameters = dict(parameters or {})
        self.metadata = dict(metadata or {})
        self.order_kind = order_kind
        self._system = None
        self._validate()

    def _validate(self):
        gmap = {}
        for g in self.generators:
            if g.sym in gmap:
                raise ParamError(f"{self.name}: generator {g.sym} declared twice")
            gmap[g.sym] = g
        if len({g.precedence for g in self.generators}) != len(self.generators):
            raise ParamError(f"{self.name}: generator precedences are not distinct")
        labels = set()
        for label, poly in self.relations:
            if label in labels:
                raise ParamError(f"{self.name}: duplicate relation label {label}")
            labels.add(label)
            for w in poly.terms:
                for g in w:
                    if gmap.get(g.sym) != g:
                        raise AlphabetError(
                            f"{self.name}: relation {label} uses undeclared "
                            f"generator {g.sym}"
                        )
        for g, ginv in self.inverse_pairs:
            for x in (g, ginv):
                if gmap.get(x.sym) != x:
                    raise AlphabetError(
                        f"{self.name}: inverse pair uses undeclared generator {x.sym}"
                    )
        self.generator_map = gmap

    @property
    def opaque_names(self):
        return {k for k, v in self.parameters.items() if v == "opaque"}

    def gen(self, sym):
        try:
            return self.generator_map[sym]
        except KeyError:
            raise AlphabetError(f"{self.name}: unknown generator {sym}") from None

    def word(self, *syms):
        return Word(tuple(self.gen(s) for s in syms))

    def poly(self, *syms):
        return NCPoly.from_word(self.word(*syms))

    def parse(self, text):
        from .parser import parse_expr

        return parse_expr(text, self)

    def system(self):
        if self._system is None:
            self._system = orient(self)
        return self._system

    def normalize(self, x):
        if isinstance(x, str):
            x = self.parse(x)
        return normalize(x, self.system())

    def all_relation_polys(self):
        """Listed relations plus the cancellation relations of inverse pairs."""
        out = list(self.relations)
        listed = {label for label, _ in out}
        for g, ginv in self.inverse_pairs:
            for a, b in ((g, ginv), (ginv, g)):
                label = f"unit:{a.sym}*{b.sym}"
                if label not in listed:
                    out.append((label, _w(a, b) - NCPoly.one()))
        return out

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        if (self.name, self.generators, self.inverse_pairs,
                self.order_kind) != (other.name, other.generators,
                                     other.inverse_pairs, other.order_kind):
            return False
        if len(self.relations) != len(other.relations):
            return False
        for (l1, p1), (l2, p2) in zip(self.relations, other.relations):
            if l1 != l2 or p1 != p2:
                return False
        if self.metadata != other.metadata:
            return False
        if set(self.parameters) != set(other.parameters):
            return False
        for k, v in self.parameters.items():
            w = other.parameters[k]
            if isinstance(v, (Coefficient, NCPoly)) or isinstance(w, (Coefficient, NCPoly)):
                if not (v == w):
                    return False
            elif v != w:
                return False
        return True

    __hash__ = None

    def __repr__(self):
        return (f"Presentation({self.name!r}, {len(self.generators)} generators, "
                f"{len(self.relations)} relations)")


# ---------------------------------------------------------------------------
# Indexed relation schemas
# ---------------------------------------------------------------------------

_DELTA = _re.compile(r"delta\((\d+),\s*(\d+)\)")


class _Scope:
    """Minimal parsing scope for schema expansion, before a Presentation
    exists."""

    def __init__(self, generators, opaques=()):
        self.name = "<schema>"
        self.generator_map = {g.sym: g for g in generators}
        self.opaque_names = set(opaques)


def expand_schema(template, ranges, generators, label="rel", predicate=None):
    """Instantiate an indexed relation template over integer ranges.

    ``template`` is an expression string with ``{i}`` index placeholders and
    optional Kronecker ``delta(i,j)`` factors, which evaluate to 1 or 0. One
    relation (label, poly) is produced per index tuple accepted by
    ``predicate``.
    """
    from .parser import parse_expr

    names = sorted(ranges)
    scope = _Scope(generators)
    out = []
    import itertools

    for values in itertools.product(*(ranges[n] for n in names)):
        binding = dict(zip(names, values))
        if predicate is not None and not predicate(**binding):
            continue
        try:
            text = template.format(**binding)
            lab = label.format(**binding)
        except (KeyError, IndexError) as exc:
            raise ParamError(f"template index {exc} is not bound by the ranges") from exc
        text = _DELTA.sub(lambda m: "1" if m.group(1) == m.group(2) else "0", text)
        poly = parse_expr(text, scope)
        if not poly.is_zero:
            out.append((lab, poly))
    return out


# ---------------------------------------------------------------------------
# Catalog builders
# ---------------------------------------------------------------------------

def _classical(indices=3):
    n = int(indices)
    if n < 1:
        raise ParamError("classical: indices must be >= 1")
    xs = [Generator("x", i, i - 1) for i in range(1, n + 1)]
    ps = [Generator("p", i, n + i - 1) for i in range(1, n + 1)]
    gens = xs + ps
    rng = {"n": range(1, n + 1), "m": range(1, n + 1)}
    rels = expand_schema(
        "x_{n}*p_{m} - p_{m}*x_{n} - delta({n},{m})*i*hbar",
        rng, gens, label="xp_{n}_{m}")
    rels += expand_schema(
        "x_{n}*x_{m} - x_{m}*x_{n}", rng, gens, label="xx_{n}_{m}",
        predicate=lambda n, m: n < m)
    rels += expand_schema(
        "p_{n}*p_{m} - p_{m}*p_{n}", rng, gens, label="pp_{n}_{m}",
        predicate=lambda n, m: n < m)
    return Presentation("classical", gens, rels,
                        parameters={"indices": n},
                        metadata={"description": "canonical quantization"})


def _wess():
    li = Generator("Lambda_inv", None, 0)
    lam = Generator("Lambda", None, 1)
    p = Generator("p", None, 2)
    x = Generator("x", None, 3)
    rels = [
        ("x_p", _q("1/2") * _w(x, p) - _q("-1/2") * _w(p, x) - I * HBAR * _w(lam)),
        ("lambda_x", _w(lam, x) - _q(-1) * _w(x, lam)),
        ("lambda_p", _w(lam, p) - _q(1) * _w(p, lam)),
        # forced by the two relations above once Lambda is invertible
        ("lambda_inv_x", _w(li, x) - _q(1) * _w(x, li)),
        ("lambda_inv_p", _w(li, p) - _q(-1) * _w(p, li)),
    ]
    meta = {
        "adjoint": "p and x self-adjoint, conjugate of Lambda is Lambda_inv "
                   "(recorded, not enforced)",
        "q_domain": "real, q != 0",
    }
    return Presentation("wess", [li, lam, p, x], rels,
                        inverse_pairs=[(lam, li)], metadata=meta)


_SCHM_VARIANTS = ("equivalent", "definition")


def _schmudgen(variant="equivalent"):
    if variant not in _SCHM_VARIANTS:
        raise ParamError(f"schmudgen: variant must be one of {_SCHM_VARIANTS}")
    x = Generator("x", None, 0)
    p = Generator("p", None, 1)
    ui = Generator("u_inv", None, 2)
    u = Generator("u", None, 3)
    base = [
        ("u_p", _w(u, p) - _q(1) * _w(p, u)),
        ("u_x", _w(u, x) - _q(-1) * _w(x, u)),
    ]
    if variant == "equivalent":
        rels = base + [
            # inverse commutations forced by u_p and u_x
            ("u_inv_p", _w(ui, p) - _q(-1) * _w(p, ui)),
            ("u_inv_x", _w(ui, x) - _q(1) * _w(x, ui)),
            # solved forms of the two cross relations
            ("p_x", _w(p, x) + I * _q("-1/2") * HBAR * _w(u)
             - I * _q("1/2") * HBAR * _w(ui)),
            ("x_p", _w(x, p) + I * _q("1/2") * HBAR * _w(u)
             - I * _q("-1/2") * HBAR * _w(ui)),
        ]
    else:
        coef = I * (_q("3/2") - _q("-1/2")) * HBAR
        rels = base + [
            ("p_x", _w(p, x) - _q(1) * _w(x, p) - coef * _w(u)),
            ("x_p", _w(x, p) - _q(1) * _w(p, x) + coef * _w(ui)),
        ]
    meta = {"q_domain": "real, q > 0, q != 1", "variant": variant}
    return Presentation(f"schmudgen" if variant == "equivalent" else "schmudgen_definition",
                        [x, p, ui, u], rels, inverse_pairs=[(u, ui)], metadata=meta)


def _wess_schwenk():
    x = Generator("x", None, 0)
    xbar = Generator("xbar", None, 1)
    p = Generator("p", None, 2)
    rels = [
        ("p_x", _w(p, x) - _q(1) * _w(x, p) + I * HBAR * NCPoly.one()),
        ("p_xbar", _w(p, xbar) - _q(-1) * _w(xbar, p) + I * _q(-1) * HBAR * NCPoly.one()),
        ("x_xbar", _w(x, xbar) - _q(1) * _w(xbar, x)),
    ]
    return Presentation("wess_schwenk", [x, xbar, p], rels,
                        metadata={"q_domain": "real, q != 0"})


_GADDIS_VARIANTS = ("consistent", "printed")


def _gaddis(p=None, q=None, variant="consistent"):
    if variant not in _GADDIS_VARIANTS:
        raise ParamError(f"gaddis: variant must be one of {_GADDIS_VARIANTS}")
    pv = C.from_scalar(p) if p is not None else _p(1)
    qv = C.from_scalar(q) if q is not None else _q(1)
    x = Generator("x", None, 0)
    z = Generator("z", None, 1)
    y = Generator("y", None, 2)
    # The widely printed form of the z-x relation uses q**-1; it is
    # inconsistent with the power identities and breaks confluence for
    # p != q, so the default uses p**-1 and the printed form is kept as a
    # documented variant.
    zx_scale = pv.inverse() if variant == "consistent" else qv.inverse()
    rels = [
        ("z_x", _w(z, x) - zx_scale * _w(x, z)),
        ("z_y", _w(z, y) - pv * _w(y, z)),
        ("y_x", _w(y, x) - qv * _w(x, y) - HBAR * _w(z)),
    ]
    name = "gaddis" if variant == "consistent" else "gaddis_printed"
    return Presentation(name, [x, z, y], rels,
                        parameters={"p": pv, "q": qv},
                        metadata={"pq_domain": "positive reals", "variant": variant})


def _poly_in_h(value, h, what):
    from .errors import ParseError
    from .parser import parse_expr

    if isinstance(value, str):
        try:
            value = parse_expr(value, _Scope([h]))
        except ParseError as exc:
            raise ParamError(f"{what} must be a polynomial in h: {exc}") from exc
    value = NCPoly.from_scalar(value)
    for w in value.terms:
        for g in w:
            if g != h:
                raise ParamError(f"{what} must be a polynomial in h, found {g.sym}")
    return value


def _gha(f="h^2"):
    x = Generator("x", None, 0)
    h = Generator("h", None, 1)
    y = Generator("y", None, 2)
    f = _poly_in_h(f, h, "f")
    rels = [
        ("h_x", _w(h, x) - _w(x) * f),
        ("y_h", _w(y, h) - f * _w(y)),
        ("y_x", _w(y, x) - _w(x, y) - HBAR * f + HBAR * _w(h)),
    ]
    return Presentation("gha", [x, h, y], rels, parameters={"f": f},
                        order_kind="invlex")


def _q_gha(f="h^2", g="h"):
    x = Generator("x", None, 0)
    h = Generator("h", None, 1)
    y = Generator("y", None, 2)
    f = _poly_in_h(f, h, "f")
    g = _poly_in_h(g, h, "g")
    rels = [
        ("h_x", _w(h, x) - _w(x) * f),
        ("y_h", _w(y, h) - f * _w(y)),
        ("y_x", _w(y, x) - _q(1) * _w(x, y) - HBAR * g),
    ]
    return Presentation("q_gha", [x, h, y], rels, parameters={"f": f, "g": g},
                        order_kind="invlex")


def _qhbar():
    x = Generator("x", None, 0)
    p = Generator("p", None, 1)
    rels = [
        ("p_x", _w(p, x) - _q(1) * _w(x, p) + I * _q("1/2") * HBAR * NCPoly.one()),
    ]
    return Presentation("qhbar", [x, p], rels,
                        metadata={"q_domain": "complex, q != 0"})


def _qhbar_quantization(opaque="D_jk"):
    x = Generator("x", None, 0)
    p = Generator("p", None, 1)
    d = C.opaque(opaque)
    rels = [
        ("x_p", _w(x, p) - _q(1) * _w(p, x) - I * HBAR * d * NCPoly.one()),
    ]
    return Presentation("qhbar_quantization", [x, p], rels,
                        parameters={opaque: "opaque"},
                        metadata={"q_domain": "complex, q != 0",
                                  "structure_function": opaque})


@dataclass
class UnifiedParams:
    """Parameters of the unified q-hbar Heisenberg algebra.

    ``psi``, ``pi`` and ``phi`` are the dynamical functions: arbitrary
    polynomials in the declared generators over the coefficient field.
    The deformation parameter is constrained to q not in {0, 1}; q = 1 is
    reachable only through the explicit classical-limit pathway.
    """

    n: int
    m: int
    l: int
    psi: object = 1
    pi: object = 0
    phi: object = 0
    alpha_range: tuple = (1,)
    lambda_range: tuple = (1,)
    beta_range: tuple = (1,)

    def __post_init__(self):
        for name in ("n", "m", "l"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParamError(f"unified: parameter {name} must be an integer, "
                                 f"got {v!r}")


def unified_relation_polys(n, m, l, psi, pi, phi, x, y, p):
    """The three defining relation polynomials for one index combination.

    x, y, p are single-generator polynomials (already renamed if the caller
    targets another algebra); psi/pi/phi are polynomials over the same
    alphabet.
    """
    psi = NCPoly.from_scalar(psi)
    pi = NCPoly.from_scalar(pi)
    phi = NCPoly.from_scalar(phi)
    qm1 = _q(1) - C.one()
    rel1 = x * p - _q(n) * (p * x) - (I * _q(n - 1) * C.hbar_power(n)) * psi
    rel2 = _q(m) * (x * y) - y * x + (I * qm1 ** (m - 1) * C.hbar_power(m - 1)) * pi
    rel3 = _q(l) * (y * p) - _q(l + 1) * (p * y) - (I * C.hbar_power(l)) * phi
    return rel1, rel2, rel3


def unified(params):
    """Construct the unified q-hbar Heisenberg presentation."""
    from .parser import parse_expr

    xs = [Generator("x", a, i) for i, a in enumerate(params.alpha_range)]
    ys = [Generator("y", lam, len(xs) + i) for i, lam in enumerate(params.lambda_range)]
    ps = [Generator("p", b, len(xs) + len(ys) + i) for i, b in enumerate(params.beta_range)]
    gens = xs + ys + ps
    scope = _Scope(gens)

    def as_poly(v):
        if isinstance(v, str):
            return parse_expr(v, scope)
        return NCPoly.from_scalar(v)

    psi, pi, phi = as_poly(params.psi), as_poly(params.pi), as_poly(params.phi)
    rels = []
    for gx in xs:
        for gp in ps:
            r1, _, _ = unified_relation_polys(params.n, params.m, params.l,
                                              psi, pi, phi,
                                              _w(gx), NCPoly.zero(), _w(gp))
            rels.append((f"xp_{gx.index}_{gp.index}", r1))
    for gx in xs:
        for gy in ys:
            _, r2, _ = unified_relation_polys(params.n, params.m, params.l,
                                              psi, pi, phi,
                                              _w(gx), _w(gy), NCPoly.zero())
            rels.append((f"xy_{gx.index}_{gy.index}", r2))
    for gy in ys:
        for gp in ps:
            _, _, r3 = unified_relation_polys(params.n, params.m, params.l,
                                              psi, pi, phi,
                                              NCPoly.zero(), _w(gy), _w(gp))
            rels.append((f"yp_{gy.index}_{gp.index}", r3))
    return Presentation(
        "unified", gens, rels,
        parameters={"n": params.n, "m": params.m, "l": params.l,
                    "psi": psi, "pi": pi, "phi": phi},
        metadata={"q_domain": "real, q not in {0, 1}; q = 1 only via the "
                              "classical-limit pathway"})


def _subs_poly(poly, assign):
    return NCPoly({w: c.substitute(assign) for w, c in poly.terms.items()})


def classical_limit(presentation):
    """Substitute q = 1 (s = 1) throughout.

    Requires every relation coefficient to be pole-free at s = 1; rows with
    (q-1) powers in a denominator are rejected with PoleAtPoint.
    """
    assign = {"s": 1}
    rels = [(label, _subs_poly(p, assign)) for label, p in presentation.relations]
    rels = [(label, p) for label, p in rels if not p.is_zero]
    params = {}
    for k, v in presentation.parameters.items():
        if isinstance(v, Coefficient):
            params[k] = v.substitute(assign)
        elif isinstance(v, NCPoly):
            params[k] = _subs_poly(v, assign)
        else:
            params[k] = v
    meta = dict(presentation.metadata)
    meta["limit"] = "q = 1"
    return Presentation(f"{presentation.name}@q=1", presentation.generators, rels,
                        inverse_pairs=presentation.inverse_pairs,
                        parameters=params, metadata=meta,
                        order_kind=presentation.order_kind)


# ---------------------------------------------------------------------------
# Ore extraction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OreData:
    """Sigma and delta maps of an iterated Ore tower.

    Keys are (mover, over) symbol pairs: mover*over = sigma*mover + delta
    holds in the algebra, with sigma and delta free of the mover.  Pairs
    with the mover later in the tower are mandatory; the reverse readings
    are recorded wherever they are solvable, since the literature states
    some towers that way.
    """

    tower: tuple
    sigma: dict
    delta: dict

    def entry(self, mover, over):
        key = (mover, over)
        return self.sigma.get(key), self.delta.get(key)


def _split_ore_shape(nf, mover):
    """Split a normal form as P*mover + D with P, D free of the mover."""
    P = {}
    D = {}
    for w, c in nf.terms.items():
        letters = tuple(w)
        if mover not in letters:
            D[w] = c
        elif letters[-1] == mover and mover not in letters[:-1]:
            P[Word(letters[:-1])] = c
        else:
            return None
    return NCPoly(P), NCPoly(D)


def extract_ore(presentation, tower_order):
    """Read the sigma/delta data of an Ore tower off the rewrite system.

    For each later generator a and earlier generator b the normal form of
    a*b must split as sigma*a + delta with sigma, delta in the earlier
    subalgebra; every recorded entry is re-verified by normalizing
    a*b - sigma*a - delta to zero.
    """
    sysm = presentation.system()
    tower = tuple(presentation.gen(g) if isinstance(g, str) else g
                  for g in tower_order)
    sigma = {}
    delta = {}

    def record(a, b, P, D):
        key = (a.sym, b.sym)
        check = _w(a, b) - P * _w(a) - D
        if not normalize(check, sysm).is_zero:
            raise NotOreShaped(f"internal check failed for pair ({a.sym}, {b.sym})")
        sigma[key] = P
        delta[key] = D

    for i, a in enumerate(tower):
        earlier = tower[:i]
        allowed = {g.sym for g in earlier}
        for b in earlier:
            nf = normalize(_w(a, b), sysm)
            split = _split_ore_shape(nf, a)
            if split is None:
                raise NotOreShaped(
                    f"{presentation.name}: normal form of {a.sym}*{b.sym} is not "
                    f"sigma*{a.sym} + delta")
            P, D = split
            used = set()
            for w in list(P.terms) + list(D.terms):
                used.update(g.sym for g in w)
            if not used <= allowed:
                raise NotOreShaped(
                    f"{presentation.name}: sigma/delta for ({a.sym}, {b.sym}) "
                    f"leave the earlier subalgebra: {sorted(used - allowed)}")
            record(a, b, P, D)
    # reverse readings: a*b = c*(b*a) + D solved for a scalar c
    for i, a in enumerate(tower):
        for b in tower[i + 1:]:
            nf_ab = normalize(_w(a, b), sysm)
            nf_ba = normalize(_w(b, a), sysm)
            na = {w: c for w, c in nf_ab.terms.items() if a in tuple(w)}
            ma = {w: c for w, c in nf_ba.terms.items() if a in tuple(w)}
            if not ma or set(na) != set(ma):
                continue
            w0 = next(iter(ma))
            scale = na[w0] / ma[w0]
            if any(not (na[w] == scale * ma[w]) for w in ma):
                continue
            D = nf_ab - nf_ba * scale
            if any(a in tuple(w) for w in D.terms):
                continue
            record(a, b, _w(b) * scale, D)
    return OreData(tower, sigma, delta)


def presentation_from_ore(ore, name, generators, inverse_pairs=(),
                          order_kind="deglex"):
    """Rebuild a presentation from tower sigma/delta data."""
    gmap = {g.sym: g for g in generators}
    rels = []
    for i, a in enumerate(ore.tower):
        for b in ore.tower[:i]:
            P, D = ore.entry(a.sym, b.sym)
            rels.append((f"ore_{a.sym}_{b.sym}",
                         _w(gmap[a.sym], gmap[b.sym]) - P * _w(gmap[a.sym]) - D))
    return Presentation(name, generators, rels, inverse_pairs=inverse_pairs,
                        order_kind=order_kind)


# ---------------------------------------------------------------------------
# Catalog dispatch
# ---------------------------------------------------------------------------

FAMILIES = {
    "classical": (_classical, "indices=3",
                  "canonical quantization with indexed x_i, p_i"),
    "wess": (_wess, "", "q-deformed algebra with invertible scaling generator"),
    "schmudgen": (_schmudgen, "variant='equivalent'|'definition'",
                  "four-generator q-algebra with invertible u"),
    "wess_schwenk": (_wess_schwenk, "", "q-algebra over the quantum plane"),
    "gaddis": (_gaddis, "p=<coeff>, q=<coeff>, variant='consistent'|'printed'",
               "two-parameter quantum Heisenberg enveloping algebra"),
    "gha": (_gha, "f='h^2'", "generalized Heisenberg algebra driven by f(h)"),
    "q_gha": (_q_gha, "f='h^2', g='h'", "q-generalized Heisenberg algebra"),
    "qhbar": (_qhbar, "", "q-hbar algebra on the quantum phase space"),
    "qhbar_quantization": (_qhbar_quantization, "opaque='D_jk'",
                           "q-hbar quantization with opaque structure function"),
}


def catalog(name, **params):
    """Construct a named algebra presentation from the catalog."""
    try:
        builder, _, _ = FAMILIES[name]
    except KeyError:
        raise UnknownFamily(
            f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}"
        ) from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise ParamError(f"{name}: {exc}") from exc


def family_ids():
    return sorted(FAMILIES)
