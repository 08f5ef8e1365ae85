"""Oriented rewriting: compile relations to rules, normalize, check confluence.

Relations ``poly = 0`` are oriented by picking the order-maximal word as the
left-hand side; the rule rewrites it to the remaining (smaller) terms.  Two
term orders are provided:

* ``deglex``  - word length first, then the precedence sequence from the
  left.  Every catalog family with length-nonincreasing relations uses it.
* ``invlex``  - number of out-of-order adjacent-precedence pairs first, then
  length, then the precedence sequence.  Needed when a relation trades one
  inversion for extra low letters, as in h*x -> x*f(h) with deg f >= 2.

Normalization applies, deterministically, the first matching rule at the
leftmost position of the largest reducible word.  Local confluence is checked
by resolving all overlap and inclusion ambiguities of the rule set (the
diamond lemma); with termination this certifies unique normal forms and that
the irreducible words form a linear basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffs import Coefficient
from .errors import NonTermination, OrientationError
from .ncpoly import NCPoly, Word

DEFAULT_STEP_LIMIT = 10_000


class TermOrder:
    """Well-ordering of words used to orient rules and steer normalization."""

    __slots__ = ("kind",)

    def __init__(self, kind="deglex"):
        if kind not in ("deglex", "invlex"):
            raise ValueError(f"unknown term order {kind!r}")
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("TermOrder is immutable")

    def key(self, word):
        precs = tuple(g.precedence for g in word)
        if self.kind == "deglex":
            return (len(word), precs)
        inv = 0
        for i in range(len(precs)):
            pi = precs[i]
            for j in range(i + 1, len(precs)):
                if pi > precs[j]:
                    inv += 1
        return (inv, len(word), precs)

    def greater(self, w1, w2):
        return self.key(w1) > self.key(w2)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.kind == other.kind

    def __repr__(self):
        return f"TermOrder({self.kind!r})"


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NCPoly
    origin: str

    def __repr__(self):
        return f"{self.lhs!r} -> {self.rhs!r}  [{self.origin}]"


class RewriteSystem:
    """Validated, immutable collection of oriented rules."""

    __slots__ = ("rules", "order", "step_limit", "_by_lhs", "_lengths")

    def __init__(self, rules, order=None, step_limit=DEFAULT_STEP_LIMIT):
        order = order or TermOrder("deglex")
        rules = tuple(rules)
        by_lhs = {}
        for r in rules:
            if len(r.lhs) < 2:
                raise OrientationError(
                    f"rule {r.origin}: left side {r.lhs!r} is shorter than two letters"
                )
            if r.lhs in by_lhs:
                raise OrientationError(
                    f"rules {by_lhs[r.lhs].origin} and {r.origin} share the left side "
                    f"{r.lhs!r}"
                )
            lk = order.key(r.lhs)
            for w in r.rhs.terms:
                if not lk > order.key(w):
                    raise OrientationError(
                        f"rule {r.origin}: right-side word {w!r} is not smaller than "
                        f"{r.lhs!r}"
                    )
            by_lhs[r.lhs] = r
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "step_limit", int(step_limit))
        object.__setattr__(self, "_by_lhs", by_lhs)
        object.__setattr__(self, "_lengths", tuple(sorted({len(r.lhs) for r in rules})))

    def __setattr__(self, name, value):
        raise AttributeError("RewriteSystem is immutable")

    def match_at(self, word, pos):
        """First rule whose lhs occurs in ``word`` at ``pos`` (shortest lhs
        wins), or None."""
        for L in self._lengths:
            if pos + L > len(word):
                break
            r = self._by_lhs.get(tuple.__getitem__(word, slice(pos, pos + L)))
            if r is not None:
                return r
        return None

    def first_redex(self, word):
        for pos in range(len(word)):
            r = self.match_at(word, pos)
            if r is not None:
                return pos, r
        return None

    def is_irreducible(self, word):
        return self.first_redex(word) is None

    def __repr__(self):
        return f"RewriteSystem({len(self.rules)} rules, {self.order.kind})"


def orient(presentation, step_limit=DEFAULT_STEP_LIMIT):
    """Compile a presentation's relations into a RewriteSystem.

    Each relation r = 0 becomes ``lead -> lead - r/lc`` where ``lead`` is the
    unique order-maximal word of r and lc its coefficient.  Declared inverse
    pairs contribute the two cancellation rules g*g_inv -> 1 and
    g_inv*g -> 1 unless equivalent relations are already listed.  Exact
    duplicates and relations whose leading word is empty or a single letter
    are rejected loudly: they are presentation typos.
    """
    order = TermOrder(presentation.order_kind)
    rules = []
    seen = {}
    for label, poly in presentation.relations:
        if poly.is_zero:
            raise OrientationError(f"relation {label} is identically zero")
        words = list(poly.terms)
        lead = max(words, key=order.key)
        lk = order.key(lead)
        if sum(1 for w in words if order.key(w) == lk) > 1:
            raise OrientationError(f"relation {label} has no unique maximal word")
        if len(lead) < 2:
            raise OrientationError(
                f"relation {label}: maximal word {lead!r} is shorter than two letters"
            )
        lc = poly.terms[lead]
        rhs = NCPoly.from_word(lead) - poly * lc.inverse()
        prev = seen.get(lead)
        if prev is not None and prev[1] == rhs:
            raise OrientationError(
                f"relations {prev[0]} and {label} orient to the same rule"
            )
        seen.setdefault(lead, (label, rhs))
        rules.append(RewriteRule(Word(lead), rhs, label))
    for g, ginv in presentation.inverse_pairs:
        for a, b, tag in ((g, ginv, f"unit:{g.sym}*{ginv.sym}"),
                          (ginv, g, f"unit:{ginv.sym}*{g.sym}")):
            lhs = Word((a, b))
            if lhs not in {r.lhs for r in rules}:
                rules.append(RewriteRule(lhs, NCPoly.one(), tag))
    return RewriteSystem(rules, order, step_limit)


def _apply_at(terms, word, coeff, pos, rule):
    """One rewrite step on a term dict: replace ``word``'s occurrence of
    rule.lhs at ``pos``."""
    out = dict(terms)
    left = out.get(word, Coefficient.zero()) - coeff
    if left.is_zero:
        out.pop(word, None)
    else:
        out[word] = left
    prefix = tuple.__getitem__(word, slice(0, pos))
    suffix = tuple.__getitem__(word, slice(pos + len(rule.lhs), len(word)))
    for rw, rc in rule.rhs.terms.items():
        nw = Word(prefix + tuple(rw) + suffix)
        s = out.get(nw, Coefficient.zero()) + coeff * rc
        if s.is_zero:
            out.pop(nw, None)
        else:
            out[nw] = s
    return out


def _reduce(poly, sys, trace):
    terms = dict(poly.terms)
    steps = 0
    chain = []
    while True:
        best = None
        best_key = None
        best_match = None
        for w in terms:
            k = sys.order.key(w)
            if best_key is not None and k <= best_key:
                continue
            m = sys.first_redex(w)
            if m is not None:
                best, best_key, best_match = w, k, m
        if best is None:
            return NCPoly(terms)
        steps += 1
        if steps > sys.step_limit:
            raise NonTermination(
                f"step limit {sys.step_limit} exceeded", chain=chain[-5:]
            )
        pos, rule = best_match
        terms = _apply_at(terms, best, terms[best], pos, rule)
        snapshot = NCPoly(terms)
        chain.append((rule.origin, pos, snapshot))
        if trace is not None:
            trace.append((rule.origin, pos, snapshot))


def normalize(poly, sys):
    """Fixed point of rule application; canonical form when the system is
    confluent."""
    return _reduce(poly, sys, None)


def reduce_trace(poly, sys):
    """All reduction steps as (rule id, position, intermediate polynomial).

    Replaying the trace ends at ``normalize(poly, sys)``.
    """
    trace = []
    _reduce(poly, sys, trace)
    return trace


@dataclass(frozen=True)
class CriticalPair:
    overlap_word: Word
    left_rule: str
    right_rule: str
    left_result: NCPoly
    right_result: NCPoly
    resolved: bool

    def __repr__(self):
        status = "resolved" if self.resolved else "UNRESOLVED"
        return (f"CriticalPair({self.overlap_word!r}; {self.left_rule} / "
                f"{self.right_rule}; {status})")


def critical_pairs(sys, max_overlap_len=6):
    """All overlap and inclusion ambiguities of the rule set.

    For every word in which two rule left sides overlap, both one-step
    results are computed and the pair is resolved when their normal forms
    agree.
    """
    max_len = max((len(r.lhs) for r in sys.rules), default=0)
    if max_overlap_len < max_len:
        raise ValueError(
            f"max_overlap_len {max_overlap_len} is below the longest lhs {max_len}"
        )
    pairs = []
    rules = sys.rules
    for r1 in rules:
        for r2 in rules:
            l1, l2 = r1.lhs, r2.lhs
            # suffix of r1.lhs equals prefix of r2.lhs
            for k in range(1, min(len(l1), len(l2))):
                if tuple(l1[len(l1) - k:]) != tuple(l2[:k]):
                    continue
                w = Word(tuple(l1) + tuple(l2[k:]))
                if len(w) > max_overlap_len:
                    continue
                pairs.append((w, r1, 0, r2, len(l1) - k))
            # r2.lhs properly inside r1.lhs
            if r1 is not r2 and len(l2) <= len(l1):
                start = 0
                while True:
                    idx = l1.find(l2, start)
                    if idx < 0:
                        break
                    if not (idx == 0 and len(l1) == len(l2)):
                        pairs.append((l1, r1, 0, r2, idx))
                    start = idx + 1
    out = []
    seen = set()
    for w, r1, p1, r2, p2 in pairs:
        sig = (tuple(w), r1.origin, p1, r2.origin, p2)
        if sig in seen or (r1 is r2 and p1 == p2):
            continue
        seen.add(sig)
        one = Coefficient.one()
        left = NCPoly(_apply_at({w: one}, w, one, p1, r1))
        right = NCPoly(_apply_at({w: one}, w, one, p2, r2))
        resolved = normalize(left, sys) == normalize(right, sys)
        out.append(CriticalPair(w, r1.origin, r2.origin, left, right, resolved))
    out.sort(key=lambda cp: (sys.order.key(cp.overlap_word), cp.left_rule,
                             cp.right_rule))
    return out


@dataclass(frozen=True)
class ConfluenceReport:
    confluent: bool
    unresolved: tuple
    checked: int
    max_overlap_len: int

    def __repr__(self):
        verdict = "confluent" if self.confluent else "NOT confluent"
        return (f"{verdict} up to overlap length {self.max_overlap_len} "
                f"({self.checked} ambiguities, {len(self.unresolved)} unresolved)")


def check_confluence(sys, max_overlap_len=6):
    pairs = critical_pairs(sys, max_overlap_len)
    unresolved = tuple(p for p in pairs if not p.resolved)
    return ConfluenceReport(not unresolved, unresolved, len(pairs), max_overlap_len)
