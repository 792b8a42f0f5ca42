"""Reduction systems on the free algebra and a Diamond Lemma harness.

A ReductionSystem carries a monomial well-ordering and a list of rules
(word -> polynomial in strictly smaller words).  normal_form rewrites the
leftmost reducible subword of each monomial until none remains; rule
compatibility with the order makes this terminate, and once the harness
certifies that every overlap ambiguity is resolvable, the set of irreducible
words is a basis of the presented algebra and normal forms are unique.

Orders are length-first, then letterwise by rank reading either from the
left (lex) or from the right (colex).  Both are semigroup total orders with
the descending chain condition; some rule sets (the quantum SL(2) one in
particular) can only be oriented by the colex variant.

Inclusion ambiguities (one left-hand side inside another) are rejected at
construction: none of the presentations here need them, and their absence
means at most one rule matches at a given position.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import ONE
from .ncpoly import EMPTY, AlphabetError, NCPoly, Word


class IncompatibleRuleError(ValueError):
    """A rule's right-hand side is not strictly smaller than its left."""


class InclusionAmbiguityError(ValueError):
    """One rule's left-hand side occurs inside another's."""


class MonomialOrder:
    """Length-then-lexicographic word order over a ranked alphabet.

    letters are listed in ascending rank.  direction 'left' compares
    letterwise from the start of the word, 'right' from the end (colex).
    """

    def __init__(self, letters, direction="left"):
        if direction not in ("left", "right"):
            raise ValueError(f"unknown direction {direction!r}")
        self.letters = tuple(letters)
        self.direction = direction
        self._rank = {x: i for i, x in enumerate(self.letters)}
        if len(self._rank) != len(self.letters):
            raise ValueError("duplicate letters in order")

    def key(self, word):
        ranks = [self._rank[x] for x in word]
        if self.direction == "right":
            ranks.reverse()
        return (len(word), tuple(ranks))

    def less(self, u, v):
        return self.key(u) < self.key(v)

    def __repr__(self):
        arrow = {"left": "lex", "right": "colex"}[self.direction]
        return f"MonomialOrder({'<'.join(self.letters)}, {arrow})"


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: NCPoly

    def __repr__(self):
        return f"Rule({'*'.join(self.lhs)} -> {self.rhs})"


@dataclass(frozen=True)
class Ambiguity:
    """Overlap word = prefix + overlap + suffix, with
    lhs_i = prefix + overlap and lhs_j = overlap + suffix."""

    i: int
    j: int
    prefix: Word
    overlap: Word
    suffix: Word

    @property
    def word(self):
        return self.prefix + self.overlap + self.suffix


@dataclass
class ResolvabilityReport:
    resolvable: bool
    ambiguities: int
    failures: list = field(default_factory=list)


class ReductionSystem:
    """An ordered, inclusion-free rewriting system with cached normal forms."""

    def __init__(self, alphabet, order, rules):
        self.alphabet = tuple(alphabet)
        self.order = order
        for x in self.alphabet:
            if x not in order._rank:
                raise ValueError(f"letter {x!r} missing from the order")
        self.rules = tuple(rules)
        self._by_first = {}
        for idx, rule in enumerate(self.rules):
            if not rule.lhs:
                raise ValueError("empty left-hand side")
            for w in rule.rhs.terms:
                if not order.less(w, rule.lhs):
                    raise IncompatibleRuleError(
                        f"rule {rule!r}: monomial {'*'.join(w) or '1'} is not "
                        f"smaller than the left-hand side"
                    )
            self._by_first.setdefault(rule.lhs[0], []).append((idx, rule))
        self._reject_inclusions()
        self._nf_cache = {}

    def _reject_inclusions(self):
        for i, r in enumerate(self.rules):
            for j, s in enumerate(self.rules):
                if i == j:
                    continue
                if len(r.lhs) <= len(s.lhs) and self._find_subword(s.lhs, r.lhs) is not None:
                    raise InclusionAmbiguityError(
                        f"lhs of {r!r} occurs inside lhs of {s!r}"
                    )

    @staticmethod
    def _find_subword(word, sub):
        n, m = len(word), len(sub)
        for i in range(n - m + 1):
            if word[i : i + m] == sub:
                return i
        return None

    # -- single-step machinery -------------------------------------------

    def _find_redex(self, word):
        """Leftmost (position, rule) whose lhs matches, or None."""
        n = len(word)
        for i in range(n):
            for _, rule in self._by_first.get(word[i], ()):
                m = len(rule.lhs)
                if i + m <= n and word[i : i + m] == rule.lhs:
                    return i, rule
        return None

    def is_irreducible(self, word):
        return self._find_redex(word) is None

    def _rewrite_once(self, word, pos, rule):
        head, tail = word[:pos], word[pos + len(rule.lhs) :]
        return {head + w + tail: c for w, c in rule.rhs.terms.items()}

    # -- normal forms -------------------------------------------------------

    def nf_word(self, word):
        """Normal form of a single word, memoized for every word touched."""
        cache = self._nf_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        stack = [word]
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            redex = self._find_redex(u)
            if redex is None:
                cache[u] = NCPoly({u: ONE}, self.alphabet)
                stack.pop()
                continue
            step = self._rewrite_once(u, *redex)
            pending = [v for v in step if v not in cache]
            if pending:
                stack.extend(pending)
                continue
            acc = {}
            for v, c in step.items():
                for w, cw in cache[v].terms.items():
                    s = acc.get(w)
                    cc = c * cw
                    s = cc if s is None else s + cc
                    if s.is_zero():
                        acc.pop(w, None)
                    else:
                        acc[w] = s
            poly = NCPoly.__new__(NCPoly)
            poly.terms = acc
            poly.alphabet = self.alphabet
            cache[u] = poly
            stack.pop()
        return cache[word]

    def normal_form(self, p):
        """Linear extension of nf_word to polynomials."""
        if isinstance(p, tuple):
            return self.nf_word(p)
        if p.alphabet is not None and p.alphabet != self.alphabet:
            raise AlphabetError(
                f"polynomial over {p.alphabet} reduced in system over {self.alphabet}"
            )
        out = NCPoly.zero(self.alphabet)
        for w, c in p.terms.items():
            for x in w:
                if x not in self.order._rank:
                    raise AlphabetError(f"letter {x!r} not in alphabet {self.alphabet}")
            out = out + self.nf_word(w).scale(c)
        return out

    # -- Diamond Lemma harness ----------------------------------------------

    def overlap_ambiguities(self):
        """All words u+v+x with lhs_i = u+v, lhs_j = v+x, v nonempty.

        The degenerate total overlap of a rule with itself (u and x both
        empty) is skipped; distinct rules never share a full left-hand side
        because inclusions are rejected at construction.
        """
        out = []
        for i, ri in enumerate(self.rules):
            for j, rj in enumerate(self.rules):
                top = min(len(ri.lhs), len(rj.lhs))
                for k in range(1, top + 1):
                    if k == len(ri.lhs) == len(rj.lhs):
                        continue
                    if ri.lhs[-k:] == rj.lhs[:k]:
                        out.append(
                            Ambiguity(i, j, ri.lhs[:-k], ri.lhs[-k:], rj.lhs[k:])
                        )
        return out

    def check_resolvable(self):
        """Reduce both parses of every overlap word and compare normal forms."""
        failures = []
        ambiguities = self.overlap_ambiguities()
        for amb in ambiguities:
            ri, rj = self.rules[amb.i], self.rules[amb.j]
            suffix = NCPoly.monomial(amb.suffix, alphabet=self.alphabet)
            prefix = NCPoly.monomial(amb.prefix, alphabet=self.alphabet)
            left_first = self.normal_form(ri.rhs * suffix)
            right_first = self.normal_form(prefix * rj.rhs)
            if left_first != right_first:
                failures.append((amb, left_first, right_first))
        return ResolvabilityReport(not failures, len(ambiguities), failures)

    def __repr__(self):
        return f"ReductionSystem({len(self.rules)} rules over {self.alphabet})"
