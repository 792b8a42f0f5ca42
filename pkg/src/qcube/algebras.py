"""Presented algebras: quantum SL(2) at q = w, its Borel and Cartan
quotients, the 27-dimensional finite quotient, and their Hopf structure.

A HopfPresentation couples a certified reduction system with the values of
the coproduct, counit and antipode on generators; the structure maps extend
(anti)multiplicatively with normal-form reduction after every step.
Construction validates that the structure maps respect every rewrite rule
(so they are well defined on the quotient) and that the Hopf axioms hold on
the generators.

The quantum SL(2) relations are

    ab = q ba,  ac = q ca,  bd = q db,  bc = cb,  cd = q dc,
    ad - q bc = da - q^-1 bc = 1,

with coproduct Delta(T_ij) = sum_k T_ik (x) T_kj, counit the identity
matrix, and antipode S(a, b; c, d) = (d, -q^-1 b; -q c, a).

Normal forms here are {a^p b^r c^s} united with {d^m b^r c^s, m > 0}.  The
second family differs from the more common b^k c^l d^m shape only by the
nonzero scalar q^(m(k+l)); no finite rewriting system can have exactly the
b-c-d-sorted words as its irreducibles (the words a b^r c^s d form an
infinite antichain of minimal forbidden factors), whereas the d-first family
is cut out by seven two-letter forbidden words.  Orienting ad and da toward
bc forces the colex reading of the order.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import ONE, CycloScalar, qpow
from .ncpoly import EMPTY, NCPoly, TensorPoly, poly_text, tensor, tensor_mul, tensor_text
from .qcalc import qbinom_at_omega
from .rewrite import MonomialOrder, ReductionSystem, Rule


class HopfAxiomError(ValueError):
    """A structure map fails well-definedness or a Hopf axiom."""


class HopfPresentation:
    """A presented algebra, optionally with Hopf structure on generators.

    Pure algebras (no coalgebra data) are allowed: the matrix algebra and
    the quantum plane only ever occur as comodule algebras.
    """

    def __init__(
        self,
        name,
        system,
        coproduct_on_gens=None,
        counit_on_gens=None,
        antipode_on_gens=None,
        inverse_of=None,
        parse_expansions=None,
    ):
        self.name = name
        self.system = system
        self.alphabet = system.alphabet
        self.coproduct_on_gens = coproduct_on_gens
        self.counit_on_gens = counit_on_gens
        self.antipode_on_gens = antipode_on_gens
        # letter -> letter it inverts, for a^-k display of Laurent generators
        self.inverse_of = dict(inverse_of or {})
        # extra letters the parser accepts, expanded to polynomials
        self.parse_expansions = dict(parse_expansions or {})
        self._coprod_cache = {EMPTY: TensorPoly.unit((self.alphabet, self.alphabet))}
        self._antipode_cache = {EMPTY: NCPoly.one(self.alphabet)}
        if self.is_hopf:
            self._validate()

    @property
    def is_hopf(self):
        return self.coproduct_on_gens is not None

    # -- element builders ---------------------------------------------------

    def gen(self, letter):
        if letter not in self.alphabet:
            raise ValueError(f"{letter!r} is not a generator of {self.name}")
        return NCPoly.gen(letter, self.alphabet)

    def gens(self):
        return tuple(self.gen(x) for x in self.alphabet)

    def one(self):
        return NCPoly.one(self.alphabet)

    def zero(self):
        return NCPoly.zero(self.alphabet)

    def monomial(self, word, coeff=ONE):
        return NCPoly.monomial(word, coeff, self.alphabet)

    def nf(self, p):
        return self.system.normal_form(p)

    def mul(self, *factors):
        out = self.one()
        for f in factors:
            out = self.nf(out * f)
        return out

    # -- structure maps -------------------------------------------------------

    def tensor_nf(self, tp):
        """Reduce both tensor slots in this algebra."""
        reduced = tp.map_slot(0, self.system.nf_word).map_slot(1, self.system.nf_word)
        return TensorPoly(reduced.terms, (self.alphabet, self.alphabet))

    def _coprod_word(self, word):
        cached = self._coprod_cache.get(word)
        if cached is not None:
            return cached
        head = self._coprod_word(word[:-1])
        out = self.tensor_nf(tensor_mul(head, self.coproduct_on_gens[word[-1]]))
        self._coprod_cache[word] = out
        return out

    def coproduct(self, p):
        if isinstance(p, tuple):
            return self._coprod_word(p)
        out = TensorPoly.zero((self.alphabet, self.alphabet))
        for w, c in p.terms.items():
            out = out + self._coprod_word(w).scale(c)
        return out

    def counit(self, p):
        if isinstance(p, tuple):
            p = self.monomial(p)
        total = CycloScalar(0)
        for w, c in p.terms.items():
            val = c
            for letter in w:
                val = val * self.counit_on_gens[letter]
                if val.is_zero():
                    break
            total = total + val
        return total

    def _antipode_word(self, word):
        cached = self._antipode_cache.get(word)
        if cached is not None:
            return cached
        # antimultiplicative: S(x w') = S(w') S(x)
        out = self.nf(self._antipode_word(word[1:]) * self.antipode_on_gens[word[0]])
        self._antipode_cache[word] = out
        return out

    def antipode(self, p):
        if isinstance(p, tuple):
            return self._antipode_word(p)
        out = self.zero()
        for w, c in p.terms.items():
            out = out + self._antipode_word(w).scale(c)
        return out

    def sweedler_triples(self, p):
        """(Delta (x) id)(Delta p) as a map (word, word, word) -> scalar."""
        out = {}
        for (w1, w2), c in self.coproduct(p).terms.items():
            for (u1, u2), d in self._coprod_word(w1).terms.items():
                key = (u1, u2, w2)
                s = out.get(key)
                cd = c * d
                s = cd if s is None else s + cd
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def _sweedler_triples_right(self, p):
        out = {}
        for (w1, w2), c in self.coproduct(p).terms.items():
            for (u1, u2), d in self._coprod_word(w2).terms.items():
                key = (w1, u1, u2)
                s = out.get(key)
                cd = c * d
                s = cd if s is None else s + cd
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    # -- validation -------------------------------------------------------------

    def _validate(self):
        for letter in self.alphabet:
            for table, what in (
                (self.coproduct_on_gens, "coproduct"),
                (self.counit_on_gens, "counit"),
                (self.antipode_on_gens, "antipode"),
            ):
                if letter not in table:
                    raise HopfAxiomError(f"{self.name}: no {what} value for {letter!r}")
        # structure maps must kill the ideal: check them on every rule
        for rule in self.system.rules:
            lhs, rhs = rule.lhs, rule.rhs
            if self._coprod_word(lhs) != self.coproduct(rhs):
                raise HopfAxiomError(f"{self.name}: coproduct breaks rule {rule!r}")
            if self.counit(self.monomial(lhs)) != self.counit(rhs):
                raise HopfAxiomError(f"{self.name}: counit breaks rule {rule!r}")
            if self._antipode_word(lhs) != self.antipode(rhs):
                raise HopfAxiomError(f"{self.name}: antipode breaks rule {rule!r}")
        for letter in self.alphabet:
            g = self.gen(letter)
            if self.sweedler_triples(g) != self._sweedler_triples_right(g):
                raise HopfAxiomError(f"{self.name}: coproduct not coassociative on {letter}")
            lc, rc = self.zero(), self.zero()
            for (w1, w2), c in self.coproduct(g).terms.items():
                lc = lc + self.monomial(w2, c * self.counit(self.monomial(w1)))
                rc = rc + self.monomial(w1, c * self.counit(self.monomial(w2)))
            if lc != self.nf(g) or rc != self.nf(g):
                raise HopfAxiomError(f"{self.name}: counit law fails on {letter}")
            target = self.one().scale(self.counit(g))
            left = self.zero()
            right = self.zero()
            for (w1, w2), c in self.coproduct(g).terms.items():
                left = left + self.nf(self._antipode_word(w1) * self.monomial(w2)).scale(c)
                right = right + self.nf(self.monomial(w1) * self._antipode_word(w2)).scale(c)
            if left != target or right != target:
                raise HopfAxiomError(f"{self.name}: antipode law fails on {letter}")

    # -- text -----------------------------------------------------------------

    def text(self, p, square_style=False):
        return poly_text(p, key=self.system.order.key, inverse_of=self.inverse_of,
                         square_style=square_style)

    def tensor_slot_text(self, tp, other=None, square_style=False):
        other = other or self
        return tensor_text(
            tp,
            keys=(self.system.order.key, other.system.order.key),
            inverse_of=(self.inverse_of, other.inverse_of),
            square_style=square_style,
        )

    def __repr__(self):
        return f"HopfPresentation({self.name!r}, {len(self.system.rules)} rules)"


# -- rule building helpers ------------------------------------------------------


def _word(text):
    return tuple(text)


def _rule(lhs, rhs_terms, alphabet):
    return Rule(_word(lhs), NCPoly({_word(w): c for w, c in rhs_terms}, alphabet))


Q = qpow(1)
QINV = qpow(-1)

# Delta(T_ij) = sum_k T_ik (x) T_kj for the generator matrix (a b; c d)
MATRIX_COPRODUCT = {
    "a": (("a", "a"), ("b", "c")),
    "b": (("a", "b"), ("b", "d")),
    "c": (("c", "a"), ("d", "c")),
    "d": (("c", "b"), ("d", "d")),
}


def _matrix_coproduct(letter, image, alphabet):
    """Coproduct of a generator with each matrix entry sent through image."""
    out = TensorPoly.zero((alphabet, alphabet))
    for left, right in MATRIX_COPRODUCT[letter]:
        out = out + tensor(image(left), image(right))
    return out


# -- the quantum group and its quotients ------------------------------------------


@lru_cache(maxsize=None)
def build_slq2():
    """Coordinate algebra of quantum SL(2) at q = w, with certified basis."""
    alphabet = ("a", "b", "c", "d")
    order = MonomialOrder(("c", "b", "a", "d"), direction="right")
    rules = [
        _rule("ba", [("ab", QINV)], alphabet),
        _rule("ca", [("ac", QINV)], alphabet),
        _rule("cb", [("bc", ONE)], alphabet),
        _rule("bd", [("db", Q)], alphabet),
        _rule("cd", [("dc", Q)], alphabet),
        _rule("ad", [("", ONE), ("bc", Q)], alphabet),
        _rule("da", [("", ONE), ("bc", QINV)], alphabet),
    ]
    system = ReductionSystem(alphabet, order, rules)
    gen = lambda x: NCPoly.gen(x, alphabet)
    return HopfPresentation(
        "slq2",
        system,
        coproduct_on_gens={x: _matrix_coproduct(x, gen, alphabet) for x in alphabet},
        counit_on_gens={"a": ONE, "b": CycloScalar(0), "c": CycloScalar(0), "d": ONE},
        antipode_on_gens={
            "a": gen("d"),
            "b": gen("b").scale(-QINV),
            "c": gen("c").scale(-Q),
            "d": gen("a"),
        },
    )


@lru_cache(maxsize=None)
def build_borel_plus():
    """Upper Borel quotient: c = 0, d = a^-1.  Basis {a^p b^r, d^k b^r}."""
    alphabet = ("a", "d", "b")
    order = MonomialOrder(("a", "d", "b"))
    rules = [
        _rule("ad", [("", ONE)], alphabet),
        _rule("da", [("", ONE)], alphabet),
        _rule("ba", [("ab", QINV)], alphabet),
        _rule("bd", [("db", Q)], alphabet),
    ]
    system = ReductionSystem(alphabet, order, rules)
    gen = lambda x: NCPoly.gen(x, alphabet)
    image = lambda x: gen(x) if x != "c" else NCPoly.zero(alphabet)
    return HopfPresentation(
        "borel_plus",
        system,
        coproduct_on_gens={x: _matrix_coproduct(x, image, alphabet) for x in alphabet},
        counit_on_gens={"a": ONE, "d": ONE, "b": CycloScalar(0)},
        antipode_on_gens={"a": gen("d"), "d": gen("a"), "b": gen("b").scale(-QINV)},
        inverse_of={"d": "a"},
    )


@lru_cache(maxsize=None)
def build_borel_minus():
    """Lower Borel quotient: b = 0, d = a^-1.  Basis {a^p c^s, d^k c^s}."""
    alphabet = ("a", "d", "c")
    order = MonomialOrder(("a", "d", "c"))
    rules = [
        _rule("ad", [("", ONE)], alphabet),
        _rule("da", [("", ONE)], alphabet),
        _rule("ca", [("ac", QINV)], alphabet),
        _rule("cd", [("dc", Q)], alphabet),
    ]
    system = ReductionSystem(alphabet, order, rules)
    gen = lambda x: NCPoly.gen(x, alphabet)
    image = lambda x: gen(x) if x != "b" else NCPoly.zero(alphabet)
    return HopfPresentation(
        "borel_minus",
        system,
        coproduct_on_gens={x: _matrix_coproduct(x, image, alphabet) for x in alphabet},
        counit_on_gens={"a": ONE, "d": ONE, "c": CycloScalar(0)},
        antipode_on_gens={"a": gen("d"), "d": gen("a"), "c": gen("c").scale(-Q)},
        inverse_of={"d": "a"},
    )


@lru_cache(maxsize=None)
def build_cartan():
    """Cartan quotient: b = c = 0.  Commutative Laurent algebra on a."""
    alphabet = ("a", "d")
    order = MonomialOrder(("a", "d"))
    rules = [
        _rule("ad", [("", ONE)], alphabet),
        _rule("da", [("", ONE)], alphabet),
    ]
    system = ReductionSystem(alphabet, order, rules)
    gen = lambda x: NCPoly.gen(x, alphabet)
    return HopfPresentation(
        "cartan",
        system,
        coproduct_on_gens={x: tensor(gen(x), gen(x)) for x in alphabet},
        counit_on_gens={"a": ONE, "d": ONE},
        antipode_on_gens={"a": gen("d"), "d": gen("a")},
        inverse_of={"d": "a"},
    )


def _d_expansion(alphabet):
    """d = a^2 (1 + q b c), the inverse-determinant form of d once a^3 = 1."""
    return NCPoly({("a", "a"): ONE, ("a", "a", "b", "c"): Q}, alphabet)


@lru_cache(maxsize=None)
def af_presentation():
    """The 27-dimensional quotient by the cube relations T_ij^3 = delta_ij.

    The generator d is eliminated via d = a^2 (1 + q b c); the parser still
    accepts d and expands it.  Basis {a^p b^r c^s}, p, r, s in {0, 1, 2}.
    """
    alphabet = ("a", "b", "c")
    order = MonomialOrder(("a", "b", "c"))
    rules = [
        _rule("ba", [("ab", QINV)], alphabet),
        _rule("ca", [("ac", QINV)], alphabet),
        _rule("cb", [("bc", ONE)], alphabet),
        _rule("aaa", [("", ONE)], alphabet),
        Rule(_word("bbb"), NCPoly.zero(alphabet)),
        Rule(_word("ccc"), NCPoly.zero(alphabet)),
    ]
    system = ReductionSystem(alphabet, order, rules)
    gen = lambda x: NCPoly.gen(x, alphabet)
    d_exp = _d_expansion(alphabet)
    image = lambda x: d_exp if x == "d" else gen(x)
    return HopfPresentation(
        "af",
        system,
        coproduct_on_gens={x: _matrix_coproduct(x, image, alphabet) for x in alphabet},
        counit_on_gens={"a": ONE, "b": CycloScalar(0), "c": CycloScalar(0)},
        antipode_on_gens={
            "a": d_exp,
            "b": gen("b").scale(-QINV),
            "c": gen("c").scale(-Q),
        },
        parse_expansions={"d": d_exp},
    )


@lru_cache(maxsize=None)
def hplus_presentation():
    """9-dimensional Borel quotient of the finite algebra: c = 0, a^3 = 1."""
    alphabet = ("a", "b")
    order = MonomialOrder(("a", "b"))
    rules = [
        _rule("ba", [("ab", QINV)], alphabet),
        _rule("aaa", [("", ONE)], alphabet),
        Rule(_word("bbb"), NCPoly.zero(alphabet)),
    ]
    system = ReductionSystem(alphabet, order, rules)
    gen = lambda x: NCPoly.gen(x, alphabet)
    aa = NCPoly.monomial(("a", "a"), alphabet=alphabet)
    return HopfPresentation(
        "hplus",
        system,
        coproduct_on_gens={
            "a": tensor(gen("a"), gen("a")),
            "b": tensor(gen("a"), gen("b")) + tensor(gen("b"), aa),
        },
        counit_on_gens={"a": ONE, "b": CycloScalar(0)},
        antipode_on_gens={"a": aa, "b": gen("b").scale(-QINV)},
        parse_expansions={"d": aa},
    )


@lru_cache(maxsize=None)
def hminus_presentation():
    """9-dimensional mirror quotient: b = 0, a^3 = 1."""
    alphabet = ("a", "c")
    order = MonomialOrder(("a", "c"))
    rules = [
        _rule("ca", [("ac", QINV)], alphabet),
        _rule("aaa", [("", ONE)], alphabet),
        Rule(_word("ccc"), NCPoly.zero(alphabet)),
    ]
    system = ReductionSystem(alphabet, order, rules)
    gen = lambda x: NCPoly.gen(x, alphabet)
    aa = NCPoly.monomial(("a", "a"), alphabet=alphabet)
    return HopfPresentation(
        "hminus",
        system,
        coproduct_on_gens={
            "a": tensor(gen("a"), gen("a")),
            "c": tensor(gen("c"), gen("a")) + tensor(aa, gen("c")),
        },
        counit_on_gens={"a": ONE, "c": CycloScalar(0)},
        antipode_on_gens={"a": aa, "c": gen("c").scale(-Q)},
        parse_expansions={"d": aa},
    )


@lru_cache(maxsize=None)
def hpm_presentation():
    """3-dimensional Cartan quotient: the group algebra of Z/3."""
    alphabet = ("a",)
    order = MonomialOrder(("a",))
    rules = [_rule("aaa", [("", ONE)], alphabet)]
    system = ReductionSystem(alphabet, order, rules)
    gen = NCPoly.gen("a", alphabet)
    aa = NCPoly.monomial(("a", "a"), alphabet=alphabet)
    return HopfPresentation(
        "hpm",
        system,
        coproduct_on_gens={"a": tensor(gen, gen)},
        counit_on_gens={"a": ONE},
        antipode_on_gens={"a": aa},
        parse_expansions={"d": aa},
    )


@lru_cache(maxsize=None)
def m3_presentation():
    """M(3, C) presented as the quantum torus x y = q y x, x^3 = y^3 = 1."""
    alphabet = ("x", "y")
    order = MonomialOrder(("x", "y"))
    rules = [
        _rule("yx", [("xy", QINV)], alphabet),
        _rule("xxx", [("", ONE)], alphabet),
        _rule("yyy", [("", ONE)], alphabet),
    ]
    return HopfPresentation("m3", ReductionSystem(alphabet, order, rules))


@lru_cache(maxsize=None)
def qplane_presentation():
    """Quantum plane x y = q y x (no further relations)."""
    alphabet = ("x", "y")
    order = MonomialOrder(("x", "y"))
    rules = [_rule("yx", [("xy", QINV)], alphabet)]
    return HopfPresentation("qplane", ReductionSystem(alphabet, order, rules))


PRESENTATIONS = {
    "slq2": build_slq2,
    "borel_plus": build_borel_plus,
    "borel_minus": build_borel_minus,
    "cartan": build_cartan,
    "af": af_presentation,
    "hplus": hplus_presentation,
    "hminus": hminus_presentation,
    "hpm": hpm_presentation,
}


def get_presentation(name):
    try:
        return PRESENTATIONS[name]()
    except KeyError:
        raise KeyError(
            f"unknown algebra {name!r}; choose from {', '.join(sorted(PRESENTATIONS))}"
        ) from None


# -- word builders -----------------------------------------------------------------


def word_abc(p, r, s):
    return ("a",) * p + ("b",) * r + ("c",) * s


def word_bcd(k, l, m):
    return ("b",) * k + ("c",) * l + ("d",) * m


def borel_word(p, r, letter="b"):
    """Normal-form word a^p b^r of the Borel algebra; negative p uses d."""
    head = ("a",) * p if p >= 0 else ("d",) * (-p)
    return head + (letter,) * r


# -- the Frobenius embedding of the classical algebra ---------------------------------


def frobenius_embed(word):
    """Image of a classical monomial: each barred generator becomes a cube.

    The input word is over the letters a, b, c, d read as commuting classical
    generators; the output is the normal form of the product of their cubes.
    """
    P = build_slq2()
    out = P.one()
    for letter in word:
        out = P.nf(out * P.monomial((letter,) * 3))
    return out


def frobenius_is_hopf_map():
    """Check Delta(Fr(g)) = (Fr (x) Fr)(classical Delta(g)) on generators."""
    P = build_slq2()
    failures = []
    for g in "abcd":
        lhs = P.coproduct(frobenius_embed((g,)))
        rhs = TensorPoly.zero((P.alphabet, P.alphabet))
        for left, right in MATRIX_COPRODUCT[g]:
            rhs = rhs + tensor(frobenius_embed((left,)), frobenius_embed((right,)))
        if lhs != P.tensor_nf(rhs):
            failures.append(g)
    return {"passed": not failures, "failures": failures}


def frobenius_central(max_degree=2):
    """Fr images commute with everything: checked against all generators."""
    P = build_slq2()
    failures = []
    words = [w for w in _classical_words(max_degree)]
    for w in words:
        f = frobenius_embed(w)
        for x in P.alphabet:
            g = P.gen(x)
            if P.nf(f * g) != P.nf(g * f):
                failures.append((w, x))
    return {"passed": not failures, "failures": failures}


def _classical_words(max_degree):
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            for k in range(max_degree + 1 - i - j):
                for l in range(max_degree + 1 - i - j - k):
                    yield ("a",) * i + ("b",) * j + ("c",) * k + ("d",) * l


# -- the closed coproduct formulas --------------------------------------------------


def coproduct_closed_form_abc(p, r, s):
    """Closed-form coproduct of a^p b^r c^s as a q-binomial triple sum."""
    P = build_slq2()
    out = TensorPoly.zero((P.alphabet, P.alphabet))
    for lam in range(p + 1):
        for mu in range(r + 1):
            for nu in range(s + 1):
                coeff = (
                    qbinom_at_omega(p, lam)
                    * qbinom_at_omega(r, mu)
                    * qbinom_at_omega(s, nu)
                )
                if coeff.is_zero():
                    continue
                w1 = (
                    ("a",) * (p - lam) + ("b",) * lam + ("a",) * mu + ("b",) * (r - mu)
                    + ("c",) * (s - nu) + ("d",) * nu
                )
                w2 = (
                    ("a",) * (p - lam) + ("c",) * lam + ("b",) * mu + ("d",) * (r - mu)
                    + ("a",) * (s - nu) + ("c",) * nu
                )
                out = out + tensor(P.nf(P.monomial(w1)), P.nf(P.monomial(w2))).scale(coeff)
    return out


def coproduct_closed_form_bcd(k, l, m):
    """Closed-form coproduct of b^k c^l d^m (m > 0)."""
    P = build_slq2()
    out = TensorPoly.zero((P.alphabet, P.alphabet))
    for lam in range(k + 1):
        for mu in range(l + 1):
            for nu in range(m + 1):
                coeff = (
                    qbinom_at_omega(k, lam)
                    * qbinom_at_omega(l, mu)
                    * qbinom_at_omega(m, nu)
                )
                if coeff.is_zero():
                    continue
                w1 = (
                    ("a",) * lam + ("b",) * (k - lam) + ("c",) * (l - mu) + ("d",) * mu
                    + ("c",) * nu + ("d",) * (m - nu)
                )
                w2 = (
                    ("b",) * lam + ("d",) * (k - lam) + ("a",) * (l - mu) + ("c",) * mu
                    + ("b",) * nu + ("d",) * (m - nu)
                )
                out = out + tensor(P.nf(P.monomial(w1)), P.nf(P.monomial(w2))).scale(coeff)
    return out


def verify_coproduct_closed_form(bound=3):
    """Closed forms against multiplicative expansion, both monomial families."""
    P = build_slq2()
    failures = []
    checked = 0
    for p in range(bound + 1):
        for r in range(bound + 1):
            for s in range(bound + 1):
                checked += 1
                direct = P.coproduct(word_abc(p, r, s))
                if direct != coproduct_closed_form_abc(p, r, s):
                    failures.append(("abc", p, r, s))
    for k in range(bound + 1):
        for l in range(bound + 1):
            for m in range(1, bound + 1):
                checked += 1
                direct = P.coproduct(word_bcd(k, l, m))
                if direct != coproduct_closed_form_bcd(k, l, m):
                    failures.append(("bcd", k, l, m))
    return {"passed": not failures, "checked": checked, "failures": failures}
