"""The free associative algebra over Q(w) and its tensor square.

Monomials are words: tuples of single-letter generator names.  A polynomial
is a finite map from words to nonzero scalars, so equality is plain map
comparison.  TensorPoly is the same thing on pairs of words; it is a first
class type because the two slots of a tensor get reduced in different
algebras (e.g. the second slot of a coaction lives in a finite quotient).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloScalar, ONE, ZERO

Word = tuple
EMPTY = ()


class AlphabetError(ValueError):
    """Operands declared over incompatible generator alphabets."""


def _coerce_scalar(c):
    if isinstance(c, CycloScalar):
        return c
    if isinstance(c, (int, Fraction)):
        return CycloScalar(c)
    return None


def _merge_alphabets(x, y):
    if x is None:
        return y
    if y is None or x == y:
        return x
    raise AlphabetError(f"alphabet mismatch: {x} vs {y}")


def _check_word(word, alphabet):
    for letter in word:
        if letter not in alphabet:
            raise AlphabetError(f"letter {letter!r} not in alphabet {alphabet}")


class NCPoly:
    """Finite linear combination of words with CycloScalar coefficients.

    The optional alphabet records which generators the polynomial may
    mention; combining polynomials over different declared alphabets raises
    AlphabetError.  Equality and hashing ignore the alphabet and compare the
    term maps only.
    """

    __slots__ = ("terms", "alphabet")

    def __init__(self, terms=None, alphabet=None):
        clean = {}
        if terms:
            for word, coeff in terms.items():
                c = _coerce_scalar(coeff)
                if c is None:
                    raise TypeError(f"bad coefficient {coeff!r}")
                if c.is_zero():
                    continue
                if alphabet is not None:
                    _check_word(word, alphabet)
                clean[word] = c
        self.terms = clean
        self.alphabet = tuple(alphabet) if alphabet is not None else None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, alphabet=None):
        return cls({}, alphabet)

    @classmethod
    def one(cls, alphabet=None):
        return cls({EMPTY: ONE}, alphabet)

    @classmethod
    def monomial(cls, word, coeff=ONE, alphabet=None):
        return cls({tuple(word): coeff}, alphabet)

    @classmethod
    def gen(cls, name, alphabet=None):
        return cls({(name,): ONE}, alphabet)

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def coeff(self, word):
        return self.terms.get(tuple(word), ZERO)

    def words(self):
        return self.terms.keys()

    def is_monomial(self):
        return len(self.terms) == 1

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        alphabet = _merge_alphabets(self.alphabet, other.alphabet)
        out = dict(self.terms)
        for word, c in other.terms.items():
            s = out.get(word)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(word, None)
            else:
                out[word] = s
        return NCPoly(out, alphabet)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, self.alphabet)

    def scale(self, c):
        c = _coerce_scalar(c)
        if c is None:
            raise TypeError("scale expects a scalar")
        if c.is_zero():
            return NCPoly.zero(self.alphabet)
        return NCPoly({w: c * x for w, x in self.terms.items()}, self.alphabet)

    def __mul__(self, other):
        c = _coerce_scalar(other)
        if c is not None:
            return self.scale(c)
        if not isinstance(other, NCPoly):
            return NotImplemented
        alphabet = _merge_alphabets(self.alphabet, other.alphabet)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c12 = c1 * c2
                s = out.get(w)
                s = c12 if s is None else s + c12
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return NCPoly(out, alphabet)

    def __rmul__(self, other):
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = NCPoly.one(self.alphabet)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        return poly_text(self)

    def __repr__(self):
        return f"NCPoly({poly_text(self)!r})"


class TensorPoly:
    """Element of the tensor square: map (word, word) -> scalar."""

    __slots__ = ("terms", "alphabets")

    def __init__(self, terms=None, alphabets=(None, None)):
        clean = {}
        if terms:
            for pair, coeff in terms.items():
                c = _coerce_scalar(coeff)
                if c is None:
                    raise TypeError(f"bad coefficient {coeff!r}")
                if c.is_zero():
                    continue
                for slot in (0, 1):
                    if alphabets[slot] is not None:
                        _check_word(pair[slot], alphabets[slot])
                clean[pair] = c
        self.terms = clean
        self.alphabets = tuple(alphabets)

    @classmethod
    def zero(cls, alphabets=(None, None)):
        return cls({}, alphabets)

    @classmethod
    def unit(cls, alphabets=(None, None)):
        return cls({(EMPTY, EMPTY): ONE}, alphabets)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        alphabets = (
            _merge_alphabets(self.alphabets[0], other.alphabets[0]),
            _merge_alphabets(self.alphabets[1], other.alphabets[1]),
        )
        out = dict(self.terms)
        for pair, c in other.terms.items():
            s = out.get(pair)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(pair, None)
            else:
                out[pair] = s
        return TensorPoly(out, alphabets)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorPoly({p: -c for p, c in self.terms.items()}, self.alphabets)

    def scale(self, c):
        c = _coerce_scalar(c)
        if c is None:
            raise TypeError("scale expects a scalar")
        if c.is_zero():
            return TensorPoly.zero(self.alphabets)
        return TensorPoly({p: c * x for p, x in self.terms.items()}, self.alphabets)

    def __mul__(self, other):
        c = _coerce_scalar(other)
        if c is not None:
            return self.scale(c)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return tensor_mul(self, other)

    def __rmul__(self, other):
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    def map_slot(self, slot, f):
        """Apply the linear map f (word -> NCPoly) to one tensor slot."""
        out = TensorPoly.zero()
        acc = {}
        for (w1, w2), c in self.terms.items():
            image = f(w1 if slot == 0 else w2)
            for w, ci in image.terms.items():
                pair = (w, w2) if slot == 0 else (w1, w)
                s = acc.get(pair)
                cc = c * ci
                s = cc if s is None else s + cc
                if s.is_zero():
                    acc.pop(pair, None)
                else:
                    acc[pair] = s
        out.terms = acc
        return out

    def flip(self):
        return TensorPoly(
            {(w2, w1): c for (w1, w2), c in self.terms.items()},
            (self.alphabets[1], self.alphabets[0]),
        )

    def __str__(self):
        return tensor_text(self)

    def __repr__(self):
        return f"TensorPoly({tensor_text(self)!r})"


def tensor(p, r):
    """Outer product p (x) r of two NCPoly values."""
    out = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in r.terms.items():
            out[(w1, w2)] = c1 * c2
    return TensorPoly(out, (p.alphabet, r.alphabet))


def tensor_mul(x, y):
    """Componentwise product (p (x) p') (r (x) r') = pr (x) p'r'."""
    alphabets = (
        _merge_alphabets(x.alphabets[0], y.alphabets[0]),
        _merge_alphabets(x.alphabets[1], y.alphabets[1]),
    )
    out = {}
    for (a1, a2), c in x.terms.items():
        for (b1, b2), d in y.terms.items():
            pair = (a1 + b1, a2 + b2)
            cd = c * d
            s = out.get(pair)
            s = cd if s is None else s + cd
            if s.is_zero():
                out.pop(pair, None)
            else:
                out[pair] = s
    return TensorPoly(out, alphabets)


# -- canonical text form -----------------------------------------------------


def word_text(word, inverse_of=None):
    """Render a word with exponent grouping, e.g. ('a','a','b') -> "a^2*b".

    inverse_of maps a letter to the letter it inverts (e.g. {'d': 'a'} in the
    Borel algebras), rendering runs of d as negative powers of a.
    """
    if not word:
        return "1"
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    parts = []
    for letter, k in runs:
        if inverse_of and letter in inverse_of:
            parts.append(f"{inverse_of[letter]}^-{k}")
        elif k == 1:
            parts.append(letter)
        else:
            parts.append(f"{letter}^{k}")
    return "*".join(parts)


def scalar_text(c, standalone, square_style=False):
    """Coefficient text in q-power notation where possible.

    standalone=True renders the scalar by itself (for the unit word);
    otherwise the result is a prefix to be glued to a word with '*', where
    "" means coefficient 1 and "-" means coefficient -1.  The canonical form
    writes w**2 as q^-1; square_style=True writes q^2 instead.
    """
    qp = c.as_q_power()
    if qp is not None:
        coeff, k = qp
        if k == 0:
            if standalone:
                return str(coeff)
            if coeff == 1:
                return ""
            if coeff == -1:
                return "-"
            return str(coeff)
        if k == 1:
            base = "q"
        else:
            base = "q^2" if square_style else "q^-1"
        if coeff == 1:
            return base
        if coeff == -1:
            return f"-{base}"
        return f"{coeff}*{base}"
    return f"({c})"


def _term_text(word, coeff, inverse_of, square_style=False):
    w = word_text(word, inverse_of)
    if not word:
        return scalar_text(coeff, True, square_style)
    c = scalar_text(coeff, False, square_style)
    if c == "":
        return w
    if c == "-":
        return f"-{w}"
    return f"{c}*{w}"


def _join(parts):
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += f" - {p[1:]}"
        else:
            out += f" + {p}"
    return out


def _default_key(word):
    return (len(word), word)


def poly_text(p, key=None, inverse_of=None, square_style=False):
    if p.is_zero():
        return "0"
    key = key or _default_key
    words = sorted(p.terms, key=key)
    return _join([_term_text(w, p.terms[w], inverse_of, square_style) for w in words])


def tensor_text(tp, keys=(None, None), inverse_of=(None, None), square_style=False):
    if tp.is_zero():
        return "0"
    k1 = keys[0] or _default_key
    k2 = keys[1] or _default_key
    pairs = sorted(tp.terms, key=lambda pr: (k1(pr[0]), k2(pr[1])))
    parts = []
    for w1, w2 in pairs:
        c = tp.terms[(w1, w2)]
        left = _term_text(w1, c, inverse_of[0], square_style)
        parts.append(f"{left} (x) {word_text(w2, inverse_of[1])}")
    return _join(parts)
