"""Exact function-field arithmetic on projective-line components.

Everything is over Q.  A rational function lives on a named component of
the smooth model and is stored as a reduced fraction of dense
polynomials with monic denominator.  Local computations use truncated
Laurent series in the coordinate t - a at a finite place a, and in
s = 1/t at infinity; each series carries an explicit truncation order N
meaning "coefficients are exact for all exponents <= N".  Operations
propagate the worst truncation of their inputs and raise
InsufficientTruncationError instead of ever returning a coefficient
they cannot certify.

Design choices worth knowing:
  * places with irrational coordinates do not exist here; an operation
    that would need one raises NonSplitError,
  * the residue at infinity folds in dt = -s^(-2) ds, so
    residue(dlog(f, p)) equals the valuation of f at p at every place
    including infinity.
"""

from fractions import Fraction

from .arith import bounded_divisors, divisors, format_rat, parse_rat
from .errors import (
    InputError,
    InsufficientTruncationError,
    NonSplitError,
    UndefinedValuationError,
)


class _Infinity:
    """The coordinate of the place at infinity (a unique sentinel)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __deepcopy__(self, memo):
        return self

    def __copy__(self):
        return self


INF = _Infinity()


def parse_coordinate(text):
    text = str(text).strip()
    if text in ("inf", "Inf", "INF", "oo"):
        return INF
    return parse_rat(text)


def format_coordinate(coord):
    return "inf" if coord is INF else format_rat(coord)


class Place:
    """A Q-rational point of one projective-line component."""

    __slots__ = ("component", "coordinate")

    def __init__(self, component, coordinate):
        object.__setattr__(self, "component", str(component))
        if coordinate is not INF:
            coordinate = Fraction(coordinate)
        object.__setattr__(self, "coordinate", coordinate)

    def __setattr__(self, *args):
        raise AttributeError("Place is immutable")

    def is_infinite(self):
        return self.coordinate is INF

    def sort_key(self):
        if self.coordinate is INF:
            return (self.component, 1, Fraction(0))
        return (self.component, 0, self.coordinate)

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and self.component == other.component
            and self.coordinate == other.coordinate
        )

    def __hash__(self):
        return hash((self.component, self.coordinate))

    def __repr__(self):
        return f"{self.component}:{format_coordinate(self.coordinate)}"

    def to_json(self):
        return {"component": self.component, "point": format_coordinate(self.coordinate)}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data["component"], parse_coordinate(data["point"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad place object {data!r}: {exc}") from None


class Poly:
    """Dense polynomial over Q; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def linear(cls, root):
        """The monic factor t - root."""
        return cls([-Fraction(root), 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        out = list(a) + [Fraction(0)] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d, lc = other.degree, other.leading()
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            c = rem[-1] / lc
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(q), Poly(rem)

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading()
        return Poly([c / lc for c in self.coeffs])

    def primitive_int(self):
        """Integer coefficient list with content 1 (positive leading)."""
        if self.is_zero():
            return []
        import math

        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for x in ints:
            g = math.gcd(g, abs(x))
        ints = [x // g for x in ints]
        if ints[-1] < 0:
            ints = [-x for x in ints]
        return ints

    def gcd(self, other):
        """Monic gcd by Euclid; remainders kept primitive to tame growth."""
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            if not r.is_zero():
                r = Poly(r.primitive_int())
            a, b = b, r
        return a.monic()

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shifted_coefficients(self, a, upto):
        """First upto+1 coefficients of p(a + u) as a series in u."""
        cs = list(self.coeffs)
        out = []
        a = Fraction(a)
        for _ in range(upto + 1):
            if not cs:
                out.append(Fraction(0))
                continue
            quotient = []
            acc = cs[-1]
            for c in reversed(cs[:-1]):
                quotient.append(acc)
                acc = c + a * acc
            out.append(acc)
            cs = list(reversed(quotient))
        return out

    def multiplicity_at(self, a):
        """Order of vanishing at the finite point a."""
        if self.is_zero():
            raise UndefinedValuationError("zero polynomial")
        m, cur = 0, self
        a = Fraction(a)
        while True:
            q, r = cur.divmod(Poly.linear(a))
            if not r.is_zero():
                return m
            m, cur = m + 1, q

    def to_json(self):
        return [format_rat(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls([parse_rat(c) for c in data])

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                bits.append(format_rat(c))
            elif i == 1:
                bits.append(f"{format_rat(c)}*t" if c != 1 else "t")
            else:
                bits.append(f"{format_rat(c)}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(reversed(bits))


class RatFunc:
    """Reduced ratio of polynomials on a named component, denominator monic."""

    __slots__ = ("num", "den", "component")

    def __init__(self, num, den=None, component="C0"):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly.const(1) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero():
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lc = den.leading()
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "component", str(component))

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num, den, component):
        """Skip gcd reduction; caller guarantees num, den coprime, den monic."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "component", str(component))
        return obj

    @classmethod
    def constant(cls, c, component="C0"):
        return cls(Poly.const(c), None, component)

    @classmethod
    def variable(cls, component="C0"):
        return cls(Poly([0, 1]), None, component)

    @classmethod
    def from_factors(cls, factors, scale=1, component="C0"):
        """Build scale * prod (t - a)^e from (a, e) pairs with distinct a."""
        num, den = Poly.const(1), Poly.const(1)
        seen = set()
        for a, e in factors:
            a = Fraction(a)
            if a in seen:
                raise ValueError("repeated root in from_factors")
            seen.add(a)
            if e > 0:
                num = num * Poly.linear(a) ** e
            elif e < 0:
                den = den * Poly.linear(a) ** (-e)
        return cls._raw(num * Fraction(scale), den, component)

    def is_zero(self):
        return self.num.is_zero()

    def _check(self, other):
        if self.component != other.component:
            raise InputError(
                f"component mismatch: {self.component} vs {other.component}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.component == other.component
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.component, self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.constant(other, self.component)
        self._check(other)
        return RatFunc(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            self.component,
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den, self.component)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.constant(other, self.component)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num * other, self.den, self.component)
        self._check(other)
        return RatFunc(self.num * other.num, self.den * other.den, self.component)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num, self.den * other, self.component)
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num, self.component)

    def __pow__(self, n):
        if n == 0:
            return RatFunc.constant(1, self.component)
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            inv = RatFunc(self.den, self.num, self.component)
            return inv ** (-n)
        return RatFunc(self.num**n, self.den**n, self.component)

    def derivative(self):
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(num, self.den * self.den, self.component)

    def dlog_ratfunc(self):
        """f'/f as a rational function (zero for constants)."""
        if self.is_zero():
            raise UndefinedValuationError("dlog of the zero function")
        return self.derivative() / self

    def __repr__(self):
        if self.den.degree == 0:
            return f"({self.num!r})"
        return f"({self.num!r})/({self.den!r})"


def val_at(f, p):
    """Order of vanishing of f at the place p (negative at a pole)."""
    if f.is_zero():
        raise UndefinedValuationError("valuation of the zero function")
    if p.component != f.component:
        raise InputError(f"place {p!r} not on component {f.component}")
    if p.is_infinite():
        return f.den.degree - f.num.degree
    return f.num.multiplicity_at(p.coordinate) - f.den.multiplicity_at(p.coordinate)


class LaurentSeries:
    """Finitely many exact coefficients of a local Laurent expansion.

    coeffs maps exponent -> nonzero Fraction; every exponent is <= the
    truncation order; all exponents below the smallest stored one are
    known to be zero, everything above the truncation is unknown.
    """

    __slots__ = ("place", "truncation", "coeffs")

    def __init__(self, place, truncation, coeffs=()):
        object.__setattr__(self, "place", place)
        object.__setattr__(self, "truncation", int(truncation))
        data = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for e, c in items:
            c = Fraction(c)
            if c and e <= truncation:
                data[int(e)] = c
        object.__setattr__(self, "coeffs", dict(sorted(data.items())))

    def __setattr__(self, *args):
        raise AttributeError("LaurentSeries is immutable")

    @classmethod
    def zero(cls, place, truncation):
        return cls(place, truncation, {})

    @classmethod
    def monomial(cls, place, exponent, coeff, truncation):
        return cls(place, truncation, {exponent: coeff})

    def is_zero(self):
        """All stored coefficients vanish (says nothing past truncation)."""
        return not self.coeffs

    def lead_bound(self):
        """Exponent below which every coefficient is certainly zero."""
        return min(self.coeffs) if self.coeffs else self.truncation + 1

    def leading_exponent(self):
        if not self.coeffs:
            raise UndefinedValuationError("series is zero through truncation")
        return min(self.coeffs)

    def coefficient(self, e):
        if e > self.truncation:
            raise InsufficientTruncationError(
                f"coefficient at exponent {e} beyond truncation {self.truncation}"
            )
        return self.coeffs.get(e, Fraction(0))

    def residue(self):
        """Coefficient a_(-1), the series read as coefficients of g in g dt."""
        return self.coefficient(-1)

    def _check(self, other):
        if self.place != other.place:
            raise InputError(f"series at different places: {self.place!r}, {other.place!r}")

    def __eq__(self, other):
        return (
            isinstance(other, LaurentSeries)
            and self.place == other.place
            and self.truncation == other.truncation
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries(self.place, self.truncation, {0: other})
        self._check(other)
        n = min(self.truncation, other.truncation)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentSeries(self.place, n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.place, self.truncation, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries(self.place, self.truncation, {0: other})
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return LaurentSeries(self.place, self.truncation, {e: c * x for e, x in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        n = min(self.truncation + other.lead_bound(), other.truncation + self.lead_bound())
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e <= n:
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentSeries(self.place, n, out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by u^k."""
        return LaurentSeries(
            self.place, self.truncation + k, {e + k: c for e, c in self.coeffs.items()}
        )

    def truncate(self, n):
        if n > self.truncation:
            raise InsufficientTruncationError(
                f"cannot extend truncation {self.truncation} to {n}"
            )
        return LaurentSeries(self.place, n, self.coeffs)

    def derivative(self):
        return LaurentSeries(
            self.place,
            self.truncation - 1,
            {e - 1: e * c for e, c in self.coeffs.items() if e},
        )

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("cannot invert a series that is zero through truncation")
        m = self.leading_exponent()
        c = self.coeffs[m]
        unit = self.shift(-m).scale(1 / c)  # 1 + w with w of positive order
        w = unit - 1
        n = unit.truncation
        acc = LaurentSeries(self.place, n, {0: 1})
        term = LaurentSeries(self.place, n, {0: 1})
        while True:
            term = term * (-w)
            if term.lead_bound() > n or term.is_zero():
                break
            acc = acc + term
        return acc.scale(1 / c).shift(-m)

    def log1p(self):
        """log(1 + u) for a series u of positive order, exact through truncation."""
        if self.lead_bound() < 1:
            raise ValueError("log1p needs a series with positive leading exponent")
        n = self.truncation
        acc = LaurentSeries.zero(self.place, n)
        term = LaurentSeries(self.place, n, {0: 1})
        k = 0
        while True:
            term = term * self
            k += 1
            if term.lead_bound() > n or term.is_zero():
                break
            acc = acc + term.scale(Fraction((-1) ** (k - 1), k))
        return acc

    def exp(self):
        """exp(u) - includes the constant term 1."""
        if self.lead_bound() < 1:
            raise ValueError("exp needs a series with positive leading exponent")
        n = self.truncation
        acc = LaurentSeries(self.place, n, {0: 1})
        term = LaurentSeries(self.place, n, {0: 1})
        fact = 1
        k = 0
        while True:
            term = term * self
            k += 1
            fact *= k
            if term.lead_bound() > n or term.is_zero():
                break
            acc = acc + term.scale(Fraction(1, fact))
        return acc

    def to_json(self):
        return {str(e): format_rat(c) for e, c in self.coeffs.items()}

    def __repr__(self):
        if not self.coeffs:
            return f"O(u^{self.truncation + 1})"
        bits = []
        for e, c in self.coeffs.items():
            if e == 0:
                bits.append(format_rat(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else format_rat(c) + "*")
                bits.append(f"{head}u^{e}")
        return " + ".join(bits) + f" + O(u^{self.truncation + 1})"


def residue(series):
    """Coefficient a_(-1) of a Laurent series (as differential g dt)."""
    return series.residue()


def _poly_series_finite(poly, place, n):
    if poly.is_zero():
        return LaurentSeries.zero(place, n)
    upto = min(n, poly.degree) if n >= 0 else -1
    if upto < 0:
        return LaurentSeries.zero(place, n)
    cs = poly.shifted_coefficients(place.coordinate, upto)
    return LaurentSeries(place, n, {e: c for e, c in enumerate(cs)})


def _poly_series_infinite(poly, place, n):
    # p(1/s) is a finite Laurent polynomial in s, exact at every order
    return LaurentSeries(place, n, {-k: c for k, c in enumerate(poly.coeffs)})


def expand_at(f, p, n):
    """Laurent expansion of f at p, exact through exponent n."""
    if f.is_zero():
        raise UndefinedValuationError("cannot expand the zero function")
    if p.component != f.component:
        raise InputError(f"place {p!r} not on component {f.component}")
    if p.is_infinite():
        dn, dd = f.num.degree, f.den.degree
        num_s = _poly_series_infinite(f.num, p, n - dd)
        den_s = _poly_series_infinite(f.den, p, max(n - 2 * dd + dn, -dd))
        return (num_s * den_s.inverse()).truncate(n)
    a = p.coordinate
    vn = f.num.multiplicity_at(a)
    vd = f.den.multiplicity_at(a)
    num_s = _poly_series_finite(f.num, p, n + vd)
    den_s = _poly_series_finite(f.den, p, max(n + 2 * vd - vn, vd))
    return (num_s * den_s.inverse()).truncate(n)


def leading_coefficient(f, p):
    """Leading Laurent coefficient of f at p (nonzero)."""
    v = val_at(f, p)
    return expand_at(f, p, v).coefficient(v)


def evaluate(f, p):
    """Value f(p) in Q; requires f finite at p (0 allowed)."""
    v = val_at(f, p)
    if v < 0:
        raise ZeroDivisionError(f"{f!r} has a pole at {p!r}")
    if v > 0:
        return Fraction(0)
    return leading_coefficient(f, p)


def dlog(f, p, n):
    """Series g with df/f = g du in the local coordinate u at p.

    At infinity the chain rule for u = 1/t is already folded in, so
    residue(dlog(f, p, n)) = val_at(f, p) holds at every place.
    """
    if f.is_zero():
        raise UndefinedValuationError("dlog of the zero function")
    g = f.dlog_ratfunc()
    if g.is_zero():
        return LaurentSeries.zero(p, n)
    if p.is_infinite():
        h = expand_at(g, p, n + 2)
        return (-h.shift(-2)).truncate(n)
    return expand_at(g, p, n)


def rational_roots(poly):
    """Rational roots with multiplicity, plus the rootless cofactor.

    Returns (roots, cofactor) where roots is a list of (Fraction, mult)
    sorted by root and cofactor has no rational root.  Candidate roots
    are read off the squarefree part so that high multiplicities do not
    blow up the divisor enumeration.
    """
    if poly.is_zero():
        raise UndefinedValuationError("roots of the zero polynomial")
    roots = []
    cur = Poly(poly.primitive_int())
    # factor out powers of t
    k = 0
    while not cur.is_zero() and cur.coeffs[0] == 0:
        cur = Poly(cur.coeffs[1:])
        k += 1
    if k:
        roots.append((Fraction(0), k))
    if cur.degree <= 0:
        return sorted(roots), Poly.const(1)
    square_free = cur.divmod(cur.gcd(cur.derivative()))[0]
    sf = square_free.primitive_int()
    a0, an = abs(sf[0]), abs(sf[-1])
    # any root p/q has |p/q| <= 2^(1 + max_i ceil((bits(a_{n-i}) - bits(a_n) + 1)/i)),
    # a cheap overflow-free relaxation of the Fujiwara bound; enumerating
    # only divisors below it keeps very smooth constant terms tractable
    n_deg = len(sf) - 1
    exp = 1
    for i in range(1, n_deg + 1):
        c = abs(sf[n_deg - i])
        if c:
            exp = max(exp, -((c.bit_length() - an.bit_length() + 1) // -i))
    bound = 1 << (1 + exp)
    candidates = set()
    for q_div in divisors(an):
        for p_div in bounded_divisors(a0, bound * q_div):
            frac = Fraction(p_div, q_div)
            candidates.add(frac)
            candidates.add(-frac)
    # two modular filters knock out almost every false candidate cheaply
    filters = []
    for prime in (1000003, 2000003):
        row = [int(c) % prime for c in sf]
        filters.append((prime, row))

    def passes(cand):
        for prime, row in filters:
            if cand.denominator % prime == 0:
                continue
            x = cand.numerator * pow(cand.denominator, -1, prime) % prime
            acc = 0
            for c in reversed(row):
                acc = (acc * x + c) % prime
            if acc:
                return False
        return True

    for cand in sorted(candidates):
        if cur.degree <= 0:
            break
        if not passes(cand):
            continue
        mult = 0
        factor = Poly.linear(cand)
        while True:
            q, r = cur.divmod(factor)
            if not r.is_zero():
                break
            cur, mult = q, mult + 1
        if mult:
            roots.append((cand, mult))
    return sorted(roots), cur.monic()


def split_divisor(f):
    """Zero/pole places of f with multiplicities, infinity included.

    Raises NonSplitError when a zero or pole is irrational.
    """
    if f.is_zero():
        raise UndefinedValuationError("divisor of the zero function")
    out = {}
    for poly, sign in ((f.num, 1), (f.den, -1)):
        if poly.degree <= 0:
            continue
        roots, cofactor = rational_roots(poly)
        if cofactor.degree > 0:
            raise NonSplitError(f"{poly!r} has an irrational factor {cofactor!r}")
        for a, m in roots:
            p = Place(f.component, a)
            out[p] = out.get(p, 0) + sign * m
    v_inf = f.den.degree - f.num.degree
    if v_inf:
        p = Place(f.component, INF)
        out[p] = out.get(p, 0) + v_inf
    return {p: m for p, m in out.items() if m}
