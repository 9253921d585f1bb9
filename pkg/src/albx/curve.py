"""Singular projective curves presented through their smooth model.

A configuration lists the projective-line components of the
normalization together with the singular points of the curve downstairs.
Each singular point names its fiber of branch places and certifies the
complete local ring by a finite set of generators of its maximal ideal,
written inside the product of the branch-local power series rings and
stored through the working truncation order.  Ordinary (seminormal)
points need no explicit data; their generators are synthesized.

validate() is the gatekeeper: it checks the conductor condition
(branchwise m^(n+1) powers land in the span generated by the declared
generators) by exact linear algebra and attaches the computed span,
which downstream kernel and membership computations reuse.
"""

from fractions import Fraction
import json

from .arith import parse_rat
from .errors import InputError, ValidationError
from .funcfield import LaurentSeries, Place, format_coordinate
from .linalg import RowSpan


class Divisor:
    """Finite Z-combination of places of the smooth model."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        data = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for place, m in items:
            m = int(m)
            if m:
                data[place] = data.get(place, 0) + m
        object.__setattr__(self, "_coeffs", {p: m for p, m in data.items() if m})

    def __setattr__(self, *args):
        raise AttributeError("Divisor is immutable")

    def coeff(self, place):
        return self._coeffs.get(place, 0)

    def places(self):
        return sorted(self._coeffs, key=Place.sort_key)

    def items(self):
        return [(p, self._coeffs[p]) for p in self.places()]

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other):
        out = dict(self._coeffs)
        for p, m in other._coeffs.items():
            out[p] = out.get(p, 0) + m
        return Divisor(out)

    def __neg__(self):
        return Divisor({p: -m for p, m in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return Divisor({p: k * m for p, m in self._coeffs.items()})

    def __repr__(self):
        if not self._coeffs:
            return "0"
        bits = []
        for p, m in self.items():
            sign = "+" if m > 0 else "-"
            mag = abs(m)
            head = "" if mag == 1 else f"{mag}"
            bits.append(f"{sign}{head}[{p!r}]")
        return "".join(bits)

    def to_json(self):
        return [
            {"component": p.component, "point": format_coordinate(p.coordinate), "coeff": m}
            for p, m in self.items()
        ]

    @classmethod
    def from_json(cls, data):
        return cls([(Place.from_json(entry), entry["coeff"]) for entry in data])


def degree_per_component(D):
    """Sum of coefficients on each component appearing in the support."""
    out = {}
    for p, m in D.items():
        out[p.component] = out.get(p.component, 0) + m
    return out


class SingularPoint:
    """One singular point of the curve, presented by its branch fiber.

    generators are tuples over the branches; entry i is the local series
    of the generator on branch i (None meaning zero there).  kind is
    "ordinary" for seminormal gluing, in which case conductors and
    generators are synthesized by validate().
    """

    __slots__ = ("name", "branches", "kind", "conductors", "generators")

    def __init__(self, name, branches, kind="ordinary", conductors=None, generators=None):
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "branches", tuple(branches))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(
            self, "conductors", None if conductors is None else tuple(int(n) for n in conductors)
        )
        object.__setattr__(
            self, "generators", None if generators is None else tuple(tuple(g) for g in generators)
        )

    def __setattr__(self, *args):
        raise AttributeError("SingularPoint is immutable")

    def __repr__(self):
        return f"SingularPoint({self.name!r}, branches={list(self.branches)!r}, kind={self.kind!r})"


class CurveConfig:
    """A curve configuration; immutable once validated."""

    __slots__ = ("components", "singular_points", "truncation", "validated", "_spans")

    def __init__(self, components, singular_points, truncation, validated=False, spans=None):
        object.__setattr__(self, "components", tuple(str(c) for c in components))
        object.__setattr__(self, "singular_points", tuple(singular_points))
        object.__setattr__(self, "truncation", int(truncation))
        object.__setattr__(self, "validated", bool(validated))
        object.__setattr__(self, "_spans", spans or {})

    def __setattr__(self, *args):
        raise AttributeError("CurveConfig is immutable")

    def branch_places(self):
        out = []
        for sp in self.singular_points:
            out.extend(sp.branches)
        return sorted(out, key=Place.sort_key)

    def branch_place_set(self):
        return {q for sp in self.singular_points for q in sp.branches}

    def point_of_branch(self, place):
        for sp in self.singular_points:
            if place in sp.branches:
                return sp
        return None

    def mhat_span(self, name):
        """Reduced span of the maximal-ideal generators at a singular point."""
        if not self.validated:
            raise ValidationError("configuration not validated")
        return self._spans[name]

    def __repr__(self):
        return (
            f"CurveConfig(components={list(self.components)!r}, "
            f"points={[sp.name for sp in self.singular_points]!r}, N={self.truncation})"
        )


def series_tuple_vector(sp, truncation, tup):
    """Flatten a branch tuple of series to coordinates on u^1..u^N per branch."""
    n = truncation
    vec = [Fraction(0)] * (len(sp.branches) * n)
    for i, series in enumerate(tup):
        if series is None:
            continue
        for e, c in series.coeffs.items():
            if 1 <= e <= n:
                vec[i * n + (e - 1)] = c
    return vec


def _tuple_product(a, b):
    out = []
    for x, y in zip(a, b):
        if x is None or y is None:
            out.append(None)
        else:
            out.append(x * y)
    return out


def _closure_span(sp, generators, truncation):
    """Span of all products of generators, modulo the truncation order."""
    span = RowSpan(len(sp.branches) * truncation)
    frontier = []
    for g in generators:
        if span.add(series_tuple_vector(sp, truncation, g)):
            frontier.append(g)
    while frontier:
        new_frontier = []
        for g in generators:
            for m in frontier:
                prod = _tuple_product(g, m)
                if span.add(series_tuple_vector(sp, truncation, prod)):
                    new_frontier.append(prod)
        frontier = new_frontier
    return span


def _synth_ordinary(sp, truncation):
    """Seminormal gluing: the maximal ideal is the full branchwise sum."""
    gens = []
    for i, q in enumerate(sp.branches):
        tup = [None] * len(sp.branches)
        tup[i] = LaurentSeries.monomial(q, 1, 1, truncation)
        gens.append(tuple(tup))
    return tuple(gens)


def validate(config):
    """Check all configuration invariants; returns the checked config.

    For ordinary points, conductors (all zero) and generators are filled
    in.  For explicit points the conductor condition is verified by
    linear algebra on coefficient vectors through the truncation order.
    """
    if config.validated:
        return config
    if not config.components:
        raise ValidationError("no components")
    if len(set(config.components)) != len(config.components):
        raise ValidationError("duplicate component ids")
    names = [sp.name for sp in config.singular_points]
    if len(set(names)) != len(names):
        raise ValidationError("duplicate singular point names")

    n = config.truncation
    seen_branches = set()
    new_points = []
    max_conductor = 0
    for sp in config.singular_points:
        if not sp.branches:
            raise ValidationError(f"singular point {sp.name}: empty branch fiber")
        for q in sp.branches:
            if q.component not in config.components:
                raise ValidationError(f"branch {q!r} on unknown component")
            if q in seen_branches:
                raise ValidationError(f"branch {q!r} used by more than one singular point")
            seen_branches.add(q)
        if sp.kind == "ordinary":
            conductors = (0,) * len(sp.branches)
            generators = _synth_ordinary(sp, n)
        elif sp.kind == "explicit":
            if sp.conductors is None or len(sp.conductors) != len(sp.branches):
                raise ValidationError(f"{sp.name}: need one conductor per branch")
            if any(c < 0 for c in sp.conductors):
                raise ValidationError(f"{sp.name}: negative conductor")
            if not sp.generators:
                raise ValidationError(f"{sp.name}: explicit point without generators")
            conductors = sp.conductors
            generators = []
            for tup in sp.generators:
                if len(tup) != len(sp.branches):
                    raise ValidationError(f"{sp.name}: generator arity mismatch")
                norm = []
                for q, series in zip(sp.branches, tup):
                    if series is None or not series.coeffs:
                        norm.append(None)
                        continue
                    if series.place != q:
                        raise ValidationError(f"{sp.name}: generator series at wrong place")
                    if series.leading_exponent() < 1:
                        raise ValidationError(
                            f"{sp.name}: generator has nonpositive leading exponent"
                        )
                    norm.append(LaurentSeries(q, n, series.coeffs))
                if all(s is None for s in norm):
                    # vanishes modulo the truncation order: constrains
                    # nothing at the working precision, so drop it
                    continue
                generators.append(tuple(norm))
            if not generators:
                raise ValidationError(
                    f"{sp.name}: no generators visible below the truncation order"
                )
            generators = tuple(generators)
        else:
            raise ValidationError(f"{sp.name}: unknown kind {sp.kind!r}")
        max_conductor = max(max_conductor, *conductors)
        new_points.append(
            SingularPoint(sp.name, sp.branches, sp.kind, conductors, generators)
        )

    if config.singular_points and n < max_conductor + 2:
        raise ValidationError(
            f"truncation {n} too small; need at least {max_conductor + 2}"
        )

    spans = {}
    for sp in new_points:
        span = _closure_span(sp, sp.generators, n)
        for i, q in enumerate(sp.branches):
            for e in range(sp.conductors[i] + 1, n + 1):
                probe = [None] * len(sp.branches)
                probe[i] = LaurentSeries.monomial(q, e, 1, n)
                if not span.contains(series_tuple_vector(sp, n, probe)):
                    raise ValidationError(
                        f"{sp.name}: conductor condition fails at branch {q!r}, "
                        f"u^{e} not generated"
                    )
        spans[sp.name] = span

    return CurveConfig(config.components, new_points, n, validated=True, spans=spans)


def pushforward_weil(D, config):
    """Push a divisor on the smooth model down to the curve.

    Branch places collapse to their singular point (keyed by name);
    regular places map to themselves.
    """
    out = {}
    for place, m in D.items():
        sp = config.point_of_branch(place)
        key = sp.name if sp is not None else place
        out[key] = out.get(key, 0) + m
    return {k: v for k, v in out.items() if v}


def curve_from_modulus(points):
    """Singular curve attached to an effective divisor with multiplicities.

    points is a list of (Place, n) with n >= 1.  The result has a single
    singular point whose branch at p_i has conductor n_i - 1 and ideal
    generators u^(n_i), ..., u^(2 n_i - 1); functions on the curve are
    exactly those congruent to a constant to order n_i at every p_i.
    """
    if not points:
        raise InputError("empty modulus support")
    places = [p for p, _ in points]
    if len(set(places)) != len(places):
        raise InputError("repeated place in modulus")
    mults = [int(n) for _, n in points]
    if any(m < 1 for m in mults):
        raise InputError("modulus multiplicities must be >= 1")
    components = sorted({p.component for p in places})
    truncation = max(m - 1 for m in mults) + 2
    branches = tuple(sorted(places, key=Place.sort_key))
    by_place = dict(zip(places, mults))
    conductors = tuple(by_place[q] - 1 for q in branches)
    generators = []
    for i, q in enumerate(branches):
        m = by_place[q]
        for e in range(m, 2 * m):
            tup = [None] * len(branches)
            tup[i] = LaurentSeries.monomial(q, e, 1, truncation)
            generators.append(tuple(tup))
    sp = SingularPoint("p", branches, "explicit", conductors, tuple(generators))
    return CurveConfig(components, (sp,), truncation)


# ---------------------------------------------------------------------------
# JSON wire format


def _series_from_json(place, data, truncation):
    if not data:
        return None
    coeffs = {}
    for e, c in data.items():
        coeffs[int(e)] = parse_rat(c)
    return LaurentSeries(place, truncation, coeffs)


def config_from_json(data):
    try:
        components = [str(c["id"]) for c in data["components"]]
        truncation = int(data["truncation"])
        points = []
        for entry in data.get("singular_points", []):
            branches = tuple(Place.from_json(b) for b in entry["branches"])
            kind = entry.get("kind", "ordinary")
            if kind == "ordinary":
                points.append(SingularPoint(entry["name"], branches, "ordinary"))
                continue
            if kind != "explicit":
                raise InputError(f"unknown singular point kind {kind!r}")
            conductors = [int(c) for c in entry["conductors"]]
            generators = []
            for gen in entry["generators"]:
                if len(gen) != len(branches):
                    raise InputError("generator arity does not match branches")
                generators.append(
                    tuple(
                        _series_from_json(q, g, truncation)
                        for q, g in zip(branches, gen)
                    )
                )
            points.append(
                SingularPoint(entry["name"], branches, "explicit", conductors, generators)
            )
        return CurveConfig(components, points, truncation)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad curve description: {exc}") from None


def config_to_json(config):
    points = []
    for sp in config.singular_points:
        entry = {
            "name": sp.name,
            "branches": [q.to_json() for q in sp.branches],
            "kind": sp.kind,
        }
        if sp.kind == "explicit":
            entry["conductors"] = list(sp.conductors)
            entry["generators"] = [
                [(g.to_json() if g is not None else {}) for g in tup]
                for tup in sp.generators
            ]
        points.append(entry)
    return {
        "components": [{"id": c} for c in config.components],
        "truncation": config.truncation,
        "singular_points": points,
    }


def load_config(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    return config_from_json(data)
