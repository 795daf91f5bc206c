"""Exact arithmetic in finite extensions of the p-adic numbers.

Fields are towers of unramified and Eisenstein steps over Q_p.  Elements
carry exact coordinates (Fraction entries over the monomial basis of the
tower), so valuation, squareness, and norms are exact decisions; there is no
precision parameter and no rounding anywhere in this module.

The monomial basis of such a tower is an integral basis, and the weights of
the Eisenstein monomials are pairwise distinct modulo the absolute
ramification index.  That gives the closed valuation formula used
throughout: the valuation of an element is the minimum over its nonzero
coordinates of e * v_p(coefficient) + weight(monomial).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import inf
from typing import Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _vp(q: Fraction, p: int):
    """p-adic valuation of a rational number (inf for zero)."""
    if q == 0:
        return inf
    v = 0
    num = q.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = q.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _frac_mod(q: Fraction, m: int) -> int:
    """Reduce a rational with denominator prime to m modulo m."""
    if q.denominator % m == 0 or pow(q.denominator, 1, m) == 0:
        raise ValueError("denominator not invertible")
    return q.numerator * pow(q.denominator, -1, m) % m


# -- generic coefficient rings (used for both exact and residue arithmetic) ------


class _FractionRing:
    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == 0


class _ModRing:
    def __init__(self, m: int):
        self.m = m

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def from_int(self, n: int):
        return n % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_zero(self, a) -> bool:
        return a % self.m == 0


class _QuotientRing:
    """sub[x] / (x^d + c_{d-1} x^{d-1} + ... + c_0), elements as tuples."""

    def __init__(self, sub, coeffs: tuple):
        self.sub = sub
        self.coeffs = coeffs
        self.deg = len(coeffs)

    def zero(self):
        return tuple(self.sub.zero() for _ in range(self.deg))

    def one(self):
        return tuple(self.sub.one() if i == 0 else self.sub.zero()
                     for i in range(self.deg))

    def from_int(self, n: int):
        return tuple(self.sub.from_int(n) if i == 0 else self.sub.zero()
                     for i in range(self.deg))

    def add(self, a, b):
        return tuple(self.sub.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.sub.neg(x) for x in a)

    def mul(self, a, b):
        d = self.deg
        conv = [self.sub.zero() for _ in range(2 * d - 1)]
        for i, x in enumerate(a):
            if self.sub.is_zero(x):
                continue
            for j, y in enumerate(b):
                conv[i + j] = self.sub.add(conv[i + j], self.sub.mul(x, y))
        # reduce by the monic modulus, top down
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if self.sub.is_zero(c):
                continue
            conv[k] = self.sub.zero()
            for j, m in enumerate(self.coeffs):
                conv[k - d + j] = self.sub.add(conv[k - d + j],
                                               self.sub.neg(self.sub.mul(c, m)))
        return tuple(conv[:d])

    def is_zero(self, a) -> bool:
        return all(self.sub.is_zero(x) for x in a)


def _ring_pow(ring, a, n: int):
    out = ring.one()
    base = a
    while n > 0:
        if n & 1:
            out = ring.mul(out, base)
        base = ring.mul(base, base)
        n >>= 1
    return out


def _ring_det(ring, m: list) -> object:
    """Determinant by cofactor expansion; sizes here never exceed the step degree."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = ring.zero()
    for j in range(n):
        if ring.is_zero(m[0][j]):
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = ring.mul(m[0][j], _ring_det(ring, minor))
        if j % 2:
            term = ring.neg(term)
        total = ring.add(total, term)
    return total


@dataclass(frozen=True)
class _Step:
    kind: str      # "unramified" or "eisenstein"
    coeffs: tuple  # ascending lower coefficients of the monic minimal polynomial,
                   # as nested data over the field below


_FIELD_CACHE: dict = {}


class LocalField:
    """A finite extension of Q_p presented as a tower of simple steps.

    Use `qp` and then `extend_unramified` / `extend_eisenstein`; each step
    adjoins a root of a monic polynomial (given by its lower coefficients,
    ascending) over the field built so far.  Unramified steps must reduce to
    an irreducible polynomial over the residue field; Eisenstein steps must
    have all lower coefficients of positive valuation and constant term of
    valuation exactly one.
    """

    __slots__ = ("p", "steps", "degree", "ramification_index", "residue_degree",
                 "_rings", "_res_ring", "_res_shape", "_monomials", "_weights",
                 "_gen_weights", "_square_cache", "_class_cache", "_inv_cache")

    def __init__(self, p: int, steps: tuple):
        self.p = p
        self.steps = steps
        if not _is_prime(p):
            raise ValueError("p must be prime")

        self._rings = [_FractionRing()]
        for st in steps:
            self._rings.append(_QuotientRing(self._rings[-1], st.coeffs))

        e = 1
        f = 1
        gen_weights = []
        for st in steps:
            if st.kind == "eisenstein":
                e *= len(st.coeffs)
            else:
                f *= len(st.coeffs)
        running = 1
        for st in steps:
            if st.kind == "eisenstein":
                running *= len(st.coeffs)
                gen_weights.append(e // running)
            else:
                gen_weights.append(0)
        self.ramification_index = e
        self.residue_degree = f
        self.degree = e * f
        self._gen_weights = tuple(gen_weights)

        monomials = [()]
        for st in steps:
            d = len(st.coeffs)
            monomials = [m + (j,) for j in range(d) for m in monomials]
        self._monomials = tuple(monomials)
        self._weights = tuple(sum(k * w for k, w in zip(m, self._gen_weights))
                              for m in self._monomials)

        # residue tower: the unramified steps reduced mod p
        res_ring = _ModRing(p)
        res_shape = []
        for i, st in enumerate(steps):
            if st.kind == "unramified":
                parent = LocalField.make(p, steps[:i])
                mod_res = tuple(parent._to_residue(c) for c in st.coeffs)
                res_ring = _QuotientRing(res_ring, mod_res)
                res_shape.append(len(st.coeffs))
        self._res_ring = res_ring
        self._res_shape = tuple(res_shape)

        self._square_cache: dict = {}
        self._class_cache = None
        self._inv_cache: dict = {}

        if steps:
            self._validate_last_step()

    # -- construction ---------------------------------------------------------

    @staticmethod
    def make(p: int, steps: tuple) -> "LocalField":
        key = (p, steps)
        field = _FIELD_CACHE.get(key)
        if field is None:
            field = LocalField(p, steps)
            _FIELD_CACHE[key] = field
        return field

    @staticmethod
    def qp(p: int) -> "LocalField":
        return LocalField.make(p, ())

    def parent(self) -> "LocalField":
        if not self.steps:
            raise ValueError("the base field has no parent")
        return LocalField.make(self.p, self.steps[:-1])

    def _coerce_step_coeffs(self, coeffs: Sequence) -> tuple:
        out = []
        for c in coeffs:
            if isinstance(c, PadicElement):
                if c.field != self:
                    raise ValueError("coefficient from a different field")
                out.append(c.data)
            else:
                out.append(self._from_rational(Fraction(c)))
        return tuple(out)

    def extend_unramified(self, coeffs: Sequence) -> "LocalField":
        """Adjoin a root of the monic polynomial with these lower coefficients;
        the reduction mod p must be irreducible over the residue field."""
        step = _Step("unramified", self._coerce_step_coeffs(coeffs))
        return LocalField.make(self.p, self.steps + (step,))

    def extend_eisenstein(self, coeffs: Sequence) -> "LocalField":
        """Adjoin a uniformizer: all lower coefficients need valuation at
        least one and the constant term exactly one."""
        step = _Step("eisenstein", self._coerce_step_coeffs(coeffs))
        return LocalField.make(self.p, self.steps + (step,))

    def _validate_last_step(self) -> None:
        st = self.steps[-1]
        par = self.parent()
        d = len(st.coeffs)
        if d < 2:
            raise ValueError("extension step must have degree at least two")
        vals = [par._valuation_data(c) for c in st.coeffs]
        if st.kind == "eisenstein":
            # valuations here are in the parent's normalization, where the
            # parent uniformizer has valuation one
            for j, v in enumerate(vals):
                if v is inf:
                    if j == 0:
                        raise ValueError("constant term of an Eisenstein step cannot vanish")
                    continue
                if v < 1:
                    raise ValueError("Eisenstein step needs positive valuation coefficients")
            if vals[0] != 1:
                raise ValueError("Eisenstein constant term must have valuation one")
        elif st.kind == "unramified":
            if d > 4:
                raise ValueError("unramified steps of degree greater than four are not supported")
            for v in vals:
                if v is not inf and v < 0:
                    raise ValueError("unramified step needs integral coefficients")
            residues = [par._to_residue(c) for c in st.coeffs]
            if not par._poly_irreducible(residues):
                raise ValueError("polynomial is not irreducible over the residue field")
        else:
            raise ValueError(f"unknown step kind {st.kind!r}")

    # -- residue field helpers --------------------------------------------------

    def _residue_elements(self):
        """All residue field elements, in a fixed deterministic order."""
        size = self.p ** self.residue_degree
        flats = product(range(self.p), repeat=self.residue_degree)
        return [self._res_unflatten(list(f)) for f in flats], size

    def _res_unflatten(self, flat: list):
        def build(shape):
            if not shape:
                return flat.pop(0)
            d = shape[-1]
            return tuple(build(shape[:-1]) for _ in range(d))

        # consume in the same order as _res_flatten
        return build(self._res_shape)

    def _res_flatten(self, r) -> list:
        def walk(x, shape):
            if not shape:
                return [x]
            out = []
            for part in x:
                out.extend(walk(part, shape[:-1]))
            return out

        return walk(r, self._res_shape)

    def _poly_irreducible(self, residues: list) -> bool:
        """Irreducibility over the residue field for degrees up to four:
        no roots, and for quartics additionally no monic quadratic divisor."""
        ring = self._res_ring
        d = len(residues)
        elems, _ = self._residue_elements()

        def value_at(t):
            acc = ring.one()
            for j in range(d - 1, -1, -1):
                acc = ring.add(ring.mul(acc, t), residues[j])
            return acc

        for t in elems:
            if ring.is_zero(value_at(t)):
                return False
        if d == 4:
            for b in elems:
                for c in elems:
                    # remainder of the quartic modulo x^2 + b x + c
                    # maintained as coefficients r1 x + r0 while dividing down
                    coeffs = residues + [ring.one()]
                    r = list(coeffs)
                    for k in range(4, 1, -1):
                        lead = r[k]
                        if ring.is_zero(lead):
                            continue
                        r[k] = ring.zero()
                        r[k - 1] = ring.add(r[k - 1], ring.neg(ring.mul(lead, b)))
                        r[k - 2] = ring.add(r[k - 2], ring.neg(ring.mul(lead, c)))
                    if ring.is_zero(r[0]) and ring.is_zero(r[1]):
                        return False
        return True

    def _to_residue(self, data):
        """Residue of an integral element, in the residue tower coordinates."""
        flat = self._flatten(data)
        out = []
        for idx, mono in enumerate(self._monomials):
            if all(k == 0 or self.steps[i].kind == "unramified"
                   for i, k in enumerate(mono)):
                out.append(_frac_mod(flat[idx], self.p))
        return self._res_unflatten(out)

    def _lift_residue(self, r):
        flat = self._res_flatten(r)
        coords = []
        pos = 0
        for idx, mono in enumerate(self._monomials):
            if all(k == 0 or self.steps[i].kind == "unramified"
                   for i, k in enumerate(mono)):
                coords.append(Fraction(flat[pos]))
                pos += 1
            else:
                coords.append(Fraction(0))
        return self._unflatten(coords)

    # -- element plumbing ---------------------------------------------------------

    def _flatten(self, data) -> list:
        def walk(x, level):
            if level == 0:
                return [x]
            out = []
            for part in x:
                out.extend(walk(part, level - 1))
            return out

        return walk(data, len(self.steps))

    def _unflatten(self, flat: Sequence):
        items = list(flat)

        def build(level):
            if level == 0:
                return items.pop(0)
            d = len(self.steps[level - 1].coeffs)
            return tuple(build(level - 1) for _ in range(d))

        return build(len(self.steps))

    def _from_rational(self, q: Fraction):
        coords = [Fraction(0)] * len(self._monomials)
        coords[0] = q
        return self._unflatten(coords)

    def _valuation_data(self, data):
        flat = self._flatten(data)
        best = inf
        for a, w in zip(flat, self._weights):
            if a != 0:
                v = self.ramification_index * _vp(a, self.p) + w
                if v < best:
                    best = v
        return best

    # -- public element constructors ------------------------------------------------

    def zero(self) -> "PadicElement":
        return PadicElement(self, self._from_rational(Fraction(0)))

    def one(self) -> "PadicElement":
        return PadicElement(self, self._from_rational(Fraction(1)))

    def integer(self, n: int) -> "PadicElement":
        return PadicElement(self, self._from_rational(Fraction(n)))

    def rational(self, q) -> "PadicElement":
        return PadicElement(self, self._from_rational(Fraction(q)))

    def gen(self, i: int) -> "PadicElement":
        """The generator adjoined at step i (zero-based)."""
        if not 0 <= i < len(self.steps):
            raise ValueError("no such step")
        coords = [Fraction(0)] * len(self._monomials)
        target = tuple(1 if j == i else 0 for j in range(len(self.steps)))
        coords[self._monomials.index(target)] = Fraction(1)
        return PadicElement(self, self._unflatten(coords))

    def from_coords(self, coords: Sequence) -> "PadicElement":
        vals = [Fraction(c) for c in coords]
        if len(vals) != len(self._monomials):
            raise ValueError("wrong number of coordinates")
        return PadicElement(self, self._unflatten(vals))

    def uniformizer(self) -> "PadicElement":
        for i in range(len(self.steps) - 1, -1, -1):
            if self.steps[i].kind == "eisenstein":
                return self.gen(i)
        return self.integer(self.p)

    def describe(self) -> str:
        name = f"Q_{self.p}"
        for i, st in enumerate(self.steps):
            var = f"t{i + 1}"
            parent = LocalField.make(self.p, self.steps[:i])
            terms = [f"{var}^{len(st.coeffs)}"]
            for j in range(len(st.coeffs) - 1, -1, -1):
                c = PadicElement(parent, st.coeffs[j])
                if c.is_zero():
                    continue
                piece = c.as_string()
                mono = f"{var}^{j}" if j > 1 else (var if j == 1 else "")
                terms.append(f"({piece})*{mono}" if mono else f"({piece})")
            name += f"[{var}]/({' + '.join(terms)})"
        return name

    def __eq__(self, other) -> bool:
        return (isinstance(other, LocalField)
                and self.p == other.p and self.steps == other.steps)

    def __hash__(self) -> int:
        return hash((self.p, self.steps))

    def __repr__(self) -> str:
        return f"LocalField({self.describe()})"


class PadicElement:
    """An element of a LocalField with exact coordinates."""

    __slots__ = ("field", "data")

    def __init__(self, field: LocalField, data):
        self.field = field
        self.data = data

    def _ring(self):
        return self.field._rings[len(self.field.steps)]

    def _coerce(self, other) -> "PadicElement":
        if isinstance(other, PadicElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.rational(Fraction(other))

    def __add__(self, other):
        o = self._coerce(other)
        return PadicElement(self.field, self._ring().add(self.data, o.data))

    __radd__ = __add__

    def __neg__(self):
        return PadicElement(self.field, self._ring().neg(self.data))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return PadicElement(self.field, self._ring().mul(self.data, o.data))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n > 0:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "PadicElement":
        cached = self.field._inv_cache.get(self.data)
        if cached is not None:
            return PadicElement(self.field, cached)
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        field = self.field
        ring = self._ring()
        n = len(field._monomials)
        cols = []
        for m in range(n):
            coords = [Fraction(0)] * n
            coords[m] = Fraction(1)
            basis = field._unflatten(coords)
            cols.append(field._flatten(ring.mul(self.data, basis)))
        # solve M y = e_0 over the rationals
        a = [[cols[j][i] for j in range(n)] + [Fraction(1 if i == 0 else 0)]
             for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("element is a zero divisor; tower invalid")
            a[col], a[piv] = a[piv], a[col]
            scale = 1 / a[col][col]
            a[col] = [x * scale for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        y = [a[i][n] for i in range(n)]
        data = field._unflatten(y)
        self.field._inv_cache[self.data] = data
        return PadicElement(field, data)

    def is_zero(self) -> bool:
        return self._ring().is_zero(self.data)

    def valuation(self):
        """Normalized so the uniformizer has valuation one; inf for zero."""
        return self.field._valuation_data(self.data)

    def is_integral(self) -> bool:
        return self.valuation() >= 0

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def coords(self) -> tuple:
        return tuple(self.field._flatten(self.data))

    def as_string(self) -> str:
        parts = []
        for a, mono in zip(self.coords(), self.field._monomials):
            if a == 0:
                continue
            names = [f"t{i + 1}" + (f"^{k}" if k > 1 else "")
                     for i, k in enumerate(mono) if k > 0]
            if names:
                parts.append("*".join([str(a)] + names))
            else:
                parts.append(str(a))
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(Fraction(other))
        return (isinstance(other, PadicElement)
                and self.field == other.field and self.data == other.data)

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"PadicElement({self.as_string()} in {self.field.describe()})"


# -- the number-theoretic queries ---------------------------------------------------


def valuation(x: PadicElement):
    """Normalized valuation (uniformizer has valuation one; inf for zero)."""
    return x.valuation()


def embed(x: PadicElement, L: LocalField) -> PadicElement:
    """Canonical inclusion of x into an extension built on top of its field."""
    K = x.field
    if K == L:
        return x
    if L.p != K.p or L.steps[:len(K.steps)] != K.steps:
        raise ValueError("target is not a tower extension of the element's field")
    data = x.data
    for level in range(len(K.steps), len(L.steps)):
        zero_sub = L._rings[level].zero()
        d = len(L.steps[level].coeffs)
        data = tuple([data] + [zero_sub] * (d - 1))
    return PadicElement(L, data)


def is_square(x: PadicElement) -> bool:
    """Exact squareness test.

    Odd residue characteristic reduces to an Euler criterion on the residue
    of the unit part.  For p = 2 the unit part is compared against the
    candidates s(1 + pi z) with z running over the finitely many classes
    modulo pi^(v(2)); a candidate certifies squareness exactly when
    v(y^2 - u) > 2 v(2), since 1 + pi^(2 v(2) + 1) O consists of squares.
    """
    field = x.field
    cached = field._square_cache.get(x.data)
    if cached is not None:
        return cached
    result = _is_square_uncached(x)
    field._square_cache[x.data] = result
    return result


def _is_square_uncached(x: PadicElement) -> bool:
    field = x.field
    if x.is_zero():
        return True
    v = x.valuation()
    if v % 2 != 0:
        return False
    u = x / field.uniformizer() ** v if v else x
    q = field.p ** field.residue_degree
    ring = field._res_ring
    r = field._to_residue(u.data)
    if field.p != 2:
        return _ring_pow(ring, r, (q - 1) // 2) == ring.one()

    e2 = field.ramification_index  # v(2) in this normalization
    sbar = _ring_pow(ring, r, q // 2)  # the unique square root in characteristic 2
    s = PadicElement(field, field._lift_residue(sbar))
    pi = field.uniformizer()
    threshold = 2 * e2 + 1

    # candidate corrections: z over a transversal of O / pi^{v(2)}
    ranges = []
    for w in field._weights:
        shortfall = e2 - w
        t = 0
        while field.ramification_index * t < shortfall:
            t += 1
        ranges.append(range(2 ** t))
    for assignment in product(*ranges):
        z = field.from_coords([Fraction(a) for a in assignment])
        y = s * (field.one() + pi * z)
        if (y * y - u).valuation() >= threshold:
            return True
    return False


def norm(L: LocalField, K: LocalField, x: PadicElement) -> PadicElement:
    """Field norm from L down to K; K must be a tower prefix of L."""
    if x.field != L:
        raise ValueError("element does not belong to L")
    if L.p != K.p or L.steps[:len(K.steps)] != K.steps:
        raise ValueError("K is not a prefix of the tower defining L")
    data = x.data
    level = len(L.steps)
    while level > len(K.steps):
        ring = L._rings[level]
        sub = L._rings[level - 1]
        d = len(L.steps[level - 1].coeffs)
        gen = tuple(sub.one() if i == 1 else sub.zero() for i in range(d))
        power = ring.one()
        cols = []
        for _ in range(d):
            cols.append(ring.mul(data, power))
            power = ring.mul(power, gen)
        matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
        data = _ring_det(sub, matrix)
        level -= 1
    return PadicElement(LocalField.make(L.p, L.steps[:len(K.steps)]), data)


def square_class_group(K: LocalField) -> list[PadicElement]:
    """Representatives generating K* / (K*)^2 (independent square classes).

    The group has order 4 for odd residue characteristic and 2^(d+2) for
    2-adic fields of degree d.  Generators are found greedily from a fixed
    candidate pool, checking independence exhaustively with exact squareness
    tests.
    """
    if K._class_cache is not None:
        return list(K._class_cache)
    if K.p != 2:
        target_bits = 2
    else:
        target_bits = K.degree + 2

    pool: list[PadicElement] = [K.uniformizer(), K.integer(-1)]
    for c in range(2, K.p):
        pool.append(K.integer(c))
    for i, st in enumerate(K.steps):
        if st.kind == "unramified":
            g = K.gen(i)
            pool.append(g)
            for c in range(1, K.p):
                pool.append(g + K.integer(c))
    pi = K.uniformizer()
    e2 = K.ramification_index if K.p == 2 else 0
    one = K.one()
    for j in range(1, 2 * e2 + 2):
        for m in range(len(K._monomials)):
            coords = [Fraction(0)] * len(K._monomials)
            coords[m] = Fraction(1)
            b = K.from_coords(coords)
            pool.append(one + pi ** j * b)
    if K.p != 2:
        # exhaustive backstop: lifts of every residue; for odd p a unit is a
        # square exactly when its residue is, so this pool always spans
        elems, _ = K._residue_elements()
        for r in elems:
            pool.append(PadicElement(K, K._lift_residue(r)))

    basis: list[PadicElement] = []
    for cand in pool:
        if len(basis) == target_bits:
            break
        if cand.is_zero():
            continue
        independent = True
        for mask in range(2 ** len(basis)):
            prod_elem = cand
            for i in range(len(basis)):
                if mask >> i & 1:
                    prod_elem = prod_elem * basis[i]
            if is_square(prod_elem):
                independent = False
                break
        if independent:
            basis.append(cand)
    if len(basis) != target_bits:
        raise RuntimeError("square class search did not reach the expected size")
    K._class_cache = tuple(basis)
    return list(basis)


def square_class(K: LocalField, x: PadicElement) -> tuple[int, ...]:
    """Coordinates of the class of x in K*/(K*)^2 over the canonical basis."""
    if x.is_zero():
        raise ValueError("zero has no square class")
    basis = square_class_group(K)
    for mask in range(2 ** len(basis)):
        prod_elem = x
        for i in range(len(basis)):
            if mask >> i & 1:
                prod_elem = prod_elem * basis[i]
        if is_square(prod_elem):
            return tuple(mask >> i & 1 for i in range(len(basis)))
    raise RuntimeError("element did not match any square class")
