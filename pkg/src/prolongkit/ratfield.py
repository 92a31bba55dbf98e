"""Exact arithmetic over Q(x, t) with the two commuting derivations d/dx, d/dt.

Three layers live here:

  MPoly     sparse polynomials in x and t with Fraction coefficients,
  RatFunc   rational functions kept in canonical form (coprime integer
            polynomials with no shared integer factor; the denominator's
            leading coefficient under lexicographic order with x > t is
            positive), so that structural equality decides field equality,
  LinDiffOp linear differential operators sum a_q * d^q in a single
            derivation, with the noncommutative product d * a = a * d + a'.

Everything is exact; no floats anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

# monomial key: (deg_x, deg_t)
Term = tuple[int, int]

_F0 = Fraction(0)
_F1 = Fraction(1)


class MPoly:
    """Sparse polynomial in x, t over Q.

    ``terms`` maps (deg_x, deg_t) to a nonzero Fraction; the empty map is
    the zero polynomial.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "intcoef")

    def __init__(self, terms: dict[Term, Fraction] | None = None):
        clean: dict[Term, Fraction] = {}
        intcoef = True
        if terms:
            for key, c in terms.items():
                if c:
                    if not isinstance(c, Fraction):
                        c = Fraction(c)
                    if c.denominator != 1:
                        intcoef = False
                    clean[key] = c
        self.terms = clean
        # fixed at construction (instances are immutable): True when every
        # coefficient is an integer, enabling the pure-int arithmetic paths
        self.intcoef = intcoef

    @classmethod
    def const(cls, c) -> MPoly:
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def zero(cls) -> MPoly:
        return cls()

    @classmethod
    def one(cls) -> MPoly:
        return cls({(0, 0): _F1})

    @classmethod
    def variable(cls, name: str) -> MPoly:
        if name == "x":
            return cls({(1, 0): _F1})
        if name == "t":
            return cls({(0, 1): _F1})
        raise ValueError(f"unknown variable {name!r}")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return self.terms.get((0, 0), _F0)

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        idx = 0 if var == "x" else 1
        return max(k[idx] for k in self.terms)

    def leading(self) -> tuple[Term, Fraction]:
        """Leading key and coefficient under lex order with x > t."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms)
        return key, self.terms[key]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.terms == other.terms
        return NotImplemented

    def __repr__(self) -> str:
        return f"MPoly({self.terms!r})"

    def __add__(self, other: MPoly) -> MPoly:
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, _F0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return MPoly(out)

    def __sub__(self, other: MPoly) -> MPoly:
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, _F0) - c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return MPoly(out)

    def __neg__(self) -> MPoly:
        return MPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: MPoly) -> MPoly:
        if not self.terms or not other.terms:
            return MPoly()
        # Clear denominators first so the double loop runs on plain ints;
        # Fractions are rebuilt once per *output* term rather than per pair.
        la = 1 if self.intcoef else \
            math.lcm(*(c.denominator for c in self.terms.values()))
        lb = 1 if other.intcoef else \
            math.lcm(*(c.denominator for c in other.terms.values()))
        if la == 1:
            A = [(k, c.numerator) for k, c in self.terms.items()]
        else:
            A = [(k, c.numerator * (la // c.denominator))
                 for k, c in self.terms.items()]
        if lb == 1:
            B = [(k, c.numerator) for k, c in other.terms.items()]
        else:
            B = [(k, c.numerator * (lb // c.denominator))
                 for k, c in other.terms.items()]
        acc: dict[Term, int] = {}
        for (ax, at), ac in A:
            for (bx, bt), bc in B:
                key = (ax + bx, at + bt)
                acc[key] = acc.get(key, 0) + ac * bc
        den = la * lb
        if den == 1:
            return MPoly({k: Fraction(v) for k, v in acc.items() if v})
        return MPoly({k: Fraction(v, den) for k, v in acc.items() if v})

    def scale(self, c) -> MPoly:
        c = Fraction(c)
        if not c:
            return MPoly()
        return MPoly({k: v * c for k, v in self.terms.items()})

    def __pow__(self, e: int) -> MPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def deriv(self, var: str) -> MPoly:
        idx = 0 if var == "x" else 1
        out: dict[Term, Fraction] = {}
        for (dx, dt), c in self.terms.items():
            e = (dx, dt)[idx]
            if e:
                key = (dx - 1, dt) if idx == 0 else (dx, dt - 1)
                out[key] = out.get(key, _F0) + c * e
        return MPoly(out)

    def exact_div(self, d: MPoly) -> MPoly:
        """Exact quotient self / d; raises ValueError if d does not divide."""
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return MPoly()
        if self.intcoef and d.intcoef:
            try:
                return self._exact_div_int(d)
            except ValueError:
                # the quotient may still exist with rational coefficients
                pass
        q: dict[Term, Fraction] = {}
        r = dict(self.terms)
        dkey, dc = d.leading()
        while r:
            rkey = max(r)
            mkey = (rkey[0] - dkey[0], rkey[1] - dkey[1])
            if mkey[0] < 0 or mkey[1] < 0:
                raise ValueError("polynomial division is not exact")
            mc = r[rkey] / dc
            q[mkey] = mc
            for k2, c2 in d.terms.items():
                kk = (mkey[0] + k2[0], mkey[1] + k2[1])
                v = r.get(kk, _F0) - mc * c2
                if v:
                    r[kk] = v
                else:
                    r.pop(kk, None)
        return MPoly(q)

    def _exact_div_int(self, d: MPoly) -> MPoly:
        """Long division in x over Z[t] when both operands have integer
        coefficients; raises ValueError when the integer quotient fails."""
        a: dict[int, list[int]] = {}
        for (dx, dt), c in self.terms.items():
            row = a.setdefault(dx, [])
            if len(row) <= dt:
                row.extend([0] * (dt + 1 - len(row)))
            row[dt] = c.numerator
        b: dict[int, list[int]] = {}
        for (dx, dt), c in d.terms.items():
            row = b.setdefault(dx, [])
            if len(row) <= dt:
                row.extend([0] * (dt + 1 - len(row)))
            row[dt] = c.numerator
        db = max(b)
        lead = b[db]
        q: dict[int, list[int]] = {}
        while a:
            da = max(a)
            if da < db:
                raise ValueError("polynomial division is not exact")
            qr = _z_exact_div(a[da], lead)
            q[da - db] = qr
            for dxb, u in b.items():
                k = da - db + dxb
                nu = _z_sub(a.get(k, ()), _z_mul(u, qr))
                if nu:
                    a[k] = nu
                else:
                    a.pop(k, None)
        terms: dict[Term, Fraction] = {}
        for dx, u in q.items():
            for dt, c in enumerate(u):
                if c:
                    terms[(dx, dt)] = Fraction(c)
        return MPoly(terms)


# ---------------------------------------------------------------------------
# gcd machinery: subresultant PRS in x over Z[t].  Inputs are scaled up front
# to integer coefficient tables {dx: [t-coefficients]} so the inner loops run
# on plain ints; Fractions reappear only in the final canonical result.

def _int_table(p: MPoly) -> dict[int, list[int]]:
    l = 1
    if not p.intcoef:
        for c in p.terms.values():
            if c.denominator != 1:
                l = l * c.denominator // math.gcd(l, c.denominator)
    rows: dict[int, dict[int, int]] = {}
    if l == 1:
        for (dx, dt), c in p.terms.items():
            rows.setdefault(dx, {})[dt] = c.numerator
    else:
        for (dx, dt), c in p.terms.items():
            rows.setdefault(dx, {})[dt] = c.numerator * (l // c.denominator)
    out: dict[int, list[int]] = {}
    for dx, row in rows.items():
        u = [0] * (max(row) + 1)
        for dt, v in row.items():
            u[dt] = v
        out[dx] = u
    return out


def _z_trim(u: list[int]) -> list[int]:
    while u and not u[-1]:
        u.pop()
    return u


def _z_sub(a, b):
    if len(a) < len(b):
        out = list(b)
        for k in range(len(out)):
            out[k] = -out[k]
        for k, v in enumerate(a):
            out[k] += v
    else:
        out = list(a)
        for k, v in enumerate(b):
            out[k] -= v
    return _z_trim(out)


def _z_scale(u, c: int):
    return [v * c for v in u]


def _z_mul(a, b):
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    if la == 1:
        return _z_trim(_z_scale(b, a[0]))
    if lb == 1:
        return _z_trim(_z_scale(a, b[0]))
    if la * lb <= 24:
        out = [0] * (la + lb - 1)
        for i, v in enumerate(a):
            if v:
                for j, w in enumerate(b):
                    out[i + j] += v * w
        return _z_trim(out)
    # Kronecker substitution: pack both factors into single big ints, do one
    # machine-level multiply and read the product back off in balanced base
    # 2^k digits
    ma = max(abs(v) for v in a)
    mb = max(abs(v) for v in b)
    k = (ma * mb * min(la, lb)).bit_length() + 2
    A = 0
    for v in reversed(a):
        A = (A << k) + v
    B = 0
    for v in reversed(b):
        B = (B << k) + v
    C = A * B
    n = la + lb - 1
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    out = [0] * n
    for i in range(n):
        d = C & mask
        C >>= k
        if d >= half:
            d -= mask + 1
            C += 1
        out[i] = d
    return _z_trim(out)


def _z_primitive(u):
    g = 0
    for v in u:
        g = math.gcd(g, v)
        if g == 1:
            return u, 1
    if g <= 1:
        return u, 1
    return [v // g for v in u], g


def _z_prem(a, b):
    """Pseudo-remainder of a by b: a is scaled freely by lc(b), which keeps
    every intermediate value an integer."""
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    while len(r) > db:
        lt = r.pop()
        if not lt:
            continue
        if lcb != 1:
            for k in range(len(r)):
                r[k] *= lcb
        shift = len(r) - db
        for k in range(db):
            r[shift + k] -= lt * b[k]
    return _z_trim(r)


def _z_gcd(a, b):
    """Gcd in Z[t], integer content included; [] only for gcd(0, 0)."""
    if not a:
        return list(b)
    if not b:
        return list(a)
    if len(a) == 1 or len(b) == 1:
        g = 0
        for v in a:
            g = math.gcd(g, v)
            if g == 1:
                return [1]
        for v in b:
            g = math.gcd(g, v)
            if g == 1:
                return [1]
        return [g]
    a, ca = _z_primitive(a)
    b, cb = _z_primitive(b)
    c = math.gcd(ca, cb)
    while b:
        if len(a) < len(b):
            a, b = b, a
        a, b = b, _z_primitive(_z_prem(a, b))[0]
    if a[-1] < 0:
        a = [-v for v in a]
    if c != 1:
        a = [v * c for v in a]
    return list(a)


def _z_exact_div(u, g):
    dg = len(g) - 1
    lcg = g[-1]
    q = [0] * max(len(u) - dg, 0)
    r = list(u)
    r = _z_trim(r)
    while r:
        dr = len(r) - 1
        if dr < dg or r[-1] % lcg:
            raise ValueError("univariate division is not exact")
        c = r[-1] // lcg
        q[dr - dg] = c
        r.pop()
        shift = dr - dg
        for k in range(dg):
            r[shift + k] -= c * g[k]
        r = _z_trim(r)
    return q


def _z_pow(u, e: int):
    out = [1]
    for _ in range(e):
        out = _z_mul(out, u)
    return out


def _zx_content(xv):
    g: list[int] = []
    for u in xv.values():
        g = _z_gcd(g, u)
        if g == [1]:
            return [1]
    return g


def _zx_div_content(xv, g):
    if g == [1]:
        return xv
    return {dx: _z_exact_div(u, g) for dx, u in xv.items()}


def _zx_prem(a, b):
    """Standard pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in x
    over Z[t]; the exact scaling power matters for the subresultant chain,
    so skipped reduction steps are compensated at the end."""
    da = max(a)
    db = max(b)
    lcb = b[db]
    steps = 0
    r = a
    while r and max(r) >= db:
        steps += 1
        dr = max(r)
        lt = r[dr]
        shift = dr - db
        new: dict[int, list[int]] = {}
        for k, u in r.items():
            if k != dr:
                new[k] = _z_mul(u, lcb)
        for k, u in b.items():
            if k == db:
                continue
            kk = k + shift
            v = _z_sub(new.get(kk, []), _z_mul(u, lt))
            if v:
                new[kk] = v
            else:
                new.pop(kk, None)
        r = new
    if r and steps < da - db + 1:
        f = _z_pow(lcb, da - db + 1 - steps)
        r = {k: _z_mul(u, f) for k, u in r.items()}
    return r


def _zx_prs_gcd(a, b):
    """Gcd of the primitive parts via the subresultant chain: dividing each
    remainder by g * h^delta bounds the growth without any content gcds
    along the way.  Always correct; used directly on small inputs and as
    the fallback when the modular route declines."""
    g = h = [1]
    while b:
        delta = max(a) - max(b)
        r = _zx_prem(a, b)
        if r:
            beta = _z_mul(g, _z_pow(h, delta))
            if beta != [1]:
                r = {dx: _z_exact_div(u, beta) for dx, u in r.items()}
        g = b[max(b)]
        if delta == 1:
            h = g
        elif delta > 1:
            h = _z_exact_div(_z_pow(g, delta), _z_pow(h, delta - 1))
        a, b = b, r
    return _zx_div_content(a, _zx_content(a))


def _zx_divides(a, g):
    """Whether g divides a in x over Z[t].  For a primitive g the quotient
    of an exact division is integral, so a failed coefficient division
    means "no"."""
    r = {dx: list(u) for dx, u in a.items()}
    dg = max(g)
    lcg = g[dg]
    while r:
        dr = max(r)
        if dr < dg:
            return False
        try:
            q = _z_exact_div(r.pop(dr), lcg)
        except ValueError:
            return False
        for k, u in g.items():
            if k == dg:
                continue
            kk = k + dr - dg
            v = _z_sub(r.get(kk, []), _z_mul(u, q))
            if v:
                r[kk] = v
            else:
                r.pop(kk, None)
    return True


# 2^521 - 1 is prime and far above any coefficient this layer produces, so a
# single modular image almost always suffices; a lift that still fails the
# division check just falls back to the exact chain.
_PRIME = (1 << 521) - 1


def _eval_list(u, t0: int, p: int) -> int:
    acc = 0
    for c in reversed(u):
        acc = (acc * t0 + c) % p
    return acc


def _mod_eval_rows(xv, t0: int, p: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for dx, u in xv.items():
        acc = _eval_list(u, t0, p)
        if acc:
            out[dx] = acc
    return out


def _dense(d: dict[int, int], n: int) -> list[int]:
    return [d.get(k, 0) for k in range(n + 1)]


_P61 = (1 << 61) - 1


def _mod_gcd_degree(A, B, p) -> int:
    """Degree of gcd(A, B) over F_p, computed with a scaled remainder chain
    so no modular inverses are needed."""
    while B:
        db = len(B) - 1
        lcb = B[-1]
        R = list(A)
        while len(R) - 1 >= db:
            lcr = R.pop()
            if not lcr:
                continue
            shift = len(R) - db
            for k in range(db):
                R[shift + k] = (R[shift + k] * lcb - lcr * B[k]) % p
            for k in range(shift):
                R[k] = R[k] * lcb % p
        while R and not R[-1]:
            R.pop()
        A, B = B, R
    return len(A) - 1


def _zx_coprime_probe(a, b) -> bool:
    """True when one modular evaluation proves the primitive parts coprime.

    Evaluating t at a point that keeps both leading rows nonzero can only
    raise the x-degree of the gcd image, so a degree-0 image certifies
    gcd = 1.  Runs over a word-size prime so the common coprime case stays
    cheap; False means inconclusive, never "not coprime".
    """
    p = _P61
    da, db = max(a), max(b)
    for t0 in (2, 3, 7):
        Ae = _mod_eval_rows(a, t0, p)
        Be = _mod_eval_rows(b, t0, p)
        if Ae.get(da) is None or Be.get(db) is None:
            continue
        return _mod_gcd_degree(_dense(Ae, da), _dense(Be, db), p) == 0
    return False


def _mod_rem_list(A, B, p):
    db = len(B) - 1
    inv = pow(B[-1], -1, p)
    R = list(A)
    while len(R) - 1 >= db and R:
        c = R[-1] * inv % p
        if c:
            shift = len(R) - 1 - db
            for k in range(db):
                R[shift + k] = (R[shift + k] - c * B[k]) % p
        R.pop()
        while R and not R[-1]:
            R.pop()
    return R


def _mod_gcd_lists(A, B, p):
    while B:
        A, B = B, _mod_rem_list(A, B, p)
    inv = pow(A[-1], -1, p)
    return [v * inv % p for v in A]


def _newton_interp(points, values, p):
    n = len(points)
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            inv = pow((points[i] - points[i - j]) % p, -1, p)
            coef[i] = (coef[i] - coef[i - 1]) * inv % p
    out = [coef[-1]]
    for i in range(n - 2, -1, -1):
        new = [0] * (len(out) + 1)
        for k, v in enumerate(out):
            new[k + 1] = (new[k + 1] + v) % p
            new[k] = (new[k] - v * points[i]) % p
        new[0] = (new[0] + coef[i]) % p
        out = new
    return out


def _zx_mod_gcd(a, b):
    """Gcd of the primitive parts by evaluation in t and interpolation over
    a large prime.  Returns None when the images misbehave; a returned
    table is verified by exact division, so it is always correct.

    An image of x-degree 0 proves coprimality outright: evaluation at a
    point keeping the leading rows alive can only raise the gcd degree.
    """
    p = _PRIME
    da, db = max(a), max(b)
    lcg = _z_gcd(a[da], b[db])
    dt_a = max(len(u) for u in a.values()) - 1
    dt_b = max(len(u) for u in b.values()) - 1
    need = min(dt_a, dt_b) + len(lcg)
    pts: list[int] = []
    vals: list[list[int]] = []
    dmin = None
    t0 = 0
    tries = 0
    while len(pts) < need:
        t0 += 1
        tries += 1
        if tries > 6 * need + 40:
            return None
        lg = _eval_list(lcg, t0, p)
        if not lg:
            continue
        Ae = _mod_eval_rows(a, t0, p)
        Be = _mod_eval_rows(b, t0, p)
        if Ae.get(da) is None or Be.get(db) is None:
            continue
        G = _mod_gcd_lists(_dense(Ae, da), _dense(Be, db), p)
        dg = len(G) - 1
        if dg == 0:
            return {0: [1]}
        if dmin is None or dg < dmin:
            dmin = dg
            pts, vals = [], []
        if dg == dmin:
            pts.append(t0)
            vals.append([v * lg % p for v in G])
    half = p >> 1
    out: dict[int, list[int]] = {}
    for dx in range(dmin + 1):
        series = [row[dx] for row in vals]
        cs = _newton_interp(pts, series, p)
        u = _z_trim([c - p if c > half else c for c in cs])
        if u:
            out[dx] = u
    if not out or max(out) != dmin:
        return None
    out = _zx_div_content(out, _zx_content(out))
    if _zx_divides(a, out) and _zx_divides(b, out):
        return out
    return None


def _canon_poly(p: MPoly) -> MPoly:
    """Integer-primitive scaling with positive leading coefficient (lex
    order with x > t): the canonical generator over Q of the ideal (p)."""
    ls = 1
    if not p.intcoef:
        for c in p.terms.values():
            if c.denominator != 1:
                ls = ls * c.denominator // math.gcd(ls, c.denominator)
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, c.numerator * (ls // c.denominator))
    if p.terms[max(p.terms)] < 0:
        g = -g
    if g == 1 and ls == 1:
        return p
    return MPoly({k: Fraction(c.numerator * (ls // c.denominator) // g)
                  for k, c in p.terms.items()})


def gcd(p: MPoly, q: MPoly) -> MPoly:
    """Canonical gcd in Q[x, t]: integer-primitive with positive leading
    coefficient under lex order x > t."""
    if p.is_zero:
        return MPoly.one() if q.is_zero else _canon_poly(q)
    if q.is_zero:
        return _canon_poly(p)
    if p.is_constant or q.is_constant:
        return MPoly.one()
    a, b = _int_table(p), _int_table(q)
    if max(a) < max(b):
        a, b = b, a
    if max(b) > 1 and _zx_coprime_probe(a, b):
        # primitive parts are coprime, so only the shared content remains;
        # fold it jointly and stop as soon as it collapses to 1
        g = {0: [1]}
        d = None
        for u in a.values():
            d = list(u) if d is None else _z_gcd(d, u)
            if len(d) == 1 and d[0] == 1:
                break
        else:
            for u in b.values():
                d = _z_gcd(d, u)
                if len(d) == 1 and d[0] == 1:
                    break
    else:
        ca, cb = _zx_content(a), _zx_content(b)
        d = _z_gcd(ca, cb)
        a, b = _zx_div_content(a, ca), _zx_div_content(b, cb)
        if max(b) == 0:
            g = {0: [1]}
        else:
            g = None
            if max(b) >= 2:
                size = sum(len(u) for u in a.values())
                size += sum(len(u) for u in b.values())
                if size >= 24:
                    g = _zx_mod_gcd(a, b)
            if g is None:
                g = _zx_prs_gcd(a, b)
    rows = {dx: _z_mul(u, d) for dx, u in g.items()}
    ig = 0
    for u in rows.values():
        for c in u:
            ig = math.gcd(ig, c)
    if rows[max(rows)][-1] < 0:
        ig = -ig
    terms = {}
    for dx, u in rows.items():
        for dt, c in enumerate(u):
            if c:
                terms[(dx, dt)] = Fraction(c // ig)
    return MPoly(terms)

# ---------------------------------------------------------------------------

class RatFunc:
    """Rational function over Q in x and t, stored in canonical form.

    Canonical form: gcd(num, den) = 1, both have integer coefficients with
    no common integer factor, and the denominator's leading coefficient
    (lex order with x > t) is positive.  That representative is unique, so
    two RatFuncs are equal in the field iff their term maps are equal and
    __eq__ is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduce=True):
        if not isinstance(num, MPoly):
            num = MPoly.const(num)
        if den is None:
            den = _MP_ONE
        elif not isinstance(den, MPoly):
            den = MPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = _MP_ZERO
            self.den = _MP_ONE
            return
        if _reduce and den.terms != _ONE_TERMS:
            g = gcd(num, den)
            if g.terms != _ONE_TERMS:
                num = num.exact_div(g)
                den = den.exact_div(g)
        # canonical scaling: clear every coefficient denominator, strip the
        # common integer content, and make the denominator's leading
        # coefficient positive
        ls = 1
        if not num.intcoef:
            for c in num.terms.values():
                if c.denominator != 1:
                    ls = ls * c.denominator // math.gcd(ls, c.denominator)
        if not den.intcoef:
            for c in den.terms.values():
                if c.denominator != 1:
                    ls = ls * c.denominator // math.gcd(ls, c.denominator)
        if ls == 1:
            ig = 0
            for c in den.terms.values():
                ig = math.gcd(ig, c.numerator)
                if ig == 1:
                    break
            if ig != 1:
                for c in num.terms.values():
                    ig = math.gcd(ig, c.numerator)
                    if ig == 1:
                        break
            if den.terms[max(den.terms)] < 0:
                ig = -ig
            if ig == 1:
                self.num = num
                self.den = den
                return
            self.num = MPoly({k: Fraction(c.numerator // ig)
                              for k, c in num.terms.items()})
            self.den = MPoly({k: Fraction(c.numerator // ig)
                              for k, c in den.terms.items()})
            return
        ints_n = {k: c.numerator * (ls // c.denominator)
                  for k, c in num.terms.items()}
        ints_d = {k: c.numerator * (ls // c.denominator)
                  for k, c in den.terms.items()}
        ig = 0
        for v in ints_d.values():
            ig = math.gcd(ig, v)
            if ig == 1:
                break
        if ig != 1:
            for v in ints_n.values():
                ig = math.gcd(ig, v)
                if ig == 1:
                    break
        if ints_d[max(ints_d)] < 0:
            ig = -ig
        self.num = MPoly({k: Fraction(v // ig) for k, v in ints_n.items()})
        self.den = MPoly({k: Fraction(v // ig) for k, v in ints_d.items()})

    # constructors ---------------------------------------------------------
    @classmethod
    def from_int(cls, n: int) -> RatFunc:
        return cls(MPoly.const(n))

    @classmethod
    def from_fraction(cls, f: Fraction) -> RatFunc:
        return cls(MPoly.const(f))

    @classmethod
    def var_x(cls) -> RatFunc:
        return cls(MPoly.variable("x"))

    @classmethod
    def var_t(cls) -> RatFunc:
        return cls(MPoly.variable("t"))

    @classmethod
    def zero(cls) -> RatFunc:
        return cls(_MP_ZERO)

    @classmethod
    def one(cls) -> RatFunc:
        return cls(_MP_ONE)

    # predicates -----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.terms == _ONE_TERMS and self.den.terms == _ONE_TERMS

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant")
        return self.num.constant_value() / self.den.constant_value()

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num.terms == other.num.terms and self.den.terms == other.den.terms

    def __repr__(self) -> str:
        return f"RatFunc({self.num.terms!r}, {self.den.terms!r})"

    # arithmetic -----------------------------------------------------------
    def __add__(self, other) -> RatFunc:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if d1.terms == _ONE_TERMS and d2.terms == _ONE_TERMS:
            return RatFunc(n1 + n2)
        # with reduced inputs the sum over the lcm denominator can only
        # share factors with g = gcd(d1, d2), so one small gcd suffices
        g = d1 if d1.terms == d2.terms else gcd(d1, d2)
        if g.terms == _ONE_TERMS:
            return RatFunc(n1 * d2 + n2 * d1, d1 * d2, _reduce=False)
        d1r = d1.exact_div(g)
        d2r = d2.exact_div(g)
        num = n1 * d2r + n2 * d1r
        if num.is_zero:
            return _RF_ZERO
        den = d1 * d2r
        h = gcd(num, g)
        if h.terms != _ONE_TERMS:
            num = num.exact_div(h)
            den = den.exact_div(h)
        return RatFunc(num, den, _reduce=False)

    __radd__ = __add__

    def __sub__(self, other) -> RatFunc:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> RatFunc:
        out = object.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other) -> RatFunc:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if n1.is_zero or n2.is_zero:
            return _RF_ZERO
        # cross-cancel: reduced inputs leave the cross pairs as the only
        # possible common factors, so the product below is already reduced
        if d2.terms != _ONE_TERMS:
            g1 = gcd(n1, d2)
            if g1.terms != _ONE_TERMS:
                n1 = n1.exact_div(g1)
                d2 = d2.exact_div(g1)
        if d1.terms != _ONE_TERMS:
            g2 = gcd(n2, d1)
            if g2.terms != _ONE_TERMS:
                n2 = n2.exact_div(g2)
                d1 = d1.exact_div(g2)
        return RatFunc(n1 * n2, d1 * d2, _reduce=False)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero")
        flipped = RatFunc(other.den, other.num, _reduce=False)
        return self * flipped

    def __rtruediv__(self, other) -> RatFunc:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, e: int) -> RatFunc:
        if not isinstance(e, int):
            raise TypeError("exponent must be an int")
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("zero to a negative power")
            return RatFunc(self.den ** (-e), self.num ** (-e), _reduce=False)
        return RatFunc(self.num ** e, self.den ** e, _reduce=False)

    def deriv(self, var: str) -> RatFunc:
        """Partial derivative d/dx or d/dt; the two commute."""
        if var not in ("x", "t"):
            raise ValueError(f"unknown derivation {var!r}")
        if self.den.terms == _ONE_TERMS:
            return RatFunc(self.num.deriv(var))
        n, d = self.num, self.den
        dd = d.deriv(var)
        if dd.is_zero:
            return RatFunc(n.deriv(var), d)
        g = gcd(d, dd)
        if g.terms == _ONE_TERMS:
            # squarefree-in-var denominator: the quotient rule output is
            # already in lowest terms
            return RatFunc(n.deriv(var) * d - n * dd, d * d, _reduce=False)
        # peel the repeated part: same value with both degrees deflated by
        # deg g, though a final reduction is still required
        e = d.exact_div(g)
        w = dd.exact_div(g)
        return RatFunc(n.deriv(var) * e - n * w, d * e)


_MP_ZERO = MPoly.zero()
_MP_ONE = MPoly.one()
_ONE_TERMS = {(0, 0): _F1}
_RF_ZERO = RatFunc(_MP_ZERO)


def _coerce(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)):
        return RatFunc(MPoly.const(v))
    if isinstance(v, MPoly):
        return RatFunc(v)
    return NotImplemented


# ---------------------------------------------------------------------------

class LinDiffOp:
    """Linear differential operator sum_q a_q * d^q in one derivation.

    ``var`` is "x" or "t" and names the derivation d; coefficients are
    RatFunc, stored lowest order first with no trailing zero (the zero
    operator has an empty coefficient tuple).  Multiplication uses
    d * a = a * d + a', extended by d^i * a = sum_k C(i,k) a^(i-k) d^k.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs):
        if var not in ("x", "t"):
            raise ValueError(f"unknown derivation {var!r}")
        cs = [c if isinstance(c, RatFunc) else _coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def partial(cls, var: str) -> LinDiffOp:
        return cls(var, [RatFunc.zero(), RatFunc.one()])

    @classmethod
    def from_scalar(cls, var: str, a) -> LinDiffOp:
        return cls(var, [a])

    @property
    def order(self) -> int:
        """Order of the operator; -1 for the zero operator."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, LinDiffOp):
            return self.var == other.var and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"LinDiffOp({self.var!r}, {list(self.coeffs)!r})"

    def __add__(self, other: LinDiffOp) -> LinDiffOp:
        if not isinstance(other, LinDiffOp):
            return NotImplemented
        if self.var != other.var:
            raise ValueError("operators act through different derivations")
        n = max(len(self.coeffs), len(other.coeffs))
        zero = RatFunc.zero()
        out = []
        for q in range(n):
            a = self.coeffs[q] if q < len(self.coeffs) else zero
            b = other.coeffs[q] if q < len(other.coeffs) else zero
            out.append(a + b)
        return LinDiffOp(self.var, out)

    def __mul__(self, other: LinDiffOp) -> LinDiffOp:
        if not isinstance(other, LinDiffOp):
            return NotImplemented
        if self.var != other.var:
            raise ValueError("operators act through different derivations")
        if self.is_zero or other.is_zero:
            return LinDiffOp(self.var, [])
        var = self.var
        out: dict[int, RatFunc] = {}
        for j, b in enumerate(other.coeffs):
            if b.is_zero:
                continue
            # derivative chain of b, reused across all i
            derivs = [b]
            for _ in range(len(self.coeffs) - 1):
                derivs.append(derivs[-1].deriv(var))
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for k in range(i + 1):
                    c = a * derivs[i - k]
                    if math.comb(i, k) != 1:
                        c = c * math.comb(i, k)
                    key = k + j
                    out[key] = out.get(key, RatFunc.zero()) + c
        n = max(out) + 1 if out else 0
        return LinDiffOp(var, [out.get(q, RatFunc.zero()) for q in range(n)])

    def apply(self, f: RatFunc) -> RatFunc:
        """Apply the operator to a field element."""
        if not isinstance(f, RatFunc):
            f = _coerce(f)
        result = RatFunc.zero()
        g = f
        for q, a in enumerate(self.coeffs):
            if q:
                g = g.deriv(self.var)
            if not a.is_zero:
                result = result + a * g
        return result
