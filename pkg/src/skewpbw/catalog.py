"""Ready-made presentations for a small family of well known algebras.

Every entry constructs a fresh Presentation over a rational function field
whose transcendentals are exactly the free coefficients of that algebra, so
all genericity assumptions hold automatically.  Keys:

  qdiff          operator pair y, x with x*y = q*y*x
  qdil           scaling operators H_i acting on variables t_i
  weyl           multiplicative Weyl algebra: x_j*x_i = lam_ij*x_i*x_j
  skew3d         three-dimensional skew polynomial algebra with one
                 inhomogeneous relation y*x = (1/gamma)*(x*y - v)
  quantum_space  quantum affine n-space: x_j*x_i = q_ij*x_i*x_j
  witten         deformation of an enveloping algebra on x, y, z
  symplectic     one quantum symplectic pair: x1*y1 = q^2*y1*x1

build_example validates the result and checks relation confluence before
returning, so a constructed presentation is always safe to compute with.
eligible_purposes reports which optional validation tiers (laurent, poisson)
an entry additionally satisfies; entries outside a tier are still built, they
just cannot be localized or carry a scaled-commutator classification.
"""

from dataclasses import dataclass

from .algebra import Presentation, validate_presentation
from .errors import InvalidOptions, UnknownExample, ValidationFailure
from .exprs import parse_element
from .rewrite import check_overlaps
from .scalars import scalar_field


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    description: str
    options: tuple  # ((name, default), ...) accepted by build_example
    builder: object

    def defaults(self):
        return {name: value for name, value in self.options}


def _int_option(options, name, default, low=1):
    value = options.pop(name, default)
    if not isinstance(value, int) or isinstance(value, bool) or value < low:
        raise InvalidOptions(f"{name} must be an integer >= {low}, got {value!r}")
    return value


def _pair_name(stem, i, j, n):
    # compact lam12 style stays unambiguous while indices are single digits
    return f"{stem}{i}{j}" if n <= 9 else f"{stem}{i}_{j}"


def _build_qdiff(**options):
    F = scalar_field(("q",))
    return Presentation(2, 0, ("y", "x"), ("q",), {(1, 2): F.param("q")})


def _build_qdil(**options):
    n = _int_option(options, "n", 1)
    m = _int_option(options, "m", 1)
    if n > m:
        raise InvalidOptions(f"need n <= m scaling operators, got n={n}, m={m}")
    F = scalar_field(("q",))
    gens = [f"t{i}" for i in range(1, n + 1)] + [f"H{i}" for i in range(1, m + 1)]
    # H_i scales its own variable t_i; every other pair commutes
    q = {(i, n + i): F.param("q") for i in range(1, n + 1)}
    return Presentation(n + m, 0, gens, ("q",), q)


def _build_weyl(**options):
    n = _int_option(options, "n", 3)
    params = [_pair_name("lam", i, j, n) for i in range(1, n) for j in range(i + 1, n + 1)]
    F = scalar_field(params)
    q = {
        (i, j): F.param(_pair_name("lam", i, j, n))
        for i in range(1, n)
        for j in range(i + 1, n + 1)
    }
    return Presentation(n, 0, [f"x{i}" for i in range(1, n + 1)], params, q)


def _build_quantum_space(**options):
    n = _int_option(options, "n", 3)
    params = [_pair_name("q", i, j, n) for i in range(1, n) for j in range(i + 1, n + 1)]
    F = scalar_field(params)
    q = {
        (i, j): F.param(_pair_name("q", i, j, n))
        for i in range(1, n)
        for j in range(i + 1, n + 1)
    }
    return Presentation(n, 0, [f"x{i}" for i in range(1, n + 1)], params, q)


def _build_witten(**options):
    F = scalar_field(("xi1", "xi3", "xi5"))
    # x*z = xi1*z*x, z*y = xi3*y*z, y*x = xi5*x*y
    q = {
        (1, 2): F.param("xi5"),
        (1, 3): F.param("xi1").inv(),
        (2, 3): F.param("xi3"),
    }
    return Presentation(3, 0, ("x", "y", "z"), ("xi1", "xi3", "xi5"), q)


def _build_symplectic(**options):
    n = _int_option(options, "n", 1)
    if n != 1:
        raise InvalidOptions(
            "only the single pair is supported: larger blocks need inhomogeneous "
            "sums that fall outside the pure bracket classification"
        )
    F = scalar_field(("q",))
    q = F.param("q")
    return Presentation(2, 0, ("y1", "x1"), ("q",), {(1, 2): q * q})


_SKEW3D_GENS = ("x", "y", "z")
_SKEW3D_UNIT = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}


def _skew3d_q(alpha, beta, gamma):
    # z*y = (1/alpha)*y*z, z*x = beta*x*z, y*x = (1/gamma)*x*y + tail
    return {(1, 2): gamma.inv(), (1, 3): beta, (2, 3): alpha.inv()}


def _skew3d_support(src):
    """Parse v against an unconstrained draft and report which of the four
    slots 1, x, y, z it touches."""
    F = scalar_field(("alpha", "beta", "gamma"))
    draft = Presentation(
        3, 0, _SKEW3D_GENS, ("alpha", "beta", "gamma"),
        _skew3d_q(F.param("alpha"), F.param("beta"), F.param("gamma")),
    )
    v = parse_element(draft, src)
    bad = set(v.terms) - _SKEW3D_UNIT
    if bad:
        raise InvalidOptions(
            f"v must be a linear combination of 1, x, y, z; got term {sorted(bad)[0]}"
        )
    return set(v.terms)


def _build_skew3d(**options):
    src = options.pop("v", "z")
    if not isinstance(src, str):
        raise InvalidOptions(f"v must be an expression string, got {src!r}")
    support = _skew3d_support(src)

    # Confluence of x z y x forces one coefficient identity per slot of v:
    # an x component needs alpha = 1, a y component needs beta = 1, and a
    # constant or z component needs beta = alpha.  Eliminated parameters
    # disappear from the ground field.
    pin_alpha = (1, 0, 0) in support
    pin_beta = (0, 1, 0) in support
    linked = (0, 0, 0) in support or (0, 0, 1) in support
    alpha_free = not pin_alpha
    beta_free = not pin_beta and not linked
    if linked and (pin_alpha or pin_beta):
        alpha_free = False

    params = []
    if alpha_free:
        params.append("alpha")
    if beta_free:
        params.append("beta")
    params.append("gamma")
    F = scalar_field(tuple(params))
    one = F.one
    alpha = F.param("alpha") if alpha_free else one
    if beta_free:
        beta = F.param("beta")
    elif pin_beta:
        beta = one
    else:  # tied to alpha by a constant or z component
        beta = alpha
    gamma = F.param("gamma")

    q = _skew3d_q(alpha, beta, gamma)
    bare = Presentation(3, 0, _SKEW3D_GENS, tuple(params), q)
    try:
        v = parse_element(bare, src)
    except Exception as exc:
        raise InvalidOptions(
            f"coefficients of v may only use the surviving parameters "
            f"{tuple(params)}: {exc}"
        ) from None
    if set(v.terms) - _SKEW3D_UNIT:
        raise InvalidOptions("v must be a linear combination of 1, x, y, z")
    if not v.terms:
        return bare

    scale = -gamma.inv()
    c0 = {}
    c1 = {}
    for exps, coeff in v.terms.items():
        if exps == (0, 0, 0):
            c0[(1, 2)] = scale * coeff
        else:
            t = exps.index(1) + 1
            c1[(1, 2, t)] = scale * coeff
    return Presentation(3, 0, _SKEW3D_GENS, tuple(params), q, c0, c1)


_CATALOG = {
    e.key: e
    for e in (
        CatalogEntry(
            "qdiff",
            "operator pair y, x with x*y = q*y*x",
            (),
            _build_qdiff,
        ),
        CatalogEntry(
            "qdil",
            "variables t_1..t_n and scaling operators H_1..H_m with "
            "H_i*t_i = q*t_i*H_i and all other pairs commuting",
            (("n", 1), ("m", 1)),
            _build_qdil,
        ),
        CatalogEntry(
            "weyl",
            "multiplicative Weyl algebra: x_j*x_i = lam_ij*x_i*x_j with "
            "independent units lam_ij",
            (("n", 3),),
            _build_weyl,
        ),
        CatalogEntry(
            "skew3d",
            "generators x, y, z with z*y = (1/alpha)*y*z, z*x = beta*x*z and "
            "y*x = (1/gamma)*(x*y - v) for a chosen v in the span of 1, x, y, z; "
            "components of v pin coefficients (x: alpha = 1, y: beta = 1, "
            "1 or z: beta = alpha) and drop the pinned parameters",
            (("v", "z"),),
            _build_skew3d,
        ),
        CatalogEntry(
            "quantum_space",
            "quantum affine n-space: x_j*x_i = q_ij*x_i*x_j with independent "
            "units q_ij",
            (("n", 3),),
            _build_quantum_space,
        ),
        CatalogEntry(
            "witten",
            "deformed enveloping algebra on x, y, z: x*z = xi1*z*x, "
            "z*y = xi3*y*z, y*x = xi5*x*y",
            (),
            _build_witten,
        ),
        CatalogEntry(
            "symplectic",
            "one quantum symplectic pair: x1*y1 = q^2*y1*x1",
            (("n", 1),),
            _build_symplectic,
        ),
    )
}


def list_examples():
    """Catalog entries in a fixed presentation order."""
    return list(_CATALOG.values())


def example_entry(key) -> CatalogEntry:
    try:
        return _CATALOG[key]
    except KeyError:
        raise UnknownExample(
            f"unknown example {key!r}; available: {', '.join(_CATALOG)}"
        ) from None


def build_example(key, **options) -> Presentation:
    """Construct and fully check one catalog presentation.

    Unknown option names and out-of-range values raise InvalidOptions.  The
    result has passed basic validation and the relation confluence check.
    """
    entry = example_entry(key)
    allowed = {name for name, _ in entry.options}
    unknown = set(options) - allowed
    if unknown:
        raise InvalidOptions(
            f"{key} accepts options {sorted(allowed) or 'none'}; "
            f"got {sorted(unknown)}"
        )
    opts = dict(options)
    p = entry.builder(**opts)
    validate_presentation(p, "basic")
    check_overlaps(p)
    return p


def eligible_purposes(p: Presentation):
    """Which optional validation tiers the presentation satisfies.

    poisson additionally requires at least one generator pair, since a
    classification needs a commutator to read the scale from.
    """
    out = []
    try:
        validate_presentation(p, "laurent")
        out.append("laurent")
    except ValidationFailure:
        pass
    if p.n >= 2:
        try:
            validate_presentation(p, "poisson")
            out.append("poisson")
        except ValidationFailure:
            pass
    return tuple(out)
