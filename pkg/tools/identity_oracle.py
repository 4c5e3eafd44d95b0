#!/usr/bin/env python3
"""Independent sympy oracle for the symbolic identities and derived constants.

Run before touching the package code; the printed values are frozen into the
test suite.  Everything here goes through sympy's expand/simplify machinery,
never through src/twocovers.
"""

import json

import sympy as sp

A, B, x, z, t, u, v, j, d = sp.symbols("A B x z t u v j d")


def genus5_rhs():
    return A * (x + 1) ** 4 * (x**2 + 1) ** 4 - 2**6 * x**3 * (x**2 + x + 1) ** 3


def genus2_rhs(var):
    return A * (var + 2) ** 2 * var**4 - 2**6 * (var + 1) ** 3


def main():
    out = {}

    # 1. coefficient vector of the degree-12 model, split as c_i = p_i*A + q_i
    h = sp.Poly(sp.expand(genus5_rhs()), x)
    coeffs = [h.coeff_monomial(x**i) for i in range(13)]
    pairs = []
    for c in coeffs:
        c = sp.expand(c)
        p_i = c.coeff(A, 1)
        q_i = c.coeff(A, 0)
        assert sp.expand(p_i * A + q_i - c) == 0
        pairs.append((int(p_i), int(q_i)))
    out["h_coeff_pairs_low_to_high"] = pairs

    # 2. the quartic-parametrization identity:
    #    64[(t^3-1)^4 - (t^3-1)^3 (t^4-1)] + A (t^4-1)^4 == (t-1)^4 h(t)
    lhs = 64 * ((t**3 - 1) ** 4 - (t**3 - 1) ** 3 * (t**4 - 1)) + A * (t**4 - 1) ** 4
    rhs = (t - 1) ** 4 * genus5_rhs().subs(x, t)
    out["quartic_param_identity"] = sp.expand(lhs - rhs) == 0

    # 3. genus-2 and genus-3 model coefficients
    g2 = sp.Poly(sp.expand(genus2_rhs(u)), u)
    out["genus2_coeffs"] = [str(sp.expand(g2.coeff_monomial(u**i))) for i in range(7)]
    g3 = sp.Poly(sp.expand((u**2 - 4) * genus2_rhs(u)), u)
    out["genus3_coeffs"] = [str(sp.expand(g3.coeff_monomial(u**i))) for i in range(9)]

    # 4. quotient identities: h(x) == x^6 g(x + 1/x) and
    #    h(x) (x^2-1)^2 == x^8 [(u^2-4) g(u)] at u = x + 1/x
    gsub = genus2_rhs(x + 1 / x)
    out["quotient_g2_identity"] = sp.simplify(sp.expand(x**6 * gsub) - sp.expand(genus5_rhs())) == 0
    g3sub = ((x + 1 / x) ** 2 - 4) * gsub
    out["quotient_g3_identity"] = (
        sp.simplify(sp.expand(x**8 * g3sub) - sp.expand(genus5_rhs() * (x**2 - 1) ** 2)) == 0
    )

    # 5. the plane-curve relation vanishes on the parametrization
    F = (x**4 - z**4) / (x - z) + (x**3 - z**3) / (x - z)
    F = sp.cancel(F)
    xt = -(t**3 - 1) / (t**4 - 1)
    zt = -t * (t**3 - 1) / (t**4 - 1)
    out["parametrization_on_F"] = sp.simplify(F.subs({x: xt, z: zt})) == 0
    out["F_poly_in_z_coeffs"] = [str(sp.expand(sp.Poly(F, z).coeff_monomial(z**i))) for i in range(4)]

    # 6. quartic-to-cubic map lands on y^2 = x^3 - 64B x + 64B, and the
    #    intermediate resolvent identity
    xe = 8 * u**2 + 4 * u - 8 * v
    ye = 8 * (v * (4 * u + 1) - 4 * u**3 - 3 * u**2)
    resid = sp.expand(ye**2 - (xe**3 - 64 * B * xe + 64 * B))
    _, resid = sp.div(sp.Poly(resid, v), sp.Poly(v**2 - (u**4 + u**3 + B), v))
    out["quartic_map_on_curve"] = sp.expand(resid.as_expr()) == 0

    # 7. j-invariant derived examples
    jinv = 1728 * 4 * (-1) ** 3 / (4 * (-1) ** 3 + 27 * 1**2)
    out["j_of_m1_1"] = str(sp.Rational(1728 * 4 * (-1) ** 3, 4 * (-1) ** 3 + 27))
    out["A_from_j_6912_over_5"] = str(27 * sp.Rational(6912, 5) / (4 * (sp.Rational(6912, 5) - 1728)))
    out["A_from_j_minus_6912_over_23"] = str(
        27 * sp.Rational(-6912, 23) / (4 * (sp.Rational(-6912, 23) - 1728))
    )

    # 8. invariants of the quartic u^4+u^3+B
    quartic = [1, 1, 0, 0, B]  # a,b,c,d,e
    a, b, c, dd, e = quartic
    I = 12 * a * e - 3 * b * dd + c**2
    J = 72 * a * c * e + 9 * b * c * dd - 27 * a * dd**2 - 27 * e * b**2 - 2 * c**3
    out["I_of_D"] = str(sp.expand(I))
    out["J_of_D"] = str(sp.expand(J))

    # 9. infinity image: exact limit of the map along the branch v ~ +u^2
    #    (substitute u = 1/w, v = sqrt(1 + w + B w^4)/w^2, w -> 0+)
    w = sp.symbols("w", positive=True)
    vb = sp.sqrt(1 + w + B * w**4) / w**2
    xe_lim = sp.limit((8 / w**2 + 4 / w - 8 * vb), w, 0, "+")
    ye_lim = sp.limit(8 * (vb * (4 / w + 1) - 4 / w**3 - 3 / w**2), w, 0, "+")
    out["infinity_image_plus_branch"] = [str(sp.simplify(xe_lim)), str(sp.simplify(ye_lim))]

    # 10. fixed-point value: h(1)
    out["h_at_1"] = str(sp.expand(genus5_rhs().subs(x, 1)))
    out["h_at_minus1"] = str(sp.expand(genus5_rhs().subs(x, -1)))

    # 11. discriminants across the family
    out["disc_E"] = str(sp.factor(-16 * (4 * (-A) ** 3 + 27 * A**2)))
    ep = sp.Poly(x**3 + A * x**2 + 2 * A * x + A, x)
    out["disc_Eprime_cubic"] = str(sp.factor(sp.discriminant(4 * (x**3 + A * x**2 + 2 * A * x + A), x) / 16))
    out["disc_quartic_D"] = str(sp.factor(sp.discriminant(x**4 + x**3 + B, x)))
    out["disc_h_factored"] = str(sp.factor(sp.discriminant(genus5_rhs(), x)))

    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
