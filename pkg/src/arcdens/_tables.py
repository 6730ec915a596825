"""Closed-form coefficient tables, entered verbatim.

Each table is a list of (lower, upper, formula) with half-open [lower, upper)
intervals.  Formulas take the expansion factor r; the eps-dependent tables are
built by functions of eps.  Known-bad entries are not edited here; see the
corrections in moments.py.
"""

import math

s3 = math.sqrt(3.0)
inf = math.inf


def _mu_null():
    return [
        (1.0, 1.5, lambda r: 37 / 216 * r**2),
        (1.5, 2.0, lambda r: -r**2 / 8 + 4 - 8 / r + 9 / (2 * r**2)),
        (2.0, inf, lambda r: 1 - 3 / (2 * r**2)),
    ]


def _nu_null():
    return [
        (1.0, 4 / 3, lambda r: (3007*r**10 - 13824*r**9 + 898*r**8 + 77760*r**7 - 117953*r**6 + 48888*r**5
                                - 24246*r**4 + 60480*r**3 - 38880*r**2 + 3888) / (58320*r**4)),
        (4 / 3, 1.5, lambda r: (5467*r**10 - 37800*r**9 + 61912*r**8 + 46588*r**6 - 191520*r**5 + 13608*r**4
                                + 241920*r**3 - 155520*r**2 + 15552) / (233280*r**4)),
        (1.5, 2.0, lambda r: -(7*r**12 - 72*r**11 + 312*r**10 - 5332*r**8 + 15072*r**7 + 13704*r**6 - 139264*r**5
                               + 273600*r**4 - 242176*r**3 + 103232*r**2 - 27648*r + 8640) / (960*r**6)),
        (2.0, inf, lambda r: (15*r**4 - 11*r**2 - 48*r + 25) / (15*r**6)),
    ]


def _omega_null():
    return [
        (1.0, 4 / 3, lambda r: -(1369*r**8 + 4107*r**7 + 902*r**6 - 78084*r**5 + 161784*r**4 - 182736*r**3
                                 - 23328*r**2 + 155520*r - 55296) / (11664*(r + 2)*(r + 1)*r**2)),
        (4 / 3, 1.5, lambda r: -(1369*r**7 + 4107*r**6 + 9650*r**5 - 98496*r**4 + 132624*r**3 - 79056*r**2
                                 - 57888*r + 72576) / (11664*(r + 2)*(r + 1)*r)),
        (1.5, 2.0, lambda r: -(r**10 + 3*r**9 - 62*r**8 + 968*r**6 - 1704*r**5 - 1824*r**4 + 5424*r**3
                               - 1168*r**2 - 3856*r + 2208) / (16*(r + 2)*(r + 1)*r**4)),
        (2.0, inf, lambda r: (3*r**3 + 3*r**2 + 3*r - 13) / (r**4*(r + 1))),
    ]


MU_NULL = _mu_null()
NU_NULL = _nu_null()
OMEGA_NULL = _omega_null()

# second eps-derivative of the alternative means at eps = 0
MU_SEG_DD = [
    (1.0, 1.5, lambda r: -8 / 3 + 74 / 27 * r**2),
    (1.5, 2.0, lambda r: -2 * (r**2 - 4*r + 2) * (r**2 + 4*r - 6) / r**2),
    (2.0, inf, lambda r: -8 * (1 - r**2) / r**2),
]
MU_ASSOC_DD = [
    (1.0, 4 / 3, lambda r: -22 / 9 * r**2 + 192 / r - 96 / r**2 - 96),
    (4 / 3, 1.5, lambda r: -22 / 9 * r**2 + 32 / r**2 - 24),
    (1.5, 2.0, lambda r: -6 * r**2 - 384 / r + 248 / r**2 + 144),
    (2.0, inf, lambda r: -40 / r**2),
]


# ---- segregation mean, general eps -------------------------------------------

def _ws(e):
    # shared denominator factor (2e+1)^2 (2e-1)^2
    return (2*e + 1)**2 * (2*e - 1)**2


def _s11(r, e):
    return -(576*r**2*e**4 - 1152*e**4 - 37*r**2 + 288*e**2) / (216*_ws(e))


def _s12(r, e):
    return -(576*r**4*e**4 - 1152*r**2*e**4 + 91*r**4 + 512*s3*r**3*e + 2592*r**2*e**2 + 1536*s3*r*e**3
             + 1152*e**4 - 768*r**3 - 2304*s3*r**2*e - 6912*r*e**2 - 2304*s3*e**3 + 1728*r**2 + 3456*s3*r*e
             + 5184*e**2 - 1728*r - 1728*s3*e + 648) / (216*r**2*_ws(e))


def _s13(r, e):
    return -(192*r**4*e**4 - 384*r**2*e**4 + 9*r**4 + 864*r**2*e**2 + 512*s3*r*e**3 + 384*e**4 - 2304*r*e**2
             - 768*s3*e**3 - 288*r**2 + 1728*e**2 + 576*r - 324) / (72*r**2*_ws(e))


def _s14(r, e):
    return -(192*r**4*e**4 - 384*r**2*e**4 - 9*r**4 - 96*s3*r**3*e + 288*r**2*e**2 - 128*e**4 + 144*r**3
             + 576*s3*r**2*e + 256*s3*e**3 - 720*r**2 - 1152*s3*r*e - 576*e**2 + 1152*r + 768*s3*e - 612) \
        / (72*r**2*_ws(e))


def _s15(r, e):
    return -(48*r**4*e**4 - 96*r**2*e**4 + 72*r**2*e**2 - 32*e**4 + 64*s3*e**3 - 18*r**2 - 144*e**2 + 27) \
        / (18*r**2*_ws(e))


def _s16(r, e):
    return (48*r**4*e**4 + 256*r**3*e**4 - 128*s3*r**3*e**3 + 288*r**2*e**4 - 192*s3*r**2*e**3 + 72*r**2*e**2
            + 18*r**2 + 48*s3*e - 45) / (18*_ws(e)*r**2)


def _s23(r, e):
    return -(576*r**4*e**4 - 1152*r**2*e**4 + 37*r**4 + 224*s3*r**3*e + 864*r**2*e**2 - 384*e**4 - 336*r**3
             - 576*s3*r**2*e + 768*s3*e**3 + 432*r**2 - 1728*e**2 + 576*s3*e - 216) / (216*r**2*_ws(e))


def _s33(r, e):
    return (576*r**2*e**4 + 3072*r*e**4 - 1536*s3*r*e**3 + 3456*e**4 - 2304*s3*e**3 - 37*r**2 - 224*s3*r*e
            + 864*e**2 + 336*r + 576*s3*e - 432) / (216*_ws(e))


def _s34(r, e):
    return (192*r**4*e**4 + 1024*r**3*e**4 - 512*s3*r**3*e**3 + 1152*r**2*e**4 - 768*s3*r**2*e**3 + 9*r**4
            + 96*s3*r**3*e + 288*r**2*e**2 - 144*r**3 - 576*s3*r**2*e + 720*r**2 + 1152*s3*r*e - 1152*r
            - 576*s3*e + 540) / (72*r**2*_ws(e))


def _s41(r, e):
    return -(9*r**2*e**2 + 2*s3*r**2*e + 48*r*e**2 + r**2 - 16*s3*r*e - 90*e**2 - 12*r + 36*s3*e) \
        / (18*(3*e - s3)**2)


def _s42(r, e):
    return -(9*r**4*e**4 - 4*s3*r**4*e**3 + 48*r**3*e**4 - 48*s3*r**3*e**3 - 90*r**2*e**4 + 36*r**3*e**2
             + 96*s3*r**2*e**3 - 126*r**2*e**2 - 32*s3*r*e**3 - 48*e**4 + 36*s3*r**2*e + 144*r*e**2
             + 96*s3*e**3 - 18*r**2 - 72*s3*r*e - 216*e**2 + 36*r + 72*s3*e - 27) / (2*(3*e - s3)**4*r**2)


def _one(r, e):
    return 1.0


SEG_REGIME_BOUNDS = (0.0, s3 / 8, s3 / 6, s3 / 4, s3 / 3)


def mu_seg_table(e):
    """(regime label, pieces) for the segregation mean at level e."""
    a = 1.5 - s3 * e
    b = 2 - 4 * e / s3
    c = s3 / (2 * e) - 1 if e > 0 else inf
    d = s3 / (2 * e) if e > 0 else inf
    if e < s3 / 8:
        rows = [(1.0, a, _s11), (a, 1.5, _s12), (1.5, b, _s13), (b, 2.0, _s14),
                (2.0, c, _s15), (c, d, _s16), (d, inf, _one)]
        label = 1
    elif e < s3 / 6:
        rows = [(1.0, a, _s11), (a, b, _s12), (b, 1.5, _s23), (1.5, 2.0, _s14),
                (2.0, c, _s15), (c, d, _s16), (d, inf, _one)]
        label = 2
    elif e < s3 / 4:
        rows = [(1.0, b, _s12), (b, c, _s23), (c, 1.5, _s33), (1.5, 2.0, _s34),
                (2.0, d, _s16), (d, inf, _one)]
        label = 3
    else:
        rows = [(1.0, 3 - 2 * e / s3, _s41), (3 - 2 * e / s3, s3 / e - 2, _s42), (s3 / e - 2, inf, _one)]
        label = 4
    return label, [(lo, hi, _bind(f, e)) for lo, hi, f in rows]


def _bind(f, e):
    return lambda r: f(r, e)


# ---- association mean, general eps -------------------------------------------

def _wa(e):
    return (6*e + s3)**2 * (6*e - s3)**2


def _a11(r, e):
    return -(3456*e**4*r**4 + 9216*e**4*r**3 - 3072*s3*e**3*r**4 - 17280*e**4*r**2 - 3072*s3*e**3*r**3
             + 2304*e**2*r**4 + 4608*s3*e**3*r**2 - 2304*e**2*r**3 + 6336*e**4 + 6144*s3*e**3*r + 6912*e**2*r**2
             + 512*s3*e*r**3 - 101*r**4 - 6144*s3*e**3 - 11520*e**2*r - 1536*s3*e*r**2 + 256*r**3 + 5760*e**2
             + 1536*s3*e*r - 384*r**2 - 512*s3*e + 256*r - 64) / (24*_wa(e)*r**2)


def _a12(r, e):
    return -(1728*e**4*r**4 - 1536*s3*e**3*r**4 - 31104*e**4*r**2 + 1152*e**2*r**4 + 15552*e**4
             + 10368*e**2*r**2 - 37*r**4 - 20736*e**2*r + 10368*e**2) / (24*_wa(e)*r**2)


def _a13(r, e):
    return (-2592*e**4*r**4 - 2304*s3*e**3*r**4 - 46656*e**4*r**2 + 1728*e**2*r**4 + 10656*e**4
            - 9216*s3*e**3*r + 9072*e**2*r**2 - 432*s3*e*r**3 - 15*r**4 + 12288*s3*e**3 - 13824*e**2*r
            + 1728*s3*e*r**2 - 216*r**3 + 4032*e**2 - 2304*s3*e*r + 432*r**2 + 1024*s3*e - 384*r + 128) \
        / (36*_wa(e)*r**2)


def _a14(r, e):
    return -(1728*e**4*r**4 - 1536*s3*e**3*r**4 - 31104*e**4*r**2 + 1152*e**2*r**4 - 5184*e**4
             + 2592*e**2*r**2 - 37*r**4 - 3456*e**2) / (24*_wa(e)*r**2)


def _a15(r, e):
    return 9 / 8 * (1152*e**4*r**2 + 192*e**4 - 192*e**2*r**2 - r**4 + 128*e**2 + 32*r**2 - 64*r + 36) \
        / (_wa(e)*r**2)


def _a16(r, e):
    return -9 / 8 * (r + 6) * (r - 2)**3 / (_wa(e)*r**2)


def _a22(r, e):
    return (-3456*e**2*r**4 + 111*r**4 - 5184*e**4*r**4 + 4608*s3*e**3*r**4 - 336*s3*e*r**3 - 168*r**3
            - 13824*e**4*r**3 + 4608*s3*e**3*r**3 + 3456*e**2*r**3 + 144*r**2 - 6912*s3*e**3*r**2
            - 3888*e**2*r**2 + 576*s3*e*r**2 + 25920*e**4*r**2 + 3168*e**4 + 2880*e**2 - 256*s3*e - 32
            - 3072*s3*e**3) / (36*(s3 + 6*e)**2*(-6*e + s3)**2*r**2)


def _a31(r, e):
    return (2*r**2 - 1) / (6*r**2)


def _a32(r, e):
    return (432*e**4*r**4 + 1152*e**4*r**3 - 576*s3*e**3*r**4 + 1296*e**4*r**2 - 960*s3*e**3*r**3
            + 864*e**2*r**4 - 864*s3*e**3*r**2 + 576*e**2*r**3 - 192*s3*e*r**4 - 360*e**4 + 648*e**2*r**2
            + 64*s3*e*r**3 + 48*r**4 + 192*s3*e**3 - 144*s3*e*r**2 - 64*r**3 - 504*e**2 + 72*r**2
            + 88*s3*e - 25) / (16*(3*e - s3)**4*r**2)


def _a33(r, e):
    return -(-54*e**2*r**2 + 36*s3*e*r**2 + 15*e**2 - 18*r**2 + 2*s3*e + 20) / (6*(-3*e + s3)**2*r**2)


ASSOC_REGIME_BOUNDS = (0.0, (7 * s3 - 3 * math.sqrt(15)) / 12, s3 / 12, s3 / 3)


def mu_assoc_table(e):
    p = (1 + 2 * s3 * e) / (1 - s3 * e)
    q = 4 * (1 - s3 * e) / 3
    u = 4 * (1 + 2 * s3 * e) / 3
    v = 3 / (2 * (1 - s3 * e))
    if e < ASSOC_REGIME_BOUNDS[1]:
        rows = [(1.0, p, _a11), (p, q, _a12), (q, u, _a13), (u, v, _a14), (v, 2.0, _a15), (2.0, inf, _a16)]
        label = 1
    elif e < s3 / 12:
        rows = [(1.0, q, _a11), (q, p, _a22), (p, u, _a13), (u, v, _a14), (v, 2.0, _a15), (2.0, inf, _a16)]
        label = 2
    else:
        w = (1 + 2 * s3 * e) / (2 * (1 - s3 * e))
        rows = [(1.0, w, _a31), (w, v, _a32), (v, inf, _a33)]
        label = 3
    return label, [(lo, hi, _bind(f, e)) for lo, hi, f in rows]


# ---- tables at specific eps ----------------------------------------------------

MU_SEG_AT = {
    "sqrt3/8": [
        (1.0, 9 / 8, lambda r: 2287 / 9126 * r**2 - 1 / 13),
        (9 / 8, 1.5, lambda r: -(5905*r**4 - 36864*r**3 + 62910*r**2 - 46656*r + 13122) / (9126*r**2)),
        (1.5, 2.0, lambda r: (61*r**4 - 768*r**3 + 3494*r**2 - 5120*r + 2466) / (338*r**2)),
        (2.0, 3.0, lambda r: -(3*r**4 - 422*r**2 + 606) / (338*r**2)),
        # printed as [2,4]; the previous row already covers [2,3)
        (3.0, 4.0, lambda r: (3*r**4 - 48*r**3 + 530*r**2 - 768) / (338*r**2)),
        (4.0, inf, lambda r: 1.0),
    ],
    "sqrt3/4": [
        (1.0, 1.5, lambda r: -67 / 54 * r**2 + 40 / 9 * r - 3),
        (1.5, 2.0, lambda r: (7*r**4 - 48*r**3 + 122*r**2 - 128*r + 48) / (2*r**2)),
        (2.0, inf, lambda r: 1.0),
    ],
    "2sqrt3/7": [
        (1.0, 9 / 7, lambda r: -241 / 54 * r**2 + 38 / 3 * r - 8),
        (9 / 7, 1.5, lambda r: (80*r**4 - 432*r**3 + 866*r**2 - 756*r + 243) / (2*r**2)),
        (1.5, inf, lambda r: 1.0),
    ],
}

NU_SEG_AT = {
    "sqrt3/8": [
        (1.0, 12 / 11, lambda r: (9959911*r**10 - 46006272*r**9 - 430526*r**8 + 258785280*r**7 - 385799609*r**6
                                  + 162699264*r**5 - 83976048*r**4 + 201277440*r**3 - 129392640*r**2
                                  + 12939264) / (104104845*r**4)),
        (12 / 11, 9 / 8, lambda r: (9959911*r**10 - 46006272*r**9 - 430526*r**8 + 258785280*r**7 - 415110891*r**6
                                    + 272331072*r**5 - 158725008*r**4 - 16174080*r**3 + 315394560*r**2
                                    - 310542336*r + 90574848) / (104104845*r**4)),
        (9 / 8, math.sqrt(6) / 2,
         lambda r: (3144167*r**12 + 15335424*r**11 - 378655166*r**10 + 2750459904*r**9 - 11800111467*r**8
                    + 31878202752*r**7 - 54792387144*r**6 + 60339341664*r**5 - 42745183272*r**4
                    + 19903426272*r**3 - 6790168926*r**2 + 1989715104*r - 373071582) / (104104845*r**6)),
        (math.sqrt(6) / 2, 21 / 16,
         lambda r: -(8177689*r**12 - 54153216*r**11 + 320428478*r**10 - 2459326464*r**9 + 11854698987*r**8
                     - 32751603072*r**7 + 55010737224*r**6 - 59029241184*r**5 + 42131073672*r**4
                     - 20886001632*r**3 + 7379714142*r**2 - 1694942496*r + 170415414) / (104104845*r**6)),
        (21 / 16, 4 / 3,
         lambda r: -(8177689*r**12 - 54153216*r**11 + 320428478*r**10 - 2459326464*r**9 + 12509010411*r**8
                     - 37904305536*r**7 + 71918042184*r**6 - 88617024864*r**5 + 71256548232*r**4
                     - 36176875776*r**3 + 10724592861*r**2 - 1694942496*r + 170415414) / (104104845*r**6)),
        (4 / 3, 1.5,
         lambda r: -(2718937*r**12 - 39596544*r**11 + 434455742*r**10 - 3154811904*r**9 + 14086429683*r**8
                     - 39680803584*r**7 + 72881433288*r**6 - 88893062496*r**5 + 71547681672*r**4
                     - 36487418112*r**3 + 10828106973*r**2 - 1694942496*r + 170415414) / (104104845*r**6)),
        (1.5, s3,
         lambda r: -(1027*r**12 - 19968*r**11 + 295626*r**10 - 3265792*r**9 + 23210081*r**8 - 103077696*r**7
                     + 289042360*r**6 - 511170304*r**5 + 553668600*r**4 - 343186304*r**3 + 109133095*r**2
                     - 20431008*r + 5845554) / (428415*r**6)),
        (s3, 7 / 4,
         lambda r: -(637*r**12 - 19968*r**11 + 299370*r**10 - 3265792*r**9 + 23199551*r**8 - 103077696*r**7
                     + 289042360*r**6 - 511170304*r**5 + 553700190*r**4 - 343186304*r**3 + 109133095*r**2
                     - 20431008*r + 5788692) / (428415*r**6)),
        (7 / 4, 2.0,
         lambda r: -(637*r**12 - 19968*r**11 + 299370*r**10 - 3265792*r**9 + 24051519*r**8 - 112023360*r**7
                     + 328179640*r**6 - 602490624*r**5 + 673558110*r**4 - 427086848*r**3 + 133604087*r**2
                     - 20431008*r + 5788692) / (428415*r**6)),
        (2.0, 3.0,
         lambda r: (130*r**12 - 2496*r**11 + 22134*r**10 - 122720*r**9 + 452225*r**8 - 1010880*r**7
                    + 1075400*r**6 + 26624*r**5 - 1993566*r**4 + 5324800*r**3 - 5083895*r**2 + 303264*r
                    - 37908) / (428415*r**6)),
        (3.0, 3.5,
         lambda r: -(330*r**8 - 8896*r**7 + 85445*r**6 - 342624*r**5 + 332000*r**4 + 1148560*r**3
                     - 1180986*r**2 - 5324800*r + 6678947) / (428415*r**4)),
        (3.5, 4.0,
         lambda r: -(330*r**5 - 4936*r**4 + 12453*r**3 + 47388*r**2 - 12992*r - 128256) * (r - 4)**3
         / (428415*r**4)),
        (4.0, inf, lambda r: 0.0),
    ],
    "sqrt3/4": [
        (1.0, 9 / 8, lambda r: -(14285*r**7 - 28224*r**6 - 233266*r**5 + 1106688*r**4 - 2021199*r**3
                                 + 1876608*r**2 - 880794*r + 165888) / (3645*r)),
        (9 / 8, 9 / 7, lambda r: -(14285*r**10 - 28224*r**9 - 233266*r**8 + 1106688*r**7 - 1234767*r**6
                                   - 3431808*r**5 + 14049126*r**4 - 22228992*r**3 + 18895680*r**2
                                   - 8503056*r + 1594323) / (3645*r**4)),
        (9 / 7, 4 / 3, lambda r: -(14285*r**10 - 28224*r**9 - 233266*r**8 + 1106688*r**7 - 2545713*r**6
                                   + 5903280*r**5 - 13456044*r**4 + 20636208*r**3 - 18305190*r**2
                                   + 8503056*r - 1594323) / (3645*r**4)),
        (4 / 3, 1.5, lambda r: (1909*r**10 - 27072*r**9 + 104920*r**8 - 111072*r**7 + 1992132*r**6
                                - 15844032*r**5 + 50174640*r**4 - 81881280*r**3 + 73220760*r**2
                                - 34012224*r + 6377292) / (14580*r**4)),
        (1.5, 2.0, lambda r: -(5120*r**14 - 46176*r**13 + 175984*r**12 - 387680*r**11 + 611163*r**10
                               - 850240*r**9 + 1118472*r**8 - 1308960*r**7 + 1331492*r**6 - 1187904*r**5
                               + 955392*r**4 - 705536*r**3 + 433304*r**2 - 198144*r + 56016) / (20*r**4)),
        (2.0, inf, lambda r: 0.0),
    ],
    "2sqrt3/7": [
        (1.0, 15 / 14, lambda r: -(2495087*r**7 - 5067342*r**6 - 29145379*r**5 + 134149248*r**4
                                   - 230713503*r**3 + 202262778*r**2 - 90317349*r + 16336404) / (14580*r)),
        (15 / 14, 15 / 13, lambda r: -(2495087*r**10 - 5067342*r**9 - 29145379*r**8 + 134149248*r**7
                                       - 140359071*r**6 - 378587142*r**5 + 1465530651*r**4 - 2206303596*r**3
                                       + 1786050000*r**2 - 765450000*r + 136687500) / (14580*r**4)),
        (15 / 13, 7 / 6, lambda r: -(2495087*r**10 - 5067342*r**9 - 29145379*r**8 + 134149248*r**7
                                     - 309668679*r**6 + 731864538*r**5 - 1559738349*r**4 + 2174176404*r**3
                                     - 1767825000*r**2 + 765450000*r - 136687500) / (14580*r**4)),
        (7 / 6, 5 / 4, lambda r: (24337*r**10 - 321426*r**9 + 1000147*r**8 - 654768*r**7 + 77561559*r**6
                                  - 527363136*r**5 + 1468526760*r**4 - 2157840000*r**3 + 1767825000*r**2
                                  - 765450000*r + 136687500) / (14580*r**4)),
        (5 / 4, 9 / 7, lambda r: 24337 / 14580 * r**6 - 17857 / 810 * r**5 + 1000147 / 14580 * r**4
         - 18188 / 405 * r**3 - 174113 / 1620 * r**2 + 8176 / 45 * r - 78),
        (9 / 7, 1.5, lambda r: -(8*r**6 - 106*r**5 + 8709*r**4 - 39684*r**3 + 68000*r**2 - 51192*r + 14256)
         * (2*r - 3)**4 / (20*r**4)),
        (1.5, inf, lambda r: 0.0),
    ],
}

MU_ASSOC_AT = {
    "5sqrt3/24": [
        (1.0, 3.0, lambda r: 1 / 3 - 1 / (6*r**2)),
        (3.0, 4.0, lambda r: r**2 / 3 - 8 * r / 3 - 55 / (6*r**2) + 19 / 3),
        (4.0, inf, lambda r: 1 - 55 / (6*r**2)),
    ],
    "sqrt3/12": [
        (1.0, 2.0, lambda r: (6*r**4 - 16*r**3 + 18*r**2 - 5) / (18*r**2)),
        (2.0, inf, lambda r: 1 - 37 / (18*r**2)),
    ],
    "sqrt3/21": [
        (1.0, 8 / 7, lambda r: (7839*r**4 - 27648*r**3 + 49152*r**2 - 35840*r + 9216) / (16200*r**2)),
        (8 / 7, 1.5, lambda r: (2719*r**4 - 5592*r**3 + 5760*r**2 - 1536) / (8100*r**2)),
        (1.5, 12 / 7, lambda r: (53*r**4 + 2744*r**3 - 7296*r**2 + 8064*r - 3104) / (2700*r**2)),
        (12 / 7, 7 / 4, lambda r: (2719*r**4 - 1440*r**2 + 2112) / (16200*r**2)),
        (7 / 4, 2.0, lambda r: -(2401*r**4 - 73824*r**2 + 153664*r - 88548) / (16200*r**2)),
        (2.0, inf, lambda r: 1 - 89 / (54*r**2)),
    ],
}

NU_ASSOC_AT = {
    "5sqrt3/24": [
        (1.0, 3.0, lambda r: (r**4 - 2*r**2 + 1) / (27*r**6)),
        (3.0, 3.5, lambda r: -(120*r**10 - 2176*r**9 + 15340*r**8 - 50304*r**7 + 58754*r**6 + 74880*r**5
                               - 248577*r**4 + 138240*r**3 + 47172*r**2 + 23328*r - 7305) / (405*r**6)),
        (3.5, 2 + s3, lambda r: -(120*r**10 - 2176*r**9 + 15180*r**8 - 48960*r**7 + 58754*r**6 + 47440*r**5
                                  - 176547*r**4 + 138240*r**3 - 70477*r**2 + 23328*r - 7305) / (405*r**6)),
        (2 + s3, 4.0, lambda r: (10*r**12 - 192*r**11 + 1320*r**10 - 2944*r**9 - 7590*r**8 + 49920*r**7
                                 - 69986*r**6 - 46480*r**5 + 184137*r**4 - 143360*r**3 + 71917*r**2
                                 - 23520*r + 7315) / (405*r**6)),
        (4.0, inf, lambda r: (787*r**4 - 7601*r**2 - 16032*r + 9265) / (135*r**6)),
    ],
    "sqrt3/12": [
        (1.0, 1.5, lambda r: (10*r**12 - 96*r**11 + 240*r**10 + 192*r**9 - 1830*r**8 + 3360*r**7 - 2650*r**6
                              + 240*r**5 + 1383*r**4 - 1280*r**3 + 540*r**2 - 144*r + 35) / (405*r**6)),
        (1.5, 2.0, lambda r: (10*r**12 - 96*r**11 + 240*r**10 + 192*r**9 - 1670*r**8 + 2784*r**7 - 2650*r**6
                              + 2400*r**5 - 1047*r**4 - 1280*r**3 + 1269*r**2 - 144*r + 35) / (405*r**6)),
        (2.0, inf, lambda r: (537*r**4 - 683*r**2 - 2448*r + 1315) / (405*r**6)),
    ],
    "sqrt3/21": [
        (1.0, 2 * math.sqrt(14) / 7,
         lambda r: (4124031*r**12 - 22708224*r**11 - 389826*r**10 + 369129408*r**9 - 1592672721*r**8
                    + 3532359672*r**7 - 4721848374*r**6 + 4050858048*r**5 - 2387433568*r**4 + 995033088*r**3
                    - 209048784*r**2 - 43352064*r + 25952256) / (65610000*r**6)),
        (2 * math.sqrt(14) / 7, 8 / 7,
         lambda r: (6594660*r**12 - 31178952*r**11 - 14911074*r**10 + 441735648*r**9 - 1578842961*r**8
                    + 3311083512*r**7 - 4669163574*r**6 + 4366966848*r**5 - 2522908768*r**4 + 778272768*r**3
                    - 93443280*r**2 + 14450688*r - 8650752) / (65610000*r**6)),
        (8 / 7, 5 / 4,
         lambda r: (826701*r**12 - 7118748*r**11 + 14155864*r**10 + 18467640*r**9 - 104968680*r**8
                    + 165877272*r**7 - 128355690*r**6 + 27338184*r**5 + 47304144*r**4 - 52684800*r**3
                    + 24413592*r**2 - 7225344*r + 1966080) / (32805000*r**6)),
        (5 / 4, 4 / 3,
         lambda r: (826701*r**12 - 7118748*r**11 + 14155864*r**10 + 18467640*r**9 + 20074008*r**8
                    - 671672808*r**7 + 2194076310*r**6 - 3382581816*r**5 + 2840904144*r**4 - 1262284800*r**3
                    + 240413592*r**2 - 7225344*r + 1966080) / (32805000*r**6)),
        (4 / 3, 10 / 7,
         lambda r: (826701*r**12 - 7118748*r**11 + 14155864*r**10 + 18467640*r**9 - 137116617*r**8
                    + 512952192*r**7 - 1511673690*r**6 + 2773418184*r**5 - 2883095856*r**4 + 1560115200*r**3
                    - 335586408*r**2 - 7225344*r + 1966080) / (32805000*r**6)),
        (10 / 7, 1.5,
         lambda r: (826701*r**12 - 7118748*r**11 + 14155864*r**10 + 18467640*r**9 - 91939401*r**8
                    + 125718912*r**7 - 128697690*r**6 + 139178184*r**5 - 60695856*r**4 - 52684800*r**3
                    + 48413592*r**2 - 7225344*r + 1966080) / (32805000*r**6)),
        (1.5, 12 / 7,
         lambda r: (226415*r**12 - 1426740*r**11 + 334536*r**10 + 17196648*r**9 - 87678147*r**8
                    + 311364480*r**7 - 711864862*r**6 + 944809880*r**5 - 684036240*r**4 + 238099456*r**3
                    - 24048504*r**2 - 7633920*r + 4761088) / (10935000*r**6)),
        (12 / 7, 7 / 4,
         lambda r: (5786907*r**12 - 42712488*r**11 + 76274888*r**10 + 51865788*r**8 - 300043296*r**7
                    + 132202536*r**6 + 171413760*r**5 - 93614976*r**4 + 147517440*r**3 - 194460480*r**2
                    + 67608576*r - 29061120) / (262440000*r**6)),
        (7 / 4, 2.0,
         lambda r: -(2470629*r**12 - 25412184*r**11 + 112001848*r**10 - 1958438076*r**8 + 5449924256*r**7
                     + 6150612888*r**6 - 55820599296*r**5 + 109663683136*r**4 - 97335694848*r**3
                     + 40552466112*r**2 - 9825887232*r + 3078523200) / (262440000*r**6)),
        (2.0, inf, lambda r: (493829*r**4 - 433645*r**2 - 1765008*r + 929955) / (455625*r**6)),
    ],
}

KEY_VALUES = {
    "sqrt3/8": s3 / 8,
    "sqrt3/4": s3 / 4,
    "2sqrt3/7": 2 * s3 / 7,
    "5sqrt3/24": 5 * s3 / 24,
    "sqrt3/12": s3 / 12,
    "sqrt3/21": s3 / 21,
}
