"""100-digit reference constants used as test vectors.

Digits match the published decimal expansions (OEIS A000796, A002194,
A002163, A001113, A002162) and were independently reproduced with the
stdlib decimal module (libmpdec) at 120-digit working precision.  The
oracle's own pi/sqrt/exp/log routines are validated against these, so a
systematic defect in the series code cannot go unnoticed.
"""

PI_100 = (
    "3.141592653589793238462643383279502884197169399375"
    "105820974944592307816406286208998628034825342117067"
)

SQRT3_100 = (
    "1.732050807568877293527446341505872366942805253810"
    "380628055806979451933016908800037081146186757248575"
)

SQRT5_100 = (
    "2.236067977499789696409173668731276235440618359611"
    "525724270897245410520925637804899414414408378782274"
)

E_100 = (
    "2.718281828459045235360287471352662497757247093699"
    "959574966967627724076630353547594571382178525166427"
)

LN2_100 = (
    "0.693147180559945309417232121458176568075500134360"
    "2552541206800094933936219696947156058633269964186875"
)
