"""Power series of s**6 * g(s) about s = 0 (generated, do not edit).

s**6 g(s) = sum_k COEF[k] s**(2k), radius of convergence pi/2.
Produced by scripts/gen_series.py (mpmath contour integral, 60 digits).
"""

PLUS = (
    4.0,
    0.0,
    -2.6666666666666666667e-1,
    8.4656084656084656085e-2,
    1.132370216970488508e-3,
    -2.095771865851390026e-2,
    1.9703509094149944426e-2,
    -1.4042607157900511123e-2,
    8.8455309987128685565e-3,
    -5.1601518034187700814e-3,
    2.8510198429828388716e-3,
    -1.5123537240570405816e-3,
    7.7733404917729010699e-4,
    -3.8965473217938859487e-4,
    1.9139103239236614224e-4,
    -9.2440865359917088573e-5,
    4.4022659699788290246e-5,
    -2.0714248141326778348e-5,
    9.6463995939983906908e-6,
    -4.4519169381959823771e-6,
    2.0384074187091071362e-6,
    -9.2681184507353795618e-7,
    4.1877346385065962891e-7,
    -1.8816250956905707178e-7,
)

MINUS = (
    0.0,
    0.0,
    0.0,
    0.0,
    1.9899787408941406226,
    -5.3149409505734886651,
    8.0707902276218089938,
    -9.1801212536726269861,
    8.7090240454316271265,
    -7.2845938424236924058,
    5.5525175381643973775,
    -3.9400759031035074897,
    2.6413638755387552371,
    -1.6906104968856854225,
    1.0412574465404199945,
    -6.2083572982071352965e-1,
    3.6002801676908145009e-1,
    -2.0382646800144156782e-1,
    1.1299650374121441538e-1,
    -6.1493670182043303487e-2,
    3.2919695920418999008e-2,
    -1.7365892255948016432e-2,
    9.0405729918163221535e-3,
    -4.6505229596854485491e-3,
)
