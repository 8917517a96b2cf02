"""Frozen Chebyshev coefficients for large-argument Bessel evaluation.

Generated by tools/gen_bessel_pq.py; do not edit by hand.
"""

import numpy as np

PQ_X_MIN = 9.0

P0_CHEB = np.array([
    0.99957207827708736024,
    -0.00042593413919883444368,
    1.9600039314717762956e-6,
    -2.6849254882821837995e-8,
    7.0046936070615510656e-10,
    -2.8349833841965117061e-11,
    1.5838038650345242756e-12,
    -1.1340432899092933487e-13,
    9.8953485176080375155e-15,
    -1.0150283324779488331e-15,
    1.1918088008680217042e-16,
    -1.569661318468590274e-17,
    2.2824481396367568003e-18,
    -3.6184014609393710349e-19,
    6.1903916139236977071e-20,
    -1.1333334835508724005e-20,
    2.2049403087247756228e-21,
    -4.5318400914282862093e-22,
    9.7906292544451685157e-23,
    -2.2137655759533121887e-23,
    5.2193325390590424046e-24,
    -1.2789236746259492023e-24,
    3.2477059566663558375e-25,
    -8.5253418863600814063e-26,
    2.3081969598523509768e-26,
    -6.4326081223874054174e-27,
    1.8419218480338071131e-27,
    -5.4102726047194391079e-28,
    1.6277658174235875488e-28,
    -5.009660669088222723e-29,
    1.5751862583406857296e-29,
    -5.053784743282655815e-30,
    1.650818764226204248e-30,
    -5.4302386323072803105e-31,
    1.6429099089402477539e-31,
])

XQ0_CHEB = np.array([
    -0.12455997820634340891,
    0.00043612897758510006248,
    -3.8144239194193582128e-6,
    7.5712387415967689336e-8,
    -2.5464193095555044934e-9,
    1.2454663363685097765e-10,
    -8.0747381732165779418e-12,
    6.5280622100206351799e-13,
    -6.3065993871070477573e-14,
    7.0585186832222811516e-15,
    -8.9422165203518423368e-16,
    1.2595380268914425348e-16,
    -1.9448409042951111111e-17,
    3.2549573784255493178e-18,
    -5.8503712030852872521e-19,
    1.1206765269855151783e-19,
    -2.2733026859820754558e-20,
    4.8569334178362218073e-21,
    -1.0878881329123086062e-21,
    2.5444260104897773934e-22,
    -6.192589865904664186e-23,
    1.5635551601510813336e-23,
    -4.0846154487867983071e-24,
    1.1014311522773375975e-24,
    -3.0592525981946546642e-25,
    8.7358437675795320399e-26,
    -2.560285430603266867e-26,
    7.6895332385322426471e-27,
    -2.3633928181864237268e-27,
    7.4241381216167131085e-28,
    -2.3807871170044348113e-28,
    7.7844968444043183096e-29,
    -2.5893404764412956496e-29,
    8.6620783529045503664e-30,
    -2.6563403404111558659e-30,
])

P1_CHEB = np.array([
    1.0007154988259476306,
    0.000712928703063408807,
    -2.5372711907062929652e-6,
    3.2015750416084947222e-8,
    -8.023518535789913009e-10,
    3.1711691175122377431e-11,
    -1.7441244216740708505e-12,
    1.2350627432398671424e-13,
    -1.0687868789592113218e-14,
    1.0892817035950940787e-15,
    -1.2724062554949928232e-16,
    1.6687170662512818697e-17,
    -2.4178736273492479642e-18,
    3.8214998290574270534e-19,
    -6.5207662681969214499e-20,
    1.1910901358472357716e-20,
    -2.3126306866691970024e-21,
    4.744629247191088879e-22,
    -1.0233789172576972966e-22,
    2.3105910892852751544e-23,
    -5.4403838773527182658e-24,
    1.3314712428357143688e-24,
    -3.3773755769837064091e-25,
    8.8566081957129573424e-26,
    -2.3956006346781651698e-26,
    6.6702748117714290979e-27,
    -1.9083974886964613222e-27,
    5.6011985377648785075e-28,
    -1.683987014894160427e-28,
    5.1791548543178266465e-29,
    -1.6274337145573887721e-29,
    5.2182471388055967532e-30,
    -1.7035679116838756975e-30,
    5.6008290701599114264e-31,
    -1.6938198094223948162e-31,
])

XQ1_CHEB = np.array([
    0.37438187691181586568,
    -0.00061333785438545932888,
    4.6940783469561425824e-6,
    -8.8132135976004736756e-8,
    2.8756938315178530801e-9,
    -1.380063697934412425e-10,
    8.8317692892279018753e-12,
    -7.0727618810746408907e-13,
    6.783646536495268951e-14,
    -7.5492768029230661935e-15,
    9.5197985096887951008e-16,
    -1.3357555261548958739e-16,
    2.0558501026384074871e-17,
    -3.4311882479444101685e-18,
    6.1522343098182816159e-19,
    -1.1760002833183808372e-19,
    2.3810384867975293831e-20,
    -5.0785505816381785206e-21,
    1.1358027977128431396e-21,
    -2.6528405521586369949e-22,
    6.4483556525301922764e-23,
    -1.6262628549047627945e-23,
    4.2439396607410085929e-24,
    -1.1432746870218713044e-24,
    3.1725932199776333796e-25,
    -9.0518403696270476914e-26,
    2.6508038610845634201e-26,
    -7.9555105757768636294e-27,
    2.4434439250245414044e-27,
    -7.6705858732187759378e-28,
    2.4583013771418153102e-28,
    -8.0332635155551132616e-29,
    2.6706222636057496731e-29,
    -8.9295151134045895273e-30,
    2.737268933672676811e-30,
])

