"""Reference values used by the `reproduce` command and the acceptance tests.

Published benchmark rows for the symmetric Fermi well: fixed-G wells with
their exact level counts, critical HBS betas per (alpha, n), and the s-wave
neutron level counts of three nuclei.
"""

# (g, a, b, v0, count); kappa2 = 0.048 throughout.
G_COUNT_ROWS = [
    (3.0, 1.5, 0.9, 48.6845, 3),
    (3.0, 1.5, 0.7590, 60.0, 3),
    (3.0, 1.0518, 0.9, 60.0, 3),
    (6.4, 5.0, 0.8, 56.2945, 6),
    (6.4, 5.0, 0.6651, 60.0, 6),
    (6.4, 4.5090, 0.7, 70.0, 6),
    (8.7, 6.8, 0.7, 64.4349, 9),
    (8.7, 6.0, 0.8646, 75.0, 9),
    (8.7, 6.0027, 0.7, 80.0, 9),
]

# alpha -> list of (n, beta_n, g).
HBS_ROWS = {
    1.0: [
        (1, 0.8774, 1.4238),
        (2, 1.4975, 2.4302),
        (3, 2.1402, 3.4731),
        (4, 2.7494, 4.4617),
        (5, 3.3789, 5.4833),
        (6, 3.9892, 6.4735),
        (7, 4.6142, 7.4878),
        (8, 5.2255, 8.4798),
    ],
    2.0: [
        (1, 0.6226, 1.3679),
        (2, 1.1000, 2.4166),
        (3, 1.5723, 3.4541),
        (4, 2.0281, 4.4555),
        (5, 2.4907, 5.4716),
        (6, 2.9449, 6.4694),
        (7, 3.4046, 7.4794),
        (8, 3.8586, 8.4767),
    ],
    3.0: [
        (1, 0.4683, 1.3150),
        (2, 0.8534, 2.3963),
        (3, 1.2234, 3.4353),
        (4, 1.5835, 4.4465),
        (5, 1.9446, 5.4604),
        (6, 2.3018, 6.4635),
        (7, 2.6607, 7.4713),
        (8, 3.0172, 8.4722),
    ],
    4.0: [
        (1, 0.3697, 1.2700),
        (2, 0.6905, 2.3717),
        (3, 0.9947, 3.4166),
        (4, 1.2913, 4.4354),
        (5, 1.5866, 5.4496),
        (6, 1.8796, 6.4563),
        (7, 2.1729, 7.4636),
        (8, 2.4650, 8.4669),
    ],
}

# (element, mass number A, g, s-wave level count); V0=50 MeV, a=1.3 A^(1/3) fm, b=0.65 fm.
NUCLEAR_ROWS = [
    ("O", 16, 4.13, 2),
    ("Sn", 132, 7.42, 3),
    ("Pb", 208, 8.49, 4),
]

NUCLEAR_V0 = 50.0
NUCLEAR_R0 = 1.3
NUCLEAR_B = 0.65

# Benchmark well with three bound states (alpha=2, beta=1.5723) and its
# exact and semiclassical levels in MeV.
DEMO_WELL = (45.3642, 2.0, 1.0)
DEMO_EXACT_LEVELS = [-33.7554, -16.2221, -4.6764]
DEMO_WKB_LEVELS = [-32.9723, -15.8589, -4.2151]

# Acceptance tolerances for `reproduce`.
TOL_G = 2e-3
TOL_BETA = 5e-4
TOL_G_NUCLEAR = 0.02
