"""Coefficient tables of the reaction-diffusion eigenvalue formulas.

The two nonzero eigenvalues of the two-grid block at finite reaction
scaling are ratios of polynomials in ``x = c_k`` whose coefficients are
polynomials in ``(alpha, delta0, gamma)``.  The tables below are
transcribed verbatim and evaluated Horner-style in ``gamma``; any slip
is caught by the block-eigenvalue oracle in the test suite.

For the point smoother the eigenvalues read

    (c1 + c2 x + c3 x^2 +- sqrt(c4 + c5 x + ... + c9 x^5)) /
        (c10 + c11 x + c12 x^2)

and for the cell smoother

    (c1 + c2 x + c3 x^2 +- sqrt(c4 + c5 x + ... + c8 x^4)) /
        (c9 + c10 x + c11 x^2).

At ``alpha = 0`` the numerator triple equals the denominator triple and
the radicand vanishes, so both formulas collapse to 1.
"""


def point_coefficients(delta0: float, gamma: float, alpha: float) -> tuple:
    """Return (c1, ..., c12) of the point-smoother eigenvalue formula."""
    d, g, a = delta0, gamma, alpha
    d2 = d * d
    a2 = a * a
    c1 = (
        (
            (
                (-8640 * a * d2 + 6912 * a * d - 864 * a + 6912 * d2 - 5184 * d + 864) * g
                + (-14400 * a * d2 + 7776 * a * d + 288 * a + 11520 * d2 - 5184 * d)
            )
            * g
            + (-2544 * a * d2 - 3744 * a * d + 2208 * a + 3072 * d2 + 2688 * d - 1248)
        )
        * g
        + (-992 * a * d + 1280 * d)
    ) * g + (-80 * a + 128)
    c2 = (
        (
            (
                (6912 * a * d2 - 3456 * a * d - 6912 * d2 + 3456 * d) * g
                + (-5760 * a * d2 + 12096 * a * d - 3168 * a + 2304 * d2 - 9216 * d + 3456)
            )
            * g
            + (-960 * a * d2 + 480 * a * d + 1392 * a + 1536 * d2 - 2688 * d)
        )
        * g
        + (-160 * a * d + 240 * a + 256 * d - 384)
    ) * g
    c3 = (
        (
            (1728 * a * d2 - 3456 * a * d + 864 * a + 1728 * d - 864) * g
            + (-576 * a * d2 + 864 * a * d - 576 * a + 576 * d)
        )
        * g
        + (48 * a * d2 - 192 * a * d + 144 * a + 96)
    ) * g**2
    d3 = d2 * d
    d4 = d2 * d2
    c4 = a2 * (
        (
            (
                (
                    (
                        (
                            (
                                (2985984 * d4 - 5971968 * d3 + 5971968 * d2 - 746496 * d) * g
                                + (9953280 * d4 - 18911232 * d3 + 18911232 * d2 + 248832 * d - 248832)
                            )
                            * g
                            + (6469632 * d4 - 9123840 * d3 + 8957952 * d2 + 10368000 * d - 829440)
                        )
                        * g
                        + (-3041280 * d4 + 8487936 * d3 - 8543232 * d2 + 13906944 * d + 359424)
                    )
                    * g
                    + (278784 * d4 - 2442240 * d3 + 1833984 * d2 + 2062080 * d + 2062080)
                )
                * g
                + (353280 * d3 - 1373184 * d2 + 856320 * d + 734976)
            )
            * g
            + (100864 * d2 - 276480 * d + 195072)
        )
        * g
        + (8192 * d - 9216)
    ) * g + a2 * 256
    c5 = a2 * (
        (
            (
                (
                    (
                        (
                            ((-3732480 * d + 746496) * g
                             + (11943936 * d4 - 21897216 * d3 + 20901888 * d2 - 17169408 * d + 1741824))
                            * g
                            + (17915904 * d4 - 25214976 * d3 + 25049088 * d2 - 12773376 * d - 1575936)
                        )
                        * g
                        + (-6967296 * d4 + 25712640 * d3 - 20542464 * d2 + 12690432 * d - 4810752)
                    )
                    * g
                    + (608256 * d4 - 5981184 * d3 + 10243584 * d2 - 2449152 * d + 126720)
                )
                * g
                + (457728 * d3 - 2339328 * d2 + 2492160 * d - 292608)
            )
            * g
            + (83968 * d2 - 313344 * d + 201216)
        )
        * g
        + (4096 * d - 10752)
    ) * g
    c6 = a2 * (
        (
            (
                (
                    (
                        ((-5971968 * d4 + 11943936 * d3 - 11943936 * d2 + 4478976 * d) * g
                         + (-7962624 * d4 + 11943936 * d3 - 10948608 * d2 - 7464960 * d + 4976640))
                        * g
                        + (16920576 * d4 - 36163584 * d3 + 35997696 * d2 - 35168256 * d + 8792064)
                    )
                    * g
                    + (-4866048 * d4 + 23003136 * d3 - 19491840 * d2 - 1852416 * d - 663552)
                )
                * g
                + (382464 * d4 - 4174848 * d3 + 11828736 * d2 - 8808192 * d + 105984)
            )
            * g
            + (89088 * d3 - 685056 * d2 + 1552128 * d - 988416)
        )
        * g
        + (-512 * d2 + 2304)
    ) * g**2
    c7 = a2 * (
        (
            (
                (
                    ((4478976 * d - 1492992) * g
                     + (-11943936 * d4 + 21897216 * d3 - 20901888 * d2 + 17418240 * d - 1990656))
                    * g
                    + (5971968 * d4 - 22560768 * d3 + 22063104 * d2 - 10450944 * d + 7382016)
                )
                * g
                + (-995328 * d4 + 6137856 * d3 - 10202112 * d2 + 1907712 * d + 3704832)
            )
            * g
            + (55296 * d4 - 654336 * d3 + 2585088 * d2 - 4020480 * d + 2080512)
        )
        * g
        + (-15360 * d3 + 84480 * d2 - 145152 * d + 76032)
    ) * g**3
    c8 = a2 * (
        (
            (
                ((2985984 * d4 - 5971968 * d3 + 5971968 * d2 - 3732480 * d) * g
                 + (-1990656 * d4 + 6967296 * d3 - 7962624 * d2 + 7216128 * d - 4727808))
                * g
                + (497664 * d4 - 2488320 * d3 + 3483648 * d2 + 248832 * d - 1824768)
            )
            * g
            + (-55296 * d4 + 359424 * d3 - 940032 * d2 + 1216512 * d - 580608)
        )
        * g
        + (2304 * d4 - 18432 * d3 + 50688 * d2 - 55296 * d + 20736)
    ) * g**4
    c9 = a2 * 248832 * (1.0 - d) * (3.0 * g + 1.0) * g**7
    c10 = (
        (
            ((6912 * d2 - 5184 * d + 864) * g + (11520 * d2 - 5184 * d)) * g
            + (3072 * d2 + 2688 * d - 1248)
        )
        * g
        + 1280 * d
    ) * g + 128
    c11 = (
        ((-6912 * d2 + 3456 * d) * g + (2304 * d2 - 9216 * d + 3456)) * g
        + (1536 * d2 - 2688 * d)
    ) * g**2 + (256 * d - 384) * g
    c12 = ((1728 * d - 864) * g + 576 * d) * g**3 + 96 * g**2
    return (c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12)


def cell_coefficients(delta0: float, gamma: float, alpha: float) -> tuple:
    """Return (c1, ..., c11) of the cell-smoother eigenvalue formula."""
    d, g, a = delta0, gamma, alpha
    d2 = d * d
    d3 = d2 * d
    d4 = d2 * d2
    d5 = d4 * d
    d6 = d3 * d3
    a2g2 = 1024.0 * alpha * alpha * gamma * gamma
    c1 = 16.0 * (
        (
            (
                ((-144 * a * d3 - 36 * a * d2 + 72 * a * d + 144 * d3 - 36 * d2) * g
                 + (-192 * a * d3 - 216 * a * d2 + 96 * a * d + 36 * a + 192 * d3 + 96 * d2 - 24 * d))
                * g
                + (-170 * a * d2 - 84 * a * d + 60 * a + 176 * d2 + 12 * d - 3)
            )
            * g
            + (-50 * a * d + 48 * d)
        )
        * g
        + (-4 * a + 4)
    )
    c2 = 16.0 * (
        (
            (
                ((144 * a * d3 + 72 * a * d2 - 72 * a * d - 144 * d3) * g
                 + (-96 * a * d3 + 216 * a * d2 + 60 * a * d - 36 * a + 96 * d3 - 240 * d2))
                * g
                + (-46 * a * d2 + 72 * a * d + 12 * a + 64 * d2 - 108 * d)
            )
            * g
            + (-4 * a * d + 6 * a + 8 * d - 12)
        )
        * g
    )
    c3 = 16.0 * (((-36 * a * d2 + 36 * d2) * g + (-12 * a * d + 24 * d)) * g + 3.0) * g**2
    c4 = a2g2 * (
        (
            (
                (
                    (
                        ((5184 * d6 - 18144 * d5 + 21060 * d4 - 9072 * d3 + 1944 * d2) * g
                         + (13824 * d6 - 43200 * d5 + 36720 * d4 - 864 * d3 - 3672 * d2 + 1836 * d))
                        * g
                        + (9216 * d6 - 17136 * d5 - 16236 * d4 + 41760 * d3 - 12384 * d2 + 2592 * d + 432)
                    )
                    * g
                    + (10944 * d5 - 33624 * d4 + 23292 * d3 + 7524 * d2 - 2340 * d + 1080)
                )
                * g
                + (4665 * d4 - 16140 * d3 + 15018 * d2 - 1116 * d + 504)
            )
            * g
            + (858 * d3 - 3096 * d2 + 2931 * d - 72)
        )
        * g
        + (61 * d2 - 228 * d + 219)
    )
    c5 = a2g2 * (
        (
            (
                (
                    (
                        ((-10368 * d6 + 33696 * d5 - 37584 * d4 + 16848 * d3 - 3888 * d2) * g
                         + (-6912 * d6 + 5184 * d5 + 23760 * d4 - 34776 * d3 + 14040 * d2 - 3672 * d))
                        * g
                        + (9216 * d6 - 46944 * d5 + 65988 * d4 - 23616 * d3 - 4752 * d2 + 1944 * d - 864)
                    )
                    * g
                    + (10656 * d5 - 48960 * d4 + 65916 * d3 - 26532 * d2 + 2772 * d - 432)
                )
                * g
                + (4518 * d4 - 19836 * d3 + 24900 * d2 - 8028 * d + 576)
            )
            * g
            + (834 * d3 - 3498 * d2 + 3960 * d - 756)
        )
        * g
        + (56 * d2 - 222 * d + 216)
    )
    c6 = a2g2 * (
        (
            (
                (
                    (
                        ((5184 * d6 - 12960 * d5 + 12312 * d4 - 6480 * d3 + 1296 * d2) * g
                         + (-6912 * d6 + 36288 * d5 - 54000 * d4 + 30888 * d3 - 11880 * d2 + 1296 * d))
                        * g
                        + (2304 * d6 - 18864 * d5 + 52380 * d4 - 54720 * d3 + 19476 * d2 - 6480 * d + 324)
                    )
                    * g
                    + (2592 * d5 - 15912 * d4 + 33012 * d3 - 25236 * d2 + 3636 * d - 1080)
                )
                * g
                + (1041 * d4 - 5640 * d3 + 10038 * d2 - 6228 * d + 36)
            )
            * g
            + (156 * d3 - 762 * d2 + 1209 * d - 684)
        )
        * g
        + (4 * d2 - 12 * d + 6)
    )
    c7 = a2g2 * (
        (
            (
                ((-2592 * d5 + 3888 * d4 - 1296 * d3 + 1296 * d2) * g
                 + (1728 * d5 - 6480 * d4 + 4536 * d3 + 1512 * d2 + 1080 * d))
                * g
                + (1548 * d4 - 4896 * d3 + 2808 * d2 + 1944 * d + 216)
            )
            * g
            + (468 * d3 - 1548 * d2 + 1116 * d + 432)
        )
        * g
        + (48 * d2 - 180 * d + 180)
    ) * g**2
    c8 = a2g2 * (
        ((324 * d4 - 648 * d2) * g + (216 * d3 - 540 * d)) * g + (36 * d2 - 108)
    ) * g**4
    q = (2.0 * d * g + 1.0) * (6.0 * d * g + 1.0)
    c9 = 8.0 * q * ((24.0 * d - 6.0) * g * g + 32.0 * d * g + 8.0)
    c10 = -64.0 * g * q * (d * (3.0 * g - 2.0) + 3.0)
    c11 = 48.0 * g * g * q
    return (c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11)
