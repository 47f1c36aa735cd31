# -*- coding: utf-8 -*-
"""
amaci-wlp: exact weak Lefschetz decisions for the monomial almost complete
intersections (x^a, y^b, z^c, x^alpha y^beta z^gamma) in three variables.
"""
