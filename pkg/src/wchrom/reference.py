"""Published reference values: explicit polynomials, differences and strip tables.

Polynomials are kept as text in the form they are usually written and parsed on
demand, so the data stays easy to compare against printed sources.
"""

from __future__ import annotations

from .poly import MPoly, parse

# Ph(G, q, w) in expanded form, keyed by graph name.
PH = {
    "L1": "q-1+w",
    "L2": "q^2-(3-2w)q+2(1-w)",
    "L3": "q^3-(5-3w)q^2+(w^2-8w+8)q-(w-1)(w-4)",
    "L4": "q^4-(7-4w)q^3+3(w^2-6w+6)q^2-(7w^2-26w+20)q+4(w-1)(w-2)",
    "S4": "q^4 - (7-4w)q^3 + 3(w^2-6w+6)q^2 - (-w^3+9w^2-27w+20)q + (1-w)(w^2-5w+8)",
    "C2": "q^2 -(3-2w)q +2(1-w)",
    "C3": "q^3-3(2-w)q^2+(11-9w)q-6(1-w)",
    "C4": "q^4-4(2-w)q^3+2(w^2-10w+12)q^2-(4w^2-32w+31)q+2(w-1)(w-7)",
    "C5": "q^5-5(2-w)q^4+5(w^2-7w+8)q^3-10(2w^2-9w+8)q^2+(25w^2-100w+79)q-10(w-1)(w-3)",
    "Wh5": "q^5 -(13-5w)q^4+2(w^2-22w+33)q^3-(10w^2-140w+161)q^2"
           "+(16w^2-187w+185)q-2(w-1)(4w-39)",
    "L5": "q^5-(9-5w)q^4+2(w-4)(3w-4)q^3-(-w^3+24w^2-75w+56)q^2"
          "+(-2w^3+31w^2-76w+48)q-(1-w)(w^2-12w+16)",
    "Y5": "q^5-(9-5w)q^4+2(w-4)(3w-4)q^3-2(-w^3+13w^2-38w+28)q^2"
          "+(-5w^3+37w^2-79w+48)q-(w-1)(w-2)(8-3w)",
    "S5": "q^5-(9-5w)q^4+2(w-4)(3w-4)q^3-2(-2w^3+15w^2-39w+28)q^2"
          "+(w^4-12w^3+48w^2-84w+48)q-(w-1)(w^3-7w^2+17w-16)",
    "L6": "q^6-(11-6w)q^5+10(w^2-5w+5)q^4-2(-2w^3+29w^2-82w+60)q^3"
          "+(-14w^3+123w^2-264w+160)q^2-(-16w^3+113w^2-208w+112)q+2(1-w)(4-3w)(4-w)",
    "Y6": "q^6 -(11-6w)q^5 + 10(w^2-5w+5)q^4 -5(-w^3+12w^2-33w+24)q^3"
          "+(w^4-21w^3+134w^2-269w+160)q^2-(2w^4-28w^3+131w^2-216w+112)q"
          "+(w-1)(w-4)(w^2-7w+8)",
    "IsoY6": "q^6 -(11-6w)q^5+10(w^2-5w+5)q^4-5(-w^3+12w^2-33w+24)q^3"
             "+(-19w^3+133w^2-269w+160)q^2-(-24w^3+129w^2-216w+112)q+2(w-1)(w-2)(8-5w)",
    "H6": "q^6-(11-6w)q^5+10(w^2-5w+5)q^4-2(-3w^3+31w^2-83w+60)q^3"
          "+(w^4-26w^3+144w^2-274w+160)q^2-(w-2)(3w^3-32w^2+84w-56)q+2(w-1)(w-2)^2(w-4)",
    "Cr6": "q^6-(11-6w)q^5+10(w^2-5w+5)q^4-(-7w^3+64w^2-167w+120)q^3"
           "+(2w^4-32w^3+153w^2-278w+160)q^2-(5w^4-47w^3+160w^2-229w+112)q"
           "+(w-1)(w-2)(3w^2-13w+16)",
    "S6": "q^6 -(11-6w)q^5+10(w^2-5w+5)q^4-10(-w^3+7w^2-17w+12)q^3"
          "+5(w^4-10w^3+36w^2-58w+32)q^2-(-w^5+15w^4-80w^3+200w^2-245w+112)q"
          "+(1-w)(w^4-9w^3+31w^2-49w+32)",
}

# The same polynomials in partly factored form, as an internal consistency check.
PH_FACTORED = {
    "L2": "(q-1)(q+2(w-1))",
    "L3": "(q-1)(q^2+(3w-4)q + (w-1)(w-4))",
    "L4": "(q-1)(q+w-2)(q^2+(3w-4)q - 4(w-1))",
    "S4": "(q-1)(q^3 + 2(2w-3)q^2+(3w^2-14w+12)q+(w-1)(w^2-5w+8))",
    "C3": "(q-1)(q-2)(q+3(w-1))",
    "C4": "(q-1)(q^3+(4w-7)q^2+(2w^2-16w+17)q-2(w-1)(w-7))",
    "C5": "(q-1)(q-2)(q^3+(5w-7)q^2+(5w^2-20w+17)q-5(w-1)(w-3))",
    "Wh5": "(q-1)(q-2)(q^3-5(2-w)q^2 + (2w^2-29w+34)q -(w-1)(4w-39))",
    "L5": "(q-1)(q^4+(5w-8)q^3+3(2w^2-9w+8)q^2+(w-2)(w^2-16w+16)q-(w-1)(w^2-12w+16))",
    "Y5": "(q-1)(q+w-2)(q^3+2(2w-3)q^2+(2w^2-13w+12)q-(w-1)(3w-8))",
    "S5": "(q-1)(q^4+(5w-8)q^3+3(2w^2-9w+8)q^2+(4w^3-24w^2+51w-32)q+(w-1)(w^3-7w^2+17w-16))",
    "L6": "(q-1)(q^2+2(w-2)q-3w+4)(q^3 + 2(2w-3)q^2+(2w^2-13w+12)q-2(w-1)(w-4))",
    "Y6": "(q-1)(q^5+2(3w-5)q^4+2(5w^2-22w+20)q^3+(5w^3-50w^2+121w-80)q^2"
          "+(w^4-16w^3+84w^2-148w+80)q-(w-1)(w-4)(w^2-7w+8))",
    "IsoY6": "(q-1)(q-2+w)(q^4+(5w-8)q^3+(w-4)(5w-6)q^2+(-14w^2+45w-32)q+2(w-1)(5w-8))",
    "H6": "(q-1)(q-2+w)^2(q^3+2(2w-3)q^2+(w^2-12w+12)q-2(w-1)(w-4))",
    "Cr6": "(q-1)(q-2+w)(q^4+(5w-8)q^3+(w-4)(5w-6)q^2+(2w^3-18w^2+47w-32)q"
           "-(w-1)(3w^2-13w+16))",
    "S6": "(q-1)(q^5+2(3w-5)q^4+2(5w^2-22w+20)q^3+2(5w^3-30w^2+63w-40)q^2"
          "+(5w^4-40w^3+120w^2-164w+80)q+(w-1)(w^4-9w^3+31w^2-49w+32))",
}

# Ph(A) - Ph(B) for chromatically equivalent trees.
DIFFERENCES = {
    ("S4", "L4"): "(q-1)w(w-1)^2",
    ("S5", "L5"): "(q-1)w(w-1)^2(3q+w-5)",
    ("S5", "Y5"): "(q-1)w(w-1)^2(2q+w-3)",
    ("Y5", "L5"): "(q-1)(q-2)w(w-1)^2",
    ("S6", "L6"): "w(w-1)^2(q-1)((3q+w)(2q+w)-20q-8w+17)",
    ("S6", "Y6"): "w(w-1)^2(q-1)(5q^2+4w*q+w^2-16q-7w+13)",
    ("S6", "IsoY6"): "w(w-1)^2(q-1)(5q^2+5w*q+w^2-16q-8w+13)",
    ("S6", "H6"): "w(w-1)^2(q-1)(2q-3+w)^2",
    ("S6", "Cr6"): "w(w-1)^2(q-1)(3q^2+3w*q+w^2-9q-5w+7)",
}

# Deletion-contraction deviations: (graph, edge description) -> polynomial.
DELTA = {
    ("L3", "any"): "-w(w-1)(q-1)",
    ("C3", "any"): "-w(w-1)(q-1)",
    ("C4", "any"): "-w(w-1)(q-1)(q-2)",
    ("L4", "middle"): "-w(w-1)(q-1)^2",
    ("L4", "outer"): "-w(w-1)(q-1)(q+w-2)",
}

# Strip multiplicity tables, rows L_y = 1..8, entries d = 0..L_y.
NPH_TABLE = [
    [2, 1],
    [3, 4, 1],
    [7, 12, 6, 1],
    [19, 37, 25, 8, 1],
    [56, 118, 95, 42, 10, 1],
    [174, 387, 350, 189, 63, 12, 1],
    [561, 1298, 1276, 791, 327, 88, 14, 1],
    [1859, 4433, 4641, 3185, 1533, 517, 117, 16, 1],
]
NPH_TOTALS = [3, 8, 26, 90, 322, 1176, 4356, 16302]

NP_TABLE = [
    [1, 1],
    [1, 2, 1],
    [2, 4, 3, 1],
    [4, 9, 8, 4, 1],
    [9, 21, 21, 13, 5, 1],
    [21, 51, 55, 39, 19, 6, 1],
    [51, 127, 145, 113, 64, 26, 7, 1],
    [127, 323, 385, 322, 203, 97, 34, 8, 1],
]
NP_TOTALS = [2, 4, 10, 26, 70, 192, 534, 1500]

NZ_TABLE = [
    [1, 1],
    [2, 3, 1],
    [5, 9, 5, 1],
    [14, 28, 20, 7, 1],
    [42, 90, 75, 35, 9, 1],
    [132, 297, 275, 154, 54, 11, 1],
    [429, 1001, 1001, 637, 273, 77, 13, 1],
    [1430, 3432, 3640, 2548, 1260, 440, 104, 15, 1],
]
NZ_TOTALS = [2, 6, 20, 70, 252, 924, 3432, 12870]

NZH_TABLE = [
    [2, 1],
    [5, 5, 1],
    [15, 21, 8, 1],
    [51, 86, 46, 11, 1],
    [188, 355, 235, 80, 14, 1],
    [731, 1488, 1140, 489, 123, 17, 1],
    [2950, 6335, 5397, 2730, 875, 175, 20, 1],
    [12235, 27352, 25256, 14462, 5530, 1420, 236, 23, 1],
]
NZH_TOTALS = [3, 11, 45, 195, 873, 3989, 18483, 86515]

TABLES = {
    "nph": (NPH_TABLE, NPH_TOTALS),
    "np": (NP_TABLE, NP_TOTALS),
    "nz": (NZ_TABLE, NZ_TOTALS),
    "nzh": (NZH_TABLE, NZH_TOTALS),
}


def ph(name: str) -> MPoly:
    return parse(PH[name])


def difference(a: str, b: str) -> MPoly:
    return parse(DIFFERENCES[(a, b)])
